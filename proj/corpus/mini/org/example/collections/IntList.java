package org.example.collections;

import java.util.Arrays;
import java.util.NoSuchElementException;

/** Growable list of primitive ints. */
public class IntList {
    private static final int DEFAULT_CAPACITY = 8;

    private int[] data;
    private int size;

    public IntList() {
        this(DEFAULT_CAPACITY);
    }

    public IntList(int capacity) {
        if (capacity < 0) {
            throw new IllegalArgumentException("negative capacity: " + capacity);
        }
        data = new int[Math.max(capacity, 1)];
        size = 0;
    }

    public int size() {
        return size;
    }

    public boolean isEmpty() {
        return size == 0;
    }

    public void add(int value) {
        ensureCapacity(size + 1);
        data[size++] = value;
    }

    public void addAll(int[] values) {
        ensureCapacity(size + values.length);
        for (int i = 0; i < values.length; i++) {
            data[size + i] = values[i];
        }
        size += values.length;
    }

    public int get(int index) {
        checkIndex(index);
        return data[index];
    }

    public int set(int index, int value) {
        checkIndex(index);
        int old = data[index];
        data[index] = value;
        return old;
    }

    public int removeAt(int index) {
        checkIndex(index);
        int removed = data[index];
        int tail = size - index - 1;
        if (tail > 0) {
            System.arraycopy(data, index + 1, data, index, tail);
        }
        size--;
        return removed;
    }

    public boolean removeValue(int value) {
        int index = indexOf(value);
        if (index < 0) {
            return false;
        }
        removeAt(index);
        return true;
    }

    public int indexOf(int value) {
        for (int i = 0; i < size; i++) {
            if (data[i] == value) {
                return i;
            }
        }
        return -1;
    }

    public boolean contains(int value) {
        return indexOf(value) >= 0;
    }

    public int first() {
        if (size == 0) {
            throw new NoSuchElementException("empty list");
        }
        return data[0];
    }

    public int last() {
        if (size == 0) {
            throw new NoSuchElementException("empty list");
        }
        return data[size - 1];
    }

    public long sum() {
        long total = 0;
        for (int i = 0; i < size; i++) {
            total += data[i];
        }
        return total;
    }

    public int max() {
        int best = Integer.MIN_VALUE;
        for (int i = 0; i < size; i++) {
            if (data[i] > best) {
                best = data[i];
            }
        }
        return best;
    }

    public void reverse() {
        int i = 0;
        int j = size - 1;
        while (i < j) {
            int tmp = data[i];
            data[i] = data[j];
            data[j] = tmp;
            i++;
            j--;
        }
    }

    public void sort() {
        Arrays.sort(data, 0, size);
    }

    public int binarySearch(int key) {
        int lo = 0;
        int hi = size - 1;
        while (lo <= hi) {
            int mid = (lo + hi) >>> 1;
            int value = data[mid];
            if (value < key) {
                lo = mid + 1;
            } else if (value > key) {
                hi = mid - 1;
            } else {
                return mid;
            }
        }
        return -(lo + 1);
    }

    public int[] toArray() {
        return Arrays.copyOf(data, size);
    }

    public void clear() {
        size = 0;
    }

    private void ensureCapacity(int needed) {
        if (needed <= data.length) {
            return;
        }
        int capacity = data.length;
        while (capacity < needed) {
            capacity *= 2;
        }
        data = Arrays.copyOf(data, capacity);
    }

    private void checkIndex(int index) {
        if (index < 0 || index >= size) {
            throw new IndexOutOfBoundsException("index " + index + " out of " + size);
        }
    }

    @Override
    public String toString() {
        StringBuilder sb = new StringBuilder("[");
        for (int i = 0; i < size; i++) {
            if (i > 0) {
                sb.append(", ");
            }
            sb.append(data[i]);
        }
        return sb.append(']').toString();
    }
}

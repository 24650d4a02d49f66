package org.example.util;

import java.util.HashMap;
import java.util.Map;
import java.util.function.Function;

public class LruCache<K, V> {
    private final class Entry {
        final K key;
        V value;
        Entry prev;
        Entry next;

        Entry(K key, V value) {
            this.key = key;
            this.value = value;
        }
    }

    private final int capacity;
    private final Map<K, Entry> index = new HashMap<>();
    private Entry head;
    private Entry tail;
    private long hits;
    private long misses;

    public LruCache(int capacity) {
        if (capacity <= 0) {
            throw new IllegalArgumentException("capacity must be positive");
        }
        this.capacity = capacity;
    }

    public V get(K key) {
        Entry e = index.get(key);
        if (e == null) {
            misses++;
            return null;
        }
        hits++;
        moveToFront(e);
        return e.value;
    }

    public void put(K key, V value) {
        Entry e = index.get(key);
        if (e != null) {
            e.value = value;
            moveToFront(e);
            return;
        }
        e = new Entry(key, value);
        index.put(key, e);
        addFront(e);
        if (index.size() > capacity) {
            Entry evicted = tail;
            unlink(evicted);
            index.remove(evicted.key);
        }
    }

    public V computeIfAbsent(K key, Function<K, V> loader) {
        V cached = get(key);
        if (cached != null) {
            return cached;
        }
        V loaded = loader.apply(key);
        if (loaded != null) {
            put(key, loaded);
        }
        return loaded;
    }

    private void moveToFront(Entry e) {
        if (e == head) {
            return;
        }
        unlink(e);
        addFront(e);
    }

    private void addFront(Entry e) {
        e.prev = null;
        e.next = head;
        if (head != null) {
            head.prev = e;
        }
        head = e;
        if (tail == null) {
            tail = e;
        }
    }

    private void unlink(Entry e) {
        if (e.prev != null) {
            e.prev.next = e.next;
        } else {
            head = e.next;
        }
        if (e.next != null) {
            e.next.prev = e.prev;
        } else {
            tail = e.prev;
        }
        e.prev = null;
        e.next = null;
    }

    public int size() {
        return index.size();
    }

    public double hitRate() {
        long total = hits + misses;
        return total == 0 ? 0.0 : (double) hits / total;
    }
}

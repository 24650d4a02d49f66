package org.example.collections;

import java.util.ArrayList;
import java.util.List;

/** Open-addressing map from String keys to int values. */
public class HashIndex {
    private static final double LOAD_FACTOR = 0.7;
    private static final String TOMBSTONE = new String("<deleted>");

    private String[] keys;
    private int[] values;
    private int used;

    public HashIndex(int expected) {
        int capacity = 16;
        while (capacity * LOAD_FACTOR < expected) {
            capacity <<= 1;
        }
        keys = new String[capacity];
        values = new int[capacity];
    }

    private int slot(String key) {
        int h = key.hashCode();
        h ^= (h >>> 16);
        return h & (keys.length - 1);
    }

    public void put(String key, int value) {
        if (key == null) {
            throw new NullPointerException("key");
        }
        if (used + 1 > keys.length * LOAD_FACTOR) {
            rehash();
        }
        int i = slot(key);
        int firstFree = -1;
        while (keys[i] != null) {
            if (keys[i] == TOMBSTONE) {
                if (firstFree < 0) {
                    firstFree = i;
                }
            } else if (keys[i].equals(key)) {
                values[i] = value;
                return;
            }
            i = (i + 1) & (keys.length - 1);
        }
        if (firstFree >= 0) {
            i = firstFree;
        } else {
            used++;
        }
        keys[i] = key;
        values[i] = value;
    }

    public int get(String key, int fallback) {
        int i = slot(key);
        int probes = 0;
        while (keys[i] != null && probes < keys.length) {
            if (keys[i] != TOMBSTONE && keys[i].equals(key)) {
                return values[i];
            }
            i = (i + 1) & (keys.length - 1);
            probes++;
        }
        return fallback;
    }

    public boolean remove(String key) {
        int i = slot(key);
        while (keys[i] != null) {
            if (keys[i] != TOMBSTONE && keys[i].equals(key)) {
                keys[i] = TOMBSTONE;
                return true;
            }
            i = (i + 1) & (keys.length - 1);
        }
        return false;
    }

    public int increment(String key) {
        int next = get(key, 0) + 1;
        put(key, next);
        return next;
    }

    public List<String> keysWithValueAtLeast(int threshold) {
        List<String> out = new ArrayList<>();
        for (int i = 0; i < keys.length; i++) {
            String k = keys[i];
            if (k == null || k == TOMBSTONE) {
                continue;
            }
            if (values[i] >= threshold) {
                out.add(k);
            }
        }
        return out;
    }

    private void rehash() {
        String[] oldKeys = keys;
        int[] oldValues = values;
        keys = new String[oldKeys.length * 2];
        values = new int[oldValues.length * 2];
        used = 0;
        for (int i = 0; i < oldKeys.length; i++) {
            if (oldKeys[i] != null && oldKeys[i] != TOMBSTONE) {
                put(oldKeys[i], oldValues[i]);
            }
        }
    }
}

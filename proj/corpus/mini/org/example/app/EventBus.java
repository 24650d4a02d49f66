package org.example.app;

import java.util.ArrayList;
import java.util.HashMap;
import java.util.List;
import java.util.Map;
import java.util.function.Consumer;

public class EventBus {
    public interface Listener {
        void onEvent(String topic, Object payload);
    }

    private final Map<String, List<Listener>> listeners = new HashMap<>();
    private final List<String> deadLetters = new ArrayList<>();
    private boolean closed;

    public void subscribe(String topic, Listener listener) {
        listeners.computeIfAbsent(topic, k -> new ArrayList<>()).add(listener);
    }

    public void subscribe(String topic, Consumer<Object> consumer) {
        subscribe(topic, (t, payload) -> consumer.accept(payload));
    }

    public boolean unsubscribe(String topic, Listener listener) {
        List<Listener> list = listeners.get(topic);
        if (list == null) {
            return false;
        }
        boolean removed = list.remove(listener);
        if (list.isEmpty()) {
            listeners.remove(topic);
        }
        return removed;
    }

    public int publish(String topic, Object payload) {
        if (closed) {
            throw new IllegalStateException("bus closed");
        }
        List<Listener> list = listeners.get(topic);
        if (list == null || list.isEmpty()) {
            deadLetters.add(topic);
            return 0;
        }
        int delivered = 0;
        for (Listener l : new ArrayList<>(list)) {
            try {
                l.onEvent(topic, payload);
                delivered++;
            } catch (RuntimeException e) {
                System.err.println("listener failed on " + topic + ": " + e.getMessage());
            }
        }
        return delivered;
    }

    public int publishAll(String topic, List<?> payloads) {
        int total = 0;
        for (Object p : payloads) {
            total += publish(topic, p);
        }
        return total;
    }

    public List<String> getDeadLetters() {
        return deadLetters;
    }

    public int listenerCount() {
        int count = 0;
        for (List<Listener> list : listeners.values()) {
            count += list.size();
        }
        return count;
    }

    public void close() {
        closed = true;
        listeners.clear();
    }
}

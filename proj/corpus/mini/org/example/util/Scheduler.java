package org.example.util;

import java.util.ArrayList;
import java.util.Comparator;
import java.util.List;
import java.util.PriorityQueue;

public class Scheduler {
    public interface Task {
        String name();

        long runAt();

        void run();

        default int priority() {
            return 0;
        }
    }

    private final PriorityQueue<Task> queue = new PriorityQueue<>(
            Comparator.comparingLong(Task::runAt).thenComparing(Comparator.comparingInt(Task::priority).reversed()));
    private final List<String> log = new ArrayList<>();
    private long clock;
    private int failures;

    public void schedule(Task task) {
        if (task.runAt() < clock) {
            throw new IllegalArgumentException("task " + task.name() + " is in the past");
        }
        queue.add(task);
    }

    public int advanceTo(long time) {
        int ran = 0;
        while (!queue.isEmpty()) {
            Task next = queue.peek();
            if (next.runAt() > time) {
                break;
            }
            queue.poll();
            clock = next.runAt();
            try {
                next.run();
                log.add(clock + " ok " + next.name());
                ran++;
            } catch (RuntimeException e) {
                failures++;
                log.add(clock + " failed " + next.name());
            }
        }
        clock = Math.max(clock, time);
        return ran;
    }

    public int cancel(String name) {
        List<Task> keep = new ArrayList<>();
        int cancelled = 0;
        while (!queue.isEmpty()) {
            Task t = queue.poll();
            if (t.name().equals(name)) {
                cancelled++;
                continue;
            }
            keep.add(t);
        }
        queue.addAll(keep);
        return cancelled;
    }

    public long nextRunTime() {
        Task next = queue.peek();
        return next == null ? -1L : next.runAt();
    }

    public List<String> getLog() {
        return log;
    }

    public int getFailures() {
        return failures;
    }

    public static Task simple(String name, long at, Runnable body) {
        return new Task() {
            @Override
            public String name() {
                return name;
            }

            @Override
            public long runAt() {
                return at;
            }

            @Override
            public void run() {
                body.run();
            }
        };
    }
}

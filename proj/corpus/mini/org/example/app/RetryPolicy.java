package org.example.app;

import java.util.concurrent.Callable;

public class RetryPolicy {
    private final int maxAttempts;
    private final long initialDelayMillis;
    private final double multiplier;
    private int lastAttempts;

    public RetryPolicy(int maxAttempts, long initialDelayMillis, double multiplier) {
        if (maxAttempts < 1) {
            throw new IllegalArgumentException("maxAttempts must be at least 1");
        }
        this.maxAttempts = maxAttempts;
        this.initialDelayMillis = initialDelayMillis;
        this.multiplier = multiplier;
    }

    public <T> T call(Callable<T> task) throws Exception {
        long delay = initialDelayMillis;
        Exception last = null;
        for (int attempt = 1; attempt <= maxAttempts; attempt++) {
            lastAttempts = attempt;
            try {
                return task.call();
            } catch (InterruptedException e) {
                Thread.currentThread().interrupt();
                throw e;
            } catch (Exception e) {
                last = e;
                if (attempt == maxAttempts) {
                    break;
                }
                sleep(delay);
                delay = (long) (delay * multiplier);
            }
        }
        throw last;
    }

    public boolean runUntilTrue(Callable<Boolean> check) {
        int attempt = 0;
        while (attempt < maxAttempts) {
            attempt++;
            try {
                if (check.call()) {
                    lastAttempts = attempt;
                    return true;
                }
            } catch (Exception e) {
                continue;
            }
            sleep(initialDelayMillis);
        }
        lastAttempts = attempt;
        return false;
    }

    public long delayFor(int attempt) {
        long delay = initialDelayMillis;
        for (int i = 1; i < attempt; i++) {
            delay = (long) (delay * multiplier);
        }
        return delay;
    }

    private static void sleep(long millis) {
        if (millis <= 0) {
            return;
        }
        try {
            Thread.sleep(millis);
        } catch (InterruptedException e) {
            Thread.currentThread().interrupt();
        }
    }

    public int getLastAttempts() {
        return lastAttempts;
    }

    public void pollWorker() {
        while (!Thread.currentThread().isInterrupted()) {
            lastAttempts++;
            if (lastAttempts > maxAttempts) {
                break;
            }
        }
    }
}

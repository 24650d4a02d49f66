package org.example.math;

import java.util.Arrays;

public final class Stats {
    private Stats() {
    }

    public static double mean(double[] xs) {
        if (xs.length == 0) {
            return Double.NaN;
        }
        double sum = 0;
        for (double x : xs) {
            sum += x;
        }
        return sum / xs.length;
    }

    public static double variance(double[] xs) {
        double m = mean(xs);
        double acc = 0;
        for (double x : xs) {
            double d = x - m;
            acc += d * d;
        }
        return xs.length > 1 ? acc / (xs.length - 1) : 0.0;
    }

    public static double stddev(double[] xs) {
        return Math.sqrt(variance(xs));
    }

    public static double median(double[] xs) {
        double[] sorted = xs.clone();
        Arrays.sort(sorted);
        int n = sorted.length;
        if (n == 0) {
            throw new IllegalArgumentException("no data");
        }
        if (n % 2 == 1) {
            return sorted[n / 2];
        }
        return (sorted[n / 2 - 1] + sorted[n / 2]) / 2.0;
    }

    public static double percentile(double[] xs, double p) {
        if (p < 0 || p > 100) {
            throw new IllegalArgumentException("percentile out of range: " + p);
        }
        double[] sorted = xs.clone();
        Arrays.sort(sorted);
        double rank = p / 100.0 * (sorted.length - 1);
        int lo = (int) Math.floor(rank);
        int hi = (int) Math.ceil(rank);
        double frac = rank - lo;
        return sorted[lo] + (sorted[hi] - sorted[lo]) * frac;
    }

    public static int[] histogram(double[] xs, double min, double max, int buckets) {
        int[] counts = new int[buckets];
        double width = (max - min) / buckets;
        for (double x : xs) {
            if (x < min || x > max) {
                continue;
            }
            int b = (int) ((x - min) / width);
            if (b == buckets) {
                b--;
            }
            counts[b]++;
        }
        return counts;
    }

    public static double correlation(double[] xs, double[] ys) {
        if (xs.length != ys.length) {
            throw new IllegalArgumentException("length mismatch");
        }
        double mx = mean(xs);
        double my = mean(ys);
        double num = 0;
        double dx = 0;
        double dy = 0;
        for (int i = 0; i < xs.length; i++) {
            double a = xs[i] - mx;
            double b = ys[i] - my;
            num += a * b;
            dx += a * a;
            dy += b * b;
        }
        if (dx == 0 || dy == 0) {
            return 0;
        }
        return num / Math.sqrt(dx * dy);
    }

    public static double[] movingAverage(double[] xs, int window) {
        double[] out = new double[Math.max(0, xs.length - window + 1)];
        double sum = 0;
        for (int i = 0; i < xs.length; i++) {
            sum += xs[i];
            if (i >= window) {
                sum -= xs[i - window];
            }
            if (i >= window - 1) {
                out[i - window + 1] = sum / window;
            }
        }
        return out;
    }
}

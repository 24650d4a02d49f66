package org.example.util;

import java.util.ArrayList;
import java.util.Collections;
import java.util.List;

public final class Shapes {
    public abstract static class Shape implements Comparable<Shape> {
        private static int created;

        protected final String label;

        protected Shape(String label) {
            this.label = label;
            created++;
        }

        public abstract double area();

        public abstract double perimeter();

        @Override
        public int compareTo(Shape other) {
            return Double.compare(area(), other.area());
        }

        public static int createdCount() {
            return created;
        }
    }

    public static final class Circle extends Shape {
        private final double radius;

        public Circle(double radius) {
            super("circle");
            this.radius = radius;
        }

        @Override
        public double area() {
            return Math.PI * radius * radius;
        }

        @Override
        public double perimeter() {
            return 2 * Math.PI * radius;
        }
    }

    public static final class Rect extends Shape {
        private final double width;
        private final double height;

        public Rect(double width, double height) {
            super(width == height ? "square" : "rect");
            this.width = width;
            this.height = height;
        }

        @Override
        public double area() {
            return width * height;
        }

        @Override
        public double perimeter() {
            return 2 * (width + height);
        }
    }

    public static final class Polygon extends Shape {
        private final double[] xs;
        private final double[] ys;

        public Polygon(double[] xs, double[] ys) {
            super("polygon");
            if (xs.length != ys.length || xs.length < 3) {
                throw new IllegalArgumentException("need at least three points");
            }
            this.xs = xs;
            this.ys = ys;
        }

        @Override
        public double area() {
            double twice = 0;
            int n = xs.length;
            for (int i = 0; i < n; i++) {
                int j = (i + 1) % n;
                twice += xs[i] * ys[j] - xs[j] * ys[i];
            }
            return Math.abs(twice) / 2;
        }

        @Override
        public double perimeter() {
            double total = 0;
            int n = xs.length;
            for (int i = 0; i < n; i++) {
                int j = (i + 1) % n;
                total += Math.hypot(xs[j] - xs[i], ys[j] - ys[i]);
            }
            return total;
        }
    }

    private static final List<Shape> REGISTRY = new ArrayList<>();

    static {
        REGISTRY.add(new Circle(1.0));
        REGISTRY.add(new Rect(1.0, 1.0));
    }

    private Shapes() {
    }

    public static Shape largest(List<Shape> shapes) {
        if (shapes.isEmpty()) {
            return null;
        }
        return Collections.max(shapes);
    }

    public static double totalArea(List<? extends Shape> shapes) {
        double total = 0;
        for (Shape s : shapes) {
            total += s.area();
        }
        return total;
    }

    public static int countOverlappingPairs(List<Rect> rects, double[][] origins) {
        int pairs = 0;
        outer:
        for (int i = 0; i < rects.size(); i++) {
            for (int j = i + 1; j < rects.size(); j++) {
                if (origins[i][0] + rects.get(i).width < origins[j][0]) {
                    continue outer;
                }
                if (origins[j][0] + rects.get(j).width >= origins[i][0]) {
                    pairs++;
                }
            }
        }
        return pairs;
    }

    public static <T extends Shape> List<T> filterByArea(List<T> shapes, double minArea) {
        List<T> out = new ArrayList<>();
        for (T s : shapes) {
            if (s.area() < minArea) {
                continue;
            }
            out.add(s);
        }
        return out;
    }

    public static String classify(Shape s) {
        double ratio = s.area() / (s.perimeter() * s.perimeter());
        String kind;
        if (ratio > 0.07) {
            kind = "round";
        } else if (ratio > 0.05) {
            kind = "compact";
        } else {
            kind = "elongated";
        }
        return s.label + ":" + kind;
    }

    public static int scaleUntil(Shape s, double target) {
        int steps = 0;
        double area = s.area();
        do {
            area *= 2;
            steps++;
        } while (area < target && steps < 64);
        return steps;
    }

    public static List<Shape> registry() {
        return Collections.unmodifiableList(REGISTRY);
    }
}

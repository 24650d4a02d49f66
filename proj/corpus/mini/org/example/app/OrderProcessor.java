package org.example.app;

import java.util.ArrayList;
import java.util.List;
import java.util.Objects;

public class OrderProcessor {
    public static final class Line {
        final String sku;
        final int quantity;

        public Line(String sku, int quantity) {
            this.sku = Objects.requireNonNull(sku);
            this.quantity = quantity;
        }
    }

    public static final class Order {
        final String id;
        final List<Line> lines = new ArrayList<>();
        boolean express;

        public Order(String id) {
            this.id = id;
        }

        public Order with(String sku, int quantity) {
            lines.add(new Line(sku, quantity));
            return this;
        }
    }

    private final Inventory inventory;
    private final List<String> rejected = new ArrayList<>();
    private int processed;

    public OrderProcessor(Inventory inventory) {
        this.inventory = inventory;
    }

    public boolean process(Order order) {
        if (order.lines.isEmpty()) {
            rejected.add(order.id);
            return false;
        }
        for (Line line : order.lines) {
            if (line.quantity <= 0) {
                rejected.add(order.id);
                return false;
            }
        }
        List<Line> taken = new ArrayList<>();
        for (Line line : order.lines) {
            if (!inventory.remove(line.sku, line.quantity)) {
                for (Line undo : taken) {
                    inventory.restock(undo.sku, undo.quantity);
                }
                rejected.add(order.id);
                return false;
            }
            taken.add(line);
        }
        processed++;
        return true;
    }

    public int processAll(List<Order> orders) {
        int ok = 0;
        for (Order order : orders) {
            if (order == null) {
                continue;
            }
            if (process(order)) {
                ok++;
            }
        }
        return ok;
    }

    public int processUntilFailure(List<Order> orders) {
        int ok = 0;
        for (int i = 0; i < orders.size(); i++) {
            if (!process(orders.get(i))) {
                break;
            }
            ok++;
        }
        return ok;
    }

    public double fee(Order order) {
        int units = 0;
        for (Line line : order.lines) {
            units += line.quantity;
        }
        double base = units > 10 ? 0.0 : 4.99;
        if (order.express) {
            base += 9.99;
        }
        return base;
    }

    public List<String> getRejected() {
        return new ArrayList<>(rejected);
    }

    public int getProcessed() {
        return processed;
    }

    public String summary() {
        String report = "processed=" + processed;
        for (int i = 0; i < rejected.size(); i++) {
            report += ", rejected=" + rejected.get(i);
        }
        return report;
    }
}

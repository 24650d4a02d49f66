package org.example.app;

import java.util.ArrayList;
import java.util.HashMap;
import java.util.List;
import java.util.Map;

public class Inventory {
    public enum Category {
        FOOD(0.05), BOOKS(0.0), ELECTRONICS(0.2), CLOTHING(0.1);

        private final double taxRate;

        Category(double taxRate) {
            this.taxRate = taxRate;
        }

        public double taxRate() {
            return taxRate;
        }
    }

    public static class Item {
        private final String sku;
        private final String name;
        private final Category category;
        private int quantity;
        private final double price;

        public Item(String sku, String name, Category category, int quantity, double price) {
            this.sku = sku;
            this.name = name;
            this.category = category;
            this.quantity = quantity;
            this.price = price;
        }

        public String getSku() {
            return sku;
        }

        public String getName() {
            return name;
        }

        public Category getCategory() {
            return category;
        }

        public int getQuantity() {
            return quantity;
        }

        public double getPrice() {
            return price;
        }

        void adjust(int delta) {
            quantity += delta;
        }
    }

    private final Map<String, Item> items = new HashMap<>();
    private int lowStockThreshold = 5;

    public void add(Item item) {
        if (items.containsKey(item.getSku())) {
            throw new IllegalArgumentException("duplicate sku " + item.getSku());
        }
        items.put(item.getSku(), item);
    }

    public boolean remove(String sku, int amount) {
        Item item = items.get(sku);
        if (item == null) {
            return false;
        }
        if (item.getQuantity() < amount) {
            return false;
        }
        item.adjust(-amount);
        return true;
    }

    public void restock(String sku, int amount) {
        Item item = items.get(sku);
        if (item == null) {
            throw new IllegalArgumentException("unknown sku " + sku);
        }
        item.adjust(amount);
    }

    public List<Item> lowStock() {
        List<Item> out = new ArrayList<>();
        for (Item item : items.values()) {
            if (item.getQuantity() < lowStockThreshold) {
                out.add(item);
            }
        }
        return out;
    }

    public double totalValue() {
        double total = 0;
        for (Item item : items.values()) {
            total += item.getPrice() * item.getQuantity();
        }
        return total;
    }

    public double priceWithTax(Item item) {
        return item.getPrice() * (1 + item.getCategory().taxRate());
    }

    public String shelfLabel(Item item) {
        String prefix;
        switch (item.getCategory()) {
            case FOOD:
                prefix = "F";
                break;
            case BOOKS:
                prefix = "B";
                break;
            case ELECTRONICS:
                prefix = "E";
                break;
            default:
                prefix = "X";
                break;
        }
        return prefix + "-" + item.getSku();
    }

    public int shippingDays(Category category) {
        return switch (category) {
            case FOOD -> 1;
            case BOOKS, CLOTHING -> 3;
            case ELECTRONICS -> 5;
        };
    }

    public Map<Category, Integer> countByCategory() {
        Map<Category, Integer> counts = new HashMap<>();
        for (Item item : items.values()) {
            counts.merge(item.getCategory(), item.getQuantity(), Integer::sum);
        }
        return counts;
    }

    public void setLowStockThreshold(int threshold) {
        if (threshold < 0) {
            throw new IllegalArgumentException("threshold must not be negative");
        }
        this.lowStockThreshold = threshold;
    }
}

package org.example.io;

import java.io.BufferedReader;
import java.io.FileReader;
import java.io.IOException;
import java.io.InputStream;
import java.util.HashMap;
import java.util.Map;

public class ConfigLoader {
    private final Map<String, String> values = new HashMap<>();
    private final String path;

    public ConfigLoader(String path) {
        this.path = path;
    }

    public void load() throws IOException {
        try (BufferedReader reader = new BufferedReader(new FileReader(path))) {
            String line;
            int number = 0;
            while ((line = reader.readLine()) != null) {
                number++;
                line = line.trim();
                if (line.isEmpty() || line.startsWith("#")) {
                    continue;
                }
                int eq = line.indexOf('=');
                if (eq < 0) {
                    throw new IOException(path + ":" + number + ": missing '='");
                }
                values.put(line.substring(0, eq).trim(), line.substring(eq + 1).trim());
            }
        }
    }

    public String get(String key, String fallback) {
        String value = values.get(key);
        return value != null ? value : fallback;
    }

    public int getInt(String key, int fallback) {
        String raw = values.get(key);
        if (raw == null) {
            return fallback;
        }
        try {
            return Integer.parseInt(raw);
        } catch (NumberFormatException e) {
            return fallback;
        }
    }

    public boolean getBoolean(String key) {
        String raw = get(key, "false").toLowerCase();
        switch (raw) {
            case "true":
            case "yes":
            case "on":
                return true;
            default:
                return false;
        }
    }

    public static int drain(InputStream in) throws IOException {
        byte[] buffer = new byte[4096];
        int total = 0;
        int n;
        while ((n = in.read(buffer)) != -1) {
            total += n;
        }
        return total;
    }

    public static long countLines(InputStream in) throws IOException {
        long lines = 0;
        int c;
        while ((c = in.read()) != -1) {
            if (c == '\n') {
                lines++;
            }
        }
        return lines;
    }

    public Map<String, String> withPrefix(String prefix) {
        Map<String, String> out = new HashMap<>();
        for (Map.Entry<String, String> e : values.entrySet()) {
            if (e.getKey().startsWith(prefix)) {
                out.put(e.getKey().substring(prefix.length()), e.getValue());
            }
        }
        return out;
    }

    public void loadQuietly() {
        try {
            load();
        } catch (IOException e) {
            System.err.println("could not read " + path + ": " + e.getMessage());
        } finally {
            values.putIfAbsent("loaded", "true");
        }
    }
}

package org.example.text;

import java.io.BufferedReader;
import java.io.IOException;
import java.io.Reader;
import java.util.ArrayList;
import java.util.List;

public class CsvReader implements AutoCloseable {
    private final BufferedReader reader;
    private final char delimiter;
    private int lineNumber;

    public CsvReader(Reader source, char delimiter) {
        this.reader = new BufferedReader(source);
        this.delimiter = delimiter;
    }

    public List<String> readRow() throws IOException {
        String line = reader.readLine();
        if (line == null) {
            return null;
        }
        lineNumber++;
        return parseLine(line);
    }

    public List<List<String>> readAll() throws IOException {
        List<List<String>> rows = new ArrayList<>();
        List<String> row;
        while ((row = readRow()) != null) {
            if (row.isEmpty()) {
                continue;
            }
            rows.add(row);
        }
        return rows;
    }

    List<String> parseLine(String line) {
        List<String> fields = new ArrayList<>();
        StringBuilder field = new StringBuilder();
        boolean quoted = false;
        for (int i = 0; i < line.length(); i++) {
            char c = line.charAt(i);
            if (quoted) {
                if (c == '"') {
                    if (i + 1 < line.length() && line.charAt(i + 1) == '"') {
                        field.append('"');
                        i++;
                    } else {
                        quoted = false;
                    }
                } else {
                    field.append(c);
                }
            } else if (c == '"') {
                quoted = true;
            } else if (c == delimiter) {
                fields.add(field.toString());
                field.setLength(0);
            } else {
                field.append(c);
            }
        }
        if (quoted) {
            throw new IllegalStateException("unterminated quote on line " + lineNumber);
        }
        fields.add(field.toString());
        return fields;
    }

    public int getLineNumber() {
        return lineNumber;
    }

    public static int columnIndex(List<String> header, String name) {
        int index = 0;
        for (String h : header) {
            if (h.trim().equalsIgnoreCase(name)) {
                return index;
            }
            index++;
        }
        return -1;
    }

    public static double sumColumn(List<List<String>> rows, int column) {
        double total = 0.0;
        for (List<String> row : rows) {
            if (column >= row.size()) {
                continue;
            }
            try {
                total += Double.parseDouble(row.get(column));
            } catch (NumberFormatException e) {
                System.err.println("skipping bad number: " + row.get(column));
            }
        }
        return total;
    }

    @Override
    public void close() throws IOException {
        reader.close();
    }
}

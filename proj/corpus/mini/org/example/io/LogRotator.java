package org.example.io;

import java.io.File;
import java.io.IOException;
import java.util.ArrayList;
import java.util.Arrays;
import java.util.Comparator;
import java.util.List;

public class LogRotator {
    private final File directory;
    private final String baseName;
    private final int keep;
    private final long maxBytes;

    public LogRotator(File directory, String baseName, int keep, long maxBytes) {
        this.directory = directory;
        this.baseName = baseName;
        this.keep = keep;
        this.maxBytes = maxBytes;
    }

    public boolean needsRotation() {
        File current = new File(directory, baseName);
        return current.exists() && current.length() >= maxBytes;
    }

    public void rotate() throws IOException {
        for (int i = keep - 1; i >= 1; i--) {
            File from = archive(i);
            if (!from.exists()) {
                continue;
            }
            File to = archive(i + 1);
            if (to.exists() && !to.delete()) {
                throw new IOException("cannot delete " + to);
            }
            if (!from.renameTo(to)) {
                throw new IOException("cannot rename " + from);
            }
        }
        File current = new File(directory, baseName);
        if (current.exists() && !current.renameTo(archive(1))) {
            throw new IOException("cannot rotate " + current);
        }
    }

    private File archive(int index) {
        return new File(directory, baseName + "." + index);
    }

    public List<File> archives() {
        File[] files = directory.listFiles();
        List<File> out = new ArrayList<>();
        if (files == null) {
            return out;
        }
        for (File f : files) {
            String name = f.getName();
            if (!name.startsWith(baseName + ".")) {
                continue;
            }
            out.add(f);
        }
        out.sort(Comparator.comparing(File::getName));
        return out;
    }

    public int purgeOlderThan(long cutoffMillis) {
        int removed = 0;
        for (File f : archives()) {
            if (f.lastModified() < cutoffMillis) {
                if (f.delete()) {
                    removed++;
                } else {
                    System.err.println("failed to delete " + f);
                }
            }
        }
        return removed;
    }

    public long totalSize() {
        long total = 0;
        for (File f : archives()) {
            total += f.length();
        }
        File current = new File(directory, baseName);
        if (current.exists()) {
            total += current.length();
        }
        return total;
    }

    public static String humanSize(long bytes) {
        String[] units = {"B", "KB", "MB", "GB"};
        double value = bytes;
        int unit = 0;
        while (value >= 1024 && unit < units.length - 1) {
            value /= 1024;
            unit++;
        }
        return String.format("%.1f %s", value, units[unit]);
    }

    public static File[] newestFirst(File[] files) {
        File[] copy = Arrays.copyOf(files, files.length);
        Arrays.sort(copy, (a, b) -> Long.compare(b.lastModified(), a.lastModified()));
        return copy;
    }
}

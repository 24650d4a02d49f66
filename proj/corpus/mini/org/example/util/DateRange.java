package org.example.util;

import java.time.DayOfWeek;
import java.time.LocalDate;
import java.util.ArrayList;
import java.util.Iterator;
import java.util.List;

public final class DateRange implements Iterable<LocalDate> {
    private final LocalDate start;
    private final LocalDate end;

    public DateRange(LocalDate start, LocalDate end) {
        if (end.isBefore(start)) {
            throw new IllegalArgumentException("end before start");
        }
        this.start = start;
        this.end = end;
    }

    public boolean contains(LocalDate day) {
        return !day.isBefore(start) && !day.isAfter(end);
    }

    public boolean overlaps(DateRange other) {
        return !other.end.isBefore(start) && !other.start.isAfter(end);
    }

    public long length() {
        return end.toEpochDay() - start.toEpochDay() + 1;
    }

    public int countWorkdays() {
        int workdays = 0;
        for (LocalDate d : this) {
            DayOfWeek dow = d.getDayOfWeek();
            if (dow == DayOfWeek.SATURDAY || dow == DayOfWeek.SUNDAY) {
                continue;
            }
            workdays++;
        }
        return workdays;
    }

    public List<DateRange> splitByMonth() {
        List<DateRange> parts = new ArrayList<>();
        LocalDate cursor = start;
        while (!cursor.isAfter(end)) {
            LocalDate monthEnd = cursor.withDayOfMonth(cursor.lengthOfMonth());
            LocalDate partEnd = monthEnd.isAfter(end) ? end : monthEnd;
            parts.add(new DateRange(cursor, partEnd));
            cursor = partEnd.plusDays(1);
        }
        return parts;
    }

    public String quarterName() {
        int month = start.getMonthValue();
        String quarter;
        if (month <= 3) {
            quarter = "Q1";
        } else if (month <= 6) {
            quarter = "Q2";
        } else if (month <= 9) {
            quarter = "Q3";
        } else {
            quarter = "Q4";
        }
        return quarter + " " + start.getYear();
    }

    @Override
    public Iterator<LocalDate> iterator() {
        return new Iterator<LocalDate>() {
            private LocalDate next = start;

            @Override
            public boolean hasNext() {
                return !next.isAfter(end);
            }

            @Override
            public LocalDate next() {
                LocalDate current = next;
                next = next.plusDays(1);
                return current;
            }
        };
    }

    @Override
    public String toString() {
        return start + ".." + end;
    }
}

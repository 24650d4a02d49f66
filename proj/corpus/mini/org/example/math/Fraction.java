package org.example.math;

public final class Fraction implements Comparable<Fraction> {
    public static final Fraction ZERO = new Fraction(0, 1);
    public static final Fraction ONE = new Fraction(1, 1);

    private final long numerator;
    private final long denominator;

    public Fraction(long numerator, long denominator) {
        if (denominator == 0) {
            throw new ArithmeticException("zero denominator");
        }
        if (denominator < 0) {
            numerator = -numerator;
            denominator = -denominator;
        }
        long g = Primes.gcd(Math.abs(numerator), denominator);
        if (g == 0) {
            g = 1;
        }
        this.numerator = numerator / g;
        this.denominator = denominator / g;
    }

    public Fraction plus(Fraction o) {
        return new Fraction(numerator * o.denominator + o.numerator * denominator, denominator * o.denominator);
    }

    public Fraction minus(Fraction o) {
        return plus(o.negate());
    }

    public Fraction times(Fraction o) {
        return new Fraction(numerator * o.numerator, denominator * o.denominator);
    }

    public Fraction dividedBy(Fraction o) {
        if (o.numerator == 0) {
            throw new ArithmeticException("division by zero");
        }
        return new Fraction(numerator * o.denominator, denominator * o.numerator);
    }

    public Fraction negate() {
        return new Fraction(-numerator, denominator);
    }

    public double toDouble() {
        return (double) numerator / denominator;
    }

    public static Fraction sum(Fraction[] parts) {
        Fraction total = ZERO;
        for (Fraction f : parts) {
            total = total.plus(f);
        }
        return total;
    }

    public static Fraction harmonic(int n) {
        Fraction h = ZERO;
        for (int k = 1; k <= n; k++) {
            h = h.plus(new Fraction(1, k));
        }
        return h;
    }

    @Override
    public int compareTo(Fraction o) {
        return Long.compare(numerator * o.denominator, o.numerator * denominator);
    }

    @Override
    public boolean equals(Object other) {
        if (this == other) {
            return true;
        }
        if (!(other instanceof Fraction)) {
            return false;
        }
        Fraction f = (Fraction) other;
        return numerator == f.numerator && denominator == f.denominator;
    }

    @Override
    public int hashCode() {
        return Long.hashCode(numerator) * 31 + Long.hashCode(denominator);
    }

    @Override
    public String toString() {
        return denominator == 1 ? Long.toString(numerator) : numerator + "/" + denominator;
    }
}

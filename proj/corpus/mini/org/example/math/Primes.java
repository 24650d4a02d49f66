package org.example.math;

import java.util.ArrayList;
import java.util.List;

public class Primes {
    public static boolean isPrime(long n) {
        if (n < 2) {
            return false;
        }
        if (n % 2 == 0) {
            return n == 2;
        }
        for (long d = 3; d * d <= n; d += 2) {
            if (n % d == 0) {
                return false;
            }
        }
        return true;
    }

    public static List<Integer> sieve(int limit) {
        boolean[] composite = new boolean[limit + 1];
        List<Integer> primes = new ArrayList<>();
        for (int i = 2; i <= limit; i++) {
            if (composite[i]) {
                continue;
            }
            primes.add(i);
            for (long j = (long) i * i; j <= limit; j += i) {
                composite[(int) j] = true;
            }
        }
        return primes;
    }

    public static List<Long> factorize(long n) {
        List<Long> factors = new ArrayList<>();
        long d = 2;
        while (n > 1) {
            if (d * d > n) {
                factors.add(n);
                break;
            }
            if (n % d == 0) {
                factors.add(d);
                n /= d;
            } else {
                d++;
            }
        }
        return factors;
    }

    public static long gcd(long a, long b) {
        while (b != 0) {
            long t = a % b;
            a = b;
            b = t;
        }
        return Math.abs(a);
    }

    public static long lcm(long a, long b) {
        return a / gcd(a, b) * b;
    }

    public static long modPow(long base, long exp, long mod) {
        long result = 1;
        base %= mod;
        while (exp > 0) {
            if ((exp & 1) == 1) {
                result = result * base % mod;
            }
            base = base * base % mod;
            exp >>= 1;
        }
        return result;
    }

    public static int nthPrime(int n) {
        int count = 0;
        int candidate = 1;
        do {
            candidate++;
            if (isPrime(candidate)) {
                count++;
            }
        } while (count < n);
        return candidate;
    }

    public static int firstPrimeAbove(int floor) {
        int n = floor + 1;
        while (true) {
            if (isPrime(n)) {
                break;
            }
            n++;
        }
        return n;
    }
}

package org.example.app;

import java.util.ArrayList;
import java.util.List;
import java.util.regex.Pattern;

public class Validator {
    private static final Pattern EMAIL = Pattern.compile("[^@\\s]+@[^@\\s]+\\.[a-z]{2,}");
    private static final int MAX_NAME = 64;

    private final List<String> errors = new ArrayList<>();

    public boolean validateUser(String name, String email, int age) {
        errors.clear();
        if (name == null || name.isEmpty()) {
            errors.add("name is required");
        } else if (name.length() > MAX_NAME) {
            errors.add("name too long");
        }
        if (email == null || !EMAIL.matcher(email).matches()) {
            errors.add("invalid email");
        }
        if (age < 0 || age > 150) {
            errors.add("age out of range");
        }
        return errors.isEmpty();
    }

    public boolean validatePassword(String password) {
        if (password.length() < 8) {
            errors.add("password too short");
            return false;
        }
        boolean upper = false;
        boolean digit = false;
        boolean symbol = false;
        for (char c : password.toCharArray()) {
            if (Character.isUpperCase(c)) {
                upper = true;
            } else if (Character.isDigit(c)) {
                digit = true;
            } else if (!Character.isLetter(c)) {
                symbol = true;
            }
            if (upper && digit && symbol) {
                break;
            }
        }
        if (!(upper && digit && symbol)) {
            errors.add("password needs upper case, digit and symbol");
        }
        return upper && digit && symbol;
    }

    public int firstInvalidIndex(int[] values, int min, int max) {
        for (int i = 0; i < values.length; i++) {
            if (values[i] < min || values[i] > max) {
                return i;
            }
        }
        return -1;
    }

    public static boolean isValidIsbn10(String isbn) {
        if (isbn.length() != 10) {
            return false;
        }
        int sum = 0;
        for (int i = 0; i < 10; i++) {
            char c = isbn.charAt(i);
            int digit;
            if (i == 9 && (c == 'X' || c == 'x')) {
                digit = 10;
            } else if (Character.isDigit(c)) {
                digit = c - '0';
            } else {
                return false;
            }
            sum += (10 - i) * digit;
        }
        return sum % 11 == 0;
    }

    public static boolean luhn(String number) {
        int sum = 0;
        boolean doubled = false;
        for (int i = number.length() - 1; i >= 0; i--) {
            int d = number.charAt(i) - '0';
            if (d < 0 || d > 9) {
                return false;
            }
            if (doubled) {
                d *= 2;
                if (d > 9) {
                    d -= 9;
                }
            }
            sum += d;
            doubled = !doubled;
        }
        return sum % 10 == 0;
    }

    public List<String> getErrors() {
        return errors;
    }
}

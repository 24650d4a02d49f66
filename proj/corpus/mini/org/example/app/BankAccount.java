package org.example.app;

import java.util.ArrayList;
import java.util.Collections;
import java.util.List;

public class BankAccount {
    public static class InsufficientFundsException extends Exception {
        public InsufficientFundsException(String message) {
            super(message);
        }
    }

    private final String owner;
    private long balanceCents;
    private final List<String> history = new ArrayList<>();
    private boolean frozen;

    public BankAccount(String owner, long openingCents) {
        this.owner = owner;
        this.balanceCents = openingCents;
        history.add("open " + openingCents);
    }

    public synchronized void deposit(long cents) {
        if (cents <= 0) {
            throw new IllegalArgumentException("deposit must be positive");
        }
        checkNotFrozen();
        balanceCents += cents;
        history.add("deposit " + cents);
    }

    public synchronized void withdraw(long cents) throws InsufficientFundsException {
        checkNotFrozen();
        if (cents > balanceCents) {
            throw new InsufficientFundsException(owner + " has only " + balanceCents);
        }
        balanceCents -= cents;
        history.add("withdraw " + cents);
    }

    public void transferTo(BankAccount other, long cents) throws InsufficientFundsException {
        BankAccount first = System.identityHashCode(this) < System.identityHashCode(other) ? this : other;
        BankAccount second = first == this ? other : this;
        synchronized (first) {
            synchronized (second) {
                withdraw(cents);
                other.deposit(cents);
            }
        }
    }

    public long applyInterest(double yearlyRate, int months) {
        long before = balanceCents;
        for (int m = 0; m < months; m++) {
            balanceCents += Math.round(balanceCents * yearlyRate / 12.0);
        }
        history.add("interest " + (balanceCents - before));
        return balanceCents - before;
    }

    private void checkNotFrozen() {
        if (frozen) {
            throw new IllegalStateException("account frozen");
        }
    }

    public void freeze() {
        frozen = true;
    }

    public long getBalanceCents() {
        return balanceCents;
    }

    public List<String> getHistory() {
        return Collections.unmodifiableList(history);
    }

    public String statement() {
        StringBuilder sb = new StringBuilder(owner).append('\n');
        int line = 1;
        for (String entry : history) {
            sb.append(line++).append(". ").append(entry).append('\n');
        }
        return sb.toString();
    }
}

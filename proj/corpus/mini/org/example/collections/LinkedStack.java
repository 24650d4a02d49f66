package org.example.collections;

import java.util.Iterator;
import java.util.NoSuchElementException;
import java.util.function.Predicate;

public class LinkedStack<T> implements Iterable<T> {
    private static final class Node<T> {
        final T value;
        Node<T> next;

        Node(T value, Node<T> next) {
            this.value = value;
            this.next = next;
        }
    }

    private Node<T> head;
    private int count;

    public void push(T value) {
        head = new Node<>(value, head);
        count++;
    }

    public T pop() {
        if (head == null) {
            throw new NoSuchElementException("stack is empty");
        }
        T value = head.value;
        head = head.next;
        count--;
        return value;
    }

    public T peek() {
        return head == null ? null : head.value;
    }

    public int size() {
        return count;
    }

    public boolean isEmpty() {
        return head == null;
    }

    public int removeIf(Predicate<T> condition) {
        int removed = 0;
        while (head != null && condition.test(head.value)) {
            head = head.next;
            removed++;
        }
        Node<T> current = head;
        while (current != null && current.next != null) {
            if (condition.test(current.next.value)) {
                current.next = current.next.next;
                removed++;
                continue;
            }
            current = current.next;
        }
        count -= removed;
        return removed;
    }

    public T find(Predicate<T> condition) {
        for (Node<T> n = head; n != null; n = n.next) {
            if (condition.test(n.value)) {
                return n.value;
            }
        }
        return null;
    }

    public void reverse() {
        Node<T> previous = null;
        Node<T> current = head;
        while (current != null) {
            Node<T> next = current.next;
            current.next = previous;
            previous = current;
            current = next;
        }
        head = previous;
    }

    @Override
    public Iterator<T> iterator() {
        return new Iterator<T>() {
            private Node<T> cursor = head;

            @Override
            public boolean hasNext() {
                return cursor != null;
            }

            @Override
            public T next() {
                if (cursor == null) {
                    throw new NoSuchElementException();
                }
                T value = cursor.value;
                cursor = cursor.next;
                return value;
            }
        };
    }

    public String join(String separator) {
        String result = "";
        boolean first = true;
        for (T value : this) {
            if (!first) {
                result += separator;
            }
            result += String.valueOf(value);
            first = false;
        }
        return result;
    }
}

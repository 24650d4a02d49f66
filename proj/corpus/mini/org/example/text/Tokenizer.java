package org.example.text;

import java.util.ArrayList;
import java.util.List;

public class Tokenizer {
    public enum Kind { WORD, NUMBER, SYMBOL, SPACE }

    public static final class Token {
        public final Kind kind;
        public final String text;
        public final int offset;

        public Token(Kind kind, String text, int offset) {
            this.kind = kind;
            this.text = text;
            this.offset = offset;
        }

        @Override
        public String toString() {
            return kind + "(" + text + ")@" + offset;
        }
    }

    private final String input;
    private int pos;
    private final boolean keepSpaces;

    public Tokenizer(String input, boolean keepSpaces) {
        this.input = input;
        this.keepSpaces = keepSpaces;
        this.pos = 0;
    }

    public List<Token> tokenize() {
        List<Token> tokens = new ArrayList<>();
        while (pos < input.length()) {
            char c = input.charAt(pos);
            int start = pos;
            if (Character.isWhitespace(c)) {
                while (pos < input.length() && Character.isWhitespace(input.charAt(pos))) {
                    pos++;
                }
                if (!keepSpaces) {
                    continue;
                }
                tokens.add(new Token(Kind.SPACE, input.substring(start, pos), start));
            } else if (Character.isDigit(c)) {
                pos = scanNumber(pos);
                tokens.add(new Token(Kind.NUMBER, input.substring(start, pos), start));
            } else if (Character.isLetter(c) || c == '_') {
                while (pos < input.length() && (Character.isLetterOrDigit(input.charAt(pos)) || input.charAt(pos) == '_')) {
                    pos++;
                }
                tokens.add(new Token(Kind.WORD, input.substring(start, pos), start));
            } else {
                pos++;
                tokens.add(new Token(Kind.SYMBOL, String.valueOf(c), start));
            }
        }
        return tokens;
    }

    private int scanNumber(int from) {
        int i = from;
        boolean seenDot = false;
        while (i < input.length()) {
            char c = input.charAt(i);
            if (c == '.') {
                if (seenDot) {
                    break;
                }
                seenDot = true;
            } else if (!Character.isDigit(c)) {
                break;
            }
            i++;
        }
        return i;
    }

    public static int countWords(String text) {
        int words = 0;
        for (Token t : new Tokenizer(text, false).tokenize()) {
            if (t.kind == Kind.WORD) {
                words++;
            }
        }
        return words;
    }

    public static String describe(Kind kind) {
        switch (kind) {
            case WORD:
                return "word";
            case NUMBER:
                return "number";
            case SYMBOL:
                return "symbol";
            default:
                return "whitespace";
        }
    }
}

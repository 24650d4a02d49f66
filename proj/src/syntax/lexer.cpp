#include <array>
#include <cctype>
#include <string_view>
#include <vector>

#include "scs/error.hpp"
#include "scs/syntax/parser.hpp"

namespace scs::syntax {

namespace {

constexpr std::array<std::string_view, 53> kKeywords = {
    "abstract", "assert",     "boolean",  "break",     "byte",      "case",         "catch",
    "char",     "class",      "const",    "continue",  "default",   "do",           "double",
    "else",     "enum",       "extends",  "final",     "finally",   "float",        "for",
    "goto",     "if",         "implements", "import",  "instanceof", "int",         "interface",
    "long",     "native",     "new",      "package",   "private",   "protected",    "public",
    "return",   "short",      "static",   "strictfp",  "super",     "switch",       "synchronized",
    "this",     "throw",      "throws",   "transient", "try",       "void",         "volatile",
    "while",    "true",       "false",    "null",
};

// Longest match first. '>' is always emitted alone; the parser composes
// shift and comparison operators from adjacent '>' tokens so that nested
// generics close cleanly.
constexpr std::array<std::string_view, 20> kPuncts = {
    "...", "<<=", "->", "::", "++", "--", "&&", "||", "==", "!=",
    "<=",  "<<",  "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=",
};
constexpr std::string_view kSinglePuncts = "(){}[];,.@=<>!~?:+-*/&|^%";

bool ident_start(unsigned char c) { return std::isalpha(c) || c == '_' || c == '$' || c >= 0x80; }
bool ident_part(unsigned char c) { return ident_start(c) || std::isdigit(c); }

class Lexer {
  public:
    Lexer(std::string_view src, const std::string& file_id) : src_(src), file_id_(file_id) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        for (;;) {
            skip_trivia();
            if (i_ >= src_.size()) break;
            out.push_back(next());
        }
        auto end = static_cast<std::uint32_t>(src_.size());
        out.push_back(Token{TokenKind::end, end, end});
        return out;
    }

  private:
    [[noreturn]] void fail(std::size_t at, const std::string& what) const {
        std::uint32_t line = 1, col = 1;
        for (std::size_t k = 0; k < at && k < src_.size(); ++k) {
            if (src_[k] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(file_id_, line, col, what);
    }

    char peek(std::size_t k = 0) const { return i_ + k < src_.size() ? src_[i_ + k] : '\0'; }

    void skip_trivia() {
        while (i_ < src_.size()) {
            char c = src_[i_];
            if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f') {
                ++i_;
            } else if (c == '/' && peek(1) == '/') {
                while (i_ < src_.size() && src_[i_] != '\n') ++i_;
            } else if (c == '/' && peek(1) == '*') {
                auto close = src_.find("*/", i_ + 2);
                if (close == std::string_view::npos) fail(i_, "unterminated comment");
                i_ = close + 2;
            } else {
                break;
            }
        }
    }

    Token make(TokenKind kind, std::size_t begin) const {
        return Token{kind, static_cast<std::uint32_t>(begin), static_cast<std::uint32_t>(i_)};
    }

    Token next() {
        std::size_t begin = i_;
        auto c = static_cast<unsigned char>(src_[i_]);
        if (ident_start(c)) {
            while (i_ < src_.size() && ident_part(static_cast<unsigned char>(src_[i_]))) ++i_;
            auto word = src_.substr(begin, i_ - begin);
            for (auto kw : kKeywords)
                if (kw == word) return make(TokenKind::keyword, begin);
            return make(TokenKind::identifier, begin);
        }
        if (std::isdigit(c) || (c == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))))
            return number(begin);
        if (c == '"') {
            if (peek(1) == '"' && peek(2) == '"') return text_block(begin);
            return quoted(begin, '"', TokenKind::string);
        }
        if (c == '\'') return quoted(begin, '\'', TokenKind::character);
        for (auto p : kPuncts) {
            if (src_.substr(i_, p.size()) == p) {
                i_ += p.size();
                return make(TokenKind::punct, begin);
            }
        }
        if (kSinglePuncts.find(static_cast<char>(c)) != std::string_view::npos) {
            ++i_;
            return make(TokenKind::punct, begin);
        }
        fail(i_, std::string("unexpected character '") + static_cast<char>(c) + "'");
    }

    Token quoted(std::size_t begin, char quote, TokenKind kind) {
        ++i_;
        while (i_ < src_.size() && src_[i_] != quote) {
            if (src_[i_] == '\n') fail(begin, "unterminated literal");
            if (src_[i_] == '\\') ++i_;
            ++i_;
        }
        if (i_ >= src_.size()) fail(begin, "unterminated literal");
        ++i_;
        return make(kind, begin);
    }

    Token text_block(std::size_t begin) {
        i_ += 3;
        for (;;) {
            if (i_ >= src_.size()) fail(begin, "unterminated text block");
            if (src_[i_] == '\\') {
                i_ += 2;
                continue;
            }
            if (src_.substr(i_, 3) == "\"\"\"") {
                i_ += 3;
                return make(TokenKind::text_block, begin);
            }
            ++i_;
        }
    }

    void digits(bool hex) {
        while (i_ < src_.size()) {
            auto d = static_cast<unsigned char>(src_[i_]);
            if (d == '_' || (hex ? std::isxdigit(d) : std::isdigit(d)) != 0)
                ++i_;
            else
                break;
        }
    }

    void exponent() {
        ++i_;
        if (peek() == '+' || peek() == '-') ++i_;
        digits(false);
    }

    Token number(std::size_t begin) {
        bool floating = false;
        if (peek() == '0' && (peek(1) == 'x' || peek(1) == 'X')) {
            i_ += 2;
            digits(true);
            if (peek() == '.') {
                ++i_;
                digits(true);
                floating = true;
            }
            if (peek() == 'p' || peek() == 'P') {
                exponent();
                floating = true;
            }
        } else if (peek() == '0' && (peek(1) == 'b' || peek(1) == 'B')) {
            i_ += 2;
            digits(false);
        } else {
            digits(false);
            if (peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
                ++i_;
                digits(false);
                floating = true;
            } else if (peek() == '.' && peek(1) != '.' &&
                       !ident_start(static_cast<unsigned char>(peek(1)))) {
                ++i_;
                floating = true;
            }
            if (peek() == 'e' || peek() == 'E') {
                exponent();
                floating = true;
            }
        }
        char s = peek();
        if (s == 'l' || s == 'L') {
            ++i_;
        } else if (s == 'f' || s == 'F' || s == 'd' || s == 'D') {
            ++i_;
            floating = true;
        }
        if (i_ < src_.size() && ident_part(static_cast<unsigned char>(src_[i_])))
            fail(i_, "malformed number");
        return make(floating ? TokenKind::floating : TokenKind::integer, begin);
    }

    std::string_view src_;
    const std::string& file_id_;
    std::size_t i_ = 0;
};

}  // namespace

std::vector<Token> lex(std::string_view source, const std::string& file_id) {
    return Lexer(source, file_id).run();
}

}  // namespace scs::syntax

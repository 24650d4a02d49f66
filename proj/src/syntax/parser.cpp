#include "scs/syntax/parser.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "scs/error.hpp"

namespace scs::syntax {

namespace {

using Kids = std::vector<std::pair<Field, NodeId>>;

struct Fail {
    std::uint32_t pos;
    std::string what;
};

constexpr std::string_view kModifierWords[] = {
    "public", "protected", "private", "static",    "final",    "abstract",
    "native", "synchronized", "transient", "volatile", "strictfp", "default",
};

bool is_primitive(std::string_view w) {
    return w == "int" || w == "long" || w == "short" || w == "byte" || w == "char" ||
           w == "float" || w == "double" || w == "boolean";
}

class Parser {
  public:
    Parser(std::string_view src, std::vector<Token> tokens, bool pattern)
        : src_(src), toks_(std::move(tokens)), pattern_(pattern) {}

    std::vector<Token>& tokens() { return toks_; }
    std::vector<Node>& nodes() { return nodes_; }
    std::uint32_t pos() const { return pos_; }
    std::uint32_t furthest() const { return furthest_; }

    NodeId compilation_unit() {
        Kids kids;
        if (at_kw("package")) kids.emplace_back(Field::none, package_decl());
        while (at_kw("import")) kids.emplace_back(Field::none, import_decl());
        while (!at_end()) {
            if (accept(";")) continue;
            if (pattern_ && at("...")) {
                kids.emplace_back(Field::none, ellipsis());
                continue;
            }
            NodeId mods = modifiers();
            kids.emplace_back(Field::none, type_declaration(mods, cur()));
        }
        NodeId id = add_node(NodeKind::program, 0, kids);
        auto& n = nodes_[id];
        n.tok_begin = 0;
        n.tok_end = pos_;
        n.begin = 0;
        n.end = static_cast<std::uint32_t>(src_.size());
        return id;
    }

    NodeId statement_fragment() {
        NodeId id = block_statement();
        expect_end();
        return id;
    }

    NodeId expression_fragment() {
        NodeId id = expression();
        expect_end();
        return id;
    }

    NodeId member_fragment() {
        NodeId id = member(NodeKind::class_body);
        if (id == kNoNode) fail("expected a member declaration");
        expect_end();
        return id;
    }

    NodeId unit_fragment() {
        NodeId id = compilation_unit();
        expect_end();
        return id;
    }

  private:
    // ---- token helpers ------------------------------------------------

    std::string_view text_at(std::uint32_t i) const {
        const auto& t = toks_[std::min<std::size_t>(i, toks_.size() - 1)];
        return src_.substr(t.begin, t.end - t.begin);
    }
    const Token& tok_at(std::uint32_t i) const { return toks_[std::min<std::size_t>(i, toks_.size() - 1)]; }
    std::string_view text(std::uint32_t k = 0) const { return text_at(pos_ + k); }
    TokenKind kind(std::uint32_t k = 0) const { return tok_at(pos_ + k).kind; }
    std::uint32_t cur() const { return pos_; }
    bool at_end() const { return kind() == TokenKind::end; }

    bool at(std::string_view p, std::uint32_t k = 0) const {
        auto tk = kind(k);
        return (tk == TokenKind::punct) && text(k) == p;
    }
    bool at_kw(std::string_view w, std::uint32_t k = 0) const {
        return kind(k) == TokenKind::keyword && text(k) == w;
    }
    bool at_ident(std::uint32_t k = 0) const { return kind(k) == TokenKind::identifier; }
    bool at_ident_text(std::string_view w, std::uint32_t k = 0) const {
        return at_ident(k) && text(k) == w;
    }
    // Two tokens with nothing between them.
    bool adjacent(std::uint32_t k) const { return tok_at(pos_ + k).end == tok_at(pos_ + k + 1).begin; }

    [[noreturn]] void fail(std::string what) {
        furthest_ = std::max(furthest_, pos_);
        throw Fail{pos_, std::move(what)};
    }
    bool accept(std::string_view p) {
        if (!at(p)) return false;
        ++pos_;
        return true;
    }
    bool accept_kw(std::string_view w) {
        if (!at_kw(w)) return false;
        ++pos_;
        return true;
    }
    void expect(std::string_view p) {
        if (!accept(p)) fail("expected '" + std::string(p) + "'");
    }
    void expect_kw(std::string_view w) {
        if (!accept_kw(w)) fail("expected '" + std::string(w) + "'");
    }
    void expect_end() {
        if (!at_end()) fail("unexpected trailing input");
    }

    // ---- node construction -------------------------------------------

    NodeId add_node(NodeKind k, std::uint32_t tok_begin, const Kids& kids, std::string op = {}) {
        Node n;
        n.kind = k;
        n.tok_begin = tok_begin;
        n.tok_end = pos_;
        n.begin = tok_at(tok_begin).begin;
        n.end = pos_ > tok_begin ? tok_at(pos_ - 1).end : n.begin;
        n.op = std::move(op);
        for (auto [f, c] : kids) {
            if (c == kNoNode) continue;
            nodes_[c].field = f;
            n.children.push_back(c);
        }
        nodes_.push_back(std::move(n));
        return static_cast<NodeId>(nodes_.size() - 1);
    }

    NodeId leaf(NodeKind k) {
        std::uint32_t b = pos_++;
        return add_node(k, b, {});
    }

    struct Mark {
        std::uint32_t pos;
        std::size_t nodes;
    };
    Mark mark() const { return {pos_, nodes_.size()}; }
    void reset(Mark m) {
        pos_ = m.pos;
        nodes_.resize(m.nodes);
    }

    bool is_metavar_token(std::uint32_t k = 0) const {
        return pattern_ && at_ident(k) && is_metavariable_name(text(k));
    }

    NodeId ellipsis() {
        if (!at("...")) fail("expected '...'");
        return leaf(NodeKind::ellipsis);
    }

    // Identifier in a naming position.
    NodeId identifier() {
        if (is_metavar_token()) return leaf(NodeKind::metavariable);
        if (!at_ident()) fail("expected identifier");
        return leaf(NodeKind::identifier);
    }

    // ---- lookahead scanners (no node construction) -------------------

    // Index just past balanced type arguments starting at i ('<'), or 0.
    std::uint32_t scan_type_args(std::uint32_t i) const {
        int depth = 0;
        for (;; ++i) {
            auto t = tok_at(i);
            auto s = text_at(i);
            if (t.kind == TokenKind::end) return 0;
            if (t.kind == TokenKind::punct) {
                if (s == "<") {
                    ++depth;
                } else if (s == ">") {
                    if (--depth == 0) return i + 1;
                } else if (s != "," && s != "." && s != "?" && s != "&" && s != "[" && s != "]" &&
                           s != "@") {
                    return 0;
                }
            } else if (t.kind == TokenKind::keyword) {
                if (s != "extends" && s != "super" && !is_primitive(s)) return 0;
            } else if (t.kind != TokenKind::identifier) {
                return 0;
            }
        }
    }

    // Index just past a type starting at i, or 0.
    std::uint32_t scan_type(std::uint32_t i) const {
        auto s = text_at(i);
        if (tok_at(i).kind == TokenKind::keyword && is_primitive(s)) {
            ++i;
        } else if (tok_at(i).kind == TokenKind::identifier) {
            ++i;
            for (;;) {
                if (text_at(i) == "<" && tok_at(i).kind == TokenKind::punct) {
                    i = scan_type_args(i);
                    if (i == 0) return 0;
                } else if (text_at(i) == "." && tok_at(i + 1).kind == TokenKind::identifier) {
                    i += 2;
                } else {
                    break;
                }
            }
        } else {
            return 0;
        }
        while (text_at(i) == "[" && text_at(i + 1) == "]") i += 2;
        return i;
    }

    // Local variable declaration start: Type name (= | , | ; | [ | :).
    bool looks_like_declaration() const {
        std::uint32_t i = scan_type(pos_);
        if (i == 0 || tok_at(i).kind != TokenKind::identifier) return false;
        auto n = text_at(i + 1);
        return tok_at(i + 1).kind == TokenKind::punct &&
               (n == "=" || n == "," || n == ";" || n == "[" || n == ":");
    }

    // Index of the token matching the '(' at i, or 0.
    std::uint32_t matching_paren(std::uint32_t i) const {
        int depth = 0;
        for (;; ++i) {
            auto t = tok_at(i);
            if (t.kind == TokenKind::end) return 0;
            if (t.kind != TokenKind::punct) continue;
            auto s = text_at(i);
            if (s == "(") ++depth;
            if (s == ")" && --depth == 0) return i;
        }
    }

    // ---- declarations ------------------------------------------------

    NodeId qualified_name() {
        std::uint32_t b = cur();
        NodeId id = identifier();
        while (at(".") && (at_ident(1) || at("*", 1))) {
            if (at("*", 1)) break;
            ++pos_;
            NodeId name = identifier();
            id = add_node(NodeKind::scoped_identifier, b, {{Field::scope, id}, {Field::name, name}});
        }
        return id;
    }

    NodeId package_decl() {
        std::uint32_t b = cur();
        expect_kw("package");
        NodeId name = qualified_name();
        expect(";");
        return add_node(NodeKind::package_declaration, b, {{Field::none, name}});
    }

    NodeId import_decl() {
        std::uint32_t b = cur();
        expect_kw("import");
        std::string op = accept_kw("static") ? "static" : "";
        NodeId name = qualified_name();
        NodeId star = kNoNode;
        if (at(".") && at("*", 1)) {
            ++pos_;
            star = leaf(NodeKind::asterisk);
        }
        expect(";");
        return add_node(NodeKind::import_declaration, b, {{Field::none, name}, {Field::none, star}}, op);
    }

    bool at_modifier() const {
        if (kind() == TokenKind::keyword) {
            for (auto w : kModifierWords)
                if (text() == w)
                    return !(w == "default" && (at(":", 1) || at("->", 1))) && !(w == "synchronized" && at("(", 1));
            return false;
        }
        if (at_ident_text("sealed") && (at_kw("class", 1) || at_kw("interface", 1) ||
                                         at_kw("abstract", 1) || at_kw("public", 1)))
            return true;
        if (at_ident_text("non") && at("-", 1) && at_ident_text("sealed", 2)) return true;
        return false;
    }

    bool at_annotation() const { return at("@") && !at_kw("interface", 1); }

    NodeId annotation() {
        std::uint32_t b = cur();
        expect("@");
        NodeId name = qualified_name();
        if (!at("(")) return add_node(NodeKind::marker_annotation, b, {{Field::name, name}});
        std::uint32_t ab = cur();
        expect("(");
        Kids args;
        if (!at(")")) {
            do {
                if (at_ident() && at("=", 1)) {
                    std::uint32_t pb = cur();
                    NodeId key = identifier();
                    expect("=");
                    NodeId value = element_value();
                    args.emplace_back(Field::none, add_node(NodeKind::element_value_pair, pb,
                                                            {{Field::key, key}, {Field::value, value}}));
                } else {
                    args.emplace_back(Field::none, element_value());
                }
            } while (accept(","));
        }
        expect(")");
        NodeId list = add_node(NodeKind::annotation_argument_list, ab, args);
        return add_node(NodeKind::annotation, b, {{Field::name, name}, {Field::arguments, list}});
    }

    NodeId element_value() {
        if (at_annotation()) return annotation();
        if (at("{")) {
            std::uint32_t b = cur();
            ++pos_;
            Kids items;
            while (!at("}")) {
                items.emplace_back(Field::none, element_value());
                if (!accept(",")) break;
            }
            expect("}");
            return add_node(NodeKind::element_value_array_initializer, b, items);
        }
        return ternary();
    }

    // Returns kNoNode when there are no modifiers.
    NodeId modifiers() {
        std::uint32_t b = cur();
        Kids kids;
        bool any = false;
        for (;;) {
            if (at_annotation()) {
                kids.emplace_back(Field::none, annotation());
            } else if (at_modifier()) {
                pos_ += at_ident_text("non") ? 3 : 1;
            } else {
                break;
            }
            any = true;
        }
        return any ? add_node(NodeKind::modifiers, b, kids) : kNoNode;
    }

    bool at_type_declaration() const {
        if (at_kw("class") || at_kw("interface") || at_kw("enum")) return true;
        if (at("@") && at_kw("interface", 1)) return true;
        return at_ident_text("record") && at_ident(1) && (at("(", 2) || at("<", 2));
    }

    NodeId type_parameters() {
        std::uint32_t b = cur();
        expect("<");
        Kids params;
        do {
            std::uint32_t pb = cur();
            while (at_annotation()) annotation();
            NodeId name = type_name_leaf();
            NodeId bound = kNoNode;
            if (at_kw("extends")) {
                std::uint32_t bb = cur();
                ++pos_;
                Kids types;
                do types.emplace_back(Field::none, type());
                while (accept("&"));
                bound = add_node(NodeKind::type_bound, bb, types);
            }
            params.emplace_back(Field::none, add_node(NodeKind::type_parameter, pb, {{Field::none, name}, {Field::none, bound}}));
        } while (accept(","));
        expect(">");
        return add_node(NodeKind::type_parameters, b, params);
    }

    NodeId type_list() {
        std::uint32_t b = cur();
        Kids types;
        do types.emplace_back(Field::none, type());
        while (accept(","));
        return add_node(NodeKind::type_list, b, types);
    }

    NodeId type_declaration(NodeId mods, std::uint32_t b) {
        if (mods != kNoNode) b = nodes_[mods].tok_begin;
        if (accept_kw("class")) {
            NodeId name = identifier();
            NodeId tparams = at("<") ? type_parameters() : kNoNode;
            NodeId super_class = kNoNode, ifaces = kNoNode, perm = kNoNode;
            if (at_kw("extends")) {
                std::uint32_t sb = cur();
                ++pos_;
                NodeId t = type();
                super_class = add_node(NodeKind::superclass, sb, {{Field::none, t}});
            }
            if (at_kw("implements")) {
                std::uint32_t ib = cur();
                ++pos_;
                NodeId list = type_list();
                ifaces = add_node(NodeKind::super_interfaces, ib, {{Field::none, list}});
            }
            perm = permits();
            NodeId body = class_body(NodeKind::class_body);
            return add_node(NodeKind::class_declaration, b,
                            {{Field::none, mods}, {Field::name, name}, {Field::type_parameters, tparams},
                             {Field::superclass, super_class}, {Field::interfaces, ifaces},
                             {Field::permits, perm}, {Field::body, body}});
        }
        if (accept_kw("interface")) {
            NodeId name = identifier();
            NodeId tparams = at("<") ? type_parameters() : kNoNode;
            NodeId ext = kNoNode;
            if (at_kw("extends")) {
                std::uint32_t eb = cur();
                ++pos_;
                NodeId list = type_list();
                ext = add_node(NodeKind::extends_interfaces, eb, {{Field::none, list}});
            }
            NodeId perm = permits();
            NodeId body = class_body(NodeKind::interface_body);
            return add_node(NodeKind::interface_declaration, b,
                            {{Field::none, mods}, {Field::name, name}, {Field::type_parameters, tparams},
                             {Field::none, ext}, {Field::permits, perm}, {Field::body, body}});
        }
        if (accept_kw("enum")) {
            NodeId name = identifier();
            NodeId ifaces = kNoNode;
            if (at_kw("implements")) {
                std::uint32_t ib = cur();
                ++pos_;
                NodeId list = type_list();
                ifaces = add_node(NodeKind::super_interfaces, ib, {{Field::none, list}});
            }
            NodeId body = enum_body();
            return add_node(NodeKind::enum_declaration, b,
                            {{Field::none, mods}, {Field::name, name}, {Field::interfaces, ifaces}, {Field::body, body}});
        }
        if (at("@") && at_kw("interface", 1)) {
            pos_ += 2;
            NodeId name = identifier();
            NodeId body = class_body(NodeKind::annotation_type_body);
            return add_node(NodeKind::annotation_type_declaration, b,
                            {{Field::none, mods}, {Field::name, name}, {Field::body, body}});
        }
        if (at_ident_text("record")) {
            ++pos_;
            NodeId name = identifier();
            NodeId tparams = at("<") ? type_parameters() : kNoNode;
            NodeId params = formal_parameters();
            NodeId ifaces = kNoNode;
            if (at_kw("implements")) {
                std::uint32_t ib = cur();
                ++pos_;
                NodeId list = type_list();
                ifaces = add_node(NodeKind::super_interfaces, ib, {{Field::none, list}});
            }
            NodeId body = class_body(NodeKind::class_body);
            return add_node(NodeKind::record_declaration, b,
                            {{Field::none, mods}, {Field::name, name}, {Field::type_parameters, tparams},
                             {Field::parameters, params}, {Field::interfaces, ifaces}, {Field::body, body}});
        }
        fail("expected a type declaration");
    }

    NodeId permits() {
        if (!at_ident_text("permits")) return kNoNode;
        std::uint32_t b = cur();
        ++pos_;
        NodeId list = type_list();
        return add_node(NodeKind::permits, b, {{Field::none, list}});
    }

    NodeId class_body(NodeKind body_kind) {
        std::uint32_t b = cur();
        expect("{");
        Kids members;
        while (!at("}")) {
            if (at_end()) fail("unterminated class body");
            if (accept(";")) continue;
            members.emplace_back(Field::none, member(body_kind));
        }
        expect("}");
        return add_node(body_kind, b, members);
    }

    NodeId enum_body() {
        std::uint32_t b = cur();
        expect("{");
        Kids kids;
        while (!at(";") && !at("}")) {
            if (pattern_ && at("...")) {
                kids.emplace_back(Field::none, ellipsis());
            } else {
                std::uint32_t cb = cur();
                NodeId mods = modifiers();
                NodeId name = identifier();
                NodeId args = at("(") ? arguments() : kNoNode;
                NodeId body = at("{") ? class_body(NodeKind::class_body) : kNoNode;
                kids.emplace_back(Field::none, add_node(NodeKind::enum_constant, cb,
                                                        {{Field::none, mods}, {Field::name, name},
                                                         {Field::arguments, args}, {Field::body, body}}));
            }
            if (!accept(",")) break;
        }
        if (at(";")) {
            std::uint32_t db = cur();
            ++pos_;
            Kids members;
            while (!at("}")) {
                if (at_end()) fail("unterminated enum body");
                if (accept(";")) continue;
                members.emplace_back(Field::none, member(NodeKind::class_body));
            }
            kids.emplace_back(Field::none, add_node(NodeKind::enum_body_declarations, db, members));
        }
        expect("}");
        return add_node(NodeKind::enum_body, b, kids);
    }

    NodeId member(NodeKind body_kind) {
        std::uint32_t b = cur();
        if (pattern_ && at("...")) {
            NodeId e = ellipsis();
            accept(";");
            return e;
        }
        NodeId mods = modifiers();
        if (at_type_declaration()) return type_declaration(mods, b);
        if (at("{")) {
            NodeId body = block();
            if (mods != kNoNode) return add_node(NodeKind::static_initializer, b, {{Field::none, mods}, {Field::body, body}});
            return body;
        }
        NodeId tparams = at("<") ? type_parameters() : kNoNode;
        // Constructor: Name '(' ; compact constructor: Name '{'.
        if ((at_ident() || is_metavar_token()) && at("(", 1)) {
            NodeId name = identifier();
            NodeId params = formal_parameters();
            NodeId thr = throws_clause();
            NodeId body = constructor_body();
            return add_node(NodeKind::constructor_declaration, b,
                            {{Field::none, mods}, {Field::type_parameters, tparams}, {Field::name, name},
                             {Field::parameters, params}, {Field::none, thr}, {Field::body, body}});
        }
        if (at_ident() && at("{", 1) && body_kind == NodeKind::class_body) {
            NodeId name = identifier();
            NodeId body = block();
            return add_node(NodeKind::compact_constructor_declaration, b,
                            {{Field::none, mods}, {Field::name, name}, {Field::body, body}});
        }
        NodeId t = type(true);
        NodeId name = identifier();
        if (at("(")) {
            NodeId params = formal_parameters();
            NodeId dims = at("[") ? dimensions() : kNoNode;
            if (at_kw("default")) {
                ++pos_;
                NodeId value = element_value();
                expect(";");
                return add_node(NodeKind::annotation_type_element_declaration, b,
                                {{Field::none, mods}, {Field::type, t}, {Field::name, name},
                                 {Field::dimensions, dims}, {Field::value, value}});
            }
            NodeId thr = throws_clause();
            NodeId body = kNoNode;
            if (!accept(";")) body = block();
            return add_node(NodeKind::method_declaration, b,
                            {{Field::none, mods}, {Field::type_parameters, tparams}, {Field::type, t},
                             {Field::name, name}, {Field::parameters, params}, {Field::dimensions, dims},
                             {Field::none, thr}, {Field::body, body}});
        }
        if (tparams != kNoNode) fail("type parameters on a field");
        if (nodes_[t].kind == NodeKind::void_type) fail("void field");
        Kids kids{{Field::none, mods}, {Field::type, t}};
        kids.emplace_back(Field::declarator, declarator_rest(name, nodes_[name].tok_begin));
        while (accept(",")) kids.emplace_back(Field::declarator, variable_declarator());
        expect(";");
        return add_node(NodeKind::field_declaration, b, kids);
    }

    NodeId throws_clause() {
        if (!at_kw("throws")) return kNoNode;
        std::uint32_t b = cur();
        ++pos_;
        Kids types;
        do types.emplace_back(Field::none, type());
        while (accept(","));
        return add_node(NodeKind::throws, b, types);
    }

    NodeId constructor_body() {
        std::uint32_t b = cur();
        expect("{");
        Kids stmts;
        while (!at("}")) {
            if (at_end()) fail("unterminated constructor body");
            stmts.emplace_back(Field::none, block_statement());
        }
        expect("}");
        return add_node(NodeKind::constructor_body, b, stmts);
    }

    NodeId formal_parameters() {
        std::uint32_t b = cur();
        expect("(");
        Kids params;
        if (!at(")")) {
            do params.emplace_back(Field::none, formal_parameter());
            while (accept(","));
        }
        expect(")");
        return add_node(NodeKind::formal_parameters, b, params);
    }

    NodeId formal_parameter() {
        if (pattern_ && at("...")) return ellipsis();
        std::uint32_t b = cur();
        NodeId mods = modifiers();
        NodeId t = type();
        if (accept("...")) {
            NodeId name = identifier();
            return add_node(NodeKind::spread_parameter, b, {{Field::none, mods}, {Field::type, t}, {Field::name, name}});
        }
        if (at_kw("this")) {
            ++pos_;
            return add_node(NodeKind::formal_parameter, b, {{Field::none, mods}, {Field::type, t}});
        }
        NodeId name = identifier();
        NodeId dims = at("[") ? dimensions() : kNoNode;
        return add_node(NodeKind::formal_parameter, b,
                        {{Field::none, mods}, {Field::type, t}, {Field::name, name}, {Field::dimensions, dims}});
    }

    NodeId variable_declarator() {
        std::uint32_t b = cur();
        NodeId name = identifier();
        return declarator_rest(name, b);
    }

    NodeId declarator_rest(NodeId name, std::uint32_t b) {
        NodeId dims = (at("[") && at("]", 1)) ? dimensions() : kNoNode;
        NodeId value = kNoNode;
        if (accept("=")) value = at("{") ? array_initializer() : expression();
        return add_node(NodeKind::variable_declarator, b,
                        {{Field::name, name}, {Field::dimensions, dims}, {Field::value, value}});
    }

    NodeId array_initializer() {
        std::uint32_t b = cur();
        expect("{");
        Kids items;
        while (!at("}")) {
            items.emplace_back(Field::none, at("{") ? array_initializer() : expression());
            if (!accept(",")) break;
        }
        expect("}");
        return add_node(NodeKind::array_initializer, b, items);
    }

    // ---- types -------------------------------------------------------

    NodeId dimensions() {
        std::uint32_t b = cur();
        int n = 0;
        while (at("[") && at("]", 1)) {
            pos_ += 2;
            ++n;
        }
        if (n == 0) fail("expected '[]'");
        return add_node(NodeKind::dimensions, b, {});
    }

    NodeId type_name_leaf() {
        if (is_metavar_token()) return leaf(NodeKind::metavariable);
        if (!at_ident()) fail("expected type name");
        return leaf(NodeKind::type_identifier);
    }

    NodeId type_arguments() {
        std::uint32_t b = cur();
        expect("<");
        Kids args;
        if (!at(">")) {
            do {
                while (at_annotation()) annotation();
                if (at("?")) {
                    std::uint32_t wb = cur();
                    ++pos_;
                    std::string op;
                    NodeId bound = kNoNode;
                    if (at_kw("extends") || at_kw("super")) {
                        op = std::string(text());
                        ++pos_;
                        bound = type();
                    }
                    args.emplace_back(Field::none, add_node(NodeKind::wildcard, wb, {{Field::none, bound}}, op));
                } else {
                    args.emplace_back(Field::none, type());
                }
            } while (accept(","));
        }
        expect(">");
        return add_node(NodeKind::type_arguments, b, args);
    }

    NodeId class_type() {
        std::uint32_t b = cur();
        NodeId t = type_name_leaf();
        if (at("<")) {
            NodeId args = type_arguments();
            t = add_node(NodeKind::generic_type, b, {{Field::none, t}, {Field::none, args}});
        }
        while (at(".") && (at_ident(1) || at("@", 1))) {
            ++pos_;
            while (at_annotation()) annotation();
            NodeId name = type_name_leaf();
            t = add_node(NodeKind::scoped_type_identifier, b, {{Field::none, t}, {Field::none, name}});
            if (at("<")) {
                NodeId args = type_arguments();
                t = add_node(NodeKind::generic_type, b, {{Field::none, t}, {Field::none, args}});
            }
        }
        return t;
    }

    NodeId type(bool allow_void = false) {
        std::uint32_t b = cur();
        while (at_annotation()) annotation();
        NodeId t;
        if (kind() == TokenKind::keyword) {
            auto w = text();
            if (w == "int" || w == "long" || w == "short" || w == "byte" || w == "char")
                t = leaf(NodeKind::integral_type);
            else if (w == "float" || w == "double")
                t = leaf(NodeKind::floating_point_type);
            else if (w == "boolean")
                t = leaf(NodeKind::boolean_type);
            else if (w == "void" && allow_void)
                return leaf(NodeKind::void_type);
            else
                fail("expected a type");
        } else {
            t = class_type();
        }
        if (at("[") && at("]", 1)) {
            NodeId dims = dimensions();
            t = add_node(NodeKind::array_type, b, {{Field::element, t}, {Field::dimensions, dims}});
        }
        return t;
    }

    // ---- statements --------------------------------------------------

    NodeId block() {
        std::uint32_t b = cur();
        expect("{");
        Kids stmts;
        while (!at("}")) {
            if (at_end()) fail("unterminated block");
            stmts.emplace_back(Field::none, block_statement());
        }
        expect("}");
        return add_node(NodeKind::block, b, stmts);
    }

    NodeId local_variable_declaration(NodeId mods, std::uint32_t b) {
        NodeId t = type();
        Kids kids{{Field::none, mods}, {Field::type, t}};
        do kids.emplace_back(Field::declarator, variable_declarator());
        while (accept(","));
        expect(";");
        return add_node(NodeKind::local_variable_declaration, b, kids);
    }

    NodeId block_statement() {
        std::uint32_t b = cur();
        if (pattern_ && at("...")) {
            NodeId e = ellipsis();
            if (at(";")) {
                ++pos_;
                nodes_[e].tok_end = pos_;
                nodes_[e].end = tok_at(pos_ - 1).end;
            }
            return e;
        }
        if (at_annotation() || at_modifier()) {
            NodeId mods = modifiers();
            if (at_type_declaration()) return type_declaration(mods, b);
            return local_variable_declaration(mods, b);
        }
        if (at_type_declaration()) return type_declaration(kNoNode, b);
        if (looks_like_declaration()) return local_variable_declaration(kNoNode, b);
        return statement();
    }

    NodeId paren_condition() {
        std::uint32_t b = cur();
        expect("(");
        NodeId e = expression();
        expect(")");
        return add_node(NodeKind::parenthesized_expression, b, {{Field::none, e}});
    }

    NodeId statement() {
        std::uint32_t b = cur();
        if (pattern_ && at("...")) return block_statement();
        if (at("{")) return block();
        if (at(";")) return leaf(NodeKind::empty_statement);
        if (kind() == TokenKind::keyword) {
            auto w = text();
            if (w == "if") {
                ++pos_;
                NodeId cond = paren_condition();
                NodeId cons = statement();
                NodeId alt = kNoNode;
                if (accept_kw("else")) alt = statement();
                return add_node(NodeKind::if_statement, b,
                                {{Field::condition, cond}, {Field::consequence, cons}, {Field::alternative, alt}});
            }
            if (w == "while") {
                ++pos_;
                NodeId cond = paren_condition();
                NodeId body = statement();
                return add_node(NodeKind::while_statement, b, {{Field::condition, cond}, {Field::body, body}});
            }
            if (w == "do") {
                ++pos_;
                NodeId body = statement();
                expect_kw("while");
                NodeId cond = paren_condition();
                expect(";");
                return add_node(NodeKind::do_statement, b, {{Field::body, body}, {Field::condition, cond}});
            }
            if (w == "for") return for_statement();
            if (w == "return") {
                ++pos_;
                NodeId e = at(";") ? kNoNode : expression();
                expect(";");
                return add_node(NodeKind::return_statement, b, {{Field::none, e}});
            }
            if (w == "break" || w == "continue") {
                ++pos_;
                NodeId label = at_ident() ? identifier() : kNoNode;
                expect(";");
                return add_node(w == "break" ? NodeKind::break_statement : NodeKind::continue_statement, b,
                                {{Field::none, label}});
            }
            if (w == "throw") {
                ++pos_;
                NodeId e = expression();
                expect(";");
                return add_node(NodeKind::throw_statement, b, {{Field::none, e}});
            }
            if (w == "try") return try_statement();
            if (w == "switch") return switch_expression();
            if (w == "synchronized") {
                ++pos_;
                NodeId lock = paren_condition();
                NodeId body = block();
                return add_node(NodeKind::synchronized_statement, b, {{Field::none, lock}, {Field::body, body}});
            }
            if (w == "assert") {
                ++pos_;
                NodeId cond = expression();
                NodeId msg = accept(":") ? expression() : kNoNode;
                expect(";");
                return add_node(NodeKind::assert_statement, b, {{Field::none, cond}, {Field::none, msg}});
            }
            if ((w == "this" || w == "super") && at("(", 1)) {
                NodeId target = leaf(w == "this" ? NodeKind::this_ : NodeKind::super_);
                NodeId args = arguments();
                expect(";");
                return add_node(NodeKind::explicit_constructor_invocation, b,
                                {{Field::none, target}, {Field::arguments, args}});
            }
        }
        if (at_ident_text("yield") && !at("=", 1) && !at(".", 1) && !at("(", 1) && !at("[", 1) &&
            !at(";", 1) && !at("++", 1) && !at("--", 1) && !assignment_op_at(1)) {
            ++pos_;
            NodeId e = expression();
            expect(";");
            return add_node(NodeKind::yield_statement, b, {{Field::none, e}});
        }
        if (at_ident() && at(":", 1) && !is_metavar_token()) {
            NodeId label = identifier();
            ++pos_;
            NodeId body = statement();
            return add_node(NodeKind::labeled_statement, b, {{Field::none, label}, {Field::none, body}});
        }
        NodeId e = expression();
        expect(";");
        return add_node(NodeKind::expression_statement, b, {{Field::none, e}});
    }

    NodeId for_statement() {
        std::uint32_t b = cur();
        expect_kw("for");
        expect("(");
        if (pattern_ && at("...") && at(")", 1)) {
            NodeId header = ellipsis();
            expect(")");
            NodeId body = statement();
            return add_node(NodeKind::for_statement, b, {{Field::none, header}, {Field::body, body}});
        }
        // Enhanced for: [modifiers] Type name ':' expr
        {
            Mark m = mark();
            NodeId mods = modifiers();
            std::uint32_t ti = scan_type(pos_);
            if (ti != 0 && tok_at(ti).kind == TokenKind::identifier && text_at(ti + 1) == ":") {
                NodeId t = type();
                NodeId name = identifier();
                expect(":");
                NodeId value = expression();
                expect(")");
                NodeId body = statement();
                return add_node(NodeKind::enhanced_for_statement, b,
                                {{Field::none, mods}, {Field::type, t}, {Field::name, name},
                                 {Field::value, value}, {Field::body, body}});
            }
            reset(m);
        }
        Kids kids;
        if (!accept(";")) {
            if (at_modifier() || at_annotation() || looks_like_declaration()) {
                std::uint32_t db = cur();
                NodeId mods = modifiers();
                kids.emplace_back(Field::init, local_variable_declaration(mods, db));
            } else {
                do kids.emplace_back(Field::init, expression());
                while (accept(","));
                expect(";");
            }
        }
        if (!at(";")) kids.emplace_back(Field::condition, expression());
        expect(";");
        if (!at(")")) {
            do kids.emplace_back(Field::update, expression());
            while (accept(","));
        }
        expect(")");
        kids.emplace_back(Field::body, statement());
        return add_node(NodeKind::for_statement, b, kids);
    }

    NodeId try_statement() {
        std::uint32_t b = cur();
        expect_kw("try");
        NodeId resources = kNoNode;
        if (at("(")) {
            std::uint32_t rb = cur();
            ++pos_;
            Kids items;
            while (!at(")")) {
                std::uint32_t ib = cur();
                if (pattern_ && at("...")) {
                    items.emplace_back(Field::none, ellipsis());
                } else if (at_modifier() || at_annotation() || looks_like_declaration() ||
                           (scan_type(pos_) != 0 && tok_at(scan_type(pos_)).kind == TokenKind::identifier &&
                            text_at(scan_type(pos_) + 1) == "=")) {
                    NodeId mods = modifiers();
                    NodeId t = type();
                    NodeId name = identifier();
                    expect("=");
                    NodeId value = expression();
                    items.emplace_back(Field::none, add_node(NodeKind::resource, ib,
                                                             {{Field::none, mods}, {Field::type, t},
                                                              {Field::name, name}, {Field::value, value}}));
                } else {
                    NodeId e = expression();
                    items.emplace_back(Field::none, add_node(NodeKind::resource, ib, {{Field::none, e}}));
                }
                if (!accept(";")) break;
            }
            expect(")");
            resources = add_node(NodeKind::resource_specification, rb, items);
        }
        NodeId body = block();
        Kids kids{{Field::resources, resources}, {Field::body, body}};
        while (at_kw("catch")) {
            std::uint32_t cb = cur();
            ++pos_;
            expect("(");
            std::uint32_t pb = cur();
            NodeId mods = modifiers();
            std::uint32_t tb = cur();
            Kids types;
            do types.emplace_back(Field::none, type());
            while (accept("|"));
            NodeId ctype = add_node(NodeKind::catch_type, tb, types);
            NodeId name = identifier();
            NodeId param = add_node(NodeKind::catch_formal_parameter, pb,
                                    {{Field::none, mods}, {Field::none, ctype}, {Field::name, name}});
            expect(")");
            NodeId cbody = block();
            kids.emplace_back(Field::none, add_node(NodeKind::catch_clause, cb, {{Field::none, param}, {Field::body, cbody}}));
        }
        if (at_kw("finally")) {
            std::uint32_t fb = cur();
            ++pos_;
            NodeId fbody = block();
            kids.emplace_back(Field::none, add_node(NodeKind::finally_clause, fb, {{Field::none, fbody}}));
        }
        if (resources == kNoNode && kids.size() == 2) fail("try without catch or finally");
        return add_node(resources == kNoNode ? NodeKind::try_statement : NodeKind::try_with_resources_statement, b, kids);
    }

    NodeId switch_expression() {
        std::uint32_t b = cur();
        expect_kw("switch");
        NodeId cond = paren_condition();
        std::uint32_t bb = cur();
        expect("{");
        Kids entries;
        while (!at("}")) {
            if (at_end()) fail("unterminated switch block");
            if (pattern_ && at("...")) {
                entries.emplace_back(Field::none, block_statement());
                continue;
            }
            std::uint32_t eb = cur();
            NodeId label = switch_label();
            if (accept("->")) {
                NodeId body;
                if (at("{"))
                    body = block();
                else if (at_kw("throw"))
                    body = statement();
                else {
                    std::uint32_t sb = cur();
                    NodeId e = expression();
                    expect(";");
                    body = add_node(NodeKind::expression_statement, sb, {{Field::none, e}});
                }
                entries.emplace_back(Field::none, add_node(NodeKind::switch_rule, eb, {{Field::none, label}, {Field::none, body}}));
                continue;
            }
            expect(":");
            Kids group{{Field::none, label}};
            while (at_kw("case") || (at_kw("default") && at(":", 1))) {
                group.emplace_back(Field::none, switch_label());
                expect(":");
            }
            while (!at("}") && !at_kw("case") && !(at_kw("default") && (at(":", 1) || at("->", 1)))) {
                if (at_end()) fail("unterminated switch block");
                group.emplace_back(Field::none, block_statement());
            }
            entries.emplace_back(Field::none, add_node(NodeKind::switch_block_statement_group, eb, group));
        }
        expect("}");
        NodeId body = add_node(NodeKind::switch_block, bb, entries);
        return add_node(NodeKind::switch_expression, b, {{Field::condition, cond}, {Field::body, body}});
    }

    NodeId switch_label() {
        std::uint32_t b = cur();
        if (accept_kw("default")) return add_node(NodeKind::switch_label, b, {});
        expect_kw("case");
        // "case A, B ->" would otherwise read as a lambda.
        struct Restore {
            bool& flag;
            bool saved;
            ~Restore() { flag = saved; }
        } restore{in_case_label_, in_case_label_};
        in_case_label_ = true;
        Kids values;
        do values.emplace_back(Field::none, ternary());
        while (accept(","));
        return add_node(NodeKind::switch_label, b, values);
    }

    // ---- expressions -------------------------------------------------

    // Operator spelled by the tokens at pos_+k, with the token count.
    // '>' runs are composed here since the lexer never joins them.
    std::optional<std::pair<std::string, std::uint32_t>> gt_operator(std::uint32_t k) const {
        if (!at(">", k)) return std::nullopt;
        std::uint32_t n = 1;
        while (n < 3 && at(">", k + n) && adjacent(k + n - 1)) ++n;
        std::string op(n, '>');
        if (at("=", k + n) && adjacent(k + n - 1)) return std::pair{op + "=", n + 1};
        return std::pair{op, n};
    }

    bool assignment_op_at(std::uint32_t k) const {
        static constexpr std::string_view ops[] = {"=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<="};
        for (auto op : ops)
            if (at(op, k)) return true;
        auto gt = gt_operator(k);
        return gt && (gt->first == ">>=" || gt->first == ">>>=");
    }

    std::optional<std::pair<std::string, std::uint32_t>> assignment_op() const {
        static constexpr std::string_view ops[] = {"=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<="};
        for (auto op : ops)
            if (at(op)) return std::pair{std::string(op), 1u};
        auto gt = gt_operator(0);
        if (gt && (gt->first == ">>=" || gt->first == ">>>=")) return gt;
        return std::nullopt;
    }

    static int precedence(std::string_view op) {
        if (op == "||") return 1;
        if (op == "&&") return 2;
        if (op == "|") return 3;
        if (op == "^") return 4;
        if (op == "&") return 5;
        if (op == "==" || op == "!=") return 6;
        if (op == "<" || op == ">" || op == "<=" || op == ">=" || op == "instanceof") return 7;
        if (op == "<<" || op == ">>" || op == ">>>") return 8;
        if (op == "+" || op == "-") return 9;
        if (op == "*" || op == "/" || op == "%") return 10;
        return 0;
    }

    std::optional<std::pair<std::string, std::uint32_t>> binary_op() const {
        if (at_kw("instanceof")) return std::pair{std::string("instanceof"), 1u};
        if (at(">")) {
            auto gt = gt_operator(0);
            if (gt->first == ">>=" || gt->first == ">>>=") return std::nullopt;
            return gt;
        }
        if (kind() != TokenKind::punct) return std::nullopt;
        auto t = text();
        if (precedence(t) > 0) return std::pair{std::string(t), 1u};
        return std::nullopt;
    }

    bool at_lambda() const {
        if (in_case_label_) return false;
        if ((at_ident() || is_metavar_token()) && at("->", 1)) return true;
        if (!at("(")) return false;
        std::uint32_t close = matching_paren(pos_);
        return close != 0 && text_at(close + 1) == "->" && tok_at(close + 1).kind == TokenKind::punct;
    }

    NodeId lambda() {
        std::uint32_t b = cur();
        NodeId params;
        if (!at("(")) {
            params = identifier();
        } else {
            bool inferred = true;
            std::uint32_t close = matching_paren(pos_);
            for (std::uint32_t i = pos_ + 1; i < close; ++i) {
                bool name = tok_at(i).kind == TokenKind::identifier;
                bool comma = text_at(i) == "," && tok_at(i).kind == TokenKind::punct;
                if ((i - pos_) % 2 == 1 ? !name : !comma) inferred = false;
            }
            if (close == pos_ + 1) inferred = false;
            if (inferred) {
                std::uint32_t pb = cur();
                ++pos_;
                Kids names;
                do names.emplace_back(Field::none, identifier());
                while (accept(","));
                expect(")");
                params = add_node(NodeKind::inferred_parameters, pb, names);
            } else {
                params = formal_parameters();
            }
        }
        expect("->");
        NodeId body = at("{") ? block() : expression();
        return add_node(NodeKind::lambda_expression, b, {{Field::parameters, params}, {Field::body, body}});
    }

    NodeId expression() {
        if (at_lambda()) return lambda();
        std::uint32_t b = cur();
        NodeId lhs = ternary();
        if (auto op = assignment_op()) {
            pos_ += op->second;
            NodeId rhs = expression();
            return add_node(NodeKind::assignment_expression, b, {{Field::left, lhs}, {Field::right, rhs}}, op->first);
        }
        return lhs;
    }

    NodeId ternary() {
        if (at_lambda()) return lambda();
        std::uint32_t b = cur();
        NodeId cond = binary(1);
        if (!accept("?")) return cond;
        NodeId yes = expression();
        expect(":");
        NodeId no = at_lambda() ? lambda() : ternary();
        return add_node(NodeKind::ternary_expression, b,
                        {{Field::condition, cond}, {Field::consequence, yes}, {Field::alternative, no}});
    }

    NodeId binary(int min_prec) {
        std::uint32_t b = cur();
        NodeId lhs = unary();
        for (;;) {
            auto op = binary_op();
            if (!op) break;
            int prec = precedence(op->first);
            if (prec < min_prec) break;
            pos_ += op->second;
            if (op->first == "instanceof") {
                accept_kw("final");
                NodeId t = type();
                NodeId name = (at_ident() || is_metavar_token()) ? identifier() : kNoNode;
                lhs = add_node(NodeKind::instanceof_expression, b,
                               {{Field::left, lhs}, {Field::right, t}, {Field::name, name}});
                continue;
            }
            NodeId rhs = binary(prec + 1);
            lhs = add_node(NodeKind::binary_expression, b, {{Field::left, lhs}, {Field::right, rhs}}, op->first);
        }
        return lhs;
    }

    bool starts_cast_operand(std::uint32_t i) const {
        auto t = tok_at(i);
        auto s = text_at(i);
        switch (t.kind) {
        case TokenKind::identifier:
        case TokenKind::integer:
        case TokenKind::floating:
        case TokenKind::character:
        case TokenKind::string:
        case TokenKind::text_block:
            return true;
        case TokenKind::keyword:
            return s == "this" || s == "super" || s == "new" || s == "true" || s == "false" ||
                   s == "null" || s == "switch" || is_primitive(s);
        case TokenKind::punct:
            return s == "(" || s == "!" || s == "~" || (pattern_ && s == "...");
        default:
            return false;
        }
    }

    // '(' Type ')' followed by something that can only be a cast operand.
    bool looks_like_cast() const {
        if (!at("(")) return false;
        std::uint32_t i = scan_type(pos_ + 1);
        if (i == 0) return false;
        while (text_at(i) == "&" && tok_at(i).kind == TokenKind::punct) {
            i = scan_type(i + 1);
            if (i == 0) return false;
        }
        if (text_at(i) != ")" || tok_at(i).kind != TokenKind::punct) return false;
        bool primitive = tok_at(pos_ + 1).kind == TokenKind::keyword;
        if (primitive) return true;
        return starts_cast_operand(i + 1);
    }

    NodeId unary() {
        std::uint32_t b = cur();
        if (at("+") || at("-") || at("!") || at("~")) {
            std::string op(text());
            ++pos_;
            NodeId operand = unary();
            return add_node(NodeKind::unary_expression, b, {{Field::operand, operand}}, op);
        }
        if (at("++") || at("--")) {
            std::string op = "pre" + std::string(text());
            ++pos_;
            NodeId operand = unary();
            return add_node(NodeKind::update_expression, b, {{Field::operand, operand}}, op);
        }
        if (looks_like_cast()) {
            ++pos_;
            Kids kids;
            do kids.emplace_back(Field::type, type());
            while (accept("&"));
            expect(")");
            kids.emplace_back(Field::value, at_lambda() ? lambda() : unary());
            return add_node(NodeKind::cast_expression, b, kids);
        }
        return postfix(primary());
    }

    NodeId arguments() {
        std::uint32_t b = cur();
        expect("(");
        Kids args;
        if (!at(")")) {
            do args.emplace_back(Field::none, expression());
            while (accept(","));
        }
        expect(")");
        return add_node(NodeKind::argument_list, b, args);
    }

    NodeId postfix(NodeId e) {
        std::uint32_t b = nodes_[e].tok_begin;
        for (;;) {
            if (at(".")) {
                if (at_kw("class", 1)) fail("unexpected '.class'");
                ++pos_;
                NodeId targs = at("<") ? type_arguments() : kNoNode;
                if (accept_kw("new")) {
                    NodeId t = class_type();
                    NodeId args = arguments();
                    NodeId body = at("{") ? class_body(NodeKind::class_body) : kNoNode;
                    e = add_node(NodeKind::object_creation_expression, b,
                                 {{Field::object, e}, {Field::type, t}, {Field::arguments, args}, {Field::body, body}});
                    continue;
                }
                if (at_kw("this") || at_kw("super")) {
                    NodeId f = leaf(at_kw("this") ? NodeKind::this_ : NodeKind::super_);
                    if (at("(")) {
                        NodeId args = arguments();
                        e = add_node(NodeKind::method_invocation, b,
                                     {{Field::object, e}, {Field::name, f}, {Field::arguments, args}});
                    } else {
                        e = add_node(NodeKind::field_access, b, {{Field::object, e}, {Field::field, f}});
                    }
                    continue;
                }
                NodeId name = identifier();
                if (at("(") || targs != kNoNode) {
                    NodeId args = arguments();
                    e = add_node(NodeKind::method_invocation, b,
                                 {{Field::object, e}, {Field::type_arguments, targs}, {Field::name, name},
                                  {Field::arguments, args}});
                } else {
                    e = add_node(NodeKind::field_access, b, {{Field::object, e}, {Field::field, name}});
                }
            } else if (at("[")) {
                ++pos_;
                NodeId index = expression();
                expect("]");
                e = add_node(NodeKind::array_access, b, {{Field::array, e}, {Field::index, index}});
            } else if (at("::")) {
                ++pos_;
                if (at("<")) type_arguments();
                if (accept_kw("new")) {
                    e = add_node(NodeKind::method_reference, b, {{Field::none, e}}, "new");
                } else {
                    NodeId name = identifier();
                    e = add_node(NodeKind::method_reference, b, {{Field::none, e}, {Field::none, name}});
                }
            } else if (at("++") || at("--")) {
                std::string op(text());
                ++pos_;
                e = add_node(NodeKind::update_expression, b, {{Field::operand, e}}, op);
            } else {
                return e;
            }
        }
    }

    NodeId literal() {
        auto s = text();
        switch (kind()) {
        case TokenKind::integer: {
            NodeKind k = NodeKind::decimal_integer_literal;
            if (s.size() > 1 && s[0] == '0') {
                if (s[1] == 'x' || s[1] == 'X')
                    k = NodeKind::hex_integer_literal;
                else if (s[1] == 'b' || s[1] == 'B')
                    k = NodeKind::binary_integer_literal;
                else if (s[1] != 'l' && s[1] != 'L')
                    k = NodeKind::octal_integer_literal;
            }
            return leaf(k);
        }
        case TokenKind::floating:
            return leaf((s.size() > 1 && (s[1] == 'x' || s[1] == 'X')) ? NodeKind::hex_floating_point_literal
                                                                        : NodeKind::decimal_floating_point_literal);
        case TokenKind::character:
            return leaf(NodeKind::character_literal);
        case TokenKind::string:
            return leaf(NodeKind::string_literal);
        case TokenKind::text_block:
            return leaf(NodeKind::text_block);
        default:
            fail("expected literal");
        }
    }

    NodeId creation() {
        std::uint32_t b = cur();
        expect_kw("new");
        if (at("<")) type_arguments();
        NodeId t;
        if (kind() == TokenKind::keyword && is_primitive(text()))
            t = type();
        else
            t = class_type();
        if (at("[")) {
            if (nodes_[t].kind == NodeKind::array_type) fail("unexpected array type");
            Kids kids{{Field::type, t}};
            while (at("[") && !at("]", 1)) {
                std::uint32_t db = cur();
                ++pos_;
                NodeId size = expression();
                expect("]");
                kids.emplace_back(Field::dimensions, add_node(NodeKind::dimensions_expr, db, {{Field::none, size}}));
            }
            if (at("[") && at("]", 1)) kids.emplace_back(Field::dimensions, dimensions());
            if (at("{")) kids.emplace_back(Field::value, array_initializer());
            return add_node(NodeKind::array_creation_expression, b, kids);
        }
        if (nodes_[t].kind == NodeKind::integral_type || nodes_[t].kind == NodeKind::floating_point_type ||
            nodes_[t].kind == NodeKind::boolean_type)
            fail("expected '['");
        NodeId args = arguments();
        NodeId body = at("{") ? class_body(NodeKind::class_body) : kNoNode;
        return add_node(NodeKind::object_creation_expression, b,
                        {{Field::type, t}, {Field::arguments, args}, {Field::body, body}});
    }

    // `T.class`, `T[]::new` and friends, where a type starts a primary.
    NodeId type_primary() {
        std::uint32_t b = cur();
        NodeId t = type(true);
        if (at(".") && at_kw("class", 1)) {
            pos_ += 2;
            return add_node(NodeKind::class_literal, b, {{Field::none, t}});
        }
        if (at("::")) return t;
        fail("expected '.class'");
    }

    NodeId primary() {
        std::uint32_t b = cur();
        switch (kind()) {
        case TokenKind::integer:
        case TokenKind::floating:
        case TokenKind::character:
        case TokenKind::string:
        case TokenKind::text_block:
            return literal();
        case TokenKind::keyword: {
            auto w = text();
            if (w == "true") return leaf(NodeKind::true_);
            if (w == "false") return leaf(NodeKind::false_);
            if (w == "null") return leaf(NodeKind::null_literal);
            if (w == "this") {
                NodeId t = leaf(NodeKind::this_);
                if (at("(")) fail("unexpected constructor call");
                return t;
            }
            if (w == "super") return leaf(NodeKind::super_);
            if (w == "new") return creation();
            if (w == "switch") return switch_expression();
            if (is_primitive(w) || w == "void") return type_primary();
            fail("unexpected keyword '" + std::string(w) + "'");
        }
        case TokenKind::identifier: {
            // Array class literal or array constructor reference: T[].class, T[]::new.
            if (at("[", 1) && at("]", 2)) return type_primary();
            if (at("<", 1)) {
                // Generic constructor reference such as List<String>::new.
                std::uint32_t i = scan_type(pos_);
                if (i != 0 && text_at(i) == "::") return type_primary();
            }
            NodeId name = identifier();
            if (at("(")) {
                NodeId args = arguments();
                return add_node(NodeKind::method_invocation, b, {{Field::name, name}, {Field::arguments, args}});
            }
            if (at(".") && at_kw("class", 1)) {
                nodes_[name].kind = NodeKind::type_identifier;
                pos_ += 2;
                return add_node(NodeKind::class_literal, b, {{Field::none, name}});
            }
            return name;
        }
        case TokenKind::punct: {
            if (pattern_ && at("...")) return ellipsis();
            if (at("(")) {
                ++pos_;
                NodeId e = expression();
                expect(")");
                return add_node(NodeKind::parenthesized_expression, b, {{Field::none, e}});
            }
            if (at("@")) fail("unexpected annotation");
            fail("unexpected '" + std::string(text()) + "'");
        }
        default:
            fail("unexpected end of input");
        }
    }

    std::string_view src_;
    std::vector<Token> toks_;
    bool pattern_;
    std::vector<Node> nodes_;
    std::uint32_t pos_ = 0;
    bool in_case_label_ = false;
    std::uint32_t furthest_ = 0;
};

// Re-numbers reachable nodes in preorder and fills parent links.
std::vector<Node> to_preorder(std::vector<Node>& nodes, NodeId root) {
    std::vector<Node> out;
    out.reserve(nodes.size());
    struct Frame {
        NodeId old_id;
        NodeId parent;
    };
    std::vector<Frame> stack{{root, kNoNode}};
    while (!stack.empty()) {
        auto [old_id, parent] = stack.back();
        stack.pop_back();
        NodeId id = static_cast<NodeId>(out.size());
        Node n = std::move(nodes[old_id]);
        n.parent = parent;
        auto kids = std::move(n.children);
        n.children.clear();
        out.push_back(std::move(n));
        if (parent != kNoNode) out[parent].children.push_back(id);
        for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back({*it, id});
    }
    return out;
}

std::pair<std::uint32_t, std::uint32_t> line_col(std::string_view src, std::uint32_t byte) {
    std::uint32_t line = 1, col = 1;
    for (std::uint32_t i = 0; i < byte && i < src.size(); ++i) {
        if (src[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

template <class Entry>
std::unique_ptr<SyntaxTree> run_parser(std::string text, std::string file_id, bool pattern, Entry entry) {
    auto tokens = lex(text, file_id);
    Parser p(text, std::move(tokens), pattern);
    NodeId root;
    try {
        root = entry(p);
    } catch (const Fail& f) {
        std::uint32_t at = std::max(f.pos, p.furthest());
        at = std::min<std::uint32_t>(at, static_cast<std::uint32_t>(p.tokens().size() - 1));
        auto [line, col] = line_col(text, p.tokens()[at].begin);
        throw ParseError(file_id, line, col, f.what);
    }
    auto nodes = to_preorder(p.nodes(), root);
    auto toks = std::move(p.tokens());
    return std::make_unique<SyntaxTree>(std::move(file_id), std::move(text), std::move(toks), std::move(nodes), 0);
}

}  // namespace

bool is_metavariable_name(std::string_view s) {
    if (s.size() < 2 || s[0] != '$' || !(s[1] >= 'A' && s[1] <= 'Z')) return false;
    return std::all_of(s.begin() + 2, s.end(),
                       [](char c) { return (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_'; });
}

std::unique_ptr<SyntaxTree> parse_source(std::string text, std::string file_id) {
    return run_parser(std::move(text), std::move(file_id), false,
                      [](Parser& p) { return p.compilation_unit(); });
}

std::unique_ptr<SyntaxTree> parse_fragment(std::string text, FragmentKind kind) {
    return run_parser(std::move(text), "<pattern>", true, [kind](Parser& p) {
        switch (kind) {
        case FragmentKind::statement:
            return p.statement_fragment();
        case FragmentKind::expression:
            return p.expression_fragment();
        case FragmentKind::member:
            return p.member_fragment();
        case FragmentKind::compilation_unit:
            return p.unit_fragment();
        }
        return p.unit_fragment();
    });
}

std::unique_ptr<SyntaxTree> parse_pattern(std::string text) {
    std::string first_error;
    for (auto kind : {FragmentKind::statement, FragmentKind::expression, FragmentKind::member,
                      FragmentKind::compilation_unit}) {
        try {
            auto tree = parse_fragment(text, kind);
            if (tree->node(tree->root()).kind == NodeKind::ellipsis)
                throw PatternParseError("a pattern cannot be a bare '...'");
            if (kind == FragmentKind::compilation_unit && tree->node(tree->root()).children.empty())
                throw PatternParseError("empty pattern");
            return tree;
        } catch (const ParseError& e) {
            if (first_error.empty()) first_error = e.what();
        }
    }
    throw PatternParseError("cannot parse pattern: " + first_error);
}

}  // namespace scs::syntax

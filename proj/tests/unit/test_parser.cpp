#include <gtest/gtest.h>

#include <fstream>
#include <map>
#include <sstream>

#include "scs/error.hpp"
#include "scs/syntax/constructs.hpp"
#include "scs/syntax/corpus.hpp"
#include "scs/syntax/parser.hpp"

using namespace scs::syntax;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string tostring_loop_source() { return slurp(std::string(SCS_TEST_DATA) + "/tostring_loop/in_loop/ToStringLoop.java"); }

std::vector<NodeId> of_kind(const SyntaxTree& t, NodeKind k) {
    std::vector<NodeId> out;
    for (NodeId id = 0; id < t.size(); ++id)
        if (t.node(id).kind == k) out.push_back(id);
    return out;
}

// Walks the tree recursively through child links (not the id order).
void walk(const SyntaxTree& t, NodeId id, std::map<NodeKind, int>& counts) {
    ++counts[t.node(id).kind];
    for (NodeId c : t.node(id).children) walk(t, c, counts);
}

}  // namespace

TEST(Parser, ForLoopSpansLinesTwoToFour) {
    auto tree = parse_source(tostring_loop_source(), "ToStringLoop.java");
    auto fors = of_kind(*tree, NodeKind::for_statement);
    ASSERT_EQ(fors.size(), 1u);
    auto span = tree->span(fors[0]);
    EXPECT_EQ(span.start_line, 2u);
    EXPECT_EQ(span.end_line, 4u);
    auto root = tree->span(tree->root());
    EXPECT_EQ(root.start_line, 1u);
    EXPECT_EQ(root.end_line, 5u);
}

TEST(Parser, EmptyClass) {
    auto tree = parse_source("class A {}", "A.java");
    EXPECT_EQ(of_kind(*tree, NodeKind::class_declaration).size(), 1u);
    EXPECT_TRUE(of_kind(*tree, NodeKind::method_declaration).empty());
}

TEST(Parser, FieldInitializerHandCount) {
    auto tree = parse_source("class A { int x = 1+2; }", "A.java");
    std::map<NodeKind, int> counts;
    walk(*tree, tree->root(), counts);
    EXPECT_EQ(counts[NodeKind::binary_expression], 1);
    EXPECT_EQ(counts[NodeKind::decimal_integer_literal], 2);
    auto bin = of_kind(*tree, NodeKind::binary_expression);
    EXPECT_EQ(tree->node(bin[0]).op, "+");
    EXPECT_EQ(tree->text(bin[0]), "1+2");
}

TEST(Parser, ParseErrorCarriesPosition) {
    try {
        parse_source("class A {\n  void f( {\n}", "Bad.java");
        FAIL();
    } catch (const scs::ParseError& e) {
        EXPECT_EQ(e.file_id(), "Bad.java");
        EXPECT_EQ(e.line(), 2u);
    }
}

TEST(Parser, TreeInvariants) {
    auto tree = parse_source(tostring_loop_source(), "ToStringLoop.java");
    for (NodeId id = 0; id < tree->size(); ++id) {
        const auto& n = tree->node(id);
        auto sp = tree->span(id);
        EXPECT_LE(std::pair(sp.start_line, sp.start_col), std::pair(sp.end_line, sp.end_col));
        std::uint32_t prev_end = n.begin;
        for (NodeId c : n.children) {
            const auto& k = tree->node(c);
            EXPECT_EQ(k.parent, id);
            EXPECT_GE(k.begin, prev_end);  // ordered, non-overlapping
            EXPECT_LE(k.end, n.end);
            EXPECT_TRUE(sp.contains(tree->span(c)));
            prev_end = k.end;
        }
        EXPECT_EQ(tree->text(id), tree->source().substr(n.begin, n.end - n.begin));
    }
}

TEST(Parser, Deterministic) {
    auto a = parse_source(tostring_loop_source(), "L.java");
    auto b = parse_source(tostring_loop_source(), "L.java");
    ASSERT_EQ(a->size(), b->size());
    for (NodeId id = 0; id < a->size(); ++id) {
        EXPECT_EQ(a->node(id).kind, b->node(id).kind);
        EXPECT_EQ(a->node(id).field, b->node(id).field);
        EXPECT_EQ(a->span(id), b->span(id));
    }
}

TEST(Parser, GenericsAndShifts) {
    auto tree = parse_source(
        "class A { Map<String, List<Integer>> m; int f(int x) { x >>= 2; return x >> 1 >>> 2 >= 3 ? 1 : 0; } }",
        "A.java");
    std::vector<std::string> ops;
    for (NodeId id = 0; id < tree->size(); ++id)
        if (!tree->node(id).op.empty()) ops.push_back(tree->node(id).op);
    EXPECT_EQ(ops, (std::vector<std::string>{">>=", ">=", ">>>", ">>"}));
}

TEST(Parser, BroadJavaSubset) {
    const char* src = R"(package a.b;
import java.util.*;
import static java.lang.Math.max;
@SuppressWarnings("unchecked")
public final class C<T extends Comparable<T>> extends B implements I, J {
    private static final int[] XS = {1, 2, 3};
    enum Color { RED, GREEN("g") { void f() {} }; Color() {} Color(String s) {} }
    record P(int x, int y) { P { if (x < 0) throw new IllegalArgumentException(); } }
    interface Shape { default double area() { return 0.0; } }
    @interface Tag { String value() default ""; }
    static { System.out.println("init"); }
    C() { super(); }
    <U> U id(U u) throws Exception { return u; }
    void g(String... args) throws java.io.IOException {
        int[][] grid = new int[3][];
        List<String> names = new ArrayList<>();
        for (String s : names) { if (s.isEmpty()) continue; else break; }
        outer:
        while (true) { do { x++; } while (--x > 0); break outer; }
        try (var in = open(); Reader r = reader()) { in.read(); } catch (IOException | RuntimeException e) { throw e; } finally { close(); }
        switch (k) { case 1: case 2: f(); break; default: g(); }
        int y = switch (k) { case 1 -> 10; default -> { yield 20; } };
        Runnable r = () -> System.out.println(this.x);
        java.util.function.Function<Integer, Integer> sq = v -> v * v;
        names.forEach(String::length);
        Object o = (Object) names;
        if (o instanceof String str && !str.isEmpty()) { char c = 'x'; long l = 0x1FL; double d = 1.5e3; }
        synchronized (this) { assert grid != null : "grid"; }
        String block = """
            hello
            """;
        Class<?> k2 = String[].class;
        x = cond ? a : b;
        new Thread(() -> {}).start();
        label2: for (int i = 0, j = 10; i < j; i++, j--) ;
    }
}
)";
    auto tree = parse_source(src, "C.java");
    EXPECT_EQ(of_kind(*tree, NodeKind::enhanced_for_statement).size(), 1u);
    EXPECT_EQ(of_kind(*tree, NodeKind::try_with_resources_statement).size(), 1u);
    EXPECT_EQ(of_kind(*tree, NodeKind::switch_expression).size(), 2u);
    EXPECT_EQ(of_kind(*tree, NodeKind::lambda_expression).size(), 3u);
    EXPECT_EQ(of_kind(*tree, NodeKind::record_declaration).size(), 1u);
    EXPECT_EQ(of_kind(*tree, NodeKind::compact_constructor_declaration).size(), 1u);
    EXPECT_EQ(of_kind(*tree, NodeKind::cast_expression).size(), 1u);
    EXPECT_EQ(of_kind(*tree, NodeKind::method_reference).size(), 1u);
    EXPECT_EQ(of_kind(*tree, NodeKind::text_block).size(), 1u);
    EXPECT_EQ(of_kind(*tree, NodeKind::class_literal).size(), 1u);
    EXPECT_EQ(of_kind(*tree, NodeKind::yield_statement).size(), 1u);
}

TEST(Pattern, MetavariablesAndEllipses) {
    auto p = parse_pattern("$X += Integer.toString(...);");
    EXPECT_EQ(p->node(p->root()).kind, NodeKind::expression_statement);
    EXPECT_EQ(of_kind(*p, NodeKind::metavariable).size(), 1u);
    EXPECT_EQ(of_kind(*p, NodeKind::ellipsis).size(), 1u);

    auto header = parse_pattern("for (...) { ... }");
    EXPECT_EQ(header->node(header->root()).kind, NodeKind::for_statement);
    EXPECT_EQ(of_kind(*header, NodeKind::ellipsis).size(), 2u);

    auto cond = parse_pattern("for (int i = 0; ...; i++) {\n...\n}");
    auto e = of_kind(*cond, NodeKind::ellipsis);
    ASSERT_EQ(e.size(), 2u);
    EXPECT_EQ(cond->node(e[0]).field, Field::condition);

    auto expr = parse_pattern("$A == $A");
    EXPECT_EQ(expr->node(expr->root()).kind, NodeKind::binary_expression);

    auto method = parse_pattern("public void $M(...) { ... }");
    EXPECT_EQ(method->node(method->root()).kind, NodeKind::method_declaration);

    EXPECT_THROW(parse_pattern("..."), scs::PatternParseError);
    EXPECT_THROW(parse_pattern("a(); b();"), scs::PatternParseError);
    EXPECT_THROW(parse_pattern("for ( {"), scs::PatternParseError);
}

TEST(Pattern, MetavariableNameRule) {
    EXPECT_TRUE(is_metavariable_name("$X"));
    EXPECT_TRUE(is_metavariable_name("$METAVAR0"));
    EXPECT_TRUE(is_metavariable_name("$A_1"));
    EXPECT_FALSE(is_metavariable_name("$x"));
    EXPECT_FALSE(is_metavariable_name("$"));
    EXPECT_FALSE(is_metavariable_name("X"));
    // Outside patterns a dollar name is an ordinary identifier.
    auto tree = parse_source("class A { int $X = 1; }", "A.java");
    EXPECT_TRUE(of_kind(*tree, NodeKind::metavariable).empty());
}

TEST(Constructs, ToStringLoopContainsNamedTypes) {
    auto tree = parse_source(tostring_loop_source(), "ToStringLoop.java");
    auto cs = enumerate_constructs(*tree);
    std::multimap<ConstructType, std::string> seen;
    for (const auto& c : cs) seen.emplace(c.ctype, std::string(c.node.text()));
    EXPECT_EQ(seen.count(ConstructType::ForLoop), 1u);
    auto has = [&](ConstructType t, const std::string& text) {
        auto [b, e] = seen.equal_range(t);
        for (auto it = b; it != e; ++it)
            if (it->second == text) return true;
        return false;
    };
    EXPECT_TRUE(has(ConstructType::Operator, "a += Integer.toString(number)"));
    EXPECT_TRUE(has(ConstructType::MethodCall, "Integer.toString(number)"));
    for (auto v : {"a", "i", "limit", "number"}) EXPECT_TRUE(has(ConstructType::Variable, v)) << v;
    EXPECT_TRUE(has(ConstructType::Literal, "0"));
    // Method names are not variables.
    EXPECT_FALSE(has(ConstructType::Variable, "toString"));
    for (std::size_t i = 1; i < cs.size(); ++i)
        EXPECT_LE(cs[i - 1].node.id(), cs[i].node.id());
}

TEST(Constructs, EmptyMethodOnly) {
    auto tree = parse_source("class A { void m() {} }", "A.java");
    auto cs = enumerate_constructs(*tree);
    ASSERT_EQ(cs.size(), 2u);
    EXPECT_EQ(cs[0].ctype, ConstructType::ClassDeclaration);
    EXPECT_EQ(cs[1].ctype, ConstructType::MethodDeclaration);
}

TEST(Constructs, CountsMatchKindScan) {
    auto tree = parse_source(tostring_loop_source(), "ToStringLoop.java");
    // Independent table keyed by kind name.
    const std::map<std::string, ConstructType> table = {
        {"decimal_integer_literal", ConstructType::Literal}, {"string_literal", ConstructType::Literal},
        {"method_invocation", ConstructType::MethodCall},    {"binary_expression", ConstructType::Operator},
        {"assignment_expression", ConstructType::Operator},  {"update_expression", ConstructType::Operator},
        {"unary_expression", ConstructType::Operator},       {"for_statement", ConstructType::ForLoop},
        {"local_variable_declaration", ConstructType::VariableDeclaration},
        {"method_declaration", ConstructType::MethodDeclaration},
        {"class_declaration", ConstructType::ClassDeclaration},
    };
    std::map<ConstructType, int> expected, actual;
    for (NodeId id = 0; id < tree->size(); ++id) {
        auto it = table.find(std::string(kind_name(tree->node(id).kind)));
        if (it != table.end()) ++expected[it->second];
    }
    for (const auto& c : enumerate_constructs(*tree))
        if (c.ctype != ConstructType::Variable) ++actual[c.ctype];
    EXPECT_EQ(expected, actual);
}

TEST(Corpus, EnclosingMethod) {
    auto corpus = Corpus::from_sources({{"A.java",
                                         "class A {\n"
                                         "  int field = 3;\n"
                                         "  void m(int x)\n"
                                         "  {\n"
                                         "    x++;\n"
                                         "  }\n"
                                         "}\n"},
                                        {"Broken.java", "class {"}});
    ASSERT_EQ(corpus.files().size(), 1u);
    ASSERT_EQ(corpus.excluded().size(), 1u);
    EXPECT_EQ(corpus.excluded()[0].path, "Broken.java");
    auto body = enclosing_method(corpus, "A.java", 5);
    ASSERT_TRUE(body.has_value());
    EXPECT_EQ(body->start_line, 3u);
    EXPECT_EQ(body->end_line, 6u);
    EXPECT_EQ(enclosing_method(corpus, "A.java", 3), body);
    EXPECT_FALSE(enclosing_method(corpus, "A.java", 2).has_value());
    EXPECT_THROW(enclosing_method(corpus, "Nope.java", 1), scs::UnknownFile);
}

#include <gtest/gtest.h>

#include <fstream>
#include <map>
#include <sstream>

#include "scs/gen/generator.hpp"
#include "scs/syntax/parser.hpp"

using namespace scs;
using namespace scs::gen;
using syntax::ConstructType;
using syntax::NodeKind;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::unique_ptr<syntax::SyntaxTree> tostring_loop_tree() {
    return syntax::parse_source(slurp(std::string(SCS_TEST_DATA) + "/tostring_loop/in_loop/ToStringLoop.java"),
                                "ToStringLoop.java");
}

syntax::CodeConstruct find_construct(const syntax::SyntaxTree& tree, ConstructType type, std::string_view text) {
    for (const auto& c : syntax::enumerate_constructs(tree))
        if (c.ctype == type && c.node.text() == text) return c;
    throw std::runtime_error("construct not found: " + std::string(text));
}

syntax::NodeId find_node(const syntax::SyntaxTree& t, std::string_view text) {
    for (syntax::NodeId id = 0; id < t.size(); ++id)
        if (t.text(id) == text) return id;
    throw std::runtime_error("node not found: " + std::string(text));
}

// Specializes until the pattern-inside clause is the for loop; the ancestor
// choice is uniform over three candidates.
match::Query specialized_for_loop(const syntax::CodeConstruct& t) {
    for (std::uint64_t seed = 0;; ++seed) {
        GenState state(seed);
        auto [q, same] = specialize(init(t), t, state);
        if (q.clauses[1].patterns[0].tree().node(q.clauses[1].patterns[0].root()).kind == NodeKind::for_statement)
            return q;
    }
}

}  // namespace

TEST(Sampling, AllZeroCountsIsUniform) {
    auto tree = syntax::parse_source("class A { void f() { g(1); } }", "A.java");
    auto pool = syntax::enumerate_constructs(*tree);
    GenState state(1);
    std::map<syntax::NodeId, int> hits;
    const int draws = 40000;
    for (int i = 0; i < draws; ++i) ++hits[weighted_sample(pool, state).node.id()];
    ASSERT_EQ(hits.size(), pool.size());
    for (const auto& [id, n] : hits) EXPECT_NEAR(static_cast<double>(n) / draws, 1.0 / pool.size(), 0.02);
}

TEST(Sampling, InverseFrequencyWeights) {
    auto tree = syntax::parse_source("class A { void f() { g(1); } }", "A.java");
    std::vector<syntax::CodeConstruct> pool;
    for (const auto& c : syntax::enumerate_constructs(*tree))
        if (c.ctype == ConstructType::MethodCall || c.ctype == ConstructType::Literal) pool.push_back(c);
    ASSERT_EQ(pool.size(), 2u);
    GenState state(7);
    state.type_counts[static_cast<std::size_t>(ConstructType::MethodCall)] = 3;
    int literal = 0;
    const int draws = 100000;
    for (int i = 0; i < draws; ++i) literal += weighted_sample(pool, state).ctype == ConstructType::Literal;
    EXPECT_NEAR(static_cast<double>(literal) / draws, 0.8, 0.02);
}

TEST(Sampling, DegenerateAndEmpty) {
    auto tree = syntax::parse_source("class A { }", "A.java");
    auto pool = syntax::enumerate_constructs(*tree);
    ASSERT_EQ(pool.size(), 1u);
    GenState state(3);
    for (int i = 0; i < 100; ++i) EXPECT_EQ(weighted_sample(pool, state).node.id(), pool[0].node.id());
    EXPECT_THROW(weighted_sample(std::vector<syntax::CodeConstruct>{}, state), EmptyCorpus);
}

TEST(Init, OperatorUsesEnclosingStatement) {
    auto tree = tostring_loop_tree();
    auto t = find_construct(*tree, ConstructType::Operator, "a += Integer.toString(number)");
    auto q = init(t);
    ASSERT_EQ(q.clauses.size(), 1u);
    EXPECT_EQ(q.clauses[0].patterns[0].text(), "a += Integer.toString(number);");
    EXPECT_TRUE(verifies(q, t));
    EXPECT_EQ(complexity(q), 5);
}

TEST(Init, ContinueAndClass) {
    auto tree = syntax::parse_source("class A {\n  void f() {\n    while (true) { continue; }\n  }\n}\n", "A.java");
    auto t = find_construct(*tree, ConstructType::ContinueStatement, "continue;");
    auto q = init(t);
    EXPECT_EQ(q.clauses[0].patterns[0].text(), "continue;");
    EXPECT_EQ(complexity(q), 1);

    auto cls = syntax::enumerate_constructs(*tree).front();
    ASSERT_EQ(cls.ctype, ConstructType::ClassDeclaration);
    auto qc = init(cls);
    EXPECT_EQ(qc.clauses[0].patterns[0].text(), std::string(tree->text(tree->root())).substr(0, cls.node.text().size()));
    EXPECT_GE(match::execute(qc, *tree).size(), 1u);
    EXPECT_TRUE(verifies(qc, cls));
}

TEST(Specialize, ForLoopAncestor) {
    auto tree = tostring_loop_tree();
    auto t = find_construct(*tree, ConstructType::Operator, "a += Integer.toString(number)");
    auto q = specialized_for_loop(t);
    ASSERT_EQ(q.clauses.size(), 2u);
    EXPECT_EQ(q.clauses[1].kind, match::ClauseKind::pattern_inside);
    EXPECT_EQ(q.clauses[1].patterns[0].text(), "for (int i = 0; i < limit; i++) {\n...\n}");
    EXPECT_EQ(complexity(q), 15);
    EXPECT_TRUE(verifies(q, t));
}

TEST(Specialize, UniformOverTwoAncestors) {
    auto tree = syntax::parse_source("class A {\n  void f() {\n    g();\n  }\n}\n", "A.java");
    auto t = find_construct(*tree, ConstructType::MethodCall, "g()");
    GenState state(11);
    int method = 0;
    const int draws = 4000;
    for (int i = 0; i < draws; ++i) {
        auto [q, same] = specialize(init(t), t, state);
        EXPECT_EQ(same.node, t.node);
        const auto& p = q.clauses[1].patterns[0];
        method += p.tree().node(p.root()).kind == NodeKind::method_declaration;
    }
    EXPECT_NEAR(static_cast<double>(method) / draws, 0.5, 0.03);
}

TEST(Specialize, NoAncestorAtTopLevel) {
    auto tree = syntax::parse_source("class A { }", "A.java");
    auto t = syntax::enumerate_constructs(*tree).front();
    GenState state(1);
    EXPECT_THROW(specialize(init(t), t, state), NoAncestor);
}

TEST(Generalize, GenerationSteps) {
    auto tree = tostring_loop_tree();
    auto t = find_construct(*tree, ConstructType::Operator, "a += Integer.toString(number)");
    auto q = specialized_for_loop(t);
    const auto& pt = q.clauses[0].patterns[0].tree();
    auto q1 = generalize_node(q, 0, find_node(pt, "number"));
    EXPECT_EQ(q1.clauses[0].patterns[0].text(), "a += Integer.toString($METAVAR0);");
    EXPECT_EQ(complexity(q1), 15);
    const auto& it = q1.clauses[1].patterns[0].tree();
    auto q2 = generalize_node(q1, 1, find_node(it, "i < limit"));
    EXPECT_EQ(q2.clauses[1].patterns[0].text(), "for (int i = 0; ...; i++) {\n...\n}");
    EXPECT_EQ(complexity(q2), 13);
    EXPECT_TRUE(verifies(q2, t));
}

TEST(Generalize, MetavariableOnlyHasNothingLeft) {
    auto q = match::compile_query("pattern: $X\n");
    GenState state(1);
    EXPECT_THROW(generalize(q, state), NothingToGeneralize);
}

TEST(Generalize, NeverRemovesMatchesAndRecountsComplexity) {
    auto tree = tostring_loop_tree();
    auto t = find_construct(*tree, ConstructType::Operator, "a += Integer.toString(number)");
    auto q = specialized_for_loop(t);
    GenState state(5);
    for (int step = 0; step < 6; ++step) {
        auto before = match::execute(q, *tree);
        match::Query next;
        try {
            next = generalize(q, state);
        } catch (const NothingToGeneralize&) {
            break;
        }
        auto after = match::execute(next, *tree);
        for (const auto& m : before)
            EXPECT_TRUE(std::any_of(after.begin(), after.end(), [&](const match::Match& a) { return a.span == m.span; }));
        EXPECT_LE(complexity(next), complexity(q));
        q = next;
    }
}

TEST(Enumerate, SmallSourceSetSatisfiesContract) {
    auto corpus = syntax::Corpus::from_sources(
        {{"A.java", slurp(std::string(SCS_TEST_DATA) + "/tostring_loop/in_loop/ToStringLoop.java")},
         {"B.java", "class B {\n  int total(int[] xs) {\n    int s = 0;\n    for (int x : xs) {\n      if (x < 0) {\n"
                    "        continue;\n      }\n      s += x;\n    }\n    return s;\n  }\n}\n"}});
    GenConfig cfg;
    cfg.n_queries = 8;
    cfg.seed = 3;
    auto qs = enumerate_queries(corpus, cfg);
    ASSERT_EQ(qs.size(), 8u);
    std::set<std::string> keys;
    for (const auto& g : qs) {
        EXPECT_GE(g.complexity, cfg.c_min);
        EXPECT_LE(g.complexity, cfg.c_max);
        EXPECT_EQ(g.complexity, complexity(g.query));
        EXPECT_TRUE(keys.insert(match::canonical_key(g.query)).second);
        EXPECT_TRUE(std::any_of(g.gold.begin(), g.gold.end(),
                                [&](const match::Match& m) { return m.span.contains(g.target.span); }));
        auto again = match::execute(match::compile_query(match::render_rule(g.query)), corpus);
        EXPECT_EQ(again.size(), g.gold.size());
    }
    auto twice = enumerate_queries(corpus, cfg);
    ASSERT_EQ(twice.size(), qs.size());
    for (std::size_t i = 0; i < qs.size(); ++i) EXPECT_EQ(generated_query_json(qs[i]), generated_query_json(twice[i]));
}

TEST(Enumerate, SingleConstructBounds) {
    auto corpus = syntax::Corpus::from_sources(
        {{"C.java", "class C {\n  void f(int n) {\n    while (n > 0) {\n      n--;\n      if (n == 3) {\n"
                    "        continue;\n      }\n      break;\n    }\n  }\n}\n"}});
    GenConfig cfg;
    cfg.n_queries = 2;
    cfg.c_min = cfg.c_max = 1;
    cfg.seed = 9;
    auto qs = enumerate_queries(corpus, cfg);
    ASSERT_EQ(qs.size(), 2u);
    for (const auto& g : qs) {
        EXPECT_EQ(g.complexity, 1);
        EXPECT_EQ(g.query.clauses.size(), 1u);
    }
}

TEST(Enumerate, BudgetExhaustedCarriesPartialResults) {
    auto corpus = syntax::Corpus::from_sources({{"D.java", "class D {\n  void f() {\n    continue;\n  }\n}\n"}});
    GenConfig cfg;
    cfg.n_queries = 50;
    cfg.seed = 1;
    cfg.max_attempts = 200;
    try {
        enumerate_queries(corpus, cfg);
        FAIL() << "expected BudgetExhausted";
    } catch (const BudgetExhausted& e) {
        EXPECT_LT(e.partial().size(), 50u);
        std::set<std::string> keys;
        for (const auto& g : e.partial()) EXPECT_TRUE(keys.insert(match::canonical_key(g.query)).second);
    }
}

TEST(Enumerate, EmptyCorpus) {
    auto corpus = syntax::Corpus::from_sources({});
    EXPECT_THROW(enumerate_queries(corpus, GenConfig{}), EmptyCorpus);
}

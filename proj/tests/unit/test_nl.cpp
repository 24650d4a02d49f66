#include <gtest/gtest.h>

#include <algorithm>
#include <deque>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "scs/error.hpp"
#include "scs/gen/generator.hpp"
#include "scs/nl/describe.hpp"
#include "scs/nl/mock.hpp"
#include "scs/nl/paired.hpp"
#include "scs/nl/provider.hpp"
#include "scs/nl/rag.hpp"
#include "scs/nl/translate.hpp"
#include "scs/syntax/parser.hpp"

using namespace scs;
using namespace scs::nl;
using syntax::ConstructType;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string data(const std::string& rel) { return slurp(std::string(SCS_TEST_DATA) + "/" + rel); }

match::Query rule(const std::string& patterns) {
    return match::compile_query("rules:\n  - id: r\n    languages: [java]\n    message: m\n    patterns:\n" + patterns);
}

const char* kToStringInLoopRule = R"(rules:
  - id: tostring-in-loop
    languages: [java]
    message: Integer.toString result appended inside a for loop
    patterns:
      - pattern: $X +=   Integer.toString(...);
      - pattern-inside: for( ... ) { ... }
)";

const char* kToStringInLoopNl =
    "Find all cases where value returned by Integer.toString is used by an add operation inside a for loop";

// Answers from a fixed script and remembers what it was asked.
class ScriptedProvider final : public ChatProvider {
  public:
    explicit ScriptedProvider(std::deque<std::string> answers) : answers_(std::move(answers)) {}
    LlmResponse complete(const LlmRequest& req) override {
        seen.push_back(req);
        if (answers_.empty()) throw ProviderError("script exhausted");
        LlmResponse r{answers_.front(), estimate_tokens(req.user), 1};
        answers_.pop_front();
        return r;
    }
    std::string tag() const override { return "scripted"; }
    std::vector<LlmRequest> seen;

  private:
    std::deque<std::string> answers_;
};

std::string fenced_rule(const std::string& rule_text) { return "Here you go.\n```yaml\n" + rule_text + "```\n"; }

syntax::Corpus small_corpus() {
    return syntax::Corpus::from_sources(
        {{"A.java", data("tostring_loop/in_loop/ToStringLoop.java")},
         {"B.java", "class B {\n  int total(int[] xs) {\n    int s = 0;\n    for (int x : xs) {\n      if (x < 0) {\n"
                    "        continue;\n      }\n      s += x;\n    }\n    while (s > 100) {\n      s = s / 2;\n"
                    "    }\n    return s;\n  }\n}\n"}});
}

std::vector<PairedQuery> template_pairs(const syntax::Corpus& corpus, std::size_t n, std::uint64_t seed) {
    gen::GenConfig cfg;
    cfg.n_queries = n;
    cfg.seed = seed;
    MockProvider writer(MockProvider::Mode::template_nl);
    std::vector<PairedQuery> out;
    for (const auto& g : gen::enumerate_queries(corpus, cfg))
        out.push_back({g.id, g.query, describe_query(g.query), pair_nl(g.query, writer), locations_of(g.gold),
                       g.target_type});
    return out;
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

}  // namespace

TEST(Describe, InterruptedLoopMatchesGolden) {
    auto q = match::compile_query(data("describe/interrupted.yaml"));
    EXPECT_EQ(describe_query(q), data("describe/interrupted.describe.txt"));
}

TEST(Describe, ContinueIsASingleNode) {
    auto q = rule("      - pattern: continue;\n");
    EXPECT_EQ(describe_pattern(q.anchor().patterns[0]), "- continue_statement\n");
    EXPECT_EQ(describe_query(q),
              "<semgrep_pattern>\n    continue;\n</semgrep_pattern>\n<pattern_description>\n- continue_statement\n"
              "</pattern_description>\n");
}

TEST(Describe, GenerationStepsMatchGoldens) {
    for (const char* step : {"initial", "specialized", "generalized"}) {
        auto q = match::compile_query(data(std::string("generation_steps/") + step + ".yaml"));
        EXPECT_EQ(describe_query(q), data(std::string("generation_steps/") + step + ".describe.txt")) << step;
    }

    auto tree = syntax::parse_source(data("tostring_loop/in_loop/ToStringLoop.java"), "ToStringLoop.java");
    auto t = find_construct(*tree, ConstructType::Operator, "a += Integer.toString(number)");
    auto initial = gen::init(t);
    EXPECT_EQ(describe_query(initial), data("generation_steps/initial.describe.txt"));

    std::optional<match::Query> specialized;
    for (std::uint64_t seed = 0; !specialized; ++seed) {
        gen::GenState state(seed);
        auto [q, same] = gen::specialize(initial, t, state);
        const auto& inside = q.clauses[1].patterns[0];
        if (inside.tree().node(inside.root()).kind == syntax::NodeKind::for_statement) specialized = q;
    }
    EXPECT_EQ(describe_query(*specialized), data("generation_steps/specialized.describe.txt"));

    auto g1 = gen::generalize_node(*specialized, 0, find_node(specialized->clauses[0].patterns[0].tree(), "number"));
    auto g2 = gen::generalize_node(g1, 1, find_node(g1.clauses[1].patterns[0].tree(), "i < limit"));
    EXPECT_EQ(describe_query(g2), data("generation_steps/generalized.describe.txt"));
}

TEST(Describe, StableAcrossRenderAndCompile) {
    auto corpus = syntax::Corpus::load(std::string(SCS_CORPUS_DIR) + "/mini");
    gen::GenConfig cfg;
    cfg.n_queries = 40;
    cfg.seed = 11;
    for (const auto& g : gen::enumerate_queries(corpus, cfg)) {
        auto again = match::compile_query(match::render_rule(g.query));
        EXPECT_EQ(describe_query(again), describe_query(g.query)) << match::render_rule(g.query);
        EXPECT_EQ(describe_query(g.query), describe_query(g.query));
    }
}

TEST(Embedding, IdenticalTextsHaveCosineOne) {
    HashingEmbedder e;
    auto a = e.embed("Find all while loops with a break");
    auto b = e.embed("find ALL while-loops, with a break!");
    EXPECT_EQ(a.size(), 256u);
    EXPECT_NEAR(cosine(a, b), 1.0, 1e-9);
}

TEST(Embedding, DisjointTokensAreOrthogonal) {
    HashingEmbedder e;
    // Chosen so that no two tokens share a bucket.
    auto a = e.embed("alpha");
    auto b = e.embed("omega");
    ASSERT_NE(std::find(a.begin(), a.end(), 1.0) - a.begin(), std::find(b.begin(), b.end(), 1.0) - b.begin());
    EXPECT_EQ(cosine(a, b), 0.0);
}

TEST(Embedding, VectorEncodingRoundTrips) {
    std::mt19937_64 rng(5);
    std::normal_distribution<double> d;
    for (std::size_t n : {0u, 1u, 2u, 3u, 7u, 256u}) {
        std::vector<double> v(n);
        for (auto& x : v) x = d(rng);
        EXPECT_EQ(decode_vector(encode_vector(v)), v) << n;
    }
}

TEST(Embedding, DimensionMismatchIsReported) {
    EXPECT_THROW(cosine({1.0, 0.0}, {1.0}), DimensionMismatch);
}

TEST(Rag, TwoPairsGiveTwoUnitVectors) {
    auto pairs = template_pairs(small_corpus(), 2, 1);
    HashingEmbedder e;
    auto index = build_index(pairs, e);
    ASSERT_EQ(index.examples().size(), 2u);
    for (const auto& ex : index.examples()) {
        double sq = 0;
        for (double x : ex.vector) sq += x * x;
        EXPECT_NEAR(sq, 1.0, 1e-12);
    }
}

TEST(Rag, OwnTextRetrievesItselfFirst) {
    auto pairs = template_pairs(small_corpus(), 8, 2);
    HashingEmbedder e;
    auto index = build_index(pairs, e);
    for (const auto& p : pairs) {
        // Exhaustive scan: the best similarity over all examples.
        auto v = e.embed(p.nl);
        double best = -2;
        for (const auto& ex : index.examples()) best = std::max(best, cosine(v, ex.vector));
        auto top = retrieve(index, e, p.nl, 1);
        ASSERT_EQ(top.size(), 1u);
        EXPECT_NEAR(top[0].similarity, 1.0, 1e-9);
        EXPECT_NEAR(top[0].similarity, best, 1e-12);
        EXPECT_EQ(top[0].pair->nl, p.nl);
    }
}

TEST(Rag, OrderIsTotalAndPermutationInvariant) {
    auto pairs = template_pairs(small_corpus(), 8, 3);
    // Duplicate texts under other ids force ties.
    auto twin = pairs[0];
    twin.id = "a-twin";
    pairs.push_back(twin);
    HashingEmbedder e;
    auto index = build_index(pairs, e);
    auto all = retrieve(index, e, pairs[0].nl, 100);
    ASSERT_EQ(all.size(), pairs.size());
    EXPECT_EQ(all[0].pair->id, "a-twin");
    for (std::size_t i = 1; i < all.size(); ++i) {
        EXPECT_GE(all[i - 1].similarity, all[i].similarity);
        if (all[i - 1].similarity == all[i].similarity) EXPECT_LT(all[i - 1].pair->id, all[i].pair->id);
    }
    std::mt19937_64 rng(9);
    std::shuffle(pairs.begin(), pairs.end(), rng);
    auto shuffled = build_index(pairs, e);
    auto again = retrieve(shuffled, e, all[0].pair->nl, 100);
    for (std::size_t i = 0; i < all.size(); ++i) EXPECT_EQ(again[i].pair->id, all[i].pair->id);
}

TEST(Rag, EmptyIndexAndEmptyInput) {
    HashingEmbedder e;
    EXPECT_THROW(retrieve(RagIndex{}, e, "x", 3), EmptyIndex);
    EXPECT_THROW(build_index({}, e), ProviderError);
}

TEST(Rag, SavedIndexLoadsIdentically) {
    auto pairs = template_pairs(small_corpus(), 5, 4);
    HashingEmbedder e;
    auto index = build_index(pairs, e);
    auto path = std::filesystem::temp_directory_path() / "scs_test_index.json";
    index.save(path);
    auto loaded = RagIndex::load(path);
    std::filesystem::remove(path);
    ASSERT_EQ(loaded.examples().size(), index.examples().size());
    EXPECT_EQ(loaded.dimension(), 256u);
    EXPECT_EQ(loaded.provider(), "hashing-256");
    for (std::size_t i = 0; i < index.examples().size(); ++i) {
        EXPECT_EQ(loaded.examples()[i].vector, index.examples()[i].vector);
        EXPECT_EQ(loaded.examples()[i].pair.nl, index.examples()[i].pair.nl);
        EXPECT_EQ(match::canonical_key(loaded.examples()[i].pair.dsl), match::canonical_key(index.examples()[i].pair.dsl));
        EXPECT_EQ(loaded.examples()[i].pair.gold, index.examples()[i].pair.gold);
    }
}

TEST(Transcript, ReplayAnswersRecordedRequests) {
    auto inner = std::make_shared<MockProvider>(MockProvider::Mode::template_nl);
    RecordingProvider rec(inner);
    auto q = rule("      - pattern: continue;\n");
    std::string nl = pair_nl(q, rec);
    EXPECT_EQ(nl, "Find all continue statements");

    auto path = std::filesystem::temp_directory_path() / "scs_test_transcript.json";
    std::filesystem::remove(path);
    rec.save(path);
    ReplayProvider replay(path);
    std::filesystem::remove(path);
    EXPECT_EQ(pair_nl(q, replay), nl);
    EXPECT_THROW(pair_nl(rule("      - pattern: break;\n"), replay), ProviderError);
}

TEST(PairNl, ExtractsTheAnswerSentence) {
    ScriptedProvider llm({"Reasoning: whatever.\n<nl_query>\n  Find all break statements.\n</nl_query>"});
    EXPECT_EQ(pair_nl(rule("      - pattern: break;\n"), llm), "Find all break statements");
    ASSERT_EQ(llm.seen.size(), 1u);
    // The prompt carries the worked examples, the rule and its description.
    EXPECT_NE(llm.seen[0].system.find("<nl_query>Find all continue statements</nl_query>"), std::string::npos);
    EXPECT_NE(llm.seen[0].user.find("- break_statement"), std::string::npos);
}

TEST(PairNl, MissingDelimiterIsAnExtractionError) {
    ScriptedProvider llm({"Find all break statements"});
    EXPECT_THROW(pair_nl(rule("      - pattern: break;\n"), llm), ExtractionError);
}

TEST(PairNl, EchoModeUsesTheKeyedText) {
    PairedQuery p{"q7", rule("      - pattern: break;\n"), "", "Find every break", {}, ConstructType::BreakStatement};
    p.dsl.id = "q7";
    MockProvider llm(MockProvider::Mode::echo_gold, {p});
    EXPECT_EQ(pair_nl(p.dsl, llm), "Find every break");
}

TEST(Translate, EchoGoldReproducesGoldMatches) {
    auto corpus = small_corpus();
    auto pairs = template_pairs(corpus, 8, 5);
    HashingEmbedder e;
    auto index = build_index(pairs, e);
    MockProvider llm(MockProvider::Mode::echo_gold, pairs);
    for (const auto& p : pairs) {
        auto t = translate(p.nl, index, e, llm);
        ASSERT_TRUE(t.query);
        EXPECT_EQ(locations_of(match::execute(*t.query, corpus)), p.gold) << p.nl;
        EXPECT_EQ(t.trace.retrieved_ids.size(), 5u);
        EXPECT_EQ(t.trace.parse_retries, 0);
    }
}

TEST(Translate, RetriesOnceAfterMalformedAnswer) {
    auto pairs = template_pairs(small_corpus(), 3, 6);
    HashingEmbedder e;
    auto index = build_index(pairs, e);
    ScriptedProvider llm({"```yaml\nrules: [\n```", fenced_rule(kToStringInLoopRule)});
    auto t = translate(kToStringInLoopNl, index, e, llm);
    ASSERT_TRUE(t.query);
    EXPECT_EQ(t.trace.parse_retries, 1);
    EXPECT_EQ(t.trace.completions.size(), 2u);
    EXPECT_NE(llm.seen[1].user.find("could not be used"), std::string::npos);
}

TEST(Translate, SecondFailureThrowsWithTrace) {
    auto pairs = template_pairs(small_corpus(), 3, 6);
    HashingEmbedder e;
    auto index = build_index(pairs, e);
    ScriptedProvider llm({"no rule here", "still nothing"});
    try {
        translate("Find all loops", index, e, llm);
        FAIL() << "expected a failure";
    } catch (const FailedTranslation& f) {
        EXPECT_EQ(f.trace().completions.size(), 2u);
        EXPECT_FALSE(f.trace().failure.empty());
    }
}

TEST(Translate, FaithfulAnswerFindsTheLoopStatement) {
    auto corpus = syntax::Corpus::from_sources({{"ToStringLoop.java", data("tostring_loop/in_loop/ToStringLoop.java")}});
    auto pairs = template_pairs(small_corpus(), 3, 7);
    HashingEmbedder e;
    auto index = build_index(pairs, e);
    ScriptedProvider llm({fenced_rule(kToStringInLoopRule)});
    TranslateOptions opts;
    opts.with_api_docs = true;
    auto t = translate(kToStringInLoopNl, index, e, llm, opts);
    ASSERT_TRUE(t.query);
    auto hits = locations_of(match::execute(*t.query, corpus));
    ASSERT_EQ(hits.size(), 1u);
    EXPECT_EQ(hits[0].start_line, 3u);
    EXPECT_NE(llm.seen[0].system.find("Clause reference"), std::string::npos);
    EXPECT_NE(llm.seen[0].user.find("# each match is"), std::string::npos);
}

TEST(Translate, ZeroExamplesSkipsRetrieval) {
    ScriptedProvider llm({fenced_rule(kToStringInLoopRule)});
    HashingEmbedder e;
    TranslateOptions opts;
    opts.k = 0;
    auto t = translate(kToStringInLoopNl, RagIndex{}, e, llm, opts);
    EXPECT_TRUE(t.query);
    EXPECT_TRUE(t.trace.retrieved_ids.empty());
    EXPECT_EQ(llm.seen[0].user.find("<example>"), std::string::npos);
}

TEST(Answers, FencedBlockAndLineLists) {
    EXPECT_EQ(extract_fenced("a\n```yaml\nx: 1\n```\nb\n```\ny: 2\n```"), "y: 2\n");
    EXPECT_FALSE(extract_fenced("no fence"));
    EXPECT_EQ(parse_line_answer("Lines:\n```\n12\n 3\nfoo\n12\n```"), (std::vector<std::uint32_t>{3, 12}));
    EXPECT_TRUE(parse_line_answer("```\n```").empty());
}

TEST(Labels, ParsesTaxonomyNames) {
    EXPECT_EQ(parse_construct_label("<construct_type>WhileLoop</construct_type>"), ConstructType::WhileLoop);
    EXPECT_EQ(parse_construct_label("The target is the method call."), ConstructType::MethodCall);
    EXPECT_EQ(parse_construct_label("VariableDeclaration"), ConstructType::VariableDeclaration);
    EXPECT_THROW(parse_construct_label("no idea"), UnparseableLabel);
}

TEST(Labels, ExpectedTypeFromProvider) {
    ScriptedProvider llm({"<construct_type>MethodCall</construct_type>", "ContinueStatement"});
    EXPECT_EQ(expected_target_type("Find all calls of InputStream.read in a while loop", llm), ConstructType::MethodCall);
    EXPECT_EQ(expected_target_type("Find all continue statements", llm), ConstructType::ContinueStatement);
    EXPECT_NE(llm.seen[0].system.find("SwitchStatement"), std::string::npos);
}

namespace {

const char* kReadInWhileLoop = R"(rules:
  - id: read-in-loop
    languages: [java]
    message: read calls in while loops
    patterns:
      - pattern: while (...) { ... }
)";

const char* kReadCall = R"(rules:
  - id: read-in-loop
    languages: [java]
    message: read calls in while loops
    patterns:
      - pattern: $S.read(...)
      - pattern-inside: while (...) { ... }
)";

}  // namespace

TEST(Refine, CorrectsAMisplacedAnchor) {
    HashingEmbedder e;
    ScriptedProvider llm({"<construct_type>MethodCall</construct_type>", fenced_rule(kReadCall)});
    Translation t{match::compile_query(kReadInWhileLoop), {}};
    TranslateOptions opts;
    opts.k = 0;
    refine("Find all calls of InputStream.read in a while loop", t, RagIndex{}, e, llm, opts, 3);
    ASSERT_EQ(t.trace.rounds.size(), 1u);
    EXPECT_EQ(t.trace.rounds[0].query_type, "WhileLoop");
    EXPECT_EQ(t.trace.rounds[0].expected_type, "MethodCall");
    EXPECT_FALSE(t.trace.unresolved);
    EXPECT_EQ(match::anchor_construct_type(*t.query), ConstructType::MethodCall);
    EXPECT_NE(llm.seen[1].user.find("The query targets WhileLoop but the request asks for MethodCall."),
              std::string::npos);
}

TEST(Refine, AgreeingTypesNeedNoRounds) {
    HashingEmbedder e;
    ScriptedProvider llm({"<construct_type>WhileLoop</construct_type>"});
    auto q = match::compile_query(kReadInWhileLoop);
    Translation t{q, {}};
    TranslateOptions opts;
    opts.k = 0;
    refine("Find all while loops", t, RagIndex{}, e, llm, opts, 3);
    EXPECT_TRUE(t.trace.rounds.empty());
    EXPECT_EQ(match::canonical_key(*t.query), match::canonical_key(q));
    EXPECT_EQ(llm.seen.size(), 1u);
}

TEST(Refine, StubbornModelLeavesQueryFlagged) {
    HashingEmbedder e;
    ScriptedProvider llm({"MethodCall", fenced_rule(kReadInWhileLoop), "not yaml", fenced_rule(kReadInWhileLoop)});
    auto q = match::compile_query(kReadInWhileLoop);
    Translation t{q, {}};
    TranslateOptions opts;
    opts.k = 0;
    refine("Find all calls of read in a while loop", t, RagIndex{}, e, llm, opts, 3);
    EXPECT_EQ(t.trace.rounds.size(), 3u);
    EXPECT_FALSE(t.trace.rounds[1].parsed);
    EXPECT_TRUE(t.trace.unresolved);
    ASSERT_TRUE(t.query);
    EXPECT_EQ(match::canonical_key(*t.query), match::canonical_key(q));
}

TEST(Refine, UnparseableExpectationIsANoOp) {
    HashingEmbedder e;
    ScriptedProvider llm({"I cannot tell"});
    auto q = match::compile_query(kReadInWhileLoop);
    Translation t{q, {}};
    refine("Find things", t, RagIndex{}, e, llm, {}, 3);
    EXPECT_TRUE(t.trace.rounds.empty());
    EXPECT_FALSE(t.trace.unresolved);
}

TEST(Mock, FaultInjectionAnchorsOnContextUntilCorrected) {
    auto corpus = small_corpus();
    gen::GenConfig cfg;
    cfg.n_queries = 6;
    cfg.c_min = 4;
    cfg.c_max = 12;
    cfg.seed = 2;
    MockProvider writer(MockProvider::Mode::template_nl);
    std::vector<PairedQuery> pairs;
    for (const auto& g : gen::enumerate_queries(corpus, cfg))
        pairs.push_back({g.id, g.query, describe_query(g.query), pair_nl(g.query, writer), locations_of(g.gold),
                         g.target_type});
    HashingEmbedder e;
    auto index = build_index(pairs, e);
    MockProvider llm(MockProvider::Mode::fault_inject, pairs);
    int injected = 0;
    for (const auto& p : pairs) {
        auto t = translate(p.nl, index, e, llm);
        bool has_context = p.dsl.clauses.size() > 1;
        if (!has_context) continue;
        EXPECT_EQ(t.query->clauses.size() + 1, p.dsl.clauses.size());
        // Context of the same construct type as the target is indistinguishable by type.
        if (match::anchor_construct_type(*t.query) == p.target_type) continue;
        ++injected;
        refine(p.nl, t, index, e, llm, {}, 2);
        EXPECT_EQ(locations_of(match::execute(*t.query, corpus)), p.gold);
    }
    EXPECT_GT(injected, 0);
}

TEST(Mock, FailModeAlwaysThrows) {
    MockProvider llm(MockProvider::Mode::fail);
    EXPECT_THROW(pair_nl(rule("      - pattern: break;\n"), llm), ProviderError);
    EXPECT_THROW(MockProvider::mode_from_name("psychic"), ConfigError);
}

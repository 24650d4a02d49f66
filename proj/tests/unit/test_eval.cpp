#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "scs/error.hpp"
#include "scs/eval/benchmark.hpp"
#include "scs/eval/evaluate.hpp"
#include "scs/eval/metrics.hpp"
#include "scs/nl/mock.hpp"

using namespace scs;
using namespace scs::eval;

namespace {

syntax::Corpus one_file(std::string text) { return syntax::Corpus::from_sources({{"A.java", std::move(text)}}); }

const char* kThreeMethods =
    "class A {\n"            // 1
    "  void f() {\n"         // 2
    "    int x = 1;\n"       // 3
    "    int y = 2;\n"       // 4
    "  }\n"                  // 5
    "  int g() {\n"          // 6
    "    return 3;\n"        // 7
    "  }\n"                  // 8
    "  int h = 4;\n"         // 9
    "  void k() { }\n"       // 10
    "}\n";                   // 11

std::vector<Location> at(std::initializer_list<std::uint32_t> lines, const char* path = "A.java") {
    std::vector<Location> out;
    for (auto l : lines) out.push_back({path, l});
    return out;
}

const syntax::Corpus& mini() {
    static const syntax::Corpus c = syntax::Corpus::load(std::string(SCS_CORPUS_DIR) + "/mini");
    return c;
}

Benchmark mini_benchmark(std::size_t n, std::uint64_t seed, int c_min = 1, int c_max = 5) {
    gen::GenConfig cfg;
    cfg.n_queries = n;
    cfg.seed = seed;
    cfg.c_min = c_min;
    cfg.c_max = c_max;
    nl::MockProvider writer(nl::MockProvider::Mode::template_nl);
    return make_benchmark(mini(), "mini", cfg, writer);
}

}  // namespace

TEST(Score, HandComputedFixture) {
    auto c = one_file(std::string(12, '\n'));
    auto s = score_query("q", at({1, 5, 9}), at({1, 9, 12}), Granularity::line, c);
    EXPECT_DOUBLE_EQ(s.recall, 2.0 / 3.0);
    EXPECT_DOUBLE_EQ(s.precision, 2.0 / 3.0);
    EXPECT_NEAR(s.f1, 2.0 / 3.0, 1e-15);
    EXPECT_EQ(s.tp_gold, 2u);
    EXPECT_EQ(s.predicted, 3u);
}

TEST(Score, IdenticalSetsArePerfect) {
    auto c = one_file(kThreeMethods);
    for (auto g : {Granularity::line, Granularity::method}) {
        auto s = score_query("q", at({3, 7, 9}), at({3, 7, 9}), g, c);
        EXPECT_EQ(s.recall, 1.0);
        EXPECT_EQ(s.precision, 1.0);
        EXPECT_EQ(s.f1, 1.0);
    }
}

TEST(Score, LinesInOneMethodCollapseAtMethodGranularity) {
    auto c = one_file(kThreeMethods);
    auto line = score_query("q", at({3, 4}), at({4}), Granularity::line, c);
    EXPECT_DOUBLE_EQ(line.recall, 0.5);
    auto method = score_query("q", at({3, 4}), at({4}), Granularity::method, c);
    EXPECT_EQ(method.recall, 1.0);
    EXPECT_EQ(method.precision, 1.0);
    // Line 9 is a field, outside any method: it only matches itself.
    auto field = score_query("q", at({9}), at({3}), Granularity::method, c);
    EXPECT_EQ(field.recall, 0.0);
}

TEST(Score, EmptySetConventions) {
    auto c = one_file(kThreeMethods);
    auto both = score_query("q", {}, {}, Granularity::line, c);
    EXPECT_EQ(both.recall, 1.0);
    EXPECT_EQ(both.precision, 1.0);
    EXPECT_EQ(both.f1, 1.0);
    auto spurious = score_query("q", {}, at({3}), Granularity::line, c);
    EXPECT_EQ(spurious.recall, 1.0);
    EXPECT_EQ(spurious.precision, 0.0);
    EXPECT_EQ(spurious.f1, 0.0);
    auto missing = score_query("q", at({3}), {}, Granularity::line, c);
    EXPECT_EQ(missing.recall, 0.0);
    EXPECT_EQ(missing.precision, 0.0);
    EXPECT_EQ(missing.f1, 0.0);
}

TEST(Score, UnknownFileIsAnError) {
    auto c = one_file(kThreeMethods);
    EXPECT_THROW(score_query("q", at({1}, "B.java"), {}, Granularity::line, c), UnknownFile);
    EXPECT_THROW(score_query("q", {}, at({1}, "B.java"), Granularity::method, c), UnknownFile);
}

TEST(Score, RandomizedIdentitiesAndCoarsening) {
    const auto& corpus = mini();
    std::mt19937_64 rng(17);
    for (int round = 0; round < 100; ++round) {
        const auto& f = corpus.files()[rng() % corpus.files().size()];
        std::uint32_t lines = f.tree->line_count();
        auto draw = [&] {
            std::set<std::uint32_t> s;
            std::size_t n = rng() % 8;
            while (s.size() < n) s.insert(static_cast<std::uint32_t>(1 + rng() % lines));
            std::vector<Location> out;
            for (auto l : s) out.push_back({f.path, l});
            return out;
        };
        auto gold = draw(), pred = draw();
        auto line = score_query("q", gold, pred, Granularity::line, corpus);
        auto method = score_query("q", gold, pred, Granularity::method, corpus);
        for (const auto& s : {line, method}) {
            EXPECT_GE(s.recall, 0.0);
            EXPECT_LE(s.recall, 1.0);
            EXPECT_GE(s.precision, 0.0);
            EXPECT_LE(s.precision, 1.0);
            if (s.recall + s.precision > 0)
                EXPECT_NEAR(s.f1, 2 * s.recall * s.precision / (s.recall + s.precision), 1e-12);
        }
        EXPECT_GE(method.recall, line.recall) << f.path;
    }
}

TEST(Report, MacroAveragesAreMeans) {
    EvalReport r;
    r.scores = {{"a", 1.0, 0.5, 2.0 / 3.0}, {"b", 0.0, 0.0, 0.0}, {"c", 0.5, 1.0, 2.0 / 3.0}};
    r.scores[1].error = "failed";
    r.finish();
    EXPECT_DOUBLE_EQ(r.recall, 0.5);
    EXPECT_DOUBLE_EQ(r.precision, 0.5);
    EXPECT_DOUBLE_EQ(r.f1, 4.0 / 9.0);
    EXPECT_EQ(r.failures, 1u);
    r.method = "pipeline";
    r.model = "m";
    auto table = report_table({r});
    EXPECT_NE(table.find("Rec. (%)"), std::string::npos);
    EXPECT_NE(table.find("50.0"), std::string::npos);
    EXPECT_EQ(report_json(r)["scores"].size(), 3u);
}

TEST(Benchmark, FileRoundTripAndValidation) {
    auto b = mini_benchmark(6, 3);
    ASSERT_EQ(b.queries.size(), 6u);
    validate(b, mini());
    auto path = std::filesystem::temp_directory_path() / "scs_test_benchmark.json";
    save_benchmark(b, path);
    auto loaded = load_benchmark(path);
    std::filesystem::remove(path);
    EXPECT_EQ(benchmark_json(loaded).dump(), benchmark_json(b).dump());
    EXPECT_EQ(corpus_path(loaded, "/x/bench.json"), std::filesystem::path("/x/mini"));

    auto dup = b;
    dup.queries.push_back(dup.queries.front());
    EXPECT_THROW(validate(dup, mini()), BenchmarkError);
    auto missing = b;
    missing.queries[0].gold.push_back({"nowhere/Gone.java", 1});
    EXPECT_THROW(validate(missing, mini()), BenchmarkError);
    EXPECT_THROW(benchmark_from_json(nlohmann::json{{"queries", 1}}), BenchmarkError);
}

TEST(Pipeline, EchoGoldScoresPerfectly) {
    auto b = mini_benchmark(20, 7);
    nl::HashingEmbedder e;
    auto index = nl::build_index(mini_benchmark(30, 99).queries, e);
    nl::MockProvider llm(nl::MockProvider::Mode::echo_gold, b.queries);
    auto r = run_pipeline_eval(b, mini(), index, e, llm, {});
    EXPECT_EQ(r.scores.size(), 20u);
    EXPECT_EQ(r.recall, 1.0);
    EXPECT_EQ(r.precision, 1.0);
    EXPECT_EQ(r.f1, 1.0);
    EXPECT_EQ(r.failures, 0u);
    EXPECT_GT(r.prompt_tokens, 0u);
}

TEST(Pipeline, FailingProviderScoresZero) {
    auto b = mini_benchmark(5, 8);
    nl::HashingEmbedder e;
    auto index = nl::build_index(b.queries, e);
    nl::MockProvider llm(nl::MockProvider::Mode::fail);
    auto r = run_pipeline_eval(b, mini(), index, e, llm, {});
    EXPECT_EQ(r.scores.size(), 5u);
    EXPECT_EQ(r.f1, 0.0);
    EXPECT_EQ(r.recall, 0.0);
    EXPECT_EQ(r.failures, 5u);
}

TEST(Pipeline, RefinementRecoversInjectedFaults) {
    auto b = mini_benchmark(12, 4, 6, 12);
    nl::HashingEmbedder e;
    auto index = nl::build_index(mini_benchmark(30, 99).queries, e);
    nl::MockProvider llm(nl::MockProvider::Mode::fault_inject, b.queries);
    PipelineOptions off;
    off.refine = false;
    auto plain = run_pipeline_eval(b, mini(), index, e, llm, off);
    auto refined = run_pipeline_eval(b, mini(), index, e, llm, {});
    EXPECT_GT(refined.f1, plain.f1);
}

TEST(Direct, OracleMockOnOneFileIsPerfect) {
    auto corpus = one_file(kThreeMethods);
    Benchmark b;
    b.queries.push_back({"q1", match::compile_query("pattern: int $X = $V;\n"), "", "Find all local integers",
                         at({3, 4}), syntax::ConstructType::VariableDeclaration});
    nl::MockProvider llm(nl::MockProvider::Mode::echo_gold, b.queries);
    auto r = baseline_llm_direct(b, corpus, llm, {});
    EXPECT_EQ(r.f1, 1.0);

    nl::MockProvider lazy(nl::MockProvider::Mode::first_hit, b.queries);
    auto missed = baseline_llm_direct(b, corpus, lazy, {});
    EXPECT_DOUBLE_EQ(missed.recall, 0.5);
    EXPECT_EQ(missed.precision, 1.0);
}

TEST(Direct, RefusesOversizedRunsUnlessForced) {
    auto b = mini_benchmark(3, 2);
    nl::MockProvider llm(nl::MockProvider::Mode::echo_gold, b.queries);
    DirectOptions opts;
    opts.max_calls = 10;
    EXPECT_THROW(baseline_llm_direct(b, mini(), llm, opts), BudgetRefused);
    opts.force = true;
    auto r = baseline_llm_direct(b, mini(), llm, opts);
    EXPECT_EQ(r.f1, 1.0);
}

TEST(Direct, ReadsFarMoreTokensThanThePipeline) {
    auto b = mini_benchmark(10, 5);
    nl::HashingEmbedder e;
    auto index = nl::build_index(mini_benchmark(30, 99).queries, e);
    nl::MockProvider llm(nl::MockProvider::Mode::echo_gold, b.queries);
    auto pipeline = run_pipeline_eval(b, mini(), index, e, llm, {});
    auto direct = baseline_llm_direct(b, mini(), llm, {});
    EXPECT_GE(direct.prompt_tokens, 10 * pipeline.prompt_tokens)
        << direct.prompt_tokens << " vs " << pipeline.prompt_tokens;
}

TEST(Vector, FloorThresholdPredictsEveryMethod) {
    auto b = mini_benchmark(10, 6);
    nl::HashingEmbedder e;
    VectorSearch vs(mini(), e);
    auto r = vs.evaluate(b, -1.0);
    for (const auto& s : r.scores) {
        EXPECT_EQ(s.predicted, vs.chunk_count());
        if (s.positives) {
            EXPECT_EQ(s.recall * s.positives, static_cast<double>(s.tp_gold));
        }
    }
    // Precision is the share of methods that hold gold lines.
    for (std::size_t i = 0; i < b.queries.size(); ++i) {
        const auto& s = r.scores[i];
        if (s.positives == 0) continue;
        EXPECT_DOUBLE_EQ(s.precision, static_cast<double>(s.tp_pred) / static_cast<double>(vs.chunk_count()));
    }
}

TEST(Vector, ThresholdSweepIsMonotone) {
    auto b = mini_benchmark(20, 9);
    nl::HashingEmbedder e;
    VectorSearch vs(mini(), e);
    double last_recall = 2.0;
    std::vector<Location> last_pred;
    bool first = true;
    for (double t : {0.0, 0.1, 0.25, 0.5, 0.75, 0.9}) {
        auto r = vs.evaluate(b, t);
        EXPECT_LE(r.recall, last_recall) << t;
        last_recall = r.recall;
        for (const auto& q : b.queries) {
            auto hi = vs.search(q.nl, t);
            if (!first) {
                auto lo = vs.search(q.nl, t - 0.05);
                EXPECT_TRUE(std::includes(lo.begin(), lo.end(), hi.begin(), hi.end()));
            }
        }
        first = false;
    }
}

TEST(Vector, HighThresholdFindsNothingForDissimilarText) {
    nl::HashingEmbedder e;
    VectorSearch vs(mini(), e);
    EXPECT_TRUE(vs.search("Find all cases where a returned value is used by an add operation inside a loop", 0.75).empty());
}

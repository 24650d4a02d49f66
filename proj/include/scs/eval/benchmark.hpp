#ifndef SCS_EVAL_BENCHMARK_HPP
#define SCS_EVAL_BENCHMARK_HPP

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "scs/eval/metrics.hpp"
#include "scs/gen/generator.hpp"
#include "scs/nl/paired.hpp"
#include "scs/nl/provider.hpp"
#include "scs/syntax/corpus.hpp"

namespace scs::eval {

struct Benchmark {
    std::string corpus;  // corpus directory or manifest, relative to the benchmark file
    std::vector<nl::PairedQuery> queries;
    Granularity granularity = Granularity::line;
    nlohmann::json provenance = nlohmann::json::object();
};

// Every gold file must exist in the corpus and ids must be unique.
// Throws BenchmarkError.
void validate(const Benchmark& b, const syntax::Corpus& corpus);

nlohmann::json benchmark_json(const Benchmark& b);
Benchmark benchmark_from_json(const nlohmann::json& j);

void save_benchmark(const Benchmark& b, const std::filesystem::path& path);
// Throws BenchmarkError.
Benchmark load_benchmark(const std::filesystem::path& path);
// The corpus a benchmark file refers to.
std::filesystem::path corpus_path(const Benchmark& b, const std::filesystem::path& benchmark_file);

nl::PairedQuery pair_query(const gen::GeneratedQuery& g, nl::ChatProvider& llm);

// Generation followed by pairing. Throws what enumerate_queries and
// pair_nl throw.
Benchmark make_benchmark(const syntax::Corpus& corpus, std::string corpus_ref, const gen::GenConfig& cfg,
                         nl::ChatProvider& llm);

}  // namespace scs::eval

#endif  // SCS_EVAL_BENCHMARK_HPP

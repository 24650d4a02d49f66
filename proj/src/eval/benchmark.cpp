#include "scs/eval/benchmark.hpp"

#include <fstream>
#include <set>

#include "scs/error.hpp"
#include "scs/nl/describe.hpp"
#include "scs/nl/translate.hpp"

namespace scs::eval {

void validate(const Benchmark& b, const syntax::Corpus& corpus) {
    std::set<std::string> ids;
    for (const auto& q : b.queries) {
        if (!ids.insert(q.id).second) throw BenchmarkError("duplicate query id " + q.id);
        for (const auto& g : q.gold)
            if (!corpus.find(g.path)) throw BenchmarkError("query " + q.id + ": gold file not in corpus: " + g.path);
    }
}

nlohmann::json benchmark_json(const Benchmark& b) {
    nlohmann::json qs = nlohmann::json::array();
    for (const auto& q : b.queries) qs.push_back(nl::paired_to_json(q));
    return {{"corpus", b.corpus},
            {"granularity", granularity_name(b.granularity)},
            {"provenance", b.provenance},
            {"queries", qs}};
}

Benchmark benchmark_from_json(const nlohmann::json& j) {
    Benchmark b;
    try {
        b.corpus = j.at("corpus").get<std::string>();
        auto g = granularity_from_name(j.value("granularity", "line"));
        if (!g) throw BenchmarkError("unknown granularity " + j.at("granularity").dump());
        b.granularity = *g;
        b.provenance = j.value("provenance", nlohmann::json::object());
        for (const auto& q : j.at("queries")) b.queries.push_back(nl::paired_from_json(q));
    } catch (const nlohmann::json::exception& e) {
        throw BenchmarkError(std::string("malformed benchmark: ") + e.what());
    } catch (const BenchmarkError&) {
        throw;
    } catch (const Error& e) {
        throw BenchmarkError(std::string("benchmark query does not compile: ") + e.what());
    }
    return b;
}

void save_benchmark(const Benchmark& b, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw BenchmarkError("cannot write " + path.string());
    out << benchmark_json(b).dump(2) << '\n';
}

Benchmark load_benchmark(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw BenchmarkError("cannot read " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw BenchmarkError(path.string() + " is not JSON: " + e.what());
    }
    return benchmark_from_json(j);
}

std::filesystem::path corpus_path(const Benchmark& b, const std::filesystem::path& benchmark_file) {
    std::filesystem::path p(b.corpus);
    if (p.is_absolute()) return p;
    return benchmark_file.parent_path() / p;
}

nl::PairedQuery pair_query(const gen::GeneratedQuery& g, nl::ChatProvider& llm) {
    return {g.id, g.query, nl::describe_query(g.query), nl::pair_nl(g.query, llm), nl::locations_of(g.gold),
            g.target_type};
}

Benchmark make_benchmark(const syntax::Corpus& corpus, std::string corpus_ref, const gen::GenConfig& cfg,
                         nl::ChatProvider& llm) {
    Benchmark b;
    b.corpus = std::move(corpus_ref);
    b.provenance = {{"n_queries", cfg.n_queries}, {"c_min", cfg.c_min},       {"c_max", cfg.c_max},
                    {"seed", cfg.seed},           {"biased", cfg.biased},     {"corpus_sha256", corpus.sha256()},
                    {"pairing_model", llm.tag()}};
    for (const auto& g : gen::enumerate_queries(corpus, cfg)) b.queries.push_back(pair_query(g, llm));
    return b;
}

}  // namespace scs::eval

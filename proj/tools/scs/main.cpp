#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <nlohmann/json.hpp>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "scs/error.hpp"
#include "scs/eval/benchmark.hpp"
#include "scs/eval/evaluate.hpp"
#include "scs/eval/metrics.hpp"
#include "scs/gen/generator.hpp"
#include "scs/match/matcher.hpp"
#include "scs/nl/describe.hpp"
#include "scs/nl/mock.hpp"
#include "scs/nl/provider.hpp"
#include "scs/nl/rag.hpp"
#include "scs/nl/translate.hpp"
#include "scs/syntax/constructs.hpp"
#include "scs/syntax/corpus.hpp"

namespace fs = std::filesystem;
using namespace scs;

namespace {

constexpr int kFound = 0;
constexpr int kNothing = 1;
constexpr int kFailed = 2;

class UsageError : public Error {
  public:
    using Error::Error;
};

std::string read_file(const fs::path& p) {
    std::ifstream in(p);
    if (!in) throw Error("cannot read " + p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const fs::path& p, const std::string& text) {
    if (p.has_parent_path()) fs::create_directories(p.parent_path());
    std::ofstream out(p);
    if (!out) throw Error("cannot write " + p.string());
    out << text;
}

syntax::Corpus load_corpus(const fs::path& p) {
    auto c = syntax::Corpus::load(p);
    for (const auto& x : c.excluded()) std::cerr << "scs: skipped " << x.path << ": " << x.reason << '\n';
    if (c.files().empty()) throw EmptyCorpus();
    return c;
}

// Model access shared by every subcommand that talks to one.
struct ProviderFlags {
    std::string replay;
    std::string record;
    std::string mock;
    std::string mock_key;
    std::string endpoint;
    std::string model;
    std::string embed_model;
};

void add_provider_flags(CLI::App& cmd, ProviderFlags& f) {
    cmd.add_option("--replay", f.replay, "Answer from a recorded transcript instead of a live model");
    cmd.add_option("--record", f.record, "Save every exchange to this transcript file");
    cmd.add_option("--mock", f.mock, "Offline model: template, echo-gold, fault-inject, first-hit, fail");
    cmd.add_option("--mock-key", f.mock_key, "Benchmark whose queries the mock answers from");
    cmd.add_option("--endpoint", f.endpoint, "Chat-completion base URL [env SCS_API_ENDPOINT]");
    cmd.add_option("--model", f.model, "Chat model name [env SCS_MODEL]");
    cmd.add_option("--embed-model", f.embed_model, "Embedding model name [env SCS_EMBED_MODEL]");
}

bool flag_given(const std::vector<std::string>& argv, std::string_view flag) {
    return std::any_of(argv.begin(), argv.end(), [&](const std::string& a) {
        return a == flag || (a.size() > flag.size() && a.compare(0, flag.size(), flag) == 0 && a[flag.size()] == '=');
    });
}

// Command-line flags win, then the environment, then the config file.
void apply_env(ProviderFlags& f, const std::vector<std::string>& argv) {
    auto env = [&](std::string& field, const char* var, std::string_view flag) {
        const char* v = std::getenv(var);
        if (v && *v && !flag_given(argv, flag)) field = v;
    };
    env(f.endpoint, "SCS_API_ENDPOINT", "--endpoint");
    env(f.model, "SCS_MODEL", "--model");
    env(f.embed_model, "SCS_EMBED_MODEL", "--embed-model");
}

nl::EndpointConfig endpoint(const ProviderFlags& f) {
    nl::EndpointConfig c = nl::EndpointConfig::from_env();
    c.endpoint = f.endpoint;
    c.model = f.model;
    c.embed_model = f.embed_model;
    return c;
}

class ChatSession {
  public:
    // The default key is used by mocks when no --mock-key is given.
    ChatSession(const ProviderFlags& f, const std::vector<nl::PairedQuery>* default_key = nullptr) {
        std::shared_ptr<nl::ChatProvider> base;
        if (!f.replay.empty()) {
            base = std::make_shared<nl::ReplayProvider>(fs::path(f.replay));
        } else if (!f.mock.empty()) {
            auto mode = nl::MockProvider::mode_from_name(f.mock);
            std::vector<nl::PairedQuery> key;
            if (!f.mock_key.empty())
                key = eval::load_benchmark(f.mock_key).queries;
            else if (default_key)
                key = *default_key;
            base = std::make_shared<nl::MockProvider>(mode, key);
        } else if (!f.endpoint.empty()) {
            base = std::make_shared<nl::HttpChatProvider>(endpoint(f));
        } else {
            throw UsageError("no model configured: pass --replay, --mock or --endpoint (or set SCS_API_ENDPOINT)");
        }
        if (!f.record.empty()) {
            recorder_ = std::make_shared<nl::RecordingProvider>(base);
            record_path_ = f.record;
            provider_ = recorder_;
        } else {
            provider_ = base;
        }
    }
    ChatSession(const ChatSession&) = delete;
    ChatSession& operator=(const ChatSession&) = delete;
    ~ChatSession() {
        if (!recorder_) return;
        try {
            recorder_->save(record_path_);
        } catch (const std::exception& e) {
            std::cerr << "scs: " << e.what() << '\n';
        }
    }

    nl::ChatProvider& llm() { return *provider_; }

  private:
    std::shared_ptr<nl::ChatProvider> provider_;
    std::shared_ptr<nl::RecordingProvider> recorder_;
    fs::path record_path_;
};

std::unique_ptr<nl::Embedder> make_embedder(const std::string& kind, std::size_t dim, const ProviderFlags& f) {
    if (kind == "hashing") return std::make_unique<nl::HashingEmbedder>(dim);
    if (kind == "http") return std::make_unique<nl::HttpEmbedder>(endpoint(f));
    throw UsageError("unknown embedder '" + kind + "' (expected hashing or http)");
}

// The embedder an index was built with.
std::unique_ptr<nl::Embedder> embedder_for(const nl::RagIndex& index, const ProviderFlags& f) {
    const std::string& tag = index.provider();
    if (tag.rfind("hashing-", 0) == 0) return std::make_unique<nl::HashingEmbedder>(std::stoul(tag.substr(8)));
    auto e = std::make_unique<nl::HttpEmbedder>(endpoint(f));
    if (e->tag() != tag)
        std::cerr << "scs: index was built with embedding model '" << tag << "', querying with '" << e->tag() << "'\n";
    return e;
}

// ---------------------------------------------------------------- index

struct IndexArgs {
    std::string corpus;
    std::string manifest;
};

int cmd_index(const IndexArgs& a) {
    auto corpus = syntax::Corpus::load(a.corpus);
    gen::TypeCounts counts{};
    std::size_t lines = 0;
    for (const auto& f : corpus.files()) {
        lines += f.tree->line_count();
        for (const auto& c : syntax::enumerate_constructs(*f.tree)) ++counts[static_cast<std::size_t>(c.ctype)];
    }
    std::cout << "files     " << corpus.files().size() << "\nlines     " << lines << "\nexcluded  "
              << corpus.excluded().size() << "\nsha256    " << corpus.sha256() << "\n\n";
    for (const auto& x : corpus.excluded()) std::cout << "excluded " << x.path << ": " << x.reason << '\n';
    for (auto t : syntax::all_construct_types()) {
        std::string name(syntax::construct_name(t));
        std::cout << name << std::string(22 - std::min<std::size_t>(21, name.size()), ' ')
                  << counts[static_cast<std::size_t>(t)] << '\n';
    }
    if (!a.manifest.empty()) write_file(a.manifest, corpus.manifest_json() + "\n");
    return corpus.files().empty() ? kNothing : kFound;
}

// ---------------------------------------------------------------- generate

struct GenerateArgs {
    std::string corpus;
    std::size_t n = 10;
    int c_min = 1;
    int c_max = 5;
    std::uint64_t seed = 0;
    std::size_t max_attempts = 0;
    bool unbiased = false;
    std::string out;
};

int cmd_generate(const GenerateArgs& a) {
    if (a.c_min > a.c_max) throw UsageError("--cmin must not exceed --cmax");
    auto corpus = load_corpus(a.corpus);
    gen::GenConfig cfg;
    cfg.n_queries = a.n;
    cfg.c_min = a.c_min;
    cfg.c_max = a.c_max;
    cfg.seed = a.seed;
    cfg.max_attempts = a.max_attempts;
    cfg.biased = !a.unbiased;
    auto queries = gen::enumerate_queries(corpus, cfg);
    std::string lines;
    for (const auto& g : queries) lines += gen::generated_query_json(g) + "\n";
    std::string summary = gen::distribution_summary(queries);
    if (a.out.empty()) {
        std::cout << lines;
        std::cerr << summary;
    } else {
        write_file(a.out, lines);
        std::cout << summary;
    }
    return kFound;
}

// ---------------------------------------------------------------- pair

fs::path top_level(const fs::path& abs) {
    auto it = abs.begin();
    fs::path top;
    for (int i = 0; i < 2 && it != abs.end(); ++i, ++it) top /= *it;
    return top;
}

struct PairArgs {
    std::string queries;
    std::string corpus;
    std::string out;
    ProviderFlags provider;
};

int cmd_pair(PairArgs& a) {
    auto corpus = load_corpus(a.corpus);
    ChatSession session(a.provider);
    eval::Benchmark b;
    fs::path out_dir = fs::absolute(a.out).parent_path();
    fs::path corpus_abs = fs::weakly_canonical(fs::absolute(a.corpus));
    out_dir = fs::weakly_canonical(out_dir);
    // Relative when both live under the same top-level directory, so they can move together.
    b.corpus = (top_level(corpus_abs) == top_level(out_dir) ? fs::relative(corpus_abs, out_dir) : corpus_abs)
                   .generic_string();
    b.provenance = {{"queries", fs::path(a.queries).filename().string()},
                    {"pairing_model", session.llm().tag()},
                    {"corpus_sha256", corpus.sha256()}};
    std::istringstream in(read_file(a.queries));
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto j = nlohmann::json::parse(line);
        nl::PairedQuery p;
        p.id = j.at("id").get<std::string>();
        p.dsl = match::compile_query(j.at("rule").get<std::string>());
        auto type = syntax::construct_from_name(j.at("target_type").get<std::string>());
        if (!type) throw BenchmarkError("query " + p.id + " has an unknown target type");
        p.target_type = *type;
        for (const auto& g : j.at("gold")) p.gold.push_back({g.at("path"), g.at("start_line")});
        std::sort(p.gold.begin(), p.gold.end());
        p.gold.erase(std::unique(p.gold.begin(), p.gold.end()), p.gold.end());
        p.description = nl::describe_query(p.dsl);
        p.nl = nl::pair_nl(p.dsl, session.llm());
        b.queries.push_back(std::move(p));
    }
    eval::validate(b, corpus);
    eval::save_benchmark(b, a.out);
    std::cout << "paired " << b.queries.size() << " queries into " << a.out << '\n';
    return b.queries.empty() ? kNothing : kFound;
}

// ---------------------------------------------------------------- build-index

struct BuildIndexArgs {
    std::string pairs;
    std::string out;
    std::string embedder = "hashing";
    std::size_t dim = 256;
    ProviderFlags provider;
};

int cmd_build_index(const BuildIndexArgs& a) {
    auto b = eval::load_benchmark(a.pairs);
    auto e = make_embedder(a.embedder, a.dim, a.provider);
    auto index = nl::build_index(b.queries, *e);
    index.save(a.out);
    std::cout << "indexed " << index.examples().size() << " examples (" << index.provider() << ", dimension "
              << index.dimension() << ") into " << a.out << '\n';
    return kFound;
}

// ---------------------------------------------------------------- search

struct SearchArgs {
    std::string nl;
    std::string corpus;
    std::string index;
    std::string rule;
    bool json = false;
    bool verbose = false;
    std::size_t k = 5;
    int rounds = 2;
    bool no_refine = false;
    bool docs = false;
    bool no_comments = false;
    ProviderFlags provider;
};

void print_trace(const nl::TranslationTrace& t) {
    std::cerr << "# retrieved:";
    for (const auto& id : t.retrieved_ids) std::cerr << ' ' << id;
    std::cerr << "\n# parse retries: " << t.parse_retries << "\n# refinement rounds: " << t.rounds.size() << '\n';
    for (const auto& r : t.rounds)
        std::cerr << "#   query targets " << r.query_type << ", request asks for " << r.expected_type
                  << (r.parsed ? "" : " (answer did not parse)") << '\n';
    if (t.unresolved) std::cerr << "# construct type still disagrees after refinement\n";
    if (!t.failure.empty()) std::cerr << "# failure: " << t.failure << '\n';
    std::cerr << "# tokens: " << t.prompt_tokens << " prompt, " << t.completion_tokens << " completion\n";
    if (t.prompts.size() == t.completions.size())
        for (std::size_t i = 0; i < t.completions.size(); ++i)
            std::cerr << "# completion " << i + 1 << ":\n" << t.completions[i] << '\n';
}

int cmd_search(SearchArgs& a) {
    auto corpus = load_corpus(a.corpus);
    match::Query q;
    if (!a.rule.empty()) {
        q = match::compile_query(read_file(a.rule));
    } else {
        if (a.nl.empty()) throw UsageError("give a request to search for, or --rule");
        if (a.index.empty()) throw UsageError("--index is required to translate a request");
        auto index = nl::RagIndex::load(a.index);
        auto embedder = embedder_for(index, a.provider);
        ChatSession session(a.provider);
        nl::TranslateOptions opts;
        opts.k = a.k;
        opts.with_api_docs = a.docs;
        opts.with_inline_comments = !a.no_comments;
        nl::Translation t;
        try {
            t = nl::translate(a.nl, index, *embedder, session.llm(), opts);
            if (!a.no_refine) nl::refine(a.nl, t, index, *embedder, session.llm(), opts, a.rounds);
        } catch (const nl::FailedTranslation& f) {
            print_trace(f.trace());
            throw;
        }
        q = *t.query;
        std::cerr << match::render_rule(q);
        if (a.verbose) print_trace(t.trace);
    }
    auto matches = match::execute(q, corpus);
    if (a.json) {
        for (const auto& m : matches) std::cout << match::match_json(m, q.id) << '\n';
    } else {
        std::set<std::pair<std::string, std::uint32_t>> printed;
        for (const auto& m : matches) {
            if (!printed.emplace(m.path(), m.span.start_line).second) continue;
            std::cout << m.path() << ':' << m.span.start_line << ": " << m.tree->line_text(m.span.start_line) << '\n';
        }
    }
    return matches.empty() ? kNothing : kFound;
}

// ---------------------------------------------------------------- eval

struct EvalArgs {
    std::string benchmark;
    std::string mode = "pipeline";
    std::string index;
    std::string granularity;
    std::vector<double> thresholds;
    std::vector<std::string> ablate;
    std::string out_dir;
    std::size_t k = 5;
    int rounds = 2;
    std::size_t max_calls = 500;
    bool force = false;
    std::size_t limit_queries = 0;
    std::size_t limit_files = 0;
    ProviderFlags provider;
};

struct PipelineVariant {
    std::string label;
    eval::PipelineOptions opts;
};

std::vector<PipelineVariant> pipeline_variants(const EvalArgs& a, eval::Granularity g) {
    eval::PipelineOptions base;
    base.translate.k = a.k;
    base.max_rounds = a.rounds;
    base.granularity = g;
    auto apply = [](eval::PipelineOptions o, const std::string& setting) {
        auto eq = setting.find('=');
        if (eq == std::string::npos) throw UsageError("--ablate expects name=on|off, got '" + setting + "'");
        std::string name = setting.substr(0, eq), value = setting.substr(eq + 1);
        if (value != "on" && value != "off") throw UsageError("--ablate value must be on or off: " + setting);
        bool on = value == "on";
        if (name == "examples")
            o.translate.k = on ? (o.translate.k ? o.translate.k : 5) : 0;
        else if (name == "docs")
            o.translate.with_api_docs = on;
        else if (name == "comments")
            o.translate.with_inline_comments = on;
        else if (name == "refine")
            o.refine = on;
        else
            throw UsageError("unknown --ablate switch '" + name + "' (examples, docs, comments, refine)");
        return o;
    };
    if (std::find(a.ablate.begin(), a.ablate.end(), "sweep") != a.ablate.end()) {
        std::vector<PipelineVariant> rows{{"pipeline", base}};
        for (const char* s : {"examples=off", "docs=on", "comments=off", "refine=off"})
            rows.push_back({std::string("pipeline ") + s, apply(base, s)});
        return rows;
    }
    std::string label = "pipeline";
    for (const auto& s : a.ablate) {
        base = apply(base, s);
        label += " " + s;
    }
    return {{label, base}};
}

// The first files and queries only, with gold restricted to those files.
void narrow(eval::Benchmark& b, syntax::Corpus& corpus, std::size_t n_queries, std::size_t n_files) {
    if (n_queries && b.queries.size() > n_queries) b.queries.resize(n_queries);
    if (!n_files || corpus.files().size() <= n_files) return;
    std::vector<std::pair<std::string, std::string>> kept;
    std::set<std::string> names;
    for (std::size_t i = 0; i < n_files; ++i) {
        kept.emplace_back(corpus.files()[i].path, corpus.files()[i].text());
        names.insert(corpus.files()[i].path);
    }
    corpus = syntax::Corpus::from_sources(std::move(kept), corpus.root());
    for (auto& q : b.queries)
        std::erase_if(q.gold, [&](const nl::Location& l) { return !names.count(l.path); });
}

int cmd_eval(EvalArgs& a) {
    auto b = eval::load_benchmark(a.benchmark);
    auto corpus = load_corpus(eval::corpus_path(b, a.benchmark));
    eval::validate(b, corpus);
    narrow(b, corpus, a.limit_queries, a.limit_files);
    eval::Granularity g = b.granularity;
    if (!a.granularity.empty()) g = *eval::granularity_from_name(a.granularity);

    std::vector<eval::EvalReport> reports;
    if (a.mode == "vector") {
        if (a.thresholds.empty()) a.thresholds = {0.25, 0.5, 0.75};
        nl::HashingEmbedder hashing;
        std::unique_ptr<nl::Embedder> http;
        nl::Embedder* e = &hashing;
        if (!a.provider.embed_model.empty()) {
            http = std::make_unique<nl::HttpEmbedder>(endpoint(a.provider));
            e = http.get();
        }
        eval::VectorSearch vs(corpus, *e);
        for (double t : a.thresholds) reports.push_back(vs.evaluate(b, t));
    } else if (a.mode == "llm-direct") {
        ChatSession session(a.provider, &b.queries);
        eval::DirectOptions opts;
        opts.max_calls = a.max_calls;
        opts.force = a.force;
        opts.granularity = g;
        reports.push_back(eval::baseline_llm_direct(b, corpus, session.llm(), opts));
    } else {
        if (a.index.empty()) throw UsageError("--index is required in pipeline mode");
        auto index = nl::RagIndex::load(a.index);
        auto embedder = embedder_for(index, a.provider);
        ChatSession session(a.provider, &b.queries);
        for (auto& v : pipeline_variants(a, g)) {
            auto r = eval::run_pipeline_eval(b, corpus, index, *embedder, session.llm(), v.opts);
            r.method = v.label;
            reports.push_back(std::move(r));
        }
    }

    std::string table = eval::report_table(reports);
    std::cout << table;
    if (!a.out_dir.empty()) {
        nlohmann::json all = nlohmann::json::array();
        for (const auto& r : reports) all.push_back(eval::report_json(r));
        write_file(fs::path(a.out_dir) / "report.json", all.dump(2) + "\n");
        write_file(fs::path(a.out_dir) / "report.txt", table);
    }
    return kFound;
}

}  // namespace

const CLI::Validator kAtLeastOne(
    [](std::string& v) {
        try {
            if (std::stoll(v) >= 1) return std::string();
        } catch (const std::exception&) {
        }
        return "must be a whole number of at least 1, got " + v;
    },
    "N>=1");

int main(int argc, char** argv) {
    CLI::App app{"Structural code search over Java: match rules, generate benchmarks, translate requests"};
    app.set_config("--config", "scs.toml", "Settings file; command-line flags and environment take precedence");
    app.require_subcommand(1);

    IndexArgs index_args;
    auto* index = app.add_subcommand("index", "Parse a corpus and report its files and constructs");
    index->add_option("--corpus", index_args.corpus, "Java source directory or corpus.json")->required();
    index->add_option("--manifest", index_args.manifest, "Write the corpus manifest here");

    GenerateArgs gen_args;
    auto* generate = app.add_subcommand("generate", "Enumerate verified structural queries over a corpus");
    generate->add_option("--corpus", gen_args.corpus, "Java source directory or corpus.json")->required();
    generate->add_option("--n", gen_args.n, "Number of queries")->check(kAtLeastOne);
    generate->add_option("--cmin", gen_args.c_min, "Minimum complexity")->check(kAtLeastOne);
    generate->add_option("--cmax", gen_args.c_max, "Maximum complexity")->check(kAtLeastOne);
    generate->add_option("--seed", gen_args.seed, "Random seed");
    generate->add_option("--max-attempts", gen_args.max_attempts, "Candidate budget (default 100 per query)");
    generate->add_flag("--unbiased", gen_args.unbiased, "Sample constructs uniformly");
    generate->add_option("--out", gen_args.out, "JSON-lines output (default stdout)");

    PairArgs pair_args;
    auto* pair = app.add_subcommand("pair", "Write an English request for each generated query");
    pair->add_option("--queries", pair_args.queries, "JSON lines from generate")->required();
    pair->add_option("--corpus", pair_args.corpus, "The corpus the queries were generated from")->required();
    pair->add_option("--out", pair_args.out, "Benchmark file to write")->required();
    add_provider_flags(*pair, pair_args.provider);

    BuildIndexArgs bi_args;
    auto* build_index = app.add_subcommand("build-index", "Embed paired queries into a retrieval index");
    build_index->add_option("--pairs", bi_args.pairs, "Benchmark file with paired queries")->required();
    build_index->add_option("--out", bi_args.out, "Index file to write")->required();
    build_index->add_option("--embedder", bi_args.embedder, "hashing or http")->check(CLI::IsMember({"hashing", "http"}));
    build_index->add_option("--dim", bi_args.dim, "Hashing embedder dimension")->check(kAtLeastOne);
    add_provider_flags(*build_index, bi_args.provider);

    SearchArgs search_args;
    auto* search = app.add_subcommand("search", "Answer an English request (or a rule file) over a corpus");
    search->add_option("request", search_args.nl, "What to look for, in English");
    search->add_option("--corpus", search_args.corpus, "Java source directory or corpus.json")->required();
    search->add_option("--index", search_args.index, "Retrieval index of example pairs");
    search->add_option("--rule", search_args.rule, "Run this rule file directly; no model involved");
    search->add_flag("--json", search_args.json, "One JSON object per match");
    search->add_flag("--verbose", search_args.verbose, "Show the translation trace");
    search->add_option("--k", search_args.k, "Examples retrieved for the prompt");
    search->add_option("--rounds", search_args.rounds, "Refinement rounds")->check(CLI::NonNegativeNumber);
    search->add_flag("--no-refine", search_args.no_refine, "Skip the construct-type check");
    search->add_flag("--docs", search_args.docs, "Add the clause reference to the prompt");
    search->add_flag("--no-comments", search_args.no_comments, "Show example rules without comments");
    add_provider_flags(*search, search_args.provider);

    EvalArgs eval_args;
    auto* evaluate = app.add_subcommand("eval", "Score a benchmark by recall, precision and F1");
    evaluate->add_option("--benchmark", eval_args.benchmark, "Benchmark file")->required();
    evaluate->add_option("--mode", eval_args.mode, "pipeline, llm-direct or vector")
        ->check(CLI::IsMember({"pipeline", "llm-direct", "vector"}));
    evaluate->add_option("--index", eval_args.index, "Retrieval index (pipeline mode)");
    evaluate->add_option("--granularity", eval_args.granularity, "line or method")
        ->check(CLI::IsMember({"line", "method"}));
    evaluate->add_option("--threshold", eval_args.thresholds, "Cosine thresholds (vector mode)")
        ->check(CLI::Range(-1.0, 1.0));
    evaluate->add_option("--ablate", eval_args.ablate,
                         "examples|docs|comments|refine=on|off, or sweep for one row per switch");
    evaluate->add_option("--out-dir", eval_args.out_dir, "Write report.json and report.txt here");
    evaluate->add_option("--k", eval_args.k, "Examples retrieved per prompt");
    evaluate->add_option("--rounds", eval_args.rounds, "Refinement rounds")->check(CLI::NonNegativeNumber);
    evaluate->add_option("--max-calls", eval_args.max_calls, "Cap on queries x files in llm-direct mode");
    evaluate->add_flag("--force", eval_args.force, "Run llm-direct past the cap");
    evaluate->add_option("--limit-queries", eval_args.limit_queries, "Use only the first N queries");
    evaluate->add_option("--limit-files", eval_args.limit_files, "Use only the first N files");
    add_provider_flags(*evaluate, eval_args.provider);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kFailed;
    }

    std::vector<std::string> args(argv + 1, argv + argc);
    for (auto* f : {&pair_args.provider, &bi_args.provider, &search_args.provider, &eval_args.provider})
        apply_env(*f, args);

    try {
        if (*index) return cmd_index(index_args);
        if (*generate) return cmd_generate(gen_args);
        if (*pair) return cmd_pair(pair_args);
        if (*build_index) return cmd_build_index(bi_args);
        if (*search) return cmd_search(search_args);
        if (*evaluate) return cmd_eval(eval_args);
    } catch (const gen::BudgetExhausted& e) {
        std::cerr << "scs: " << e.what() << '\n';
        return kFailed;
    } catch (const std::exception& e) {
        std::cerr << "scs: " << e.what() << '\n';
        return kFailed;
    }
    return kFailed;
}

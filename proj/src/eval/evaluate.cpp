#include "scs/eval/evaluate.hpp"

#include <algorithm>
#include <cstdio>

#include "scs/error.hpp"
#include "scs/match/matcher.hpp"
#include "scs/syntax/node_kind.hpp"

namespace scs::eval {

EvalReport run_pipeline_eval(const Benchmark& b, const syntax::Corpus& corpus, const nl::RagIndex& index,
                             nl::Embedder& embedder, nl::ChatProvider& llm, const PipelineOptions& opts) {
    EvalReport report;
    report.method = "pipeline";
    report.model = llm.tag();
    report.granularity = opts.granularity;
    for (const auto& q : b.queries) {
        std::vector<Location> pred;
        std::string error;
        nl::TranslationTrace trace;
        try {
            nl::Translation t = nl::translate(q.nl, index, embedder, llm, opts.translate);
            if (opts.refine) {
                try {
                    nl::refine(q.nl, t, index, embedder, llm, opts.translate, opts.max_rounds);
                } catch (const ProviderError& e) {
                    // Keep the unrefined query.
                    t.trace.failure = std::string("refinement: ") + e.what();
                }
            }
            trace = t.trace;
            pred = nl::locations_of(match::execute(*t.query, corpus));
        } catch (const nl::FailedTranslation& f) {
            trace = f.trace();
            error = f.what();
        } catch (const Error& e) {
            error = e.what();
        }
        report.prompt_tokens += trace.prompt_tokens;
        report.completion_tokens += trace.completion_tokens;
        QueryScore s = score_query(q.id, q.gold, pred, opts.granularity, corpus);
        s.error = std::move(error);
        report.scores.push_back(std::move(s));
    }
    report.finish();
    return report;
}

EvalReport baseline_llm_direct(const Benchmark& b, const syntax::Corpus& corpus, nl::ChatProvider& llm,
                               const DirectOptions& opts) {
    std::size_t calls = b.queries.size() * corpus.files().size();
    if (calls > opts.max_calls && !opts.force)
        throw BudgetRefused("direct search needs " + std::to_string(calls) + " model calls (" +
                            std::to_string(b.queries.size()) + " queries x " + std::to_string(corpus.files().size()) +
                            " files), over the cap of " + std::to_string(opts.max_calls) +
                            "; narrow the benchmark or force it");
    EvalReport report;
    report.method = "llm-direct";
    report.model = llm.tag();
    report.granularity = opts.granularity;
    const std::string system = nl::locate_system_prompt();
    for (const auto& q : b.queries) {
        std::vector<Location> pred;
        std::size_t failed_calls = 0;
        for (const auto& f : corpus.files()) {
            nl::LlmRequest req{nl::Task::locate, system, nl::locate_user_prompt(q.nl, f.path, f.text()), 0.0, q.id};
            try {
                nl::LlmResponse r = llm.complete(req);
                report.prompt_tokens += r.prompt_tokens;
                report.completion_tokens += r.completion_tokens;
                for (auto line : nl::parse_line_answer(r.text))
                    if (line >= 1 && line <= f.tree->line_count()) pred.push_back({f.path, line});
            } catch (const ProviderError&) {
                ++failed_calls;
            }
        }
        std::sort(pred.begin(), pred.end());
        QueryScore s = score_query(q.id, q.gold, pred, opts.granularity, corpus);
        if (failed_calls) s.error = std::to_string(failed_calls) + " provider call(s) failed";
        report.scores.push_back(std::move(s));
    }
    report.finish();
    return report;
}

VectorSearch::VectorSearch(const syntax::Corpus& corpus, nl::Embedder& embedder)
    : corpus_(corpus), embedder_(embedder) {
    for (const auto& f : corpus.files()) {
        const auto& tree = *f.tree;
        for (syntax::NodeId id = 0; id < tree.size(); ++id) {
            if (!syntax::is_method_like(tree.node(id).kind)) continue;
            auto v = embedder.embed(tree.text(id));
            nl::normalize(v);
            chunks_.push_back({{f.path, tree.span(id).start_line}, std::move(v)});
        }
    }
}

std::vector<Location> VectorSearch::search(std::string_view nl, double threshold) const {
    auto q = embedder_.embed(nl);
    std::vector<Location> out;
    for (const auto& c : chunks_)
        if (nl::cosine(q, c.vector) >= threshold) out.push_back(c.start);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

EvalReport VectorSearch::evaluate(const Benchmark& b, double threshold) const {
    EvalReport report;
    char buf[32];
    std::snprintf(buf, sizeof buf, "vector T=%.2f", threshold);
    report.method = buf;
    report.model = embedder_.tag();
    report.granularity = Granularity::method;
    for (const auto& q : b.queries)
        report.scores.push_back(score_query(q.id, q.gold, search(q.nl, threshold), Granularity::method, corpus_));
    report.finish();
    return report;
}

EvalReport baseline_vector_search(const Benchmark& b, const syntax::Corpus& corpus, nl::Embedder& embedder,
                                  double threshold) {
    return VectorSearch(corpus, embedder).evaluate(b, threshold);
}

}  // namespace scs::eval

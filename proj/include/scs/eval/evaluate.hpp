#ifndef SCS_EVAL_EVALUATE_HPP
#define SCS_EVAL_EVALUATE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "scs/eval/benchmark.hpp"
#include "scs/eval/metrics.hpp"
#include "scs/nl/provider.hpp"
#include "scs/nl/rag.hpp"
#include "scs/nl/translate.hpp"

namespace scs::eval {

struct PipelineOptions {
    nl::TranslateOptions translate;
    bool refine = true;
    int max_rounds = 2;
    Granularity granularity = Granularity::line;
};

// Translate, refine, execute and score each query. Failed translations and
// provider errors score as empty predictions.
EvalReport run_pipeline_eval(const Benchmark& b, const syntax::Corpus& corpus, const nl::RagIndex& index,
                             nl::Embedder& embedder, nl::ChatProvider& llm, const PipelineOptions& opts);

struct DirectOptions {
    std::size_t max_calls = 500;  // queries x files
    bool force = false;
    Granularity granularity = Granularity::line;
};

// The model reads every file for every query and lists matching lines.
// Throws BudgetRefused when queries x files exceeds max_calls without force.
EvalReport baseline_llm_direct(const Benchmark& b, const syntax::Corpus& corpus, nl::ChatProvider& llm,
                               const DirectOptions& opts);

// Method-level chunks embedded once, scored against any threshold.
class VectorSearch {
  public:
    VectorSearch(const syntax::Corpus& corpus, nl::Embedder& embedder);

    // Methods whose cosine with the request is at least the threshold.
    std::vector<Location> search(std::string_view nl, double threshold) const;
    EvalReport evaluate(const Benchmark& b, double threshold) const;
    std::size_t chunk_count() const { return chunks_.size(); }

  private:
    struct Chunk {
        Location start;
        std::vector<double> vector;
    };
    const syntax::Corpus& corpus_;
    nl::Embedder& embedder_;
    std::vector<Chunk> chunks_;
};

EvalReport baseline_vector_search(const Benchmark& b, const syntax::Corpus& corpus, nl::Embedder& embedder,
                                  double threshold);

}  // namespace scs::eval

#endif  // SCS_EVAL_EVALUATE_HPP

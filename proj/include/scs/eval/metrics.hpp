#ifndef SCS_EVAL_METRICS_HPP
#define SCS_EVAL_METRICS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "scs/nl/paired.hpp"
#include "scs/syntax/corpus.hpp"

namespace scs::eval {

using nl::Location;

enum class Granularity { line, method };

std::string_view granularity_name(Granularity g);
std::optional<Granularity> granularity_from_name(std::string_view name);

struct QueryScore {
    std::string id;
    double recall = 0;
    double precision = 0;
    double f1 = 0;
    std::size_t tp_gold = 0;    // gold items hit by a prediction
    std::size_t positives = 0;  // gold items
    std::size_t tp_pred = 0;    // predictions that hit a gold item
    std::size_t predicted = 0;  // predictions
    std::string error;          // why the prediction is empty, if it failed
};

// Compares start locations. At method granularity each location stands for
// its innermost enclosing method; a line outside any method stands for
// itself. Empty gold and empty prediction score 1; empty gold with
// predictions scores recall 1, precision 0; a prediction missing for
// non-empty gold scores 0. Throws UnknownFile.
QueryScore score_query(std::string id, const std::vector<Location>& gold, const std::vector<Location>& pred,
                       Granularity g, const syntax::Corpus& corpus);

struct EvalReport {
    std::string method;
    std::string model;
    Granularity granularity = Granularity::line;
    std::vector<QueryScore> scores;
    double recall = 0;
    double precision = 0;
    double f1 = 0;
    std::size_t prompt_tokens = 0;
    std::size_t completion_tokens = 0;
    std::size_t failures = 0;

    // Fills the macro averages and the failure count from scores.
    void finish();
};

nlohmann::json report_json(const EvalReport& r);

// Aligned columns: method, model, granularity, Rec. (%), Prec. (%), F1 (%), tokens.
std::string report_table(const std::vector<EvalReport>& reports);

}  // namespace scs::eval

#endif  // SCS_EVAL_METRICS_HPP

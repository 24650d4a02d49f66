#include "scs/eval/metrics.hpp"

#include <algorithm>
#include <cstdio>
#include <nlohmann/json.hpp>
#include <set>
#include <sstream>
#include <tuple>

namespace scs::eval {

std::string_view granularity_name(Granularity g) { return g == Granularity::line ? "line" : "method"; }

std::optional<Granularity> granularity_from_name(std::string_view name) {
    if (name == "line") return Granularity::line;
    if (name == "method") return Granularity::method;
    return std::nullopt;
}

namespace {

// (file, first line, last line) of what a location stands for.
using Unit = std::tuple<std::string, std::uint32_t, std::uint32_t>;

std::set<Unit> units(const std::vector<Location>& locs, Granularity g, const syntax::Corpus& corpus) {
    std::set<Unit> out;
    for (const auto& l : locs) {
        if (g == Granularity::method) {
            if (auto m = syntax::enclosing_method(corpus, l.path, l.start_line)) {
                out.emplace(l.path, m->start_line, m->end_line);
                continue;
            }
        } else {
            corpus.file(l.path);  // unknown files are an error at either granularity
        }
        out.emplace(l.path, l.start_line, l.start_line);
    }
    return out;
}

}  // namespace

QueryScore score_query(std::string id, const std::vector<Location>& gold, const std::vector<Location>& pred,
                       Granularity g, const syntax::Corpus& corpus) {
    QueryScore s;
    s.id = std::move(id);
    auto gu = units(gold, g, corpus);
    auto pu = units(pred, g, corpus);
    s.positives = gu.size();
    s.predicted = pu.size();
    for (const auto& u : gu) s.tp_gold += pu.count(u);
    for (const auto& u : pu) s.tp_pred += gu.count(u);
    if (s.positives == 0) {
        s.recall = 1.0;
        s.precision = s.predicted == 0 ? 1.0 : 0.0;
    } else {
        s.recall = static_cast<double>(s.tp_gold) / static_cast<double>(s.positives);
        s.precision = s.predicted == 0 ? 0.0 : static_cast<double>(s.tp_pred) / static_cast<double>(s.predicted);
    }
    s.f1 = s.recall + s.precision > 0 ? 2 * s.recall * s.precision / (s.recall + s.precision) : 0.0;
    return s;
}

void EvalReport::finish() {
    recall = precision = f1 = 0;
    failures = 0;
    for (const auto& s : scores) {
        recall += s.recall;
        precision += s.precision;
        f1 += s.f1;
        if (!s.error.empty()) ++failures;
    }
    if (!scores.empty()) {
        auto n = static_cast<double>(scores.size());
        recall /= n;
        precision /= n;
        f1 /= n;
    }
}

nlohmann::json report_json(const EvalReport& r) {
    nlohmann::json per = nlohmann::json::array();
    for (const auto& s : r.scores) {
        nlohmann::json j{{"id", s.id},           {"recall", s.recall},       {"precision", s.precision},
                         {"f1", s.f1},           {"tp_gold", s.tp_gold},     {"positives", s.positives},
                         {"tp_pred", s.tp_pred}, {"predicted", s.predicted}};
        if (!s.error.empty()) j["error"] = s.error;
        per.push_back(std::move(j));
    }
    return {{"method", r.method},
            {"model", r.model},
            {"granularity", granularity_name(r.granularity)},
            {"queries", r.scores.size()},
            {"recall", r.recall},
            {"precision", r.precision},
            {"f1", r.f1},
            {"failures", r.failures},
            {"prompt_tokens", r.prompt_tokens},
            {"completion_tokens", r.completion_tokens},
            {"scores", per}};
}

std::string report_table(const std::vector<EvalReport>& reports) {
    std::vector<std::vector<std::string>> rows{
        {"Method", "Model", "Granularity", "Rec. (%)", "Prec. (%)", "F1 (%)", "Prompt tok.", "Compl. tok."}};
    auto pct = [](double v) {
        char buf[16];
        std::snprintf(buf, sizeof buf, "%.1f", 100.0 * v);
        return std::string(buf);
    };
    for (const auto& r : reports)
        rows.push_back({r.method, r.model, std::string(granularity_name(r.granularity)), pct(r.recall),
                        pct(r.precision), pct(r.f1), std::to_string(r.prompt_tokens),
                        std::to_string(r.completion_tokens)});
    std::vector<std::size_t> width(rows[0].size(), 0);
    for (const auto& row : rows)
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    std::ostringstream out;
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            bool numeric = i >= 3;
            std::string pad(width[i] - row[i].size(), ' ');
            if (i) out << "  ";
            out << (numeric ? pad + row[i] : row[i] + (i + 1 < row.size() ? pad : ""));
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace scs::eval

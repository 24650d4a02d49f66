#include "scs/nl/mock.hpp"

#include <algorithm>
#include <sstream>

#include "scs/error.hpp"
#include "scs/match/matcher.hpp"
#include "scs/nl/translate.hpp"

namespace scs::nl {

match::Query context_anchored(const match::Query& q) {
    auto inside = std::find_if(q.clauses.begin(), q.clauses.end(),
                               [](const match::Clause& c) { return c.kind == match::ClauseKind::pattern_inside; });
    if (inside == q.clauses.end()) return q;
    match::Query out;
    out.id = q.id;
    out.message = q.message;
    out.clauses.push_back({match::ClauseKind::pattern, inside->patterns, {}});
    for (auto it = q.clauses.begin(); it != q.clauses.end(); ++it)
        if (it != inside && it->kind == match::ClauseKind::pattern_inside) out.clauses.push_back(*it);
    return out;
}

MockProvider::MockProvider(Mode mode, const std::vector<PairedQuery>& key) : mode_(mode) {
    for (const auto& p : key) {
        Answer a{p.id, match::render_rule(p.dsl), match::render_rule(context_anchored(p.dsl)),
                 std::string(syntax::construct_name(p.target_type)), p.gold};
        by_nl_.emplace(p.nl, std::move(a));
        nl_by_id_.emplace(p.id, p.nl);
    }
}

MockProvider::Mode MockProvider::mode_from_name(std::string_view name) {
    if (name == "template") return Mode::template_nl;
    if (name == "echo-gold") return Mode::echo_gold;
    if (name == "fault-inject") return Mode::fault_inject;
    if (name == "first-hit") return Mode::first_hit;
    if (name == "fail") return Mode::fail;
    throw ConfigError("unknown mock mode '" + std::string(name) +
                      "' (expected template, echo-gold, fault-inject, first-hit or fail)");
}

std::string MockProvider::tag() const {
    switch (mode_) {
    case Mode::template_nl: return "mock-template";
    case Mode::echo_gold: return "mock-echo-gold";
    case Mode::fault_inject: return "mock-fault-inject";
    case Mode::first_hit: return "mock-first-hit";
    case Mode::fail: return "mock-fail";
    }
    return "mock";
}

const MockProvider::Answer* MockProvider::find(std::string_view nl) const {
    if (mode_ == Mode::template_nl) return nullptr;
    auto it = by_nl_.find(nl);
    return it == by_nl_.end() ? nullptr : &it->second;
}

LlmResponse MockProvider::complete(const LlmRequest& req) {
    if (mode_ == Mode::fail) throw ProviderError("mock provider configured to fail");
    std::string text;
    switch (req.task) {
    case Task::describe: text = describe(req); break;
    case Task::translate: text = translate(req); break;
    case Task::classify: text = classify(req); break;
    case Task::locate: text = locate(req); break;
    }
    LlmResponse r;
    r.prompt_tokens = estimate_tokens(req.system) + estimate_tokens(req.user);
    r.completion_tokens = estimate_tokens(text);
    r.text = std::move(text);
    return r;
}

std::string MockProvider::describe(const LlmRequest& req) const {
    auto rule = tagged(req.user, "rule");
    if (!rule) return "I cannot find the rule.";
    match::Query q = match::compile_query(*rule);
    std::string nl;
    if (auto it = nl_by_id_.find(q.id); mode_ != Mode::template_nl && it != nl_by_id_.end())
        nl = it->second;
    else
        nl = template_nl(q);
    return "Reasoning: rendered from the rule structure.\n<nl_query>" + nl + "</nl_query>";
}

std::string MockProvider::translate(const LlmRequest& req) const {
    std::string nl = tagged(req.user, "query").value_or("");
    if (const Answer* a = find(nl)) {
        bool feedback = req.user.find(kFeedbackMarker) != std::string::npos;
        const std::string& rule = mode_ == Mode::fault_inject && !feedback ? a->fault_rule : a->rule;
        return "```yaml\n" + rule + "```";
    }
    // No key for this request: reuse the first example's rule.
    auto start = req.user.find("```yaml\n");
    if (start == std::string::npos) return "I do not know how to write this rule.";
    auto end = req.user.find("```", start + 8);
    return req.user.substr(start, end == std::string::npos ? std::string::npos : end + 3 - start);
}

std::string MockProvider::classify(const LlmRequest& req) const {
    std::string nl = tagged(req.user, "query").value_or("");
    if (const Answer* a = find(nl)) return "<construct_type>" + a->type + "</construct_type>";
    std::string lower;
    for (char c : nl) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    std::optional<syntax::ConstructType> best;
    std::size_t best_pos = std::string::npos;
    for (auto t : syntax::all_construct_types()) {
        auto p = lower.find(construct_phrase(t, false));
        if (p != std::string::npos && p < best_pos) {
            best = t;
            best_pos = p;
        }
    }
    if (!best) return "I am not sure.";
    return "<construct_type>" + std::string(syntax::construct_name(*best)) + "</construct_type>";
}

std::string MockProvider::locate(const LlmRequest& req) const {
    std::string nl = tagged(req.user, "query").value_or("");
    std::string path;
    const std::string open = "<file path=\"";
    if (auto b = req.user.find(open); b != std::string::npos) {
        b += open.size();
        path = req.user.substr(b, req.user.find('"', b) - b);
    }
    std::ostringstream out;
    out << "```\n";
    if (const Answer* a = find(nl)) {
        for (const auto& g : a->gold) {
            if (g.path != path) continue;
            out << g.start_line << '\n';
            if (mode_ == Mode::first_hit) break;
        }
    }
    out << "```";
    return out.str();
}

}  // namespace scs::nl

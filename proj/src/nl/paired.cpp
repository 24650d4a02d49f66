#include "scs/nl/paired.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>

#include "scs/error.hpp"

namespace scs::nl {

using syntax::ConstructType;

std::vector<Location> locations_of(const std::vector<match::Match>& matches) {
    std::vector<Location> out;
    out.reserve(matches.size());
    for (const auto& m : matches) out.push_back({m.span.file_id, m.span.start_line});
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

nlohmann::json paired_to_json(const PairedQuery& p) {
    nlohmann::json gold = nlohmann::json::array();
    for (const auto& g : p.gold) gold.push_back({{"path", g.path}, {"start_line", g.start_line}});
    return {{"id", p.id},
            {"nl", p.nl},
            {"rule", match::render_rule(p.dsl)},
            {"description", p.description},
            {"target_type", syntax::construct_name(p.target_type)},
            {"gold", gold}};
}

PairedQuery paired_from_json(const nlohmann::json& j) {
    PairedQuery p;
    try {
        p.id = j.at("id").get<std::string>();
        p.nl = j.value("nl", "");
        p.dsl = match::compile_query(j.at("rule").get<std::string>());
        p.description = j.value("description", "");
        auto type = syntax::construct_from_name(j.at("target_type").get<std::string>());
        if (!type) throw BenchmarkError("query " + p.id + ": unknown target type " + j.at("target_type").dump());
        p.target_type = *type;
        for (const auto& g : j.at("gold"))
            p.gold.push_back({g.at("path").get<std::string>(), g.at("start_line").get<std::uint32_t>()});
    } catch (const nlohmann::json::exception& e) {
        throw BenchmarkError("malformed query entry" + (p.id.empty() ? "" : " " + p.id) + ": " + e.what());
    }
    std::sort(p.gold.begin(), p.gold.end());
    return p;
}

std::string construct_phrase(ConstructType t, bool plural) {
    std::string s;
    switch (t) {
    case ConstructType::Literal: s = "literal"; break;
    case ConstructType::Variable: s = "variable"; break;
    case ConstructType::MethodCall: s = "method call"; break;
    case ConstructType::Operator: s = "operator"; break;
    case ConstructType::IfStatement: s = "if statement"; break;
    case ConstructType::ForLoop: s = "for loop"; break;
    case ConstructType::WhileLoop: s = "while loop"; break;
    case ConstructType::ContinueStatement: s = "continue statement"; break;
    case ConstructType::BreakStatement: s = "break statement"; break;
    case ConstructType::ReturnStatement: s = "return statement"; break;
    case ConstructType::TryStatement: s = "try statement"; break;
    case ConstructType::SwitchStatement: s = "switch statement"; break;
    case ConstructType::VariableDeclaration: s = "variable declaration"; break;
    case ConstructType::MethodDeclaration: s = "method declaration"; break;
    case ConstructType::ClassDeclaration: s = "class declaration"; break;
    }
    if (plural) s += 's';
    return s;
}

namespace {

std::optional<ConstructType> pattern_type(const match::Pattern& p) {
    match::Query single;
    single.clauses.push_back({match::ClauseKind::pattern, {p}, {}});
    try {
        return match::anchor_construct_type(single);
    } catch (const Error&) {
        return std::nullopt;
    }
}

std::string quoted(const match::Pattern& p) { return "`" + match::normalize_pattern_text(p) + "`"; }

std::string with_article(const std::string& phrase) {
    bool vowel = !phrase.empty() && std::string_view("aeiou").find(phrase.front()) != std::string_view::npos;
    return (vowel ? "an " : "a ") + phrase;
}

// `continue;` or `break;` without a label: the construct name says it all.
bool is_bare_jump(const match::Pattern& p) {
    const auto& n = p.tree().node(p.root());
    return (n.kind == syntax::NodeKind::continue_statement || n.kind == syntax::NodeKind::break_statement) &&
           n.children.empty();
}

std::string template_with_context(std::string out, const match::Query& q) {
    for (const auto& c : q.clauses) {
        if (c.kind == match::ClauseKind::pattern_inside) {
            auto t = pattern_type(c.patterns.front());
            out += " inside " + (t ? with_article(construct_phrase(*t, false)) : std::string("code")) + " like " +
                   quoted(c.patterns.front());
        } else if (c.kind == match::ClauseKind::pattern_not) {
            out += " except those matching " + quoted(c.patterns.front());
        }
    }
    return out;
}

}  // namespace

void annotate(match::Query& q) {
    for (auto& c : q.clauses) {
        switch (c.kind) {
        case match::ClauseKind::pattern: {
            auto t = pattern_type(c.patterns.front());
            c.comment = t ? "each match is " + with_article(construct_phrase(*t, false))
                          : "each match is a code fragment of this shape";
            break;
        }
        case match::ClauseKind::pattern_inside: {
            auto t = pattern_type(c.patterns.front());
            c.comment = "only matches inside " + (t ? with_article(construct_phrase(*t, false)) : std::string("this context")) +
                        "; `...` stands for the matched code";
            break;
        }
        case match::ClauseKind::pattern_not:
            c.comment = "drops matches that also fit this pattern";
            break;
        case match::ClauseKind::pattern_either:
            c.comment = "a match of any alternative counts";
            break;
        }
    }
}

std::string template_nl(const match::Query& q) {
    std::string what = "code fragments";
    try {
        what = construct_phrase(match::anchor_construct_type(q), true);
    } catch (const Error&) {
    }
    const auto& anchor = q.anchor();
    std::string out = "Find all " + what;
    if (anchor.patterns.size() == 1 && is_bare_jump(anchor.patterns.front())) return template_with_context(out, q);
    out += " matching ";
    for (std::size_t i = 0; i < anchor.patterns.size(); ++i) {
        if (i) out += " or ";
        out += quoted(anchor.patterns[i]);
    }
    return template_with_context(out, q);
}

}  // namespace scs::nl

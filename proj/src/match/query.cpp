#include "scs/match/query.hpp"

#include <yaml-cpp/yaml.h>

#include <sstream>

#include "scs/error.hpp"
#include "scs/syntax/parser.hpp"

namespace scs::match {

namespace {

std::string trim_block(std::string s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
        s.pop_back();
    std::size_t lead = 0;
    while (lead < s.size() && (s[lead] == '\n' || s[lead] == '\r')) ++lead;
    return s.substr(lead);
}

std::string scalar(const YAML::Node& n, std::string_view what) {
    if (!n.IsScalar()) throw RuleSyntaxError(std::string(what) + " must be a string");
    return n.as<std::string>();
}

Clause read_clause(ClauseKind kind, const YAML::Node& payload) {
    Clause c{kind, {}, {}};
    if (kind != ClauseKind::pattern_either) {
        c.patterns.emplace_back(trim_block(scalar(payload, clause_key(kind))));
        return c;
    }
    if (!payload.IsSequence() || payload.size() == 0)
        throw RuleSyntaxError("pattern-either needs a non-empty list");
    for (const auto& item : payload) {
        if (item.IsScalar()) {
            c.patterns.emplace_back(trim_block(item.as<std::string>()));
        } else if (item.IsMap() && item.size() == 1 && item["pattern"]) {
            c.patterns.emplace_back(trim_block(scalar(item["pattern"], "pattern")));
        } else {
            throw RuleSyntaxError("pattern-either items must be patterns");
        }
    }
    return c;
}

void read_clause_map(const YAML::Node& map, std::vector<Clause>& out) {
    for (const auto& kv : map) {
        auto key = kv.first.as<std::string>();
        auto kind = clause_from_key(key);
        if (!kind) throw RuleSyntaxError("unknown clause '" + key + "'");
        out.push_back(read_clause(*kind, kv.second));
    }
}

Query read_rule(const YAML::Node& rule) {
    if (!rule.IsMap()) throw RuleSyntaxError("a rule must be a mapping");
    Query q;
    for (const auto& kv : rule) {
        auto key = kv.first.as<std::string>();
        const auto& value = kv.second;
        if (key == "id") {
            q.id = scalar(value, "id");
        } else if (key == "message") {
            q.message = trim_block(scalar(value, "message"));
        } else if (key == "languages" || key == "severity" || key == "metadata") {
            continue;
        } else if (key == "pattern" || key == "pattern-either") {
            q.clauses.push_back(read_clause(*clause_from_key(key), value));
        } else if (key == "patterns") {
            if (value.IsSequence()) {
                for (const auto& item : value) {
                    if (!item.IsMap()) throw RuleSyntaxError("patterns entries must be mappings");
                    read_clause_map(item, q.clauses);
                }
            } else if (value.IsMap()) {
                read_clause_map(value, q.clauses);
            } else {
                throw RuleSyntaxError("patterns must be a list");
            }
        } else {
            throw RuleSyntaxError("unknown rule key '" + key + "'");
        }
    }
    return q;
}

void emit_block(std::ostringstream& out, const std::string& text, const std::string& indent) {
    out << "|\n";
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        if (line.empty())
            out << "\n";
        else
            out << indent << line << "\n";
    }
}

}  // namespace

std::string_view clause_key(ClauseKind k) {
    switch (k) {
    case ClauseKind::pattern:
        return "pattern";
    case ClauseKind::pattern_inside:
        return "pattern-inside";
    case ClauseKind::pattern_not:
        return "pattern-not";
    case ClauseKind::pattern_either:
        return "pattern-either";
    }
    return "pattern";
}

std::optional<ClauseKind> clause_from_key(std::string_view key) {
    for (auto k : {ClauseKind::pattern, ClauseKind::pattern_inside, ClauseKind::pattern_not,
                   ClauseKind::pattern_either})
        if (clause_key(k) == key) return k;
    return std::nullopt;
}

Pattern::Pattern(std::string text)
    : text_(std::move(text)), tree_(syntax::parse_pattern(text_)) {}

const Clause& Query::anchor() const {
    for (const auto& c : clauses)
        if (c.kind == ClauseKind::pattern || c.kind == ClauseKind::pattern_either) return c;
    throw AnchorError("query has no pattern or pattern-either clause");
}

Clause& Query::anchor() {
    return const_cast<Clause&>(static_cast<const Query&>(*this).anchor());
}

void validate(const Query& q) {
    int anchors = 0;
    for (const auto& c : q.clauses)
        if (c.kind == ClauseKind::pattern || c.kind == ClauseKind::pattern_either) ++anchors;
    if (anchors == 0) throw AnchorError("query has no pattern or pattern-either clause");
    if (anchors > 1) throw AnchorError("query has more than one pattern or pattern-either clause");
}

Query compile_query(std::string_view rule_text) {
    YAML::Node doc;
    try {
        doc = YAML::Load(std::string(rule_text));
    } catch (const YAML::Exception& e) {
        throw RuleSyntaxError(std::string("invalid YAML: ") + e.what());
    }
    if (!doc.IsMap()) throw RuleSyntaxError("rule file must be a mapping");
    Query q;
    try {
        if (doc["rules"]) {
            const auto& rules = doc["rules"];
            if (!rules.IsSequence() || rules.size() != 1)
                throw RuleSyntaxError("rules must be a list with exactly one rule");
            q = read_rule(rules[0]);
        } else {
            q = read_rule(doc);
        }
    } catch (const YAML::Exception& e) {
        throw RuleSyntaxError(std::string("malformed rule: ") + e.what());
    }
    validate(q);
    return q;
}

std::string render_rule(const Query& q, bool with_comments) {
    std::ostringstream out;
    out << "rules:\n";
    out << "  - id: " << q.id << "\n";
    out << "    languages: [java]\n";
    std::string message = q.message.empty() ? "structural match" : q.message;
    out << "    message: ";
    emit_block(out, message, "      ");
    out << "    patterns:\n";
    for (const auto& c : q.clauses) {
        if (with_comments && !c.comment.empty()) {
            std::istringstream lines(c.comment);
            std::string line;
            while (std::getline(lines, line)) out << "      # " << line << "\n";
        }
        out << "      - " << clause_key(c.kind) << ": ";
        if (c.kind != ClauseKind::pattern_either) {
            emit_block(out, c.patterns.front().text(), "          ");
            continue;
        }
        out << "\n";
        for (const auto& p : c.patterns) {
            out << "          - pattern: ";
            emit_block(out, p.text(), "              ");
        }
    }
    return out.str();
}

std::string normalize_pattern_text(const Pattern& p) {
    const auto& tree = p.tree();
    std::string out;
    for (std::size_t i = 0; i + 1 < tree.tokens().size(); ++i) {
        if (!out.empty()) out += ' ';
        out += tree.token_text(static_cast<std::uint32_t>(i));
    }
    return out;
}

std::string canonical_key(const Query& q) {
    std::string key;
    for (const auto& c : q.clauses) {
        key += clause_key(c.kind);
        for (const auto& p : c.patterns) {
            key += '\x1f';
            key += normalize_pattern_text(p);
        }
        key += '\x1e';
    }
    return key;
}

}  // namespace scs::match

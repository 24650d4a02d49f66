#ifndef SCS_MATCH_QUERY_HPP
#define SCS_MATCH_QUERY_HPP

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scs/syntax/syntax_tree.hpp"

namespace scs::match {

enum class ClauseKind { pattern, pattern_inside, pattern_not, pattern_either };

std::string_view clause_key(ClauseKind k);  // "pattern", "pattern-inside", ...
std::optional<ClauseKind> clause_from_key(std::string_view key);

// A parsed pattern fragment. The tree is shared so queries copy cheaply.
class Pattern {
  public:
    // Throws PatternParseError.
    explicit Pattern(std::string text);

    const std::string& text() const { return text_; }
    const syntax::SyntaxTree& tree() const { return *tree_; }
    syntax::NodeId root() const { return tree_->root(); }

  private:
    std::string text_;
    std::shared_ptr<const syntax::SyntaxTree> tree_;
};

struct Clause {
    ClauseKind kind;
    std::vector<Pattern> patterns;  // exactly one unless kind is pattern_either
    std::string comment;            // optional annotation rendered as a YAML comment
};

struct Query {
    std::string id = "rule";
    std::string message;
    std::vector<Clause> clauses;

    // The single pattern or pattern-either clause.
    const Clause& anchor() const;
    Clause& anchor();
};

// Throws RuleSyntaxError, PatternParseError, AnchorError.
Query compile_query(std::string_view rule_text);

// Checks the one-positive-anchor rule. Throws AnchorError.
void validate(const Query& q);

// Rule file text; compile_query(render_rule(q)) reproduces q.
std::string render_rule(const Query& q, bool with_comments = false);

// Identity of a query for deduplication: clause kinds plus token-normalized
// pattern text. The id and message do not take part.
std::string canonical_key(const Query& q);

// Pattern text with runs of whitespace and comments collapsed to one space.
std::string normalize_pattern_text(const Pattern& p);

}  // namespace scs::match

#endif  // SCS_MATCH_QUERY_HPP

#ifndef SCS_MATCH_MATCHER_HPP
#define SCS_MATCH_MATCHER_HPP

#include <string>
#include <utility>
#include <vector>

#include "scs/match/query.hpp"
#include "scs/syntax/constructs.hpp"
#include "scs/syntax/corpus.hpp"

namespace scs::match {

// Metavariable name to the code node it is bound to, sorted by name.
using Binding = std::vector<std::pair<std::string, syntax::NodeId>>;

struct PatternHit {
    syntax::NodeId anchor;
    Binding bindings;
};

// Every (node, binding) under root that the pattern unifies with, in node
// order. A node with several distinct binding solutions appears once per
// solution.
std::vector<PatternHit> match_pattern(const Pattern& p, const syntax::SyntaxTree& code,
                                      syntax::NodeId root);
std::vector<PatternHit> match_pattern(const Pattern& p, const syntax::SyntaxTree& code);

// Whether p unifies with exactly this node, extending the given binding.
bool unifies_at(const Pattern& p, const syntax::SyntaxTree& code, syntax::NodeId node,
                const Binding& seed = {});

struct Match {
    const syntax::SyntaxTree* tree = nullptr;
    syntax::NodeId anchor = syntax::kNoNode;
    syntax::Span span;
    Binding bindings;

    const std::string& path() const { return span.file_id; }
    syntax::AstNode anchor_node() const { return {tree, anchor}; }
    std::string binding_text(const std::string& name) const;
};

// Match identity: anchor span plus the spans of the bound nodes.
bool same_match(const Match& a, const Match& b);
bool match_less(const Match& a, const Match& b);

std::vector<Match> execute(const Query& q, const syntax::Corpus& corpus);
std::vector<Match> execute(const Query& q, const syntax::SyntaxTree& tree);

// Type of the anchor pattern's root. Throws UntypedTarget, AmbiguousTarget.
syntax::ConstructType anchor_construct_type(const Query& q);

// {"rule_id","path","start_line","end_line","bindings":{...}}
std::string match_json(const Match& m, const std::string& rule_id);

}  // namespace scs::match

#endif  // SCS_MATCH_MATCHER_HPP

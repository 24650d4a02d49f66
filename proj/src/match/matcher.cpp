#include "scs/match/matcher.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include <nlohmann/json.hpp>

#include "scs/error.hpp"

namespace scs::match {

using syntax::Field;
using syntax::kNoNode;
using syntax::Node;
using syntax::NodeId;
using syntax::NodeKind;
using syntax::SyntaxTree;

namespace {

using Cont = std::function<bool()>;

bool header_ellipsis(const SyntaxTree& p, NodeId for_node) {
    const auto& kids = p.node(for_node).children;
    return !kids.empty() && p.node(kids.front()).kind == NodeKind::ellipsis &&
           p.node(kids.front()).field == Field::none;
}

bool kinds_compatible(const SyntaxTree& p, NodeId pn, NodeKind code_kind) {
    NodeKind pk = p.node(pn).kind;
    if (pk == code_kind) return true;
    if (pk == NodeKind::local_variable_declaration && code_kind == NodeKind::field_declaration) return true;
    return pk == NodeKind::for_statement && code_kind == NodeKind::enhanced_for_statement &&
           header_ellipsis(p, pn);
}

bool has_modifiers(const SyntaxTree& t, const Node& n) {
    for (NodeId c : n.children)
        if (t.node(c).kind == NodeKind::modifiers) return true;
    return false;
}

// Continuation-passing unifier. Each successful complete unification calls
// the continuation; a true result from it stops the search.
class Unifier {
  public:
    Unifier(const SyntaxTree& p, const SyntaxTree& c, Binding seed) : p_(p), c_(c), env_(std::move(seed)) {}

    const Binding& env() const { return env_; }

    bool node(NodeId pn, NodeId cn, const Cont& k) {
        const Node& pnode = p_.node(pn);
        const Node& cnode = c_.node(cn);
        if (pnode.kind == NodeKind::metavariable) return bind(pn, cn, k);
        if (pnode.kind == NodeKind::ellipsis) return k();
        if (!kinds_compatible(p_, pn, cnode.kind)) return false;
        if (pnode.op != cnode.op) return false;
        if (pnode.children.empty() || pnode.kind == NodeKind::modifiers) {
            if (!p_.same_tokens(pn, c_, cn)) return false;
            return k();
        }
        std::vector<NodeId> ckids;
        bool skip_mods = !has_modifiers(p_, pnode);
        for (NodeId c : cnode.children)
            if (!(skip_mods && c_.node(c).kind == NodeKind::modifiers)) ckids.push_back(c);
        return seq(pnode.children, 0, ckids, 0, k);
    }

  private:
    bool bind(NodeId pn, NodeId cn, const Cont& k) {
        if (!syntax::is_expression_like(c_.node(cn).kind)) return false;
        std::string name(p_.text(pn));
        for (const auto& [n, bound] : env_) {
            if (n != name) continue;
            if (!c_.same_tokens(bound, c_, cn)) return false;
            return k();
        }
        auto pos = std::lower_bound(env_.begin(), env_.end(), name,
                                    [](const auto& e, const std::string& s) { return e.first < s; });
        auto idx = pos - env_.begin();
        env_.insert(pos, {name, cn});
        bool stop = k();
        env_.erase(env_.begin() + idx);
        return stop;
    }

    bool seq(const std::vector<NodeId>& pk, std::size_t i, const std::vector<NodeId>& ck, std::size_t j,
             const Cont& k) {
        if (i == pk.size()) return j == ck.size() && k();
        NodeId pn = pk[i];
        if (p_.node(pn).kind == NodeKind::ellipsis) {
            // Adjacent ellipses match the same runs as one.
            while (i + 1 < pk.size() && p_.node(pk[i + 1]).kind == NodeKind::ellipsis) ++i;
            if (i + 1 == pk.size()) return k();
            for (std::size_t jj = j; jj <= ck.size(); ++jj)
                if (seq(pk, i + 1, ck, jj, k)) return true;
            return false;
        }
        if (j == ck.size()) return false;
        NodeId cn = ck[j];
        if (p_.node(pn).field != c_.node(cn).field) return false;
        return node(pn, cn, [&] { return seq(pk, i + 1, ck, j + 1, k); });
    }

    const SyntaxTree& p_;
    const SyntaxTree& c_;
    Binding env_;
};

bool root_may_match(const Pattern& p, const SyntaxTree& code, NodeId cn) {
    NodeKind pk = p.tree().node(p.root()).kind;
    if (pk == NodeKind::metavariable) return syntax::is_expression_like(code.node(cn).kind);
    return kinds_compatible(p.tree(), p.root(), code.node(cn).kind);
}

using BindingSpans = std::vector<std::pair<std::string, syntax::Span>>;

BindingSpans binding_spans(const SyntaxTree& tree, const Binding& b) {
    BindingSpans out;
    out.reserve(b.size());
    for (const auto& [name, id] : b) out.emplace_back(name, tree.span(id));
    return out;
}

}  // namespace

std::vector<PatternHit> match_pattern(const Pattern& p, const SyntaxTree& code, NodeId root) {
    std::vector<PatternHit> out;
    NodeId last = code.subtree_end(root);
    for (NodeId cn = root; cn <= last; ++cn) {
        if (!root_may_match(p, code, cn)) continue;
        Unifier u(p.tree(), code, {});
        std::set<BindingSpans> seen;
        u.node(p.root(), cn, [&] {
            if (seen.insert(binding_spans(code, u.env())).second) out.push_back({cn, u.env()});
            return false;
        });
    }
    return out;
}

std::vector<PatternHit> match_pattern(const Pattern& p, const SyntaxTree& code) {
    return match_pattern(p, code, code.root());
}

bool unifies_at(const Pattern& p, const SyntaxTree& code, NodeId node, const Binding& seed) {
    if (!root_may_match(p, code, node)) return false;
    Unifier u(p.tree(), code, seed);
    return u.node(p.root(), node, [] { return true; });
}

std::string Match::binding_text(const std::string& name) const {
    for (const auto& [n, id] : bindings)
        if (n == name) return std::string(tree->text(id));
    return {};
}

bool same_match(const Match& a, const Match& b) {
    return a.span == b.span && binding_spans(*a.tree, a.bindings) == binding_spans(*b.tree, b.bindings);
}

bool match_less(const Match& a, const Match& b) {
    if (a.span != b.span) return a.span < b.span;
    return binding_spans(*a.tree, a.bindings) < binding_spans(*b.tree, b.bindings);
}

std::vector<Match> execute(const Query& q, const SyntaxTree& tree) {
    validate(q);
    const Clause& anchor = q.anchor();
    std::vector<Match> candidates;
    std::set<syntax::Span> earlier_spans;
    for (const auto& p : anchor.patterns) {
        std::set<syntax::Span> these;
        for (auto& hit : match_pattern(p, tree)) {
            auto span = tree.span(hit.anchor);
            if (earlier_spans.count(span)) continue;
            these.insert(span);
            candidates.push_back(Match{&tree, hit.anchor, std::move(span), std::move(hit.bindings)});
        }
        earlier_spans.insert(these.begin(), these.end());
    }

    for (const auto& c : q.clauses) {
        if (candidates.empty()) break;
        if (c.kind == ClauseKind::pattern_inside) {
            std::vector<syntax::Span> outer;
            for (const auto& hit : match_pattern(c.patterns.front(), tree)) outer.push_back(tree.span(hit.anchor));
            std::erase_if(candidates, [&](const Match& m) {
                return std::none_of(outer.begin(), outer.end(),
                                    [&](const syntax::Span& s) { return s.strictly_contains(m.span); });
            });
        } else if (c.kind == ClauseKind::pattern_not) {
            std::erase_if(candidates, [&](const Match& m) {
                return unifies_at(c.patterns.front(), tree, m.anchor, m.bindings);
            });
        }
    }

    std::sort(candidates.begin(), candidates.end(), match_less);
    candidates.erase(std::unique(candidates.begin(), candidates.end(), same_match), candidates.end());
    return candidates;
}

std::vector<Match> execute(const Query& q, const syntax::Corpus& corpus) {
    std::vector<Match> out;
    for (const auto& f : corpus.files()) {
        auto part = execute(q, *f.tree);
        out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    // Files are stored sorted by path, so the concatenation is already in order.
    return out;
}

namespace {

syntax::ConstructType pattern_type(const Pattern& p) {
    const auto& t = p.tree();
    NodeId root = p.root();
    const auto& n = t.node(root);
    if (n.kind == NodeKind::expression_statement && n.children.size() == 1) root = n.children.front();
    NodeKind k = t.node(root).kind;
    if (k == NodeKind::metavariable || k == NodeKind::ellipsis)
        throw UntypedTarget("anchor pattern root is a hole: " + p.text());
    auto type = syntax::construct_type(t, root);
    if (!type) throw UntypedTarget("anchor pattern root '" + std::string(syntax::kind_name(k)) +
                                   "' is not a code construct");
    return *type;
}

}  // namespace

syntax::ConstructType anchor_construct_type(const Query& q) {
    const Clause& anchor = q.anchor();
    auto first = pattern_type(anchor.patterns.front());
    for (std::size_t i = 1; i < anchor.patterns.size(); ++i) {
        auto other = pattern_type(anchor.patterns[i]);
        if (other != first)
            throw AmbiguousTarget("pattern-either alternatives target " + std::string(syntax::construct_name(first)) +
                                  " and " + std::string(syntax::construct_name(other)));
    }
    return first;
}

std::string match_json(const Match& m, const std::string& rule_id) {
    nlohmann::json bindings = nlohmann::json::object();
    for (const auto& [name, id] : m.bindings) bindings[name] = std::string(m.tree->text(id));
    nlohmann::json j{{"rule_id", rule_id},
                     {"path", m.span.file_id},
                     {"start_line", m.span.start_line},
                     {"end_line", m.span.end_line},
                     {"bindings", bindings}};
    return j.dump();
}

}  // namespace scs::match

#include "oracle_matcher.hpp"

#include <algorithm>
#include <map>

namespace scs::testkit {

using syntax::Field;
using syntax::Node;
using syntax::NodeId;
using syntax::NodeKind;
using syntax::SyntaxTree;

namespace {

struct Checker {
    const SyntaxTree& p;
    const SyntaxTree& c;
    const std::map<std::string, NodeId>& sigma;
    const std::map<NodeId, std::string>& first_occurrence;  // pattern node -> metavariable

    bool tokens_equal(NodeId a, NodeId b) const {
        const Node& x = c.node(a);
        const Node& y = c.node(b);
        if (x.tok_end - x.tok_begin != y.tok_end - y.tok_begin) return false;
        for (std::uint32_t i = 0; i < x.tok_end - x.tok_begin; ++i)
            if (c.token_text(x.tok_begin + i) != c.token_text(y.tok_begin + i)) return false;
        return true;
    }

    bool pattern_code_tokens_equal(NodeId pn, NodeId cn) const {
        const Node& x = p.node(pn);
        const Node& y = c.node(cn);
        if (x.tok_end - x.tok_begin != y.tok_end - y.tok_begin) return false;
        for (std::uint32_t i = 0; i < x.tok_end - x.tok_begin; ++i)
            if (p.token_text(x.tok_begin + i) != c.token_text(y.tok_begin + i)) return false;
        return true;
    }

    bool kind_ok(NodeId pn, NodeKind ck) const {
        const Node& n = p.node(pn);
        if (n.kind == ck) return true;
        if (n.kind == NodeKind::local_variable_declaration && ck == NodeKind::field_declaration) return true;
        if (n.kind == NodeKind::for_statement && ck == NodeKind::enhanced_for_statement) {
            NodeId first = n.children.front();
            return p.node(first).kind == NodeKind::ellipsis && p.node(first).field == Field::none;
        }
        return false;
    }

    bool check(NodeId pn, NodeId cn) const {
        const Node& pnode = p.node(pn);
        const Node& cnode = c.node(cn);
        if (pnode.kind == NodeKind::metavariable) {
            if (!syntax::is_expression_like(cnode.kind)) return false;
            std::string name(p.text(pn));
            auto first = first_occurrence.find(pn);
            if (first != first_occurrence.end()) return sigma.at(name) == cn;
            return tokens_equal(sigma.at(name), cn);
        }
        if (pnode.kind == NodeKind::ellipsis) return true;
        if (!kind_ok(pn, cnode.kind) || pnode.op != cnode.op) return false;
        if (pnode.children.empty() || pnode.kind == NodeKind::modifiers) return pattern_code_tokens_equal(pn, cn);
        bool pattern_has_mods = false;
        for (NodeId k : pnode.children) pattern_has_mods |= p.node(k).kind == NodeKind::modifiers;
        std::vector<NodeId> kids;
        for (NodeId k : cnode.children)
            if (pattern_has_mods || c.node(k).kind != NodeKind::modifiers) kids.push_back(k);
        return sequence(pnode.children, 0, kids, 0);
    }

    bool sequence(const std::vector<NodeId>& ps, std::size_t i, const std::vector<NodeId>& cs, std::size_t j) const {
        if (i == ps.size()) return j == cs.size();
        if (p.node(ps[i]).kind == NodeKind::ellipsis) {
            for (std::size_t k = j; k <= cs.size(); ++k)
                if (sequence(ps, i + 1, cs, k)) return true;
            return false;
        }
        if (j == cs.size() || p.node(ps[i]).field != c.node(cs[j]).field) return false;
        return check(ps[i], cs[j]) && sequence(ps, i + 1, cs, j + 1);
    }
};

std::uint32_t depth(const SyntaxTree& t, NodeId id, NodeId top) {
    std::uint32_t d = 0;
    while (id != top) {
        id = t.node(id).parent;
        ++d;
    }
    return d;
}

}  // namespace

std::set<OracleMatch> oracle_matches(const match::Pattern& pat, const SyntaxTree& code) {
    const SyntaxTree& p = pat.tree();
    std::vector<std::string> names;
    std::vector<std::uint32_t> name_depth;
    std::map<NodeId, std::string> first;
    for (NodeId id = 0; id < p.size(); ++id) {
        if (p.node(id).kind != NodeKind::metavariable) continue;
        std::string name(p.text(id));
        if (std::find(names.begin(), names.end(), name) != names.end()) continue;
        names.push_back(name);
        name_depth.push_back(depth(p, id, p.root()));
        first.emplace(id, name);
    }

    std::set<OracleMatch> out;
    for (NodeId n = 0; n < code.size(); ++n) {
        // A pattern node at depth d lines up with a code node at depth d under the anchor:
        // ellipses only absorb siblings and every other pattern node consumes one code node.
        std::vector<std::vector<NodeId>> candidates(names.size());
        for (NodeId m = n; m <= code.subtree_end(n); ++m) {
            if (!syntax::is_expression_like(code.node(m).kind)) continue;
            std::uint32_t d = depth(code, m, n);
            for (std::size_t v = 0; v < names.size(); ++v)
                if (name_depth[v] == d) candidates[v].push_back(m);
        }
        std::vector<std::size_t> pick(names.size(), 0);
        bool empty = std::any_of(candidates.begin(), candidates.end(), [](const auto& c) { return c.empty(); });
        if (empty) continue;
        for (;;) {
            std::map<std::string, NodeId> sigma;
            for (std::size_t v = 0; v < names.size(); ++v) sigma[names[v]] = candidates[v][pick[v]];
            Checker ck{p, code, sigma, first};
            if (ck.check(p.root(), n)) {
                OracleMatch m{code.span(n), {}};
                for (const auto& [name, id] : sigma) m.bindings.emplace_back(name, code.span(id));
                out.insert(std::move(m));
            }
            std::size_t v = 0;
            while (v < names.size() && ++pick[v] == candidates[v].size()) pick[v++] = 0;
            if (v == names.size()) break;
        }
    }
    return out;
}

}  // namespace scs::testkit

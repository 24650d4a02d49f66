#include "program_gen.hpp"

#include <algorithm>
#include <map>
#include <vector>

#include "scs/syntax/node_kind.hpp"

namespace scs::testkit {

using syntax::NodeId;
using syntax::NodeKind;

namespace {

class Gen {
  public:
    explicit Gen(std::mt19937_64& rng) : rng_(rng) {}

    std::string program() {
        std::string out = "class C" + std::to_string(pick(3)) + " {\n";
        if (coin(0.5)) out += "    int " + var() + " = " + expr(1) + ";\n";
        int methods = 1 + pick(2);
        for (int m = 0; m < methods; ++m) {
            out += "    int m" + std::to_string(m) + "(int " + var() + ", int " + var() + ") {\n";
            int n = 1 + pick(4);
            for (int s = 0; s < n; ++s) out += stmt(2, 2);
            out += "        return " + expr(1) + ";\n    }\n";
        }
        return out + "}\n";
    }

  private:
    int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }
    bool coin(double p) { return std::bernoulli_distribution(p)(rng_); }
    std::string var() { return std::string(1, "abxy"[pick(4)]); }
    std::string indent(int d) { return std::string(static_cast<std::size_t>(d) * 4, ' '); }

    std::string atom() {
        switch (pick(4)) {
        case 0:
            return std::to_string(pick(3));
        case 1:
            return "f(" + var() + ")";
        default:
            return var();
        }
    }

    std::string expr(int depth) {
        if (depth <= 0 || coin(0.4)) return atom();
        switch (pick(4)) {
        case 0:
            return expr(depth - 1) + " + " + expr(depth - 1);
        case 1:
            return expr(depth - 1) + " * " + expr(depth - 1);
        case 2:
            return "g(" + expr(depth - 1) + ", " + expr(depth - 1) + ")";
        default:
            return "(" + expr(depth - 1) + ")";
        }
    }

    std::string cond() {
        static const char* ops[] = {"<", "==", ">", "!="};
        return expr(1) + " " + ops[pick(4)] + " " + expr(1);
    }

    std::string stmt(int d, int depth) {
        int choice = depth <= 0 ? pick(3) : pick(7);
        std::string in = indent(d);
        switch (choice) {
        case 0:
            return in + var() + " = " + expr(2) + ";\n";
        case 1:
            return in + var() + " += " + expr(1) + ";\n";
        case 2:
            return in + "h(" + expr(1) + ");\n";
        case 3:
            return in + "if (" + cond() + ") {\n" + stmt(d + 1, depth - 1) + in + "}\n";
        case 4:
            return in + "if (" + cond() + ") {\n" + stmt(d + 1, depth - 1) + in + "} else {\n" +
                   stmt(d + 1, depth - 1) + in + "}\n";
        case 5:
            return in + "for (int i = 0; i < " + expr(1) + "; i++) {\n" + stmt(d + 1, depth - 1) +
                   (coin(0.3) ? indent(d + 1) + "continue;\n" : "") + in + "}\n";
        default:
            return in + "while (" + cond() + ") {\n" + stmt(d + 1, depth - 1) + in + "}\n";
        }
    }

    std::mt19937_64& rng_;
};

bool statement_list_member(const syntax::SyntaxTree& t, NodeId id) {
    NodeId parent = t.node(id).parent;
    return parent != syntax::kNoNode && t.node(parent).kind == NodeKind::block;
}

bool argument(const syntax::SyntaxTree& t, NodeId id) {
    NodeId parent = t.node(id).parent;
    return parent != syntax::kNoNode && t.node(parent).kind == NodeKind::argument_list;
}

}  // namespace

std::string random_program(std::mt19937_64& rng) { return Gen(rng).program(); }

std::optional<std::string> random_pattern(const syntax::SyntaxTree& tree, std::mt19937_64& rng,
                                          std::size_t max_nodes) {
    std::vector<NodeId> roots;
    for (NodeId id = 0; id < tree.size(); ++id) {
        auto k = tree.node(id).kind;
        std::size_t size = tree.subtree_end(id) - id + 1;
        if (size > max_nodes) continue;
        if ((syntax::is_statement(k) && k != NodeKind::block) || k == NodeKind::binary_expression ||
            k == NodeKind::method_invocation || k == NodeKind::assignment_expression)
            roots.push_back(id);
    }
    if (roots.empty()) return std::nullopt;
    NodeId root = roots[std::uniform_int_distribution<std::size_t>(0, roots.size() - 1)(rng)];

    // Candidate holes below the root.
    std::vector<NodeId> holes;
    for (NodeId id = root + 1; id <= tree.subtree_end(root); ++id) {
        auto k = tree.node(id).kind;
        if (syntax::is_expression_like(k) || statement_list_member(tree, id) || argument(tree, id))
            holes.push_back(id);
    }
    std::shuffle(holes.begin(), holes.end(), rng);
    int want = std::uniform_int_distribution<int>(0, 4)(rng);
    std::vector<std::pair<NodeId, std::string>> chosen;
    int metavars = 0;
    std::map<std::string, std::string> names_by_text;
    for (NodeId h : holes) {
        if (static_cast<int>(chosen.size()) >= want) break;
        bool overlaps = std::any_of(chosen.begin(), chosen.end(), [&](const auto& c) {
            return tree.is_ancestor(c.first, h) || tree.is_ancestor(h, c.first);
        });
        if (overlaps) continue;
        bool expr_hole = syntax::is_expression_like(tree.node(h).kind) && !statement_list_member(tree, h);
        bool use_ellipsis = !expr_hole || std::bernoulli_distribution(0.25)(rng);
        if (!use_ellipsis && metavars >= 3) continue;
        if (use_ellipsis) {
            chosen.emplace_back(h, "...");
            continue;
        }
        // Same text gets the same name, so repeated names usually still match;
        // now and then a name is reused regardless to exercise inconsistency.
        std::string text(tree.text(h));
        std::string name;
        if (auto it = names_by_text.find(text); it != names_by_text.end()) {
            name = it->second;
        } else if (!names_by_text.empty() && std::bernoulli_distribution(0.1)(rng)) {
            name = names_by_text.begin()->second;
        } else if (names_by_text.size() < 3) {
            name = std::string("$") + "ABC"[names_by_text.size()];
            names_by_text.emplace(text, name);
        } else {
            continue;
        }
        ++metavars;
        chosen.emplace_back(h, name);
    }
    std::sort(chosen.begin(), chosen.end(),
              [&](const auto& a, const auto& b) { return tree.node(a.first).begin > tree.node(b.first).begin; });
    const auto& r = tree.node(root);
    std::string text(tree.text(root));
    for (const auto& [id, repl] : chosen) {
        const auto& n = tree.node(id);
        text.replace(n.begin - r.begin, n.end - n.begin, repl);
    }
    return text;
}

}  // namespace scs::testkit

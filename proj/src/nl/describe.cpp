#include "scs/nl/describe.hpp"

#include <sstream>
#include <string_view>

#include "scs/syntax/node_kind.hpp"

namespace scs::nl {
namespace {

using syntax::NodeId;
using syntax::NodeKind;

void render_node(const syntax::SyntaxTree& tree, NodeId id, int depth, std::ostringstream& out) {
    const auto& n = tree.node(id);
    out << std::string(2 * depth, ' ') << "- ";
    if (n.field != syntax::Field::none) out << syntax::field_name(n.field) << ": ";
    if (n.kind == NodeKind::ellipsis) {
        out << "...\n";
        return;
    }
    out << syntax::kind_name(n.kind);
    bool leaf_text = syntax::shows_text(n.kind) || (n.kind == NodeKind::modifiers && n.children.empty());
    if (leaf_text) out << ": '" << tree.text(id) << "'";
    out << '\n';
    for (NodeId c : n.children) render_node(tree, c, depth + 1, out);
}

std::string_view tag_stem(match::ClauseKind k) {
    switch (k) {
    case match::ClauseKind::pattern:
        return "pattern";
    case match::ClauseKind::pattern_inside:
        return "pattern_inside";
    case match::ClauseKind::pattern_not:
        return "pattern_not";
    case match::ClauseKind::pattern_either:
        return "pattern_either";
    }
    return "pattern";
}

void indent_lines(std::string_view text, std::ostringstream& out) {
    while (!text.empty() && (text.back() == '\n' || text.back() == ' ')) text.remove_suffix(1);
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        out << "    " << text.substr(pos, nl - pos) << '\n';
        pos = nl + 1;
    }
}

}  // namespace

std::string describe_pattern(const match::Pattern& p) {
    std::ostringstream out;
    render_node(p.tree(), p.root(), 0, out);
    return out.str();
}

std::string describe_query(const match::Query& q) {
    std::ostringstream out;
    for (const auto& clause : q.clauses) {
        std::string_view stem = tag_stem(clause.kind);
        for (const auto& p : clause.patterns) {
            out << "<semgrep_" << stem << ">\n";
            indent_lines(p.text(), out);
            out << "</semgrep_" << stem << ">\n";
            out << '<' << stem << "_description>\n" << describe_pattern(p) << "</" << stem
                << "_description>\n";
        }
    }
    return out.str();
}

}  // namespace scs::nl

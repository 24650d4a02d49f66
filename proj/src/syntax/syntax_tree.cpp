#include "scs/syntax/syntax_tree.hpp"

#include <algorithm>

namespace scs::syntax {

bool Span::contains(const Span& o) const {
    if (file_id != o.file_id) return false;
    auto start = std::pair{start_line, start_col};
    auto end = std::pair{end_line, end_col};
    return start <= std::pair{o.start_line, o.start_col} && std::pair{o.end_line, o.end_col} <= end;
}

SyntaxTree::SyntaxTree(std::string file_id, std::string source, std::vector<Token> tokens,
                       std::vector<Node> nodes, NodeId root)
    : file_id_(std::move(file_id)),
      source_(std::move(source)),
      tokens_(std::move(tokens)),
      nodes_(std::move(nodes)),
      root_(root) {
    line_starts_.push_back(0);
    for (std::uint32_t i = 0; i < source_.size(); ++i)
        if (source_[i] == '\n') line_starts_.push_back(i + 1);
    if (!source_.empty() && source_.back() == '\n') line_starts_.pop_back();

    subtree_last_.resize(nodes_.size());
    for (NodeId id = static_cast<NodeId>(nodes_.size()); id-- > 0;) {
        const auto& n = nodes_[id];
        subtree_last_[id] = n.children.empty() ? id : subtree_last_[n.children.back()];
    }
}

std::string_view SyntaxTree::text(NodeId id) const {
    const auto& n = nodes_[id];
    return std::string_view(source_).substr(n.begin, n.end - n.begin);
}

std::string_view SyntaxTree::token_text(std::uint32_t tok) const {
    const auto& t = tokens_[tok];
    return std::string_view(source_).substr(t.begin, t.end - t.begin);
}

std::uint32_t SyntaxTree::line_of(std::uint32_t byte) const {
    auto it = std::upper_bound(line_starts_.begin(), line_starts_.end(), byte);
    return static_cast<std::uint32_t>(it - line_starts_.begin());
}

std::uint32_t SyntaxTree::col_of(std::uint32_t byte) const {
    return byte - line_starts_[line_of(byte) - 1] + 1;
}

std::string_view SyntaxTree::line_text(std::uint32_t line) const {
    if (line == 0 || line > line_starts_.size()) return {};
    std::uint32_t b = line_starts_[line - 1];
    std::uint32_t e = line < line_starts_.size() ? line_starts_[line] : static_cast<std::uint32_t>(source_.size());
    while (e > b && (source_[e - 1] == '\n' || source_[e - 1] == '\r')) --e;
    return std::string_view(source_).substr(b, e - b);
}

Span SyntaxTree::span(NodeId id) const {
    const auto& n = nodes_[id];
    std::uint32_t last = n.end > n.begin ? n.end - 1 : n.begin;
    return Span{file_id_, line_of(n.begin), col_of(n.begin), line_of(last), col_of(last)};
}

bool SyntaxTree::same_tokens(NodeId a, const SyntaxTree& other, NodeId b) const {
    const auto& na = nodes_[a];
    const auto& nb = other.nodes_[b];
    if (na.tok_end - na.tok_begin != nb.tok_end - nb.tok_begin) return false;
    for (std::uint32_t i = 0; i < na.tok_end - na.tok_begin; ++i)
        if (token_text(na.tok_begin + i) != other.token_text(nb.tok_begin + i)) return false;
    return true;
}

AstNode AstNode::child_by_field(Field f) const {
    for (NodeId c : tree_->node(id_).children)
        if (tree_->node(c).field == f) return {tree_, c};
    return {};
}

}  // namespace scs::syntax

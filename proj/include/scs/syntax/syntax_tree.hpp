#ifndef SCS_SYNTAX_SYNTAX_TREE_HPP
#define SCS_SYNTAX_SYNTAX_TREE_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "scs/syntax/node_kind.hpp"

namespace scs::syntax {

using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = 0xffffffffu;

enum class TokenKind : std::uint8_t {
    identifier,
    keyword,
    integer,
    floating,
    character,
    string,
    text_block,
    punct,
    end,
};

struct Token {
    TokenKind kind;
    std::uint32_t begin;  // byte offsets into the source
    std::uint32_t end;
};

// 1-based positions; the end position is the last character of the range.
struct Span {
    std::string file_id;
    std::uint32_t start_line = 0;
    std::uint32_t start_col = 0;
    std::uint32_t end_line = 0;
    std::uint32_t end_col = 0;

    bool contains(const Span& other) const;
    bool strictly_contains(const Span& other) const { return contains(other) && *this != other; }
    bool contains_line(std::uint32_t line) const { return start_line <= line && line <= end_line; }

    auto operator<=>(const Span&) const = default;
};

struct Node {
    NodeKind kind;
    Field field = Field::none;  // label under the parent
    NodeId parent = kNoNode;
    std::uint32_t begin = 0;  // bytes
    std::uint32_t end = 0;
    std::uint32_t tok_begin = 0;
    std::uint32_t tok_end = 0;
    std::string op;  // operator spelling for operator nodes, otherwise empty
    std::vector<NodeId> children;
};

// An immutable parsed file or pattern fragment. Node ids follow preorder,
// so a node's id is smaller than every id in its subtree.
class SyntaxTree {
  public:
    SyntaxTree(std::string file_id, std::string source, std::vector<Token> tokens,
               std::vector<Node> nodes, NodeId root);

    const std::string& file_id() const { return file_id_; }
    const std::string& source() const { return source_; }
    const std::vector<Token>& tokens() const { return tokens_; }
    const std::vector<Node>& nodes() const { return nodes_; }
    NodeId root() const { return root_; }

    const Node& node(NodeId id) const { return nodes_[id]; }
    std::size_t size() const { return nodes_.size(); }

    std::string_view text(NodeId id) const;
    std::string_view token_text(std::uint32_t tok) const;
    Span span(NodeId id) const;

    // Last id in the subtree rooted at id (preorder makes subtrees contiguous).
    NodeId subtree_end(NodeId id) const { return subtree_last_[id]; }
    bool is_ancestor(NodeId ancestor, NodeId id) const {
        return ancestor <= id && id <= subtree_last_[ancestor];
    }

    // Compares two nodes token by token, ignoring whitespace and comments.
    bool same_tokens(NodeId a, const SyntaxTree& other, NodeId b) const;

    std::uint32_t line_of(std::uint32_t byte) const;
    std::uint32_t col_of(std::uint32_t byte) const;
    std::uint32_t line_count() const { return static_cast<std::uint32_t>(line_starts_.size()); }
    std::string_view line_text(std::uint32_t line) const;

  private:
    std::string file_id_;
    std::string source_;
    std::vector<Token> tokens_;
    std::vector<Node> nodes_;
    NodeId root_;
    std::vector<std::uint32_t> line_starts_;
    std::vector<NodeId> subtree_last_;
};

// Lightweight handle to a node in a tree; cheap to copy.
class AstNode {
  public:
    AstNode() = default;
    AstNode(const SyntaxTree* tree, NodeId id) : tree_(tree), id_(id) {}

    bool valid() const { return tree_ != nullptr && id_ != kNoNode; }
    const SyntaxTree& tree() const { return *tree_; }
    NodeId id() const { return id_; }

    NodeKind kind() const { return tree_->node(id_).kind; }
    Field field() const { return tree_->node(id_).field; }
    std::string_view text() const { return tree_->text(id_); }
    Span span() const { return tree_->span(id_); }
    AstNode parent() const { return {tree_, tree_->node(id_).parent}; }
    std::size_t child_count() const { return tree_->node(id_).children.size(); }
    AstNode child(std::size_t i) const { return {tree_, tree_->node(id_).children[i]}; }
    AstNode child_by_field(Field f) const;

    bool operator==(const AstNode& o) const { return tree_ == o.tree_ && id_ == o.id_; }

  private:
    const SyntaxTree* tree_ = nullptr;
    NodeId id_ = kNoNode;
};

}  // namespace scs::syntax

#endif  // SCS_SYNTAX_SYNTAX_TREE_HPP

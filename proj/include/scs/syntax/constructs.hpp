#ifndef SCS_SYNTAX_CONSTRUCTS_HPP
#define SCS_SYNTAX_CONSTRUCTS_HPP

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "scs/syntax/syntax_tree.hpp"

namespace scs::syntax {

enum class ConstructType : std::uint8_t {
    Literal,
    Variable,
    MethodCall,
    Operator,
    IfStatement,
    ForLoop,
    WhileLoop,
    ContinueStatement,
    BreakStatement,
    ReturnStatement,
    TryStatement,
    SwitchStatement,
    VariableDeclaration,
    MethodDeclaration,
    ClassDeclaration,
};

inline constexpr std::size_t kConstructTypeCount = 15;

std::string_view construct_name(ConstructType t);
std::optional<ConstructType> construct_from_name(std::string_view name);
const std::array<ConstructType, kConstructTypeCount>& all_construct_types();

// Taxonomy mapping. Identifiers count as variables only where they name a
// value, not where they name a method, type, label or package.
std::optional<ConstructType> construct_type(const SyntaxTree& tree, NodeId id);

struct CodeConstruct {
    ConstructType ctype;
    AstNode node;
    Span span;
};

// All typed nodes of the tree in source (pre)order.
std::vector<CodeConstruct> enumerate_constructs(const SyntaxTree& tree);

}  // namespace scs::syntax

#endif  // SCS_SYNTAX_CONSTRUCTS_HPP

#include "scs/syntax/constructs.hpp"

namespace scs::syntax {

namespace {

constexpr std::array<std::string_view, kConstructTypeCount> kNames = {
    "Literal",           "Variable",       "MethodCall",          "Operator",
    "IfStatement",       "ForLoop",        "WhileLoop",           "ContinueStatement",
    "BreakStatement",    "ReturnStatement", "TryStatement",       "SwitchStatement",
    "VariableDeclaration", "MethodDeclaration", "ClassDeclaration",
};

// Identifier positions that name something other than a value.
bool names_non_value(const SyntaxTree& tree, const Node& n) {
    if (n.parent == kNoNode) return false;
    const Node& p = tree.node(n.parent);
    switch (p.kind) {
    case NodeKind::scoped_identifier:
    case NodeKind::package_declaration:
    case NodeKind::import_declaration:
    case NodeKind::marker_annotation:
    case NodeKind::annotation:
    case NodeKind::break_statement:
    case NodeKind::continue_statement:
    case NodeKind::labeled_statement:
    case NodeKind::enum_constant:
        return true;
    case NodeKind::element_value_pair:
        return n.field == Field::key;
    case NodeKind::method_invocation:
        return n.field == Field::name;
    case NodeKind::method_reference:
        return !p.children.empty() && tree.node(p.children.front()).begin != n.begin;
    default:
        break;
    }
    return n.field == Field::name && (is_type_declaration(p.kind) || is_method_like(p.kind) ||
                                      p.kind == NodeKind::annotation_type_element_declaration);
}

}  // namespace

std::string_view construct_name(ConstructType t) { return kNames[static_cast<std::size_t>(t)]; }

std::optional<ConstructType> construct_from_name(std::string_view name) {
    for (std::size_t i = 0; i < kNames.size(); ++i)
        if (kNames[i] == name) return static_cast<ConstructType>(i);
    return std::nullopt;
}

const std::array<ConstructType, kConstructTypeCount>& all_construct_types() {
    static const auto all = [] {
        std::array<ConstructType, kConstructTypeCount> a{};
        for (std::size_t i = 0; i < a.size(); ++i) a[i] = static_cast<ConstructType>(i);
        return a;
    }();
    return all;
}

std::optional<ConstructType> construct_type(const SyntaxTree& tree, NodeId id) {
    const Node& n = tree.node(id);
    if (is_literal(n.kind)) return ConstructType::Literal;
    if (is_type_declaration(n.kind)) return ConstructType::ClassDeclaration;
    if (is_method_like(n.kind)) return ConstructType::MethodDeclaration;
    switch (n.kind) {
    case NodeKind::identifier:
        if (names_non_value(tree, n)) return std::nullopt;
        return ConstructType::Variable;
    case NodeKind::method_invocation:
        return ConstructType::MethodCall;
    case NodeKind::binary_expression:
    case NodeKind::unary_expression:
    case NodeKind::assignment_expression:
    case NodeKind::update_expression:
        return ConstructType::Operator;
    case NodeKind::if_statement:
        return ConstructType::IfStatement;
    case NodeKind::for_statement:
    case NodeKind::enhanced_for_statement:
        return ConstructType::ForLoop;
    case NodeKind::while_statement:
    case NodeKind::do_statement:
        return ConstructType::WhileLoop;
    case NodeKind::continue_statement:
        return ConstructType::ContinueStatement;
    case NodeKind::break_statement:
        return ConstructType::BreakStatement;
    case NodeKind::return_statement:
        return ConstructType::ReturnStatement;
    case NodeKind::try_statement:
    case NodeKind::try_with_resources_statement:
        return ConstructType::TryStatement;
    case NodeKind::switch_expression:
        return ConstructType::SwitchStatement;
    case NodeKind::local_variable_declaration:
    case NodeKind::field_declaration:
        return ConstructType::VariableDeclaration;
    default:
        return std::nullopt;
    }
}

std::vector<CodeConstruct> enumerate_constructs(const SyntaxTree& tree) {
    std::vector<CodeConstruct> out;
    for (NodeId id = 0; id < tree.size(); ++id)
        if (auto t = construct_type(tree, id)) out.push_back({*t, AstNode(&tree, id), tree.span(id)});
    return out;
}

}  // namespace scs::syntax

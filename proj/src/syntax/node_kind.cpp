#include "scs/syntax/node_kind.hpp"

#include <array>

namespace scs::syntax {

namespace {

constexpr std::string_view strip_underscore(std::string_view s) {
    return s.ends_with('_') ? s.substr(0, s.size() - 1) : s;
}

constexpr std::array kKindNames = {
#define SCS_NAME_ITEM(name) strip_underscore(#name),
    SCS_NODE_KINDS(SCS_NAME_ITEM)
#undef SCS_NAME_ITEM
};

constexpr std::array kFieldNames = {
#define SCS_NAME_ITEM(name) std::string_view(#name),
    SCS_FIELDS(SCS_NAME_ITEM)
#undef SCS_NAME_ITEM
};

}  // namespace

std::string_view kind_name(NodeKind k) { return kKindNames[static_cast<std::size_t>(k)]; }

std::optional<NodeKind> kind_from_name(std::string_view name) {
    for (std::size_t i = 0; i < kKindNames.size(); ++i)
        if (kKindNames[i] == name) return static_cast<NodeKind>(i);
    return std::nullopt;
}

std::string_view field_name(Field f) { return kFieldNames[static_cast<std::size_t>(f)]; }

bool is_literal(NodeKind k) {
    switch (k) {
    case NodeKind::decimal_integer_literal:
    case NodeKind::hex_integer_literal:
    case NodeKind::octal_integer_literal:
    case NodeKind::binary_integer_literal:
    case NodeKind::decimal_floating_point_literal:
    case NodeKind::hex_floating_point_literal:
    case NodeKind::true_:
    case NodeKind::false_:
    case NodeKind::character_literal:
    case NodeKind::string_literal:
    case NodeKind::text_block:
    case NodeKind::null_literal:
        return true;
    default:
        return false;
    }
}

bool is_type_kind(NodeKind k) {
    switch (k) {
    case NodeKind::type_identifier:
    case NodeKind::scoped_type_identifier:
    case NodeKind::generic_type:
    case NodeKind::array_type:
    case NodeKind::integral_type:
    case NodeKind::floating_point_type:
    case NodeKind::boolean_type:
    case NodeKind::void_type:
        return true;
    default:
        return false;
    }
}

bool is_statement(NodeKind k) {
    switch (k) {
    case NodeKind::block:
    case NodeKind::local_variable_declaration:
    case NodeKind::expression_statement:
    case NodeKind::if_statement:
    case NodeKind::for_statement:
    case NodeKind::enhanced_for_statement:
    case NodeKind::while_statement:
    case NodeKind::do_statement:
    case NodeKind::return_statement:
    case NodeKind::break_statement:
    case NodeKind::continue_statement:
    case NodeKind::throw_statement:
    case NodeKind::yield_statement:
    case NodeKind::assert_statement:
    case NodeKind::labeled_statement:
    case NodeKind::synchronized_statement:
    case NodeKind::empty_statement:
    case NodeKind::try_statement:
    case NodeKind::try_with_resources_statement:
    case NodeKind::switch_expression:
    case NodeKind::explicit_constructor_invocation:
        return true;
    default:
        return false;
    }
}

bool is_type_declaration(NodeKind k) {
    switch (k) {
    case NodeKind::class_declaration:
    case NodeKind::interface_declaration:
    case NodeKind::enum_declaration:
    case NodeKind::record_declaration:
    case NodeKind::annotation_type_declaration:
        return true;
    default:
        return false;
    }
}

bool is_method_like(NodeKind k) {
    return k == NodeKind::method_declaration || k == NodeKind::constructor_declaration ||
           k == NodeKind::compact_constructor_declaration;
}

bool is_declaration(NodeKind k) {
    if (is_type_declaration(k) || is_method_like(k)) return true;
    switch (k) {
    case NodeKind::field_declaration:
    case NodeKind::constant_declaration:
    case NodeKind::static_initializer:
    case NodeKind::annotation_type_element_declaration:
    case NodeKind::enum_constant:
        return true;
    default:
        return false;
    }
}

bool is_expression_like(NodeKind k) {
    if (is_literal(k) || is_type_kind(k)) return true;
    switch (k) {
    case NodeKind::assignment_expression:
    case NodeKind::binary_expression:
    case NodeKind::unary_expression:
    case NodeKind::update_expression:
    case NodeKind::ternary_expression:
    case NodeKind::instanceof_expression:
    case NodeKind::cast_expression:
    case NodeKind::lambda_expression:
    case NodeKind::method_invocation:
    case NodeKind::field_access:
    case NodeKind::array_access:
    case NodeKind::method_reference:
    case NodeKind::object_creation_expression:
    case NodeKind::array_creation_expression:
    case NodeKind::class_literal:
    case NodeKind::parenthesized_expression:
    case NodeKind::this_:
    case NodeKind::super_:
    case NodeKind::identifier:
    case NodeKind::array_initializer:
        return true;
    default:
        return false;
    }
}

bool shows_text(NodeKind k) {
    if (is_literal(k)) return true;
    switch (k) {
    case NodeKind::identifier:
    case NodeKind::type_identifier:
    case NodeKind::integral_type:
    case NodeKind::floating_point_type:
    case NodeKind::boolean_type:
    case NodeKind::void_type:
    case NodeKind::this_:
    case NodeKind::super_:
    case NodeKind::dimensions:
    case NodeKind::asterisk:
    case NodeKind::metavariable:
        return true;
    default:
        return false;
    }
}

}  // namespace scs::syntax

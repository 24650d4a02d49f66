#ifndef SCS_SYNTAX_NODE_KIND_HPP
#define SCS_SYNTAX_NODE_KIND_HPP

#include <cstdint>
#include <optional>
#include <string_view>

namespace scs::syntax {

// Node kinds use the tree-sitter-java vocabulary so that rendered trees read
// the same as the ones produced by the usual tooling.
#define SCS_NODE_KINDS(X)                  \
    X(program)                             \
    X(package_declaration)                 \
    X(import_declaration)                  \
    X(scoped_identifier)                   \
    X(asterisk)                            \
    X(class_declaration)                   \
    X(interface_declaration)               \
    X(enum_declaration)                    \
    X(record_declaration)                  \
    X(annotation_type_declaration)         \
    X(class_body)                          \
    X(interface_body)                      \
    X(enum_body)                           \
    X(enum_body_declarations)              \
    X(enum_constant)                       \
    X(annotation_type_body)                \
    X(annotation_type_element_declaration) \
    X(superclass)                          \
    X(super_interfaces)                    \
    X(extends_interfaces)                  \
    X(permits)                             \
    X(type_list)                           \
    X(type_parameters)                     \
    X(type_parameter)                      \
    X(type_bound)                          \
    X(field_declaration)                   \
    X(constant_declaration)                \
    X(method_declaration)                  \
    X(constructor_declaration)             \
    X(compact_constructor_declaration)     \
    X(constructor_body)                    \
    X(explicit_constructor_invocation)     \
    X(static_initializer)                  \
    X(formal_parameters)                   \
    X(formal_parameter)                    \
    X(spread_parameter)                    \
    X(throws)                              \
    X(variable_declarator)                 \
    X(array_initializer)                   \
    X(modifiers)                           \
    X(marker_annotation)                   \
    X(annotation)                          \
    X(annotation_argument_list)            \
    X(element_value_pair)                  \
    X(element_value_array_initializer)     \
    X(block)                               \
    X(local_variable_declaration)          \
    X(expression_statement)                \
    X(if_statement)                        \
    X(for_statement)                       \
    X(enhanced_for_statement)              \
    X(while_statement)                     \
    X(do_statement)                        \
    X(return_statement)                    \
    X(break_statement)                     \
    X(continue_statement)                  \
    X(throw_statement)                     \
    X(yield_statement)                     \
    X(assert_statement)                    \
    X(labeled_statement)                   \
    X(synchronized_statement)              \
    X(empty_statement)                     \
    X(try_statement)                       \
    X(try_with_resources_statement)        \
    X(resource_specification)              \
    X(resource)                            \
    X(catch_clause)                        \
    X(catch_formal_parameter)              \
    X(catch_type)                          \
    X(finally_clause)                      \
    X(switch_expression)                   \
    X(switch_block)                        \
    X(switch_block_statement_group)        \
    X(switch_rule)                         \
    X(switch_label)                        \
    X(assignment_expression)               \
    X(binary_expression)                   \
    X(unary_expression)                    \
    X(update_expression)                   \
    X(ternary_expression)                  \
    X(instanceof_expression)               \
    X(cast_expression)                     \
    X(lambda_expression)                   \
    X(inferred_parameters)                 \
    X(method_invocation)                   \
    X(argument_list)                       \
    X(field_access)                        \
    X(array_access)                        \
    X(method_reference)                    \
    X(object_creation_expression)          \
    X(array_creation_expression)           \
    X(dimensions_expr)                     \
    X(class_literal)                       \
    X(parenthesized_expression)            \
    X(this_)                               \
    X(super_)                              \
    X(identifier)                          \
    X(type_identifier)                     \
    X(scoped_type_identifier)              \
    X(generic_type)                        \
    X(type_arguments)                      \
    X(wildcard)                            \
    X(array_type)                          \
    X(dimensions)                          \
    X(integral_type)                       \
    X(floating_point_type)                 \
    X(boolean_type)                        \
    X(void_type)                           \
    X(decimal_integer_literal)             \
    X(hex_integer_literal)                 \
    X(octal_integer_literal)               \
    X(binary_integer_literal)              \
    X(decimal_floating_point_literal)      \
    X(hex_floating_point_literal)          \
    X(true_)                               \
    X(false_)                              \
    X(character_literal)                   \
    X(string_literal)                      \
    X(text_block)                          \
    X(null_literal)                        \
    X(metavariable)                        \
    X(ellipsis)

enum class NodeKind : std::uint8_t {
#define SCS_ENUM_ITEM(name) name,
    SCS_NODE_KINDS(SCS_ENUM_ITEM)
#undef SCS_ENUM_ITEM
};

#define SCS_FIELDS(X) \
    X(none)           \
    X(name)           \
    X(body)           \
    X(condition)      \
    X(consequence)    \
    X(alternative)    \
    X(init)           \
    X(update)         \
    X(left)           \
    X(right)          \
    X(operand)        \
    X(object)         \
    X(arguments)      \
    X(type)           \
    X(value)          \
    X(declarator)     \
    X(parameters)     \
    X(field)          \
    X(array)          \
    X(index)          \
    X(dimensions)     \
    X(type_arguments) \
    X(type_parameters)\
    X(superclass)     \
    X(interfaces)     \
    X(element)        \
    X(key)            \
    X(resources)      \
    X(label)          \
    X(scope)          \
    X(permits)

enum class Field : std::uint8_t {
#define SCS_ENUM_ITEM(name) name,
    SCS_FIELDS(SCS_ENUM_ITEM)
#undef SCS_ENUM_ITEM
};

// Kind name as printed in rendered trees ("this", "true", ... without the
// trailing underscore the enumerators need).
std::string_view kind_name(NodeKind k);
std::optional<NodeKind> kind_from_name(std::string_view name);
std::string_view field_name(Field f);

bool is_literal(NodeKind k);
bool is_type_kind(NodeKind k);
bool is_statement(NodeKind k);
bool is_declaration(NodeKind k);
bool is_type_declaration(NodeKind k);
bool is_method_like(NodeKind k);

// Nodes a metavariable may stand for: expressions, names, literals, types.
bool is_expression_like(NodeKind k);

// Kinds whose source text is shown next to the kind when a tree is rendered.
bool shows_text(NodeKind k);

}  // namespace scs::syntax

#endif  // SCS_SYNTAX_NODE_KIND_HPP

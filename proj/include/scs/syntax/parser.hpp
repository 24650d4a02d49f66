#ifndef SCS_SYNTAX_PARSER_HPP
#define SCS_SYNTAX_PARSER_HPP

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "scs/syntax/syntax_tree.hpp"

namespace scs::syntax {

// Throws ParseError on malformed input, including unterminated literals.
std::vector<Token> lex(std::string_view source, const std::string& file_id);

// Parses a Java compilation unit. Throws ParseError.
std::unique_ptr<SyntaxTree> parse_source(std::string text, std::string file_id);

enum class FragmentKind { statement, expression, member, compilation_unit };

// Parses a fragment with `$NAME` metavariables and `...` ellipses enabled.
// The fragment must be consumed entirely. Throws ParseError.
std::unique_ptr<SyntaxTree> parse_fragment(std::string text, FragmentKind kind);

// Tries statement, expression, member declaration, compilation unit in that
// order. Throws PatternParseError when none of them accepts the text.
std::unique_ptr<SyntaxTree> parse_pattern(std::string text);

bool is_metavariable_name(std::string_view s);

}  // namespace scs::syntax

#endif  // SCS_SYNTAX_PARSER_HPP

#ifndef SCS_NL_DESCRIBE_HPP
#define SCS_NL_DESCRIBE_HPP

#include <string>

#include "scs/match/query.hpp"

namespace scs::nl {

// Nested-list rendering of one pattern tree: one node kind per line, field
// labels as prefixes, leaf text quoted, ellipses shown as `...`. Tokens that
// are not nodes (operators, keywords, punctuation) do not appear.
std::string describe_pattern(const match::Pattern& p);

// Every clause as a tagged block pair:
//   <semgrep_pattern>            <pattern_description>
//       <rule text>              - <tree>
//   </semgrep_pattern>           </pattern_description>
// pattern-inside, pattern-not and pattern-either use their own tag names.
std::string describe_query(const match::Query& q);

}  // namespace scs::nl

#endif  // SCS_NL_DESCRIBE_HPP

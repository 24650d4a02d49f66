#ifndef SCS_NL_PAIRED_HPP
#define SCS_NL_PAIRED_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "scs/match/matcher.hpp"
#include "scs/match/query.hpp"
#include "scs/syntax/constructs.hpp"

namespace scs::nl {

struct Location {
    std::string path;
    std::uint32_t start_line = 0;

    auto operator<=>(const Location&) const = default;
};

// Sorted, unique start locations of the matches.
std::vector<Location> locations_of(const std::vector<match::Match>& matches);

struct PairedQuery {
    std::string id;
    match::Query dsl;
    std::string description;
    std::string nl;
    std::vector<Location> gold;
    syntax::ConstructType target_type = syntax::ConstructType::Literal;
};

// {"id","nl","rule","description","target_type","gold":[{"path","start_line"}]}
nlohmann::json paired_to_json(const PairedQuery& p);
// Throws RuleSyntaxError/PatternParseError/BenchmarkError on bad entries.
PairedQuery paired_from_json(const nlohmann::json& j);

// Sets one explanatory comment per clause (the target type, the enclosing
// construct, ...). Rendered only when a rule is printed with comments.
void annotate(match::Query& q);

// Deterministic English rendering of a query, used where no model is available.
std::string template_nl(const match::Query& q);

std::string construct_phrase(syntax::ConstructType t, bool plural);

}  // namespace scs::nl

#endif  // SCS_NL_PAIRED_HPP

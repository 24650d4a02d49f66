#ifndef SCS_TEST_PROGRAM_GEN_HPP
#define SCS_TEST_PROGRAM_GEN_HPP

#include <optional>
#include <random>
#include <string>

#include "scs/syntax/syntax_tree.hpp"

namespace scs::testkit {

// Small random Java compilation unit. Names and literals come from tiny
// pools so repeated subtrees (and repeated metavariable bindings) are common.
std::string random_program(std::mt19937_64& rng);

// Picks a statement or expression of the tree with a source text of at most
// max_nodes nodes and abstracts a few of its nodes into metavariables
// (names drawn from a pool of three, so repeats happen) or ellipses.
// Returns the pattern text, or nullopt if nothing suitable was found.
std::optional<std::string> random_pattern(const syntax::SyntaxTree& tree, std::mt19937_64& rng,
                                          std::size_t max_nodes = 30);

}  // namespace scs::testkit

#endif

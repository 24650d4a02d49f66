#ifndef SCS_GEN_GENERATOR_HPP
#define SCS_GEN_GENERATOR_HPP

#include <array>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "scs/error.hpp"
#include "scs/match/matcher.hpp"
#include "scs/match/query.hpp"
#include "scs/syntax/constructs.hpp"
#include "scs/syntax/corpus.hpp"

namespace scs::gen {

using TypeCounts = std::array<std::size_t, syntax::kConstructTypeCount>;

struct GenConfig {
    std::size_t n_queries = 10;
    int c_min = 1;
    int c_max = 5;
    std::uint64_t seed = 0;
    std::size_t max_attempts = 0;  // candidate budget; 0 means 100 per requested query
    bool biased = true;            // false: uniform sampling and uniform generalization
};

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    std::size_t below(std::size_t n);
    // Index drawn proportionally to weights; uniform when they sum to zero.
    std::size_t weighted(const std::vector<double>& weights);

  private:
    std::mt19937_64 engine_;
};

struct GeneratedQuery {
    std::string id;
    match::Query query;
    syntax::CodeConstruct target;
    std::vector<match::Match> gold;
    int complexity = 0;
    syntax::ConstructType target_type;  // anchor type of the query
};

struct GenState {
    explicit GenState(std::uint64_t seed, bool biased = true) : rng(seed), biased(biased) {}

    std::vector<GeneratedQuery> accepted;
    std::set<std::string> keys;  // canonical keys of accepted queries
    TypeCounts type_counts{};
    Rng rng;
    bool biased;

    void record(GeneratedQuery q);
};

class BudgetExhausted : public Error {
  public:
    BudgetExhausted(std::vector<GeneratedQuery> partial, std::size_t requested);
    const std::vector<GeneratedQuery>& partial() const { return partial_; }

  private:
    std::vector<GeneratedQuery> partial_;
};

// Tally of typed constructs over every clause pattern of q (holes excluded).
TypeCounts construct_tally(const match::Query& q);

// Typed constructs + metavariables + ellipses over every clause pattern.
int complexity(const match::Query& q);

// Draws an instance with weight 1/(1 + count of its type so far), or
// uniformly when the state is unbiased. Throws EmptyCorpus.
syntax::CodeConstruct weighted_sample(const std::vector<syntax::CodeConstruct>& pool, GenState& state);
syntax::CodeConstruct weighted_sample(const syntax::Corpus& corpus, GenState& state);

// Smallest statement or declaration containing the node (the node itself if it is one).
syntax::NodeId enclosing_statement(const syntax::SyntaxTree& tree, syntax::NodeId id);

// Source text of a node with the first line's indentation removed from the rest.
std::string node_text(const syntax::SyntaxTree& tree, syntax::NodeId id);

// Single pattern clause holding the text of t's enclosing statement.
match::Query init(const syntax::CodeConstruct& t);

// Adds a pattern-inside clause built from a uniformly chosen statement or
// declaration ancestor of the anchor statement, with the anchor cut out as
// "...". Throws NoAncestor.
std::pair<match::Query, syntax::CodeConstruct> specialize(const match::Query& q, const syntax::CodeConstruct& t,
                                                           GenState& state);

// Replaces one concrete node of the pattern or pattern-inside clauses with a
// fresh metavariable or an ellipsis. Throws NothingToGeneralize.
match::Query generalize(const match::Query& q, GenState& state);

// Generalizes one chosen node of clause `clause`. Throws NothingToGeneralize
// if that node is not a generalizable slot, PatternParseError if the result
// does not parse.
match::Query generalize_node(const match::Query& q, std::size_t clause, syntax::NodeId node);

// Whether some match of q in t's file contains t.
bool verifies(const match::Query& q, const syntax::CodeConstruct& t);

// Throws EmptyCorpus, BudgetExhausted.
std::vector<GeneratedQuery> enumerate_queries(const syntax::Corpus& corpus, const GenConfig& cfg);

// max/min over the nonzero entries; 1 when fewer than two types occur.
double frequency_ratio(const TypeCounts& counts);

// One JSON object per line.
std::string generated_query_json(const GeneratedQuery& g);

// Per-type counts of target types and of all counted constructs.
std::string distribution_summary(const std::vector<GeneratedQuery>& queries);

}  // namespace scs::gen

#endif  // SCS_GEN_GENERATOR_HPP

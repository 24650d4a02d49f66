#include "scs/gen/generator.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>

namespace scs::gen {

using match::Clause;
using match::ClauseKind;
using match::Pattern;
using match::Query;
using syntax::CodeConstruct;
using syntax::ConstructType;
using syntax::kNoNode;
using syntax::NodeId;
using syntax::NodeKind;
using syntax::SyntaxTree;

std::size_t Rng::below(std::size_t n) {
    auto i = static_cast<std::size_t>(uniform01() * static_cast<double>(n));
    return std::min(i, n - 1);
}

std::size_t Rng::weighted(const std::vector<double>& weights) {
    double total = 0;
    for (double w : weights) total += w;
    if (total <= 0) return below(weights.size());
    double r = uniform01() * total;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (r < weights[i]) return i;
        r -= weights[i];
    }
    // Rounding can leave r just above the last weight.
    for (std::size_t i = weights.size(); i-- > 0;)
        if (weights[i] > 0) return i;
    return weights.size() - 1;
}

void GenState::record(GeneratedQuery q) {
    auto tally = construct_tally(q.query);
    for (std::size_t i = 0; i < tally.size(); ++i) type_counts[i] += tally[i];
    keys.insert(match::canonical_key(q.query));
    accepted.push_back(std::move(q));
}

BudgetExhausted::BudgetExhausted(std::vector<GeneratedQuery> partial, std::size_t requested)
    : Error("attempt budget exhausted after " + std::to_string(partial.size()) + " of " +
            std::to_string(requested) + " queries"),
      partial_(std::move(partial)) {}

namespace {

bool is_hole(NodeKind k) { return k == NodeKind::metavariable || k == NodeKind::ellipsis; }

std::size_t index_of(ConstructType t) { return static_cast<std::size_t>(t); }

template <typename Visit>
void for_each_pattern(const Query& q, Visit&& visit) {
    for (const auto& c : q.clauses)
        for (const auto& p : c.patterns) visit(p);
}

// Grouped view of the construct pool: drawing a type with weight
// n_e / (1 + c_e) and then an instance uniformly is the same distribution as
// drawing instances with weight 1 / (1 + c_e).
class SamplePool {
  public:
    explicit SamplePool(std::vector<CodeConstruct> pool) {
        for (auto& c : pool) by_type_[index_of(c.ctype)].push_back(std::move(c));
    }

    bool empty() const {
        return std::all_of(by_type_.begin(), by_type_.end(), [](const auto& v) { return v.empty(); });
    }

    const CodeConstruct& draw(GenState& state) const {
        if (empty()) throw EmptyCorpus();
        std::vector<double> weights(by_type_.size());
        for (std::size_t e = 0; e < by_type_.size(); ++e) {
            double n = static_cast<double>(by_type_[e].size());
            weights[e] = state.biased ? n / (1.0 + static_cast<double>(state.type_counts[e])) : n;
        }
        const auto& bucket = by_type_[state.rng.weighted(weights)];
        return bucket[state.rng.below(bucket.size())];
    }

  private:
    std::array<std::vector<CodeConstruct>, syntax::kConstructTypeCount> by_type_;
};

std::vector<CodeConstruct> corpus_constructs(const syntax::Corpus& corpus) {
    std::vector<CodeConstruct> pool;
    for (const auto& f : corpus.files()) {
        auto part = syntax::enumerate_constructs(*f.tree);
        pool.insert(pool.end(), part.begin(), part.end());
    }
    return pool;
}

std::string dedent(std::string_view text, std::size_t indent) {
    std::string out;
    out.reserve(text.size());
    std::size_t i = 0;
    bool first = true;
    while (i <= text.size()) {
        std::size_t nl = text.find('\n', i);
        std::string_view line = text.substr(i, nl == std::string_view::npos ? std::string_view::npos : nl - i);
        if (!first) {
            std::size_t k = 0;
            while (k < indent && k < line.size() && (line[k] == ' ' || line[k] == '\t')) ++k;
            line.remove_prefix(k);
        }
        out += line;
        if (nl == std::string_view::npos) break;
        out += '\n';
        i = nl + 1;
        first = false;
    }
    return out;
}

std::size_t indentation_at(const SyntaxTree& tree, NodeId id) {
    auto line = tree.line_text(tree.span(id).start_line);
    std::size_t k = 0;
    while (k < line.size() && (line[k] == ' ' || line[k] == '\t')) ++k;
    return k;
}

bool in_for_header(const SyntaxTree& tree, NodeId id) {
    const auto& n = tree.node(id);
    if (n.parent == kNoNode || tree.node(n.parent).kind != NodeKind::for_statement) return false;
    return n.field == syntax::Field::init || n.field == syntax::Field::condition || n.field == syntax::Field::update;
}

std::string ellipsis_for(const SyntaxTree& tree, NodeId id) {
    auto text = tree.text(id);
    return in_for_header(tree, id) && !text.empty() && text.back() == ';' ? "...;" : "...";
}

// What a pattern node may be generalized to: "..." forms for statement,
// member, parameter and loop-header slots, "$" for a metavariable, or empty
// when the node must stay.
std::string replacement_for(const SyntaxTree& tree, NodeId id) {
    const auto& n = tree.node(id);
    if (is_hole(n.kind) || n.parent == kNoNode) return {};
    const auto& root = tree.node(tree.root());
    if (n.parent == tree.root() && root.kind == NodeKind::expression_statement && root.children.size() == 1)
        return {};
    if (in_for_header(tree, id)) return ellipsis_for(tree, id);
    if ((syntax::is_statement(n.kind) || syntax::is_declaration(n.kind)) && n.kind != NodeKind::block)
        return "...";
    if (n.kind == NodeKind::formal_parameter) return "...";
    if (syntax::is_expression_like(n.kind)) return "$";
    return {};
}

int next_metavar_index(const Query& q) {
    int next = 0;
    for_each_pattern(q, [&](const Pattern& p) {
        const auto& t = p.tree();
        for (NodeId id = 0; id < t.size(); ++id) {
            if (t.node(id).kind != NodeKind::metavariable) continue;
            auto name = t.text(id);
            constexpr std::string_view prefix = "$METAVAR";
            if (name.substr(0, prefix.size()) != prefix || name.size() == prefix.size()) continue;
            auto digits = name.substr(prefix.size());
            if (!std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) continue;
            next = std::max(next, std::stoi(std::string(digits)) + 1);
        }
    });
    return next;
}

struct Slot {
    std::size_t clause;
    NodeId node;
    std::string replacement;
    double weight;
};

std::vector<Slot> generalizable_slots(const Query& q, const TypeCounts& counts) {
    std::vector<Slot> slots;
    for (std::size_t ci = 0; ci < q.clauses.size(); ++ci) {
        const auto& c = q.clauses[ci];
        if (c.kind != ClauseKind::pattern && c.kind != ClauseKind::pattern_inside) continue;
        const auto& t = c.patterns.front().tree();
        for (NodeId id = 0; id < t.size(); ++id) {
            auto repl = replacement_for(t, id);
            if (repl.empty()) continue;
            std::size_t typed = 0;
            double weight = 0;
            for (NodeId d = id; d <= t.subtree_end(id); ++d) {
                if (auto type = syntax::construct_type(t, d)) {
                    ++typed;
                    weight += static_cast<double>(counts[index_of(*type)]);
                }
            }
            if (typed == 0) continue;
            slots.push_back(Slot{ci, id, std::move(repl), weight});
        }
    }
    return slots;
}

}  // namespace

TypeCounts construct_tally(const Query& q) {
    TypeCounts counts{};
    for_each_pattern(q, [&](const Pattern& p) {
        const auto& t = p.tree();
        for (NodeId id = 0; id < t.size(); ++id)
            if (auto type = syntax::construct_type(t, id)) ++counts[index_of(*type)];
    });
    return counts;
}

int complexity(const Query& q) {
    int total = 0;
    for_each_pattern(q, [&](const Pattern& p) {
        const auto& t = p.tree();
        for (NodeId id = 0; id < t.size(); ++id)
            if (is_hole(t.node(id).kind) || syntax::construct_type(t, id)) ++total;
    });
    return total;
}

CodeConstruct weighted_sample(const std::vector<CodeConstruct>& pool, GenState& state) {
    return SamplePool(pool).draw(state);
}

CodeConstruct weighted_sample(const syntax::Corpus& corpus, GenState& state) {
    return SamplePool(corpus_constructs(corpus)).draw(state);
}

NodeId enclosing_statement(const SyntaxTree& tree, NodeId id) {
    for (NodeId at = id; at != kNoNode; at = tree.node(at).parent) {
        auto k = tree.node(at).kind;
        if ((syntax::is_statement(k) && k != NodeKind::block) || syntax::is_declaration(k)) return at;
    }
    return tree.root();
}

std::string node_text(const SyntaxTree& tree, NodeId id) { return dedent(tree.text(id), indentation_at(tree, id)); }

Query init(const CodeConstruct& t) {
    const auto& tree = t.node.tree();
    Query q;
    q.clauses.push_back(Clause{ClauseKind::pattern, {Pattern(node_text(tree, enclosing_statement(tree, t.node.id())))}, {}});
    return q;
}

std::pair<Query, CodeConstruct> specialize(const Query& q, const CodeConstruct& t, GenState& state) {
    const auto& tree = t.node.tree();
    NodeId anchor = enclosing_statement(tree, t.node.id());
    const auto& a = tree.node(anchor);
    std::string cut = ellipsis_for(tree, anchor);

    std::vector<std::string> options;
    for (NodeId up = a.parent; up != kNoNode; up = tree.node(up).parent) {
        auto k = tree.node(up).kind;
        if (!((syntax::is_statement(k) && k != NodeKind::block) || syntax::is_declaration(k))) continue;
        const auto& u = tree.node(up);
        const auto& src = tree.source();
        std::string text = src.substr(u.begin, a.begin - u.begin) + cut + src.substr(a.end, u.end - a.end);
        text = dedent(text, indentation_at(tree, up));
        bool used = std::any_of(q.clauses.begin(), q.clauses.end(), [&](const Clause& c) {
            return c.kind == ClauseKind::pattern_inside && c.patterns.front().text() == text;
        });
        if (!used) options.push_back(std::move(text));
    }
    if (options.empty()) throw NoAncestor("no enclosing statement or declaration left to add");
    Query out = q;
    out.clauses.push_back(Clause{ClauseKind::pattern_inside, {Pattern(options[state.rng.below(options.size())])}, {}});
    return {std::move(out), t};
}

namespace {

Query apply_slot(const Query& q, std::size_t clause, NodeId node, const std::string& replacement) {
    const auto& pattern = q.clauses[clause].patterns.front();
    const auto& n = pattern.tree().node(node);
    std::string repl = replacement == "$" ? "$METAVAR" + std::to_string(next_metavar_index(q)) : replacement;
    std::string text = pattern.text();
    text.replace(n.begin, n.end - n.begin, repl);
    Query out = q;
    out.clauses[clause].patterns.front() = Pattern(std::move(text));
    return out;
}

}  // namespace

Query generalize_node(const Query& q, std::size_t clause, NodeId node) {
    for (const auto& s : generalizable_slots(q, TypeCounts{}))
        if (s.clause == clause && s.node == node) return apply_slot(q, clause, node, s.replacement);
    throw NothingToGeneralize("node is not generalizable");
}

Query generalize(const Query& q, GenState& state) {
    auto slots = generalizable_slots(q, state.type_counts);
    while (!slots.empty()) {
        std::vector<double> weights;
        for (const auto& s : slots) weights.push_back(state.biased ? s.weight : 0.0);
        std::size_t pick = state.rng.weighted(weights);
        try {
            return apply_slot(q, slots[pick].clause, slots[pick].node, slots[pick].replacement);
        } catch (const PatternParseError&) {
            // The hole is not legal in this position; try another node.
            slots.erase(slots.begin() + static_cast<std::ptrdiff_t>(pick));
        }
    }
    throw NothingToGeneralize("no concrete node left to generalize");
}

bool verifies(const Query& q, const CodeConstruct& t) {
    auto matches = match::execute(q, t.node.tree());
    return std::any_of(matches.begin(), matches.end(), [&](const match::Match& m) { return m.span.contains(t.span); });
}

std::vector<GeneratedQuery> enumerate_queries(const syntax::Corpus& corpus, const GenConfig& cfg) {
    if (cfg.n_queries == 0) return {};
    SamplePool pool(corpus_constructs(corpus));
    if (pool.empty()) throw EmptyCorpus();
    GenState state(cfg.seed, cfg.biased);
    std::size_t budget = cfg.max_attempts ? cfg.max_attempts : 100 * cfg.n_queries;
    std::size_t round_cap = std::max<std::size_t>(1, budget / cfg.n_queries);

    for (std::size_t attempt = 0; state.accepted.size() < cfg.n_queries; ++attempt) {
        if (attempt == budget) throw BudgetExhausted(std::move(state.accepted), cfg.n_queries);
        CodeConstruct t = pool.draw(state);
        Query q;
        try {
            q = init(t);
        } catch (const PatternParseError&) {
            continue;
        }
        if (!verifies(q, t)) continue;

        bool within = false;
        for (std::size_t round = 0; round <= round_cap; ++round) {
            int c = complexity(q);
            if (c >= cfg.c_min && c <= cfg.c_max) {
                within = true;
                break;
            }
            if (round == round_cap) break;
            Query next;
            try {
                next = c < cfg.c_min ? specialize(q, t, state).first : generalize(q, state);
            } catch (const NoAncestor&) {
                break;
            } catch (const NothingToGeneralize&) {
                break;
            } catch (const PatternParseError&) {
                continue;
            }
            if (verifies(next, t)) q = std::move(next);
        }
        if (!within) continue;

        syntax::ConstructType type;
        try {
            type = match::anchor_construct_type(q);
        } catch (const UntypedTarget&) {
            continue;
        }
        if (state.keys.count(match::canonical_key(q))) continue;

        std::ostringstream id;
        id << 'q' << std::setw(4) << std::setfill('0') << state.accepted.size() + 1;
        q.id = id.str();
        q.message = "Find " + std::string(syntax::construct_name(type)) + " matches";
        GeneratedQuery g{id.str(), q, t, match::execute(q, corpus), complexity(q), type};
        state.record(std::move(g));
    }
    return std::move(state.accepted);
}

double frequency_ratio(const TypeCounts& counts) {
    std::size_t lo = 0, hi = 0;
    for (auto c : counts) {
        if (c == 0) continue;
        hi = std::max(hi, c);
        lo = lo == 0 ? c : std::min(lo, c);
    }
    return lo == 0 ? 1.0 : static_cast<double>(hi) / static_cast<double>(lo);
}

std::string generated_query_json(const GeneratedQuery& g) {
    nlohmann::json gold = nlohmann::json::array();
    for (const auto& m : g.gold)
        gold.push_back({{"path", m.span.file_id}, {"start_line", m.span.start_line}, {"end_line", m.span.end_line}});
    const auto& s = g.target.span;
    nlohmann::json j{{"id", g.id},
                     {"rule", match::render_rule(g.query)},
                     {"complexity", g.complexity},
                     {"target_type", syntax::construct_name(g.target_type)},
                     {"target",
                      {{"path", s.file_id},
                       {"type", syntax::construct_name(g.target.ctype)},
                       {"start_line", s.start_line},
                       {"start_col", s.start_col},
                       {"end_line", s.end_line},
                       {"end_col", s.end_col}}},
                     {"gold", gold}};
    return j.dump();
}

std::string distribution_summary(const std::vector<GeneratedQuery>& queries) {
    TypeCounts targets{}, constructs{};
    for (const auto& g : queries) {
        ++targets[index_of(g.target_type)];
        auto tally = construct_tally(g.query);
        for (std::size_t i = 0; i < tally.size(); ++i) constructs[i] += tally[i];
    }
    std::ostringstream out;
    out << std::left << std::setw(22) << "construct type" << std::right << std::setw(8) << "targets" << std::setw(12)
        << "constructs" << "\n";
    for (auto type : syntax::all_construct_types()) {
        auto i = index_of(type);
        out << std::left << std::setw(22) << syntax::construct_name(type) << std::right << std::setw(8) << targets[i]
            << std::setw(12) << constructs[i] << "\n";
    }
    out << "max/min ratio (constructs): " << std::fixed << std::setprecision(2) << frequency_ratio(constructs) << "\n";
    return out.str();
}

}  // namespace scs::gen

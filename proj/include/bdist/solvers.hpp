#pragma once

#include "bdist/game_graph.hpp"
#include "bdist/rational.hpp"
#include "bdist/tracedist.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace bdist {

/// Subset of the nodes of one game.
class NodeSet {
public:
    NodeSet() = default;
    explicit NodeSet(std::size_t universe) : bits_(universe, false) {}

    /// Every node owned by `owner`.
    static NodeSet all(const GameGraph& g, Player owner);

    bool contains(NodeId n) const { return bits_.at(n); }
    void insert(NodeId n);
    std::size_t size() const noexcept { return count_; }
    bool empty() const noexcept { return count_ == 0; }
    std::size_t universe() const noexcept { return bits_.size(); }
    std::vector<NodeId> members() const;
    bool is_subset_of(const NodeSet& other) const;

    friend bool operator==(const NodeSet&, const NodeSet&) = default;

private:
    std::vector<bool> bits_;
    std::size_t count_ = 0;
};

/// Edge index chosen at each node, where a choice is defined.
using Strategy = std::vector<std::optional<std::size_t>>;

/// Controllable predecessor of a set of maximizer nodes:
/// { u1 | ∃ u1 → u2 : ∀ u2 → u3 : u3 ∈ target }.
NodeSet cpre(const GameGraph& g, const NodeSet& target);

struct Attractor {
    NodeSet nodes;
    /// Round in which each node joined (0 for the seed); absent otherwise.
    std::vector<std::optional<std::size_t>> rank;
    /// Number of cpre rounds until the fixed point was reached.
    std::size_t iterations = 0;
    /// For every maximizer node that entered through cpre, the edge that
    /// forces the play one round closer to the seed.
    Strategy witness;
};

/// Least fixed point of X ↦ seed ∪ cpre(X), computed in synchronous rounds
/// so that rank matches the round index of the naive iteration.
Attractor cpre_star(const GameGraph& g, const NodeSet& seed);

/// Minimizer replies whose weight alone settles the game in the
/// maximizer's favour (an infinite weight, a weight above a threshold, a
/// label mismatch).
using DecisiveReply = std::function<bool(const SignedWeight&)>;

/// cpre where a decisive reply counts as landing in the target:
/// { u1 | ∃ u1 → u2 : ∀ u2 →w u3 : decisive(w) ∨ u3 ∈ target }.
NodeSet cpre(const GameGraph& g, const NodeSet& target, const DecisiveReply& decisive);

/// Least fixed point of X ↦ seed ∪ cpre(X, decisive). Without the
/// decisive replies a minimizer could escape the seed along an edge that
/// has already lost the game for her.
Attractor cpre_star(const GameGraph& g, const NodeSet& seed, const DecisiveReply& decisive);

/// { u1 | ∃ u1 → u2 : every edge leaving u2 satisfies `pred` }, together
/// with the witnessing edge per node.
template <typename Pred>
std::pair<NodeSet, Strategy> forcing_set(const GameGraph& g, Pred pred) {
    NodeSet result(g.node_count());
    Strategy witness(g.node_count());
    for (NodeId u = 0; u < g.node_count(); ++u) {
        if (g.owner(u) != Player::Maximizer)
            continue;
        auto edges = g.out(u);
        for (std::size_t i = 0; i < edges.size(); ++i) {
            bool all = true;
            for (const auto& reply : g.out(edges[i].target))
                if (!pred(reply.weight)) {
                    all = false;
                    break;
                }
            if (all) {
                result.insert(u);
                witness[u] = i;
                break;
            }
        }
    }
    return {std::move(result), std::move(witness)};
}

struct SolveResult {
    ExtValue value;
    /// Present iff `value` is an approximation within this bound.
    std::optional<Rational> epsilon;
    /// Actual a-priori error of the returned approximation (≤ epsilon).
    std::optional<Rational> error_bound;
    Strategy witness;
    std::size_t iterations = 0;

    bool exact() const noexcept { return !epsilon.has_value(); }
};

struct SolveOptions {
    /// Target precision of the discounted solver.
    Rational epsilon{1, 1000000};
    /// Let the mean-payoff solver stop early once a pair of positional
    /// strategies certifies the current estimate.
    bool certify_mean_payoff = true;
    /// Largest lead bound (in grid steps) tried by the maximum-lead
    /// solver before concluding the distance is infinite. Defaults to
    /// node count × largest absolute weight.
    std::optional<std::int64_t> lead_bound_steps;
};

SolveResult solve_discrete(const GameGraph& g);
SolveResult solve_pointwise(const GameGraph& g);
SolveResult solve_discounted(const GameGraph& g, const Rational& lambda, const Rational& epsilon);
SolveResult solve_limavg(const GameGraph& g, bool certify = true);
SolveResult solve_cantor(const GameGraph& g);
SolveResult solve_maxlead(const GameGraph& g, std::optional<std::int64_t> lead_bound_steps = std::nullopt);

/// Dispatches on the kind; throws KindMismatch if the game was built for a
/// different selector.
SolveResult solve(const GameGraph& g, const DistanceKind& kind, const SolveOptions& options = {});

/// Whether the minimizer can keep the accumulated weight within [-bound, bound]
/// forever from the initial node with lead 0. Weights and the bound are in the
/// same units; exposed for monotonicity checks.
bool minimizer_keeps_lead_within(const GameGraph& g, const Rational& bound);

} // namespace bdist

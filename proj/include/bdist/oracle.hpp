#pragma once

#include "bdist/game_graph.hpp"
#include "bdist/lts.hpp"
#include "bdist/rational.hpp"
#include "bdist/solvers.hpp"
#include "bdist/tracedist.hpp"

#include <cstddef>

namespace bdist::oracle {

/// Whether b simulates a: greatest fixed point of one-step refinement
/// starting from the full relation on states(a) × states(b).
bool classical_simulation(const Lts& a, const Lts& b);

/// Whether a and b are bisimilar (same refinement with symmetric transfer).
bool classical_bisimulation(const Lts& a, const Lts& b);

/// A positional strategy: one outgoing edge per node of one player.
using PositionalStrategy = Strategy;

struct EnumerationLimits {
    std::size_t max_nodes = 12;
    /// Upper bound on (maximizer strategies) × (minimizer strategies).
    std::size_t max_strategy_pairs = 2'000'000;
};

/// Max over maximizer positional strategies of min over minimizer
/// positional strategies of the valuation of the induced lasso play.
/// Throws std::length_error if the game exceeds `limits`, and
/// std::invalid_argument for MaxLead (not positionally determined).
ExtValue enumerate_positional_value(const GameGraph& g, const DistanceKind& kind, EnumerationLimits limits = {});

/// Whether `enumerate_positional_value` accepts the game.
bool within_limits(const GameGraph& g, EnumerationLimits limits = {});

struct Bracket {
    ExtValue lower;
    ExtValue upper;
};

/// Exact alternating minimax over the first `horizon` rounds, with the
/// unexplored tail bounded per kind. MaxLead and LimitAverage get trivial
/// upper bounds (∞ and half the largest weight).
Bracket bounded_minimax(const GameGraph& g, const DistanceKind& kind, std::size_t horizon);

} // namespace bdist::oracle

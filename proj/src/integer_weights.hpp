#pragma once

#include "bdist/game_graph.hpp"

#include <cstdint>
#include <vector>

namespace bdist::detail {

/// Edge weights of a finite-weight game multiplied by the common denominator
/// of all weights, so that weight(n, i) / denominator is the i-th edge of n.
struct IntegerWeights {
    mpz_class denominator = 1;
    std::vector<std::vector<std::int64_t>> weight;
    std::int64_t max_abs = 0;
};

/// Throws KindMismatch on an infinite weight and std::overflow_error when a
/// scaled weight does not fit into 62 bits.
IntegerWeights scale_to_integers(const GameGraph& g);

} // namespace bdist::detail

#include "bdist/solvers.hpp"

#include "bdist/error.hpp"

#include <algorithm>

namespace bdist {

namespace {

void require_selector(const GameGraph& g, Selector expected) {
    if (g.selector() != expected)
        throw KindMismatch("game was built for the " + std::string(name(g.selector())) + " distance, not " +
                           std::string(name(expected)));
}

/// Seed witnesses first, then the attractor's own choices.
Strategy merge(Strategy seed, const Strategy& attractor) {
    for (std::size_t n = 0; n < seed.size(); ++n)
        if (!seed[n])
            seed[n] = attractor[n];
    return seed;
}

} // namespace

SolveResult solve_discrete(const GameGraph& g) {
    require_selector(g, Selector::Discrete);
    const DecisiveReply infinite = [](const SignedWeight& w) { return w.is_infinite(); };
    auto [seed, seed_witness] = forcing_set(g, infinite);
    Attractor forced = cpre_star(g, seed, infinite);

    SolveResult result;
    result.value = forced.nodes.contains(g.initial()) ? ExtValue::infinity() : ExtValue(0);
    result.iterations = forced.iterations;
    result.witness = merge(std::move(seed_witness), forced.witness);
    return result;
}

SolveResult solve_pointwise(const GameGraph& g) {
    require_selector(g, Selector::PointWise);
    const std::vector<SignedWeight> weights = g.minimizer_weights();

    SolveResult result;
    if (weights.empty())
        throw std::invalid_argument("game has no minimizer edges");

    // S_1* = U1 ⊇ S_2* ⊇ ... ⊇ S_m*, so membership of the initial node is
    // monotone in the threshold index and binary search finds the greatest p.
    auto reaches = [&](std::size_t i, Strategy* witness) {
        const SignedWeight& threshold = weights[i];
        const DecisiveReply reaches_threshold = [&](const SignedWeight& w) { return w >= threshold; };
        auto [seed, seed_witness] = forcing_set(g, reaches_threshold);
        Attractor forced = cpre_star(g, seed, reaches_threshold);
        ++result.iterations;
        if (witness)
            *witness = merge(std::move(seed_witness), forced.witness);
        return forced.nodes.contains(g.initial());
    };

    std::size_t lo = 0; // reaches(lo) holds
    std::size_t hi = weights.size();
    while (hi - lo > 1) {
        std::size_t mid = lo + (hi - lo) / 2;
        if (reaches(mid, nullptr))
            lo = mid;
        else
            hi = mid;
    }
    reaches(lo, &result.witness);
    result.value = ExtValue(weights[lo]);
    return result;
}

SolveResult solve_cantor(const GameGraph& g) {
    require_selector(g, Selector::Cantor);
    const DecisiveReply mismatch = [](const SignedWeight& w) { return !w.is_zero(); };
    auto [seed, seed_witness] = forcing_set(g, mismatch);
    Attractor layers = cpre_star(g, seed, mismatch);

    SolveResult result;
    result.iterations = layers.iterations + 1;
    result.witness = merge(std::move(seed_witness), layers.witness);
    if (auto rank = layers.rank[g.initial()])
        result.value = Rational(mpz_class(1), mpz_class(static_cast<unsigned long>(*rank + 1)));
    else
        result.value = 0;
    return result;
}

SolveResult solve_discounted(const GameGraph& g, const Rational& lambda, const Rational& epsilon) {
    require_selector(g, Selector::Discounted);
    if (sgn(lambda) < 0 || lambda >= 1)
        throw std::invalid_argument("discount factor must lie in [0, 1)");
    if (sgn(epsilon) <= 0)
        throw std::invalid_argument("epsilon must be positive");

    Rational max_weight = 0;
    for (NodeId n = 0; n < g.node_count(); ++n)
        for (const auto& e : g.out(n)) {
            if (e.weight.is_infinite())
                throw KindMismatch("discounted game with an infinite weight");
            if (sgn(e.weight.finite()) < 0)
                throw std::invalid_argument("discounted game with a negative weight");
            if (g.owner(n) == Player::Minimizer)
                max_weight = std::max(max_weight, e.weight.finite());
        }

    // After n rounds the iterate is within λ^n·W/(1−λ) of the value.
    Rational bound = max_weight / (1 - lambda);
    std::size_t rounds = 0;
    while (bound >= epsilon) {
        bound *= lambda;
        ++rounds;
    }

    const std::size_t n = g.node_count();
    std::vector<Rational> value(n, Rational(0));
    std::vector<Rational> next(n, Rational(0));
    Strategy witness(n);
    for (std::size_t k = 0; k < rounds; ++k) {
        for (NodeId u = 0; u < n; ++u) {
            if (g.owner(u) != Player::Maximizer)
                continue;
            auto moves = g.out(u);
            std::optional<Rational> best;
            for (std::size_t i = 0; i < moves.size(); ++i) {
                auto replies = g.out(moves[i].target);
                std::optional<Rational> worst;
                std::size_t worst_edge = 0;
                for (std::size_t j = 0; j < replies.size(); ++j) {
                    Rational candidate = replies[j].weight.finite() + lambda * value[replies[j].target];
                    if (!worst || candidate < *worst) {
                        worst = std::move(candidate);
                        worst_edge = j;
                    }
                }
                witness[moves[i].target] = worst_edge;
                Rational round_value = moves[i].weight.finite() + *worst;
                if (!best || round_value > *best) {
                    best = std::move(round_value);
                    witness[u] = i;
                }
            }
            next[u] = *best;
        }
        std::swap(value, next);
    }

    SolveResult result;
    result.value = value[g.initial()];
    result.epsilon = epsilon;
    result.error_bound = bound;
    result.iterations = rounds;
    result.witness = std::move(witness);
    return result;
}

SolveResult solve(const GameGraph& g, const DistanceKind& kind, const SolveOptions& options) {
    require_selector(g, kind.selector());
    switch (kind.selector()) {
    case Selector::Discrete: return solve_discrete(g);
    case Selector::PointWise: return solve_pointwise(g);
    case Selector::Discounted: return solve_discounted(g, kind.lambda(), options.epsilon);
    case Selector::LimitAverage: return solve_limavg(g, options.certify_mean_payoff);
    case Selector::Cantor: return solve_cantor(g);
    case Selector::MaxLead: return solve_maxlead(g, options.lead_bound_steps);
    }
    throw std::logic_error("unknown selector");
}

} // namespace bdist

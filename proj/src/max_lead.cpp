#include "bdist/error.hpp"
#include "bdist/solvers.hpp"

#include "integer_weights.hpp"

#include <cstdlib>
#include <deque>
#include <numeric>

namespace bdist {

namespace {

/// Weights in grid units: the common denominator and the gcd of all
/// numerators divided out, so every reachable lead is an integer.
struct Grid {
    detail::IntegerWeights units;
    Rational step; // value of one unit
};

Grid make_grid(const GameGraph& g) {
    Grid grid{detail::scale_to_integers(g), Rational(0)};
    std::int64_t divisor = 0;
    for (const auto& succ : grid.units.weight)
        for (auto w : succ)
            divisor = std::gcd(divisor, w);
    if (divisor == 0)
        return grid;
    for (auto& succ : grid.units.weight)
        for (auto& w : succ)
            w /= divisor;
    grid.units.max_abs /= divisor;
    grid.step = Rational(mpz_class(static_cast<long>(divisor)), grid.units.denominator);
    grid.step.canonicalize();
    return grid;
}

/// Safety game on (node, lead) with |lead| ≤ bound: does the minimizer keep
/// the lead inside the window forever from (initial, 0)? Computes the
/// maximizer's attractor to leaving the window.
bool keeps_within(const GameGraph& g, const detail::IntegerWeights& units, std::int64_t bound) {
    const std::size_t n = g.node_count();
    const std::size_t width = static_cast<std::size_t>(2 * bound + 1);
    auto index = [&](NodeId u, std::int64_t lead) { return u * width + static_cast<std::size_t>(lead + bound); };
    auto inside = [&](std::int64_t lead) { return lead >= -bound && lead <= bound; };

    std::vector<std::vector<std::pair<NodeId, std::int64_t>>> preds(n);
    for (NodeId u = 0; u < n; ++u) {
        auto edges = g.out(u);
        for (std::size_t i = 0; i < edges.size(); ++i)
            preds[edges[i].target].emplace_back(u, units.weight[u][i]);
    }

    std::vector<bool> losing(n * width, false);
    std::vector<std::uint32_t> safe_moves(n * width, 0);
    std::deque<std::size_t> queue;
    auto lose = [&](std::size_t state) {
        if (!losing[state]) {
            losing[state] = true;
            queue.push_back(state);
        }
    };

    for (NodeId u = 0; u < n; ++u)
        for (std::int64_t lead = -bound; lead <= bound; ++lead) {
            std::uint32_t in_window = 0;
            for (auto w : units.weight[u])
                in_window += inside(lead + w) ? 1 : 0;
            const std::size_t state = index(u, lead);
            safe_moves[state] = in_window;
            const bool escapes = g.owner(u) == Player::Maximizer ? in_window < units.weight[u].size() : in_window == 0;
            if (escapes)
                lose(state);
        }

    while (!queue.empty()) {
        const std::size_t state = queue.front();
        queue.pop_front();
        const NodeId v = state / width;
        const std::int64_t lead_after = static_cast<std::int64_t>(state % width) - bound;
        for (const auto& [u, w] : preds[v]) {
            const std::int64_t lead = lead_after - w;
            if (!inside(lead))
                continue;
            const std::size_t pred = index(u, lead);
            if (g.owner(u) == Player::Maximizer || --safe_moves[pred] == 0)
                lose(pred);
        }
    }
    return !losing[index(g.initial(), 0)];
}

} // namespace

bool minimizer_keeps_lead_within(const GameGraph& g, const Rational& bound) {
    if (sgn(bound) < 0)
        return false;
    Grid grid = make_grid(g);
    if (grid.units.max_abs == 0)
        return true;
    Rational steps = bound / grid.step;
    mpz_class whole;
    mpz_fdiv_q(whole.get_mpz_t(), steps.get_num_mpz_t(), steps.get_den_mpz_t());
    if (!whole.fits_slong_p())
        throw std::overflow_error("lead bound too large");
    return keeps_within(g, grid.units, whole.get_si());
}

SolveResult solve_maxlead(const GameGraph& g, std::optional<std::int64_t> lead_bound_steps) {
    if (g.selector() != Selector::MaxLead)
        throw KindMismatch("game was built for the " + std::string(name(g.selector())) + " distance, not maxlead");
    const Grid grid = make_grid(g);

    SolveResult result;
    if (grid.units.max_abs == 0) {
        result.value = 0;
        return result;
    }

    const std::int64_t ceiling =
        lead_bound_steps.value_or(static_cast<std::int64_t>(g.node_count()) * grid.units.max_abs);
    ++result.iterations;
    if (!keeps_within(g, grid.units, ceiling)) {
        result.value = ExtValue::infinity();
        return result;
    }

    // Winning for the minimizer is monotone in the bound.
    std::int64_t lo = -1; // loses (or below range)
    std::int64_t hi = ceiling;
    while (hi - lo > 1) {
        std::int64_t mid = lo + (hi - lo) / 2;
        ++result.iterations;
        if (keeps_within(g, grid.units, mid))
            hi = mid;
        else
            lo = mid;
    }
    result.value = Rational(grid.step * hi);
    return result;
}

} // namespace bdist

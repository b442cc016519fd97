#include "bdist/error.hpp"
#include "bdist/solvers.hpp"

#include "integer_weights.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace bdist {

namespace detail {

IntegerWeights scale_to_integers(const GameGraph& g) {
    IntegerWeights result;
    for (NodeId n = 0; n < g.node_count(); ++n)
        for (const auto& e : g.out(n)) {
            if (e.weight.is_infinite())
                throw KindMismatch("game has an infinite weight");
            mpz_lcm(result.denominator.get_mpz_t(), result.denominator.get_mpz_t(),
                    e.weight.finite().get_den().get_mpz_t());
        }
    const mpz_class limit = mpz_class(1) << 62;
    result.weight.resize(g.node_count());
    for (NodeId n = 0; n < g.node_count(); ++n)
        for (const auto& e : g.out(n)) {
            const Rational& w = e.weight.finite();
            mpz_class scaled = w.get_num() * (result.denominator / w.get_den());
            if (abs(scaled) >= limit)
                throw std::overflow_error("edge weight too large after scaling to integers");
            const auto value = static_cast<std::int64_t>(scaled.get_si());
            result.weight[n].push_back(value);
            result.max_abs = std::max(result.max_abs, value < 0 ? -value : value);
        }
    return result;
}

} // namespace detail

namespace {

using detail::IntegerWeights;

/// One-player graph: successor lists with integer weights.
using Arena = std::vector<std::vector<std::pair<NodeId, std::int64_t>>>;

std::vector<NodeId> reachable(const Arena& arena, NodeId start) {
    std::vector<bool> seen(arena.size(), false);
    std::vector<NodeId> order{start}, stack{start};
    seen[start] = true;
    while (!stack.empty()) {
        NodeId u = stack.back();
        stack.pop_back();
        for (const auto& [v, w] : arena[u])
            if (!seen[v]) {
                seen[v] = true;
                order.push_back(v);
                stack.push_back(v);
            }
    }
    return order;
}

/// Strongly connected components of the subgraph induced by `nodes`
/// (Kosaraju, iterative).
std::vector<std::vector<NodeId>> components(const Arena& arena, const std::vector<NodeId>& nodes) {
    const std::size_t n = arena.size();
    std::vector<bool> inside(n, false);
    for (NodeId u : nodes)
        inside[u] = true;

    std::vector<bool> visited(n, false);
    std::vector<NodeId> finish;
    for (NodeId root : nodes) {
        if (visited[root])
            continue;
        std::vector<std::pair<NodeId, std::size_t>> stack{{root, 0}};
        visited[root] = true;
        while (!stack.empty()) {
            auto& [u, i] = stack.back();
            if (i < arena[u].size()) {
                NodeId v = arena[u][i++].first;
                if (inside[v] && !visited[v]) {
                    visited[v] = true;
                    stack.emplace_back(v, 0);
                }
            } else {
                finish.push_back(u);
                stack.pop_back();
            }
        }
    }

    std::vector<std::vector<NodeId>> reverse(n);
    for (NodeId u : nodes)
        for (const auto& [v, w] : arena[u])
            if (inside[v])
                reverse[v].push_back(u);

    std::vector<bool> assigned(n, false);
    std::vector<std::vector<NodeId>> result;
    for (auto it = finish.rbegin(); it != finish.rend(); ++it) {
        if (assigned[*it])
            continue;
        std::vector<NodeId> comp, stack{*it};
        assigned[*it] = true;
        while (!stack.empty()) {
            NodeId u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (NodeId v : reverse[u])
                if (!assigned[v]) {
                    assigned[v] = true;
                    stack.push_back(v);
                }
        }
        result.push_back(std::move(comp));
    }
    return result;
}

/// Minimum cycle mean inside one strongly connected component (Karp).
/// Returns nullopt for a trivial component without a cycle.
std::optional<Rational> min_cycle_mean(const Arena& arena, const std::vector<NodeId>& comp) {
    const std::size_t m = comp.size();
    std::vector<std::size_t> local(arena.size(), m);
    for (std::size_t i = 0; i < m; ++i)
        local[comp[i]] = i;

    bool has_edge = false;
    for (NodeId u : comp)
        for (const auto& [v, w] : arena[u])
            has_edge |= local[v] < m;
    if (!has_edge)
        return std::nullopt;

    constexpr std::int64_t unset = std::numeric_limits<std::int64_t>::max();
    std::vector<std::vector<std::int64_t>> walk(m + 1, std::vector<std::int64_t>(m, unset));
    walk[0][0] = 0;
    for (std::size_t k = 1; k <= m; ++k)
        for (std::size_t i = 0; i < m; ++i) {
            if (walk[k - 1][i] == unset)
                continue;
            for (const auto& [v, w] : arena[comp[i]])
                if (local[v] < m)
                    walk[k][local[v]] = std::min(walk[k][local[v]], walk[k - 1][i] + w);
        }

    std::optional<Rational> best;
    for (std::size_t v = 0; v < m; ++v) {
        if (walk[m][v] == unset)
            continue;
        std::optional<Rational> worst;
        for (std::size_t k = 0; k < m; ++k) {
            if (walk[k][v] == unset)
                continue;
            Rational mean(mpz_class(static_cast<long>(walk[m][v] - walk[k][v])), mpz_class(static_cast<long>(m - k)));
            mean.canonicalize();
            if (!worst || mean > *worst)
                worst = mean;
        }
        if (worst && (!best || *worst < *best))
            best = worst;
    }
    return best;
}

/// Best cycle mean the controlling player can reach from `start`:
/// minimal if `minimize`, maximal otherwise.
Rational extreme_reachable_cycle_mean(Arena arena, NodeId start, bool minimize) {
    if (!minimize)
        for (auto& succ : arena)
            for (auto& [v, w] : succ)
                w = -w;
    std::optional<Rational> best;
    for (const auto& comp : components(arena, reachable(arena, start)))
        if (auto mean = min_cycle_mean(arena, comp); mean && (!best || *mean < *best))
            best = mean;
    if (!best)
        throw std::logic_error("blocking one-player arena");
    return minimize ? *best : Rational(-*best);
}

/// Restricts the owner's nodes to the strategy's edge; the other player keeps all edges.
Arena fix_strategy(const GameGraph& g, const IntegerWeights& w, Player owner, const Strategy& strategy) {
    Arena arena(g.node_count());
    for (NodeId u = 0; u < g.node_count(); ++u) {
        auto edges = g.out(u);
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (g.owner(u) != owner || strategy[u] == i)
                arena[u].emplace_back(edges[i].target, w.weight[u][i]);
    }
    return arena;
}

/// Rational with denominator at most `max_den` closest to num/den.
Rational nearest_small_fraction(const mpz_class& num, const mpz_class& den, std::size_t max_den) {
    Rational target(num, den);
    target.canonicalize();
    std::optional<Rational> best;
    for (std::size_t q = 1; q <= max_den; ++q) {
        mpz_class scaled = num * q;
        mpz_class p;
        mpz_fdiv_q(p.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
        for (const mpz_class& candidate_num : {p, mpz_class(p + 1)}) {
            Rational candidate(candidate_num, mpz_class(static_cast<unsigned long>(q)));
            candidate.canonicalize();
            if (!best || abs(candidate - target) < abs(*best - target))
                best = candidate;
        }
    }
    return *best;
}

} // namespace

SolveResult solve_limavg(const GameGraph& g, bool certify) {
    if (g.selector() != Selector::LimitAverage)
        throw KindMismatch("game was built for the " + std::string(name(g.selector())) + " distance, not limavg");
    const IntegerWeights w = detail::scale_to_integers(g);
    const std::size_t n = g.node_count();

    SolveResult result;
    if (w.max_abs == 0) {
        result.value = 0;
        return result;
    }

    // v_k/k is within 2·N·W/k of the value; after 4·N³·W steps only one
    // rational with denominator ≤ N fits into that interval.
    const mpz_class steps_bound = mpz_class(4) * n * n * n * w.max_abs;
    if (steps_bound * w.max_abs >= (mpz_class(1) << 62))
        throw std::overflow_error("mean-payoff iteration bound exceeds 64-bit range");
    const auto total_steps = static_cast<std::size_t>(steps_bound.get_ui());

    std::vector<std::int64_t> value(n, 0), next(n, 0);
    Strategy choice(n);
    std::size_t checkpoint = n;
    for (std::size_t k = 1; k <= total_steps; ++k) {
        for (NodeId u = 0; u < n; ++u) {
            const bool maximize = g.owner(u) == Player::Maximizer;
            auto edges = g.out(u);
            std::int64_t best = 0;
            for (std::size_t i = 0; i < edges.size(); ++i) {
                std::int64_t candidate = w.weight[u][i] + value[edges[i].target];
                if (i == 0 || (maximize ? candidate > best : candidate < best)) {
                    best = candidate;
                    choice[u] = i;
                }
            }
            next[u] = best;
        }
        std::swap(value, next);

        if (certify && k == checkpoint) {
            checkpoint *= 2;
            // Positional strategies read off the current iterate bracket the
            // value; equal brackets prove it.
            Rational lower = extreme_reachable_cycle_mean(fix_strategy(g, w, Player::Maximizer, choice), g.initial(), true);
            Rational upper = extreme_reachable_cycle_mean(fix_strategy(g, w, Player::Minimizer, choice), g.initial(), false);
            if (lower == upper) {
                result.value = Rational(lower / w.denominator);
                result.iterations = k;
                result.witness = choice;
                return result;
            }
        }
    }

    Rational scaled = nearest_small_fraction(mpz_class(static_cast<long>(value[g.initial()])),
                                             mpz_class(static_cast<unsigned long>(total_steps)), n);
    result.value = Rational(scaled / w.denominator);
    result.iterations = total_steps;
    result.witness = choice;
    return result;
}

} // namespace bdist

#include "bdist/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace bdist::oracle {

namespace {

using Relation = std::vector<std::vector<bool>>;

/// Every move of `from` at s is matched by an equally labeled move of `to`
/// at t that stays in the relation (read through `related`).
template <typename Related>
bool transfers(const IndexedLts& from, std::size_t s, const IndexedLts& to, std::size_t t, Related related) {
    for (const auto& [label, s2] : from.out[s]) {
        bool matched = false;
        for (const auto& [label2, t2] : to.out[t])
            if (label == label2 && related(s2, t2)) {
                matched = true;
                break;
            }
        if (!matched)
            return false;
    }
    return true;
}

bool refine(const Lts& a, const Lts& b, bool symmetric) {
    const IndexedLts x = IndexedLts::from(a);
    const IndexedLts y = IndexedLts::from(b);
    Relation related(x.size(), std::vector<bool>(y.size(), true));
    auto forward = [&](std::size_t s, std::size_t t) { return related[s][t]; };
    auto backward = [&](std::size_t t, std::size_t s) { return related[s][t]; };

    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t s = 0; s < x.size(); ++s)
            for (std::size_t t = 0; t < y.size(); ++t) {
                if (!related[s][t])
                    continue;
                bool ok = transfers(x, s, y, t, forward) && (!symmetric || transfers(y, t, x, s, backward));
                if (!ok) {
                    related[s][t] = false;
                    changed = true;
                }
            }
    }
    return related[x.initial][y.initial];
}

/// Product of out-degrees of one player's nodes, saturating at `cap` + 1.
std::size_t strategy_count(const GameGraph& g, Player owner, std::size_t cap) {
    std::size_t total = 1;
    for (NodeId n = 0; n < g.node_count(); ++n)
        if (g.owner(n) == owner) {
            total *= g.out(n).size();
            if (total > cap)
                return cap + 1;
        }
    return total;
}

/// Odometer over the positional strategies of one player.
class StrategyCounter {
public:
    StrategyCounter(const GameGraph& g, Player owner) : g_(g), choice_(g.node_count()) {
        for (NodeId n = 0; n < g.node_count(); ++n)
            if (g.owner(n) == owner) {
                owned_.push_back(n);
                choice_[n] = 0;
            }
    }

    const Strategy& current() const { return choice_; }

    bool advance() {
        for (NodeId n : owned_) {
            if (++*choice_[n] < g_.out(n).size())
                return true;
            choice_[n] = 0;
        }
        return false;
    }

private:
    const GameGraph& g_;
    std::vector<NodeId> owned_;
    Strategy choice_;
};

Lasso<SignedWeight> induced_play(const GameGraph& g, const Strategy& max_choice, const Strategy& min_choice) {
    std::vector<std::optional<std::size_t>> position(g.node_count());
    std::vector<SignedWeight> weights;
    NodeId u = g.initial();
    while (!position[u]) {
        position[u] = weights.size();
        const auto& choice = g.owner(u) == Player::Maximizer ? max_choice : min_choice;
        const GameEdge& e = g.out(u)[*choice[u]];
        weights.push_back(e.weight);
        u = e.target;
    }
    const auto split = static_cast<std::ptrdiff_t>(*position[u]);
    return {std::vector<SignedWeight>(weights.begin(), weights.begin() + split),
            std::vector<SignedWeight>(weights.begin() + split, weights.end())};
}

ExtValue play_value(const DistanceKind& kind, const Lasso<SignedWeight>& play) {
    if (kind.selector() == Selector::Discounted) {
        // Plays start at a maximizer node, so minimizer weights sit at odd positions.
        return val_on_lasso(kind, every_other(play, 1));
    }
    return val_on_lasso(kind, play);
}

} // namespace

bool classical_simulation(const Lts& a, const Lts& b) { return refine(a, b, false); }

bool classical_bisimulation(const Lts& a, const Lts& b) { return refine(a, b, true); }

bool within_limits(const GameGraph& g, EnumerationLimits limits) {
    if (g.node_count() > limits.max_nodes)
        return false;
    const std::size_t cap = limits.max_strategy_pairs;
    std::size_t maxs = strategy_count(g, Player::Maximizer, cap);
    std::size_t mins = strategy_count(g, Player::Minimizer, cap);
    return maxs <= cap && mins <= cap && maxs * mins <= cap;
}

ExtValue enumerate_positional_value(const GameGraph& g, const DistanceKind& kind, EnumerationLimits limits) {
    if (kind.selector() == Selector::MaxLead)
        throw std::invalid_argument("maximum-lead games are not positionally determined");
    if (!within_limits(g, limits))
        throw std::length_error("game too large for strategy enumeration");

    std::optional<ExtValue> best;
    StrategyCounter max_strategies(g, Player::Maximizer);
    do {
        std::optional<ExtValue> worst;
        StrategyCounter min_strategies(g, Player::Minimizer);
        do {
            ExtValue v = play_value(kind, induced_play(g, max_strategies.current(), min_strategies.current()));
            if (!worst || v < *worst)
                worst = v;
            // The maximizer cannot improve on an earlier strategy here.
            if (best && *worst <= *best)
                break;
        } while (min_strategies.advance());
        if (!best || *worst > *best)
            best = worst;
    } while (max_strategies.advance());
    return *best;
}

namespace {

struct History {
    std::size_t round = 0;
    ExtValue peak = 0;                              // Discrete, PointWise
    std::optional<std::size_t> first_mismatch;      // Cantor
    Rational discounted = 0;                        // Discounted
    Rational factor = 1;                            // λ^round
    Rational lead = 0;                              // MaxLead
    Rational lead_peak = 0;                         // MaxLead
};

class Minimax {
public:
    Minimax(const GameGraph& g, const DistanceKind& kind, std::size_t horizon)
        : g_(g), kind_(kind), horizon_(horizon) {
        for (NodeId n = 0; n < g.node_count(); ++n)
            if (g.owner(n) == Player::Minimizer)
                for (const auto& e : g.out(n))
                    if (!largest_ || e.weight > *largest_)
                        largest_ = e.weight;
    }

    Bracket run() { return visit(g_.initial(), History{}); }

private:
    Bracket visit(NodeId u, const History& h) {
        if (g_.owner(u) == Player::Maximizer && h.round == horizon_)
            return leaf(h);
        const bool maximize = g_.owner(u) == Player::Maximizer;
        std::optional<Bracket> best;
        for (const auto& e : g_.out(u)) {
            Bracket child = visit(e.target, maximize ? h : record(h, e.weight));
            if (!best) {
                best = child;
            } else if (maximize) {
                best->lower = std::max(best->lower, child.lower);
                best->upper = std::max(best->upper, child.upper);
            } else {
                best->lower = std::min(best->lower, child.lower);
                best->upper = std::min(best->upper, child.upper);
            }
        }
        return *best;
    }

    History record(History h, const SignedWeight& w) const {
        switch (kind_.selector()) {
        case Selector::Discrete:
        case Selector::PointWise:
            h.peak = std::max(h.peak, ExtValue(w));
            break;
        case Selector::Cantor:
            if (!w.is_zero() && !h.first_mismatch)
                h.first_mismatch = h.round;
            break;
        case Selector::Discounted:
            h.discounted += h.factor * w.finite();
            h.factor *= kind_.lambda();
            break;
        case Selector::MaxLead:
            h.lead += w.finite();
            h.lead_peak = std::max(h.lead_peak, Rational(abs(h.lead)));
            break;
        case Selector::LimitAverage:
            break;
        }
        ++h.round;
        return h;
    }

    Bracket leaf(const History& h) const {
        switch (kind_.selector()) {
        case Selector::Discrete:
        case Selector::PointWise: {
            ExtValue future = largest_ ? ExtValue(*largest_) : ExtValue(0);
            return {h.peak, std::max(h.peak, future)};
        }
        case Selector::Cantor:
            if (h.first_mismatch) {
                ExtValue v = Rational(mpz_class(1), mpz_class(static_cast<unsigned long>(*h.first_mismatch + 1)));
                return {v, v};
            }
            return {0, Rational(mpz_class(1), mpz_class(static_cast<unsigned long>(horizon_ + 1)))};
        case Selector::Discounted: {
            Rational tail = largest_ ? Rational(h.factor * largest_->finite() / (1 - kind_.lambda())) : Rational(0);
            return {Rational(h.discounted), Rational(h.discounted + tail)};
        }
        case Selector::MaxLead:
            return {Rational(h.lead_peak), ExtValue::infinity()};
        case Selector::LimitAverage:
            break;
        }
        throw std::logic_error("unreachable");
    }

    const GameGraph& g_;
    const DistanceKind& kind_;
    std::size_t horizon_;
    std::optional<SignedWeight> largest_;
};

} // namespace

Bracket bounded_minimax(const GameGraph& g, const DistanceKind& kind, std::size_t horizon) {
    if (kind.selector() == Selector::LimitAverage) {
        // Every play alternates 0-weight maximizer edges with minimizer
        // edges, so cycle means lie within half the extreme minimizer weights.
        std::optional<Rational> lo, hi;
        for (NodeId n = 0; n < g.node_count(); ++n)
            if (g.owner(n) == Player::Minimizer)
                for (const auto& e : g.out(n)) {
                    const Rational& w = e.weight.finite();
                    if (!lo || w < *lo)
                        lo = w;
                    if (!hi || w > *hi)
                        hi = w;
                }
        return {Rational(lo.value_or(0) / 2), Rational(hi.value_or(0) / 2)};
    }
    return Minimax(g, kind, horizon).run();
}

} // namespace bdist::oracle

#pragma once

// Random instances for property and acceptance tests.

#include "bdist/label_distance.hpp"
#include "bdist/lasso.hpp"
#include "bdist/lts.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace bdist::testing {

struct LtsShape {
    std::size_t max_states = 4;
    std::size_t max_out_degree = 2;
    std::vector<Label> labels;
};

inline std::vector<Label> symbols(std::size_t n) {
    std::vector<Label> out;
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(Label::symbol(std::string(1, static_cast<char>('a' + i))));
    return out;
}

inline std::vector<Label> numbers(std::initializer_list<long> values) {
    std::vector<Label> out;
    for (long v : values)
        out.push_back(Label::number(Rational(v)));
    return out;
}

inline std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

/// Random non-blocking Lts: 1..max_states states, each with
/// 1..max_out_degree outgoing transitions.
inline Lts random_lts(std::mt19937_64& rng, const LtsShape& shape, const std::string& prefix = "s") {
    const std::size_t n = uniform(rng, 1, shape.max_states);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i)
        names.push_back(prefix + std::to_string(i));
    std::set<Transition> transitions;
    for (const auto& source : names) {
        const std::size_t degree = uniform(rng, 1, shape.max_out_degree);
        for (std::size_t k = 0; k < degree; ++k)
            transitions.insert({source, shape.labels[uniform(rng, 0, shape.labels.size() - 1)],
                                names[uniform(rng, 0, n - 1)]});
    }
    return Lts({names.begin(), names.end()}, names.front(), std::move(transitions));
}

/// Copy of `lts` with states renamed and extra transitions added, so that
/// the copy simulates the original.
inline Lts with_extra_transitions(std::mt19937_64& rng, const Lts& lts, const std::vector<Label>& labels,
                                  std::size_t extra, const std::string& prefix) {
    auto rename = [&](const std::string& s) { return prefix + s; };
    std::set<std::string> states;
    for (const auto& s : lts.states())
        states.insert(rename(s));
    std::set<Transition> transitions;
    for (const auto& t : lts.transitions())
        transitions.insert({rename(t.source), t.label, rename(t.target)});
    std::vector<std::string> names(states.begin(), states.end());
    for (std::size_t k = 0; k < extra; ++k)
        transitions.insert({names[uniform(rng, 0, names.size() - 1)], labels[uniform(rng, 0, labels.size() - 1)],
                            names[uniform(rng, 0, names.size() - 1)]});
    return Lts(std::move(states), rename(lts.initial()), std::move(transitions));
}

/// Unfolds every state into two copies that behave identically, giving a
/// bisimilar system with different structure.
inline Lts doubled(const Lts& lts, const std::string& prefix) {
    std::set<std::string> states;
    std::set<Transition> transitions;
    for (const auto& s : lts.states())
        for (int copy : {0, 1})
            states.insert(prefix + s + "_" + std::to_string(copy));
    for (const auto& t : lts.transitions())
        for (int from : {0, 1})
            transitions.insert({prefix + t.source + "_" + std::to_string(from), t.label,
                                prefix + t.target + "_" + std::to_string(1 - from)});
    return Lts(std::move(states), prefix + lts.initial() + "_0", std::move(transitions));
}

template <typename T>
Lasso<T> random_lasso(std::mt19937_64& rng, const std::vector<T>& alphabet, std::size_t max_prefix,
                      std::size_t max_cycle) {
    auto pick = [&] { return alphabet[uniform(rng, 0, alphabet.size() - 1)]; };
    std::vector<T> prefix(uniform(rng, 0, max_prefix));
    std::vector<T> cycle(uniform(rng, 1, max_cycle));
    for (auto& x : prefix)
        x = pick();
    for (auto& x : cycle)
        x = pick();
    return {std::move(prefix), std::move(cycle)};
}

/// Random label distance with values drawn from `values` (no triangle
/// inequality imposed).
inline LabelDistance random_label_distance(std::mt19937_64& rng, const std::vector<Label>& labels,
                                           const std::vector<Rational>& values) {
    LabelDistance d(DefaultRule::ZeroElseOne);
    for (const auto& a : labels)
        for (const auto& b : labels)
            if (a != b)
                d.set(a, b, values[uniform(rng, 0, values.size() - 1)]);
    return d;
}

/// Random hemimetric: random positive entries closed under shortest paths,
/// so d(a, c) ≤ d(a, b) + d(b, c).
inline LabelDistance random_hemimetric(std::mt19937_64& rng, const std::vector<Label>& labels,
                                       const std::vector<Rational>& values) {
    const std::size_t n = labels.size();
    std::vector<std::vector<Rational>> dist(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j)
                dist[i][j] = values[uniform(rng, 0, values.size() - 1)];
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (dist[i][k] + dist[k][j] < dist[i][j])
                    dist[i][j] = dist[i][k] + dist[k][j];
    LabelDistance d(DefaultRule::ZeroElseOne);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j)
                d.set(labels[i], labels[j], dist[i][j]);
    return d;
}

} // namespace bdist::testing

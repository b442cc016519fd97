#pragma once

#include "bdist/label.hpp"

#include <compare>
#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bdist {

struct Transition {
    std::string source;
    Label label;
    std::string target;

    friend bool operator==(const Transition&, const Transition&) = default;
    friend std::strong_ordering operator<=>(const Transition&, const Transition&) = default;
};

/// A labeled transition system (S, i, T). The structure itself does not
/// enforce its invariants so that `validate` can report on arbitrary input;
/// everything downstream of parsing requires a valid Lts.
class Lts {
public:
    Lts() = default;
    Lts(std::set<std::string> states, std::string initial, std::set<Transition> transitions)
        : states_(std::move(states)), initial_(std::move(initial)), transitions_(std::move(transitions)) {}

    const std::set<std::string>& states() const noexcept { return states_; }
    const std::string& initial() const noexcept { return initial_; }
    const std::set<Transition>& transitions() const noexcept { return transitions_; }

    std::set<Label> alphabet() const;

    /// True iff there is at least one transition and every label is numeric.
    bool has_numeric_labels() const;

    friend bool operator==(const Lts&, const Lts&) = default;

private:
    std::set<std::string> states_;
    std::string initial_;
    std::set<Transition> transitions_;
};

struct Diagnostic {
    enum class Kind { BadInitial, UndeclaredState, Blocking, MixedLabels };

    Kind kind;
    std::string subject;

    std::string describe() const;
    friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

/// One diagnostic per violated invariant; empty iff the Lts is valid.
std::vector<Diagnostic> validate(const Lts& lts);

/// Throws ValidationError if `validate` reports anything.
void require_valid(const Lts& lts);

/// Parses the line-oriented LTS format:
///
///     # comment
///     states: s0 s1
///     init: s0
///     trans: s0 a s1
///
/// Throws ParseError for malformed lines and ValidationError when the
/// result violates an Lts invariant (blocking state, undeclared state,
/// mixed label kinds).
Lts parse_lts(std::string_view text);

/// Inverse of parse_lts; states and transitions in sorted order.
std::string serialize(const Lts& lts);

/// Dense view of a valid Lts: states numbered in lexicographic order of
/// their names, successors sorted by (label, target).
struct IndexedLts {
    std::vector<std::string> names;
    std::size_t initial = 0;
    std::vector<std::vector<std::pair<Label, std::size_t>>> out;

    static IndexedLts from(const Lts& lts);

    std::size_t size() const noexcept { return names.size(); }
};

} // namespace bdist

#pragma once

#include "bdist/label.hpp"
#include "bdist/rational.hpp"

#include <map>
#include <set>
#include <string_view>
#include <utility>

namespace bdist {

/// Rule applied to label pairs that have no explicit table entry.
enum class DefaultRule {
    ZeroElseOne,      // "eq0-else1"
    ZeroElseInfinity, // "eq0-elseinf"
};

/// A directed label distance d : Σ×Σ → ℚ≥0 ∪ {∞}. Lookup is total; d(a, a)
/// is always zero. No symmetry or triangle inequality is assumed.
class LabelDistance {
public:
    explicit LabelDistance(DefaultRule rule = DefaultRule::ZeroElseOne) : rule_(rule) {}

    /// Throws std::invalid_argument if a == b and value != 0.
    void set(const Label& a, const Label& b, ExtValue value);

    ExtValue operator()(const Label& a, const Label& b) const;

    DefaultRule default_rule() const noexcept { return rule_; }
    const std::map<std::pair<Label, Label>, ExtValue>& entries() const noexcept { return table_; }

    /// Whether d(a, b) = ∞ for some pair drawn from `alphabet`.
    bool has_infinity(const std::set<Label>& alphabet) const;

private:
    std::map<std::pair<Label, Label>, ExtValue> table_;
    DefaultRule rule_;
};

/// Parses a label-distance table:
///
///     default: eq0-else1
///     d a b 1/2
///     d b a inf
///
/// The `default:` header is optional (eq0-else1 when absent). Every label
/// must belong to `alphabet`; numeric labels match by value.
LabelDistance parse_label_distance(std::string_view text, const std::set<Label>& alphabet);

} // namespace bdist

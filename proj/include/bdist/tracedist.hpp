#pragma once

#include "bdist/label.hpp"
#include "bdist/label_distance.hpp"
#include "bdist/lasso.hpp"
#include "bdist/rational.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace bdist {

enum class Selector { Discrete, PointWise, Discounted, LimitAverage, Cantor, MaxLead };

std::string_view name(Selector selector);
/// Accepts the CLI names: discrete, pointwise, discounted, limavg, cantor, maxlead.
std::optional<Selector> parse_selector(std::string_view text);

/// One of the six trace distances together with its parameters.
class DistanceKind {
public:
    static DistanceKind discrete();
    static DistanceKind pointwise(LabelDistance d);
    /// Throws std::invalid_argument unless 0 <= lambda < 1.
    static DistanceKind discounted(Rational lambda, LabelDistance d);
    static DistanceKind limit_average(LabelDistance d);
    static DistanceKind cantor();
    static DistanceKind max_lead();

    Selector selector() const noexcept { return selector_; }
    /// Discounted only.
    const Rational& lambda() const;
    /// PointWise, Discounted and LimitAverage only.
    const LabelDistance& label_distance() const;

private:
    explicit DistanceKind(Selector s) : selector_(s) {}

    Selector selector_;
    std::optional<Rational> lambda_;
    std::optional<LabelDistance> label_distance_;
};

/// Weight of a minimizer answer with label b to a maximizer move with
/// label a, chosen so that the valuation of the interleaved weight
/// sequence (0, f(σ0,τ0), 0, f(σ1,τ1), ...) equals the trace distance.
/// Discounted weights are per round and undiscounted.
///
/// Throws KindMismatch for MaxLead on symbolic labels and for an infinite
/// label distance under Discounted or LimitAverage.
SignedWeight f_weight(const DistanceKind& kind, const Label& a, const Label& b);

/// Closed-form valuation of an eventually periodic weight sequence.
/// For Discounted the input is the round-indexed sequence of minimizer
/// weights; for every other kind it is the full interleaved sequence.
ExtValue val_on_lasso(const DistanceKind& kind, const Lasso<SignedWeight>& w);

/// Direct evaluation of the trace distance between two eventually
/// periodic traces.
ExtValue trace_distance(const DistanceKind& kind, const Lasso<Label>& s, const Lasso<Label>& t);

/// The weight sequence whose valuation is trace_distance(kind, s, t):
/// 0 and f_weight alternating, or for Discounted the round weights alone.
Lasso<SignedWeight> interleave(const DistanceKind& kind, const Lasso<Label>& s, const Lasso<Label>& t);

} // namespace bdist

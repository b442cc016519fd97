#include "bdist/error.hpp"
#include "bdist/tracedist.hpp"

#include "support/generators.hpp"

#include <catch_amalgamated.hpp>

using namespace bdist;

namespace {

const Label a = Label::symbol("a");
const Label b = Label::symbol("b");
const Label c = Label::symbol("c");

Label num(long v) { return Label::number(Rational(v)); }

Lasso<SignedWeight> weights(std::vector<long> prefix, std::vector<long> cycle) {
    auto convert = [](const std::vector<long>& xs) {
        std::vector<SignedWeight> out;
        for (long x : xs)
            out.emplace_back(Rational(x));
        return out;
    };
    return {convert(prefix), convert(cycle)};
}

LabelDistance unit_distance() { return LabelDistance(DefaultRule::ZeroElseOne); }

std::vector<DistanceKind> kinds_for(const LabelDistance& d) {
    return {DistanceKind::discrete(),
            DistanceKind::pointwise(d),
            DistanceKind::discounted(Rational(1, 2), d),
            DistanceKind::limit_average(d),
            DistanceKind::cantor()};
}

} // namespace

TEST_CASE("f_weight per kind")
{
    REQUIRE(f_weight(DistanceKind::discrete(), a, a) == SignedWeight(0));
    REQUIRE(f_weight(DistanceKind::discrete(), a, b).is_infinite());
    REQUIRE(f_weight(DistanceKind::max_lead(), num(3), num(1)) == SignedWeight(2));
    REQUIRE(f_weight(DistanceKind::max_lead(), num(1), num(3)) == SignedWeight(-2));
    REQUIRE(f_weight(DistanceKind::limit_average(unit_distance()), a, b) == SignedWeight(2));
    REQUIRE(f_weight(DistanceKind::cantor(), a, b) == SignedWeight(1));
    REQUIRE(f_weight(DistanceKind::cantor(), b, b) == SignedWeight(0));
    REQUIRE(f_weight(DistanceKind::discounted(Rational(1, 3), unit_distance()), a, b) == SignedWeight(1));

    LabelDistance infinite(DefaultRule::ZeroElseInfinity);
    REQUIRE(f_weight(DistanceKind::pointwise(infinite), a, b).is_infinite());
    REQUIRE_THROWS_AS(f_weight(DistanceKind::limit_average(infinite), a, b), KindMismatch);
    REQUIRE_THROWS_AS(f_weight(DistanceKind::discounted(Rational(1, 2), infinite), a, b), KindMismatch);
    REQUIRE_THROWS_AS(f_weight(DistanceKind::max_lead(), a, b), KindMismatch);
}

TEST_CASE("discount factor must lie in [0, 1)")
{
    REQUIRE_NOTHROW(DistanceKind::discounted(Rational(0), unit_distance()));
    REQUIRE_THROWS_AS(DistanceKind::discounted(Rational(1), unit_distance()), std::invalid_argument);
    REQUIRE_THROWS_AS(DistanceKind::discounted(Rational(-1, 2), unit_distance()), std::invalid_argument);
}

TEST_CASE("val_on_lasso closed forms")
{
    auto d = unit_distance();
    // 1 + 1/2 + 1/4 + ... = 2
    REQUIRE(val_on_lasso(DistanceKind::discounted(Rational(1, 2), d), weights({}, {1})) == ExtValue(2));
    // 3 + (1/2)·(1 / (1 − 1/2)) = 4
    REQUIRE(val_on_lasso(DistanceKind::discounted(Rational(1, 2), d), weights({3}, {1})) == ExtValue(4));
    REQUIRE(val_on_lasso(DistanceKind::limit_average(d), weights({5}, {1, 3})) == ExtValue(2));
    // partial sums 1, −1, 0, −1, 0, ... → max |.| = 1
    REQUIRE(val_on_lasso(DistanceKind::max_lead(), weights({1, -2}, {1, -1})) == ExtValue(1));
    REQUIRE(val_on_lasso(DistanceKind::max_lead(), weights({}, {1, 0})).is_infinite());
    REQUIRE(val_on_lasso(DistanceKind::cantor(), weights({0, 0}, {0})) == ExtValue(0));
    // first nonzero at interleaved index 3 → 2/(1+3)
    REQUIRE(val_on_lasso(DistanceKind::cantor(), weights({0, 0, 0}, {1})) == ExtValue(Rational(1, 2)));
    REQUIRE(val_on_lasso(DistanceKind::pointwise(d), weights({0, 3}, {1})) == ExtValue(3));
    REQUIRE(val_on_lasso(DistanceKind::discrete(), weights({0}, {0})) == ExtValue(0));
    REQUIRE(val_on_lasso(DistanceKind::discrete(), {{SignedWeight::infinity()}, {SignedWeight(0)}}).is_infinite());
}

TEST_CASE("trace_distance examples")
{
    auto d = unit_distance();
    const Lasso<Label> ab({a}, {b});
    const Lasso<Label> aa({}, {a});
    REQUIRE(trace_distance(DistanceKind::cantor(), ab, aa) == ExtValue(Rational(1, 2)));
    REQUIRE(trace_distance(DistanceKind::pointwise(d), ab, aa) == ExtValue(1));
    REQUIRE(trace_distance(DistanceKind::discrete(), ab, aa).is_infinite());
    REQUIRE(trace_distance(DistanceKind::discrete(), aa, Lasso<Label>({a, a}, {a, a})) == ExtValue(0));
    REQUIRE(trace_distance(DistanceKind::limit_average(d), ab, aa) == ExtValue(1));
    // rounds 1, 2, ... differ: Σ_{n≥1} (1/2)^n = 1
    REQUIRE(trace_distance(DistanceKind::discounted(Rational(1, 2), d), ab, aa) == ExtValue(1));

    // a b a b ... against a a a a ...: half the positions differ
    REQUIRE(trace_distance(DistanceKind::limit_average(d), Lasso<Label>({}, {a, b}), aa) ==
            ExtValue(Rational(1, 2)));

    const Lasso<Label> up({}, {num(1), num(-1)});
    const Lasso<Label> flat({}, {num(0)});
    REQUIRE(trace_distance(DistanceKind::max_lead(), up, flat) == ExtValue(1));
    REQUIRE(trace_distance(DistanceKind::max_lead(), Lasso<Label>({}, {num(2)}), Lasso<Label>({}, {num(1)}))
                .is_infinite());
}

TEST_CASE("interleave shape")
{
    const Lasso<Label> s({a}, {b, c});
    const Lasso<Label> t({}, {a});
    auto w = interleave(DistanceKind::cantor(), s, t);
    REQUIRE(w.prefix() == std::vector<SignedWeight>{SignedWeight(0), SignedWeight(0)});
    REQUIRE(w.cycle().size() == 4);
    REQUIRE(w.cycle()[1] == SignedWeight(1));

    auto rounds = interleave(DistanceKind::discounted(Rational(1, 2), unit_distance()), s, t);
    REQUIRE(rounds.prefix() == std::vector<SignedWeight>{SignedWeight(0)});
    REQUIRE(rounds.cycle() == std::vector<SignedWeight>{SignedWeight(1), SignedWeight(1)});
}

TEST_CASE("lasso helpers")
{
    Lasso<int> x({1, 2, 3}, {4, 5});
    REQUIRE(x[7] == 4);
    auto u = x.unrolled(4, 4);
    for (std::size_t n = 0; n < 20; ++n)
        REQUIRE(u[n] == x[n]);
    auto odd = every_other(x, 1);
    auto even = every_other(x, 0);
    for (std::size_t n = 0; n < 20; ++n) {
        REQUIRE(odd[n] == x[2 * n + 1]);
        REQUIRE(even[n] == x[2 * n]);
    }
    REQUIRE_THROWS_AS(Lasso<int>({1}, {}), std::invalid_argument);
}

TEST_CASE("valuation of interleaved weights equals the trace distance")
{
    std::mt19937_64 rng(11);
    const auto labels = testing::symbols(3);
    const std::vector<Rational> values{Rational(0), Rational(1, 2), Rational(1), Rational(2)};
    for (int i = 0; i < 100; ++i) {
        auto d = testing::random_label_distance(rng, labels, values);
        auto s = testing::random_lasso(rng, labels, 4, 4);
        auto t = testing::random_lasso(rng, labels, 4, 4);
        for (const auto& kind : kinds_for(d))
            REQUIRE(val_on_lasso(kind, interleave(kind, s, t)) == trace_distance(kind, s, t));
    }
    const auto numeric = testing::numbers({-1, 0, 1, 2});
    for (int i = 0; i < 100; ++i) {
        auto s = testing::random_lasso(rng, numeric, 4, 4);
        auto t = testing::random_lasso(rng, numeric, 4, 4);
        const auto kind = DistanceKind::max_lead();
        REQUIRE(val_on_lasso(kind, interleave(kind, s, t)) == trace_distance(kind, s, t));
    }
}

TEST_CASE("trace distances are hemimetrics")
{
    std::mt19937_64 rng(12);
    const auto labels = testing::symbols(3);
    const std::vector<Rational> values{Rational(1, 2), Rational(1), Rational(2)};
    for (int i = 0; i < 100; ++i) {
        auto d = testing::random_hemimetric(rng, labels, values);
        auto r = testing::random_lasso(rng, labels, 3, 3);
        auto s = testing::random_lasso(rng, labels, 3, 3);
        auto t = testing::random_lasso(rng, labels, 3, 3);
        for (const auto& kind : kinds_for(d)) {
            REQUIRE(trace_distance(kind, r, r) == ExtValue(0));
            REQUIRE(trace_distance(kind, r, s) + trace_distance(kind, s, t) >= trace_distance(kind, r, t));
        }
    }
    const auto numeric = testing::numbers({-1, 0, 1});
    for (int i = 0; i < 100; ++i) {
        auto r = testing::random_lasso(rng, numeric, 3, 3);
        auto s = testing::random_lasso(rng, numeric, 3, 3);
        auto t = testing::random_lasso(rng, numeric, 3, 3);
        const auto kind = DistanceKind::max_lead();
        REQUIRE(trace_distance(kind, r, r) == ExtValue(0));
        REQUIRE(trace_distance(kind, r, s) + trace_distance(kind, s, t) >= trace_distance(kind, r, t));
    }
}

TEST_CASE("maximum lead is infinite exactly when the cycle drifts")
{
    std::mt19937_64 rng(13);
    const auto numeric = testing::numbers({-2, 0, 1, 3});
    for (int i = 0; i < 200; ++i) {
        auto s = testing::random_lasso(rng, numeric, 3, 3);
        auto t = testing::random_lasso(rng, numeric, 3, 3);
        auto aligned = zip(s, t);
        Rational drift = 0;
        for (const auto& [x, y] : aligned.cycle())
            drift += x.number() - y.number();
        REQUIRE(trace_distance(DistanceKind::max_lead(), s, t).is_infinite() == (sgn(drift) != 0));
    }
}

TEST_CASE("extended rationals")
{
    REQUIRE(ExtValue::infinity() + ExtValue(3) == ExtValue::infinity());
    REQUIRE(ExtValue(3) < ExtValue::infinity());
    REQUIRE(SignedWeight(-1) < SignedWeight(0));
    REQUIRE(ExtValue::infinity().to_string() == "inf");
    REQUIRE(ExtValue(Rational(1, 2)).to_string() == "1/2");
}

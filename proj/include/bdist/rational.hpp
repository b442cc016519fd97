#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bdist {

using Rational = mpq_class;

/// Parses an exact rational written as an integer ("-3"), a decimal
/// ("0.125") or a fraction ("7/4"). Returns nullopt on anything else.
std::optional<Rational> try_parse_rational(std::string_view text);

/// As try_parse_rational, but throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise (canonical form).
std::string to_string(const Rational& value);

Rational rational_pow(const Rational& base, std::size_t exponent);

/// A rational extended with +infinity. With NonNegative set, finite values
/// below zero are rejected on construction.
template <bool NonNegative>
class ExtRational {
public:
    ExtRational() = default;

    ExtRational(Rational value) : value_(std::move(value)) {
        value_.canonicalize();
        if constexpr (NonNegative) {
            if (sgn(value_) < 0)
                throw std::domain_error("negative value " + bdist::to_string(value_) + " for a non-negative quantity");
        }
    }

    template <std::integral I>
    ExtRational(I value) : ExtRational(Rational(static_cast<long>(value))) {}

    template <bool Other>
        requires(Other != NonNegative)
    explicit ExtRational(const ExtRational<Other>& other)
        : ExtRational(other.is_infinite() ? infinity() : ExtRational(other.finite())) {}

    static ExtRational infinity() {
        ExtRational result;
        result.infinite_ = true;
        return result;
    }

    bool is_infinite() const noexcept { return infinite_; }
    bool is_finite() const noexcept { return !infinite_; }
    bool is_zero() const noexcept { return !infinite_ && sgn(value_) == 0; }

    const Rational& finite() const {
        if (infinite_)
            throw std::logic_error("finite() on an infinite value");
        return value_;
    }

    std::string to_string() const { return infinite_ ? "inf" : bdist::to_string(value_); }

    friend ExtRational operator+(const ExtRational& a, const ExtRational& b) {
        if (a.infinite_ || b.infinite_)
            return infinity();
        return ExtRational(Rational(a.value_ + b.value_));
    }

    ExtRational& operator+=(const ExtRational& other) { return *this = *this + other; }

    friend bool operator==(const ExtRational& a, const ExtRational& b) {
        if (a.infinite_ || b.infinite_)
            return a.infinite_ == b.infinite_;
        return a.value_ == b.value_;
    }

    friend std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b) {
        if (a.infinite_ || b.infinite_)
            return a.infinite_ <=> b.infinite_;
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

private:
    Rational value_{0};
    bool infinite_ = false;
};

using ExtValue = ExtRational<true>;
using SignedWeight = ExtRational<false>;

inline std::string to_string(const ExtValue& v) { return v.to_string(); }
inline std::string to_string(const SignedWeight& v) { return v.to_string(); }

} // namespace bdist

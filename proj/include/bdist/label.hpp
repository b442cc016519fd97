#pragma once

#include "bdist/rational.hpp"

#include <compare>
#include <string>
#include <string_view>
#include <variant>

namespace bdist {

/// A transition label: either an opaque symbol or an exact number.
/// Numeric labels compare by value, so "2", "2.0" and "4/2" are the same label.
class Label {
public:
    Label() = default;

    static Label symbol(std::string name);
    static Label number(Rational value);

    /// Numeric if the token reads as a rational, symbolic otherwise.
    static Label parse(std::string_view token);

    bool is_numeric() const noexcept { return std::holds_alternative<Rational>(value_); }
    const Rational& number() const;
    const std::string& symbol() const;

    std::string text() const;

    friend bool operator==(const Label& a, const Label& b);
    // Numbers order before symbols; within a variant, by value.
    friend std::strong_ordering operator<=>(const Label& a, const Label& b);

private:
    std::variant<std::string, Rational> value_;
};

} // namespace bdist

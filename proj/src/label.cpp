#include "bdist/label.hpp"

#include <stdexcept>

namespace bdist {

Label Label::symbol(std::string name) {
    Label l;
    l.value_ = std::move(name);
    return l;
}

Label Label::number(Rational value) {
    Label l;
    value.canonicalize();
    l.value_ = std::move(value);
    return l;
}

Label Label::parse(std::string_view token) {
    if (auto value = try_parse_rational(token))
        return number(std::move(*value));
    return symbol(std::string(token));
}

const Rational& Label::number() const {
    if (!is_numeric())
        throw std::logic_error("label '" + symbol() + "' is not numeric");
    return std::get<Rational>(value_);
}

const std::string& Label::symbol() const {
    if (is_numeric())
        throw std::logic_error("label " + to_string(number()) + " is not symbolic");
    return std::get<std::string>(value_);
}

std::string Label::text() const {
    return is_numeric() ? to_string(number()) : symbol();
}

bool operator==(const Label& a, const Label& b) {
    if (a.is_numeric() != b.is_numeric())
        return false;
    if (a.is_numeric())
        return a.number() == b.number();
    return a.symbol() == b.symbol();
}

std::strong_ordering operator<=>(const Label& a, const Label& b) {
    if (a.is_numeric() != b.is_numeric())
        return a.is_numeric() ? std::strong_ordering::less : std::strong_ordering::greater;
    if (a.is_numeric()) {
        const int c = cmp(a.number(), b.number());
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }
    return a.symbol() <=> b.symbol();
}

} // namespace bdist

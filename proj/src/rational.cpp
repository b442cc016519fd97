#include "bdist/rational.hpp"

#include <cctype>

namespace bdist {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

} // namespace

std::optional<Rational> try_parse_rational(std::string_view text) {
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }

    Rational result;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        auto num = text.substr(0, slash);
        auto den = text.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            return std::nullopt;
        mpz_class d(std::string(den), 10);
        if (d == 0)
            return std::nullopt;
        result = Rational(mpz_class(std::string(num), 10), d);
    } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
        auto whole = text.substr(0, dot);
        auto frac = text.substr(dot + 1);
        if (!all_digits(whole) || !all_digits(frac))
            return std::nullopt;
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        result = Rational(mpz_class(std::string(whole) + std::string(frac), 10), scale);
    } else {
        if (!all_digits(text))
            return std::nullopt;
        result = Rational(mpz_class(std::string(text), 10));
    }
    result.canonicalize();
    if (negative)
        result = -result;
    return result;
}

Rational parse_rational(std::string_view text) {
    auto value = try_parse_rational(text);
    if (!value)
        throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
    return *value;
}

std::string to_string(const Rational& value) {
    if (value.get_den() == 1)
        return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational rational_pow(const Rational& base, std::size_t exponent) {
    Rational result(1);
    Rational square = base;
    while (exponent > 0) {
        if (exponent & 1U)
            result *= square;
        square *= square;
        exponent >>= 1U;
    }
    return result;
}

} // namespace bdist

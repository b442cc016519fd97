#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace bdist {

/// The eventually periodic sequence prefix · cycle^ω.
template <typename T>
class Lasso {
public:
    Lasso(std::vector<T> prefix, std::vector<T> cycle) : prefix_(std::move(prefix)), cycle_(std::move(cycle)) {
        if (cycle_.empty())
            throw std::invalid_argument("lasso cycle must be nonempty");
    }

    const std::vector<T>& prefix() const noexcept { return prefix_; }
    const std::vector<T>& cycle() const noexcept { return cycle_; }

    const T& operator[](std::size_t n) const {
        return n < prefix_.size() ? prefix_[n] : cycle_[(n - prefix_.size()) % cycle_.size()];
    }

    /// Same infinite sequence with a prefix of exactly `prefix_length`
    /// entries and a cycle of `cycle_length` entries. Requires
    /// prefix_length >= prefix().size() and cycle_length a multiple of
    /// cycle().size().
    Lasso unrolled(std::size_t prefix_length, std::size_t cycle_length) const {
        if (prefix_length < prefix_.size() || cycle_length % cycle_.size() != 0)
            throw std::invalid_argument("invalid lasso unrolling");
        std::vector<T> p, c;
        p.reserve(prefix_length);
        c.reserve(cycle_length);
        for (std::size_t n = 0; n < prefix_length; ++n)
            p.push_back((*this)[n]);
        for (std::size_t n = 0; n < cycle_length; ++n)
            c.push_back((*this)[prefix_length + n]);
        return Lasso(std::move(p), std::move(c));
    }

    friend bool operator==(const Lasso&, const Lasso&) = default;

private:
    std::vector<T> prefix_;
    std::vector<T> cycle_;
};

/// Pointwise pairing of two lassos; the result is again a lasso with prefix
/// length max(|p1|, |p2|) and cycle length lcm(|c1|, |c2|).
template <typename A, typename B>
Lasso<std::pair<A, B>> zip(const Lasso<A>& a, const Lasso<B>& b) {
    const std::size_t p = std::max(a.prefix().size(), b.prefix().size());
    const std::size_t c = std::lcm(a.cycle().size(), b.cycle().size());
    std::vector<std::pair<A, B>> prefix, cycle;
    for (std::size_t n = 0; n < p; ++n)
        prefix.emplace_back(a[n], b[n]);
    for (std::size_t n = p; n < p + c; ++n)
        cycle.emplace_back(a[n], b[n]);
    return {std::move(prefix), std::move(cycle)};
}

/// The subsequence x_offset, x_{offset+2}, x_{offset+4}, ...
template <typename T>
Lasso<T> every_other(const Lasso<T>& x, std::size_t offset) {
    // Unroll so that the prefix has even length and the cycle even length;
    // then the selected positions line up with both parts.
    std::size_t p = x.prefix().size() + (x.prefix().size() % 2);
    std::size_t c = x.cycle().size() * (x.cycle().size() % 2 == 0 ? 1 : 2);
    auto even = x.unrolled(p, c);
    std::vector<T> prefix, cycle;
    for (std::size_t n = offset; n < p; n += 2)
        prefix.push_back(even.prefix()[n]);
    for (std::size_t n = offset; n < c; n += 2)
        cycle.push_back(even.cycle()[n]);
    return {std::move(prefix), std::move(cycle)};
}

} // namespace bdist

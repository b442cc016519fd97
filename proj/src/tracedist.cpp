#include "bdist/tracedist.hpp"

#include "bdist/error.hpp"

#include <algorithm>
#include <stdexcept>

namespace bdist {

std::string_view name(Selector selector) {
    switch (selector) {
    case Selector::Discrete: return "discrete";
    case Selector::PointWise: return "pointwise";
    case Selector::Discounted: return "discounted";
    case Selector::LimitAverage: return "limavg";
    case Selector::Cantor: return "cantor";
    case Selector::MaxLead: return "maxlead";
    }
    return "?";
}

std::optional<Selector> parse_selector(std::string_view text) {
    for (auto s : {Selector::Discrete, Selector::PointWise, Selector::Discounted, Selector::LimitAverage,
                   Selector::Cantor, Selector::MaxLead})
        if (name(s) == text)
            return s;
    return std::nullopt;
}

DistanceKind DistanceKind::discrete() { return DistanceKind(Selector::Discrete); }

DistanceKind DistanceKind::pointwise(LabelDistance d) {
    DistanceKind k(Selector::PointWise);
    k.label_distance_ = std::move(d);
    return k;
}

DistanceKind DistanceKind::discounted(Rational lambda, LabelDistance d) {
    if (sgn(lambda) < 0 || lambda >= 1)
        throw std::invalid_argument("discount factor must lie in [0, 1), got " + to_string(lambda));
    DistanceKind k(Selector::Discounted);
    k.lambda_ = std::move(lambda);
    k.label_distance_ = std::move(d);
    return k;
}

DistanceKind DistanceKind::limit_average(LabelDistance d) {
    DistanceKind k(Selector::LimitAverage);
    k.label_distance_ = std::move(d);
    return k;
}

DistanceKind DistanceKind::cantor() { return DistanceKind(Selector::Cantor); }
DistanceKind DistanceKind::max_lead() { return DistanceKind(Selector::MaxLead); }

const Rational& DistanceKind::lambda() const {
    if (!lambda_)
        throw std::logic_error(std::string(name(selector_)) + " distance has no discount factor");
    return *lambda_;
}

const LabelDistance& DistanceKind::label_distance() const {
    if (!label_distance_)
        throw std::logic_error(std::string(name(selector_)) + " distance has no label distance");
    return *label_distance_;
}

namespace {

const Rational& number_of(const Label& l) {
    if (!l.is_numeric())
        throw KindMismatch("maximum-lead distance needs numeric labels, got '" + l.text() + "'");
    return l.number();
}

Rational finite_distance(const DistanceKind& kind, const Label& a, const Label& b) {
    ExtValue d = kind.label_distance()(a, b);
    if (d.is_infinite())
        throw KindMismatch(std::string(name(kind.selector())) + " distance does not admit d(" + a.text() + ", " +
                           b.text() + ") = inf");
    return d.finite();
}

const Rational& finite_entry(const SignedWeight& w) {
    if (w.is_infinite())
        throw std::invalid_argument("infinite weight in an accumulating valuation");
    return w.finite();
}

} // namespace

SignedWeight f_weight(const DistanceKind& kind, const Label& a, const Label& b) {
    switch (kind.selector()) {
    case Selector::Discrete:
        return a == b ? SignedWeight(0) : SignedWeight::infinity();
    case Selector::PointWise:
        return SignedWeight(kind.label_distance()(a, b));
    case Selector::Discounted:
        return finite_distance(kind, a, b);
    case Selector::LimitAverage:
        return Rational(2 * finite_distance(kind, a, b));
    case Selector::Cantor:
        return a == b ? 0 : 1;
    case Selector::MaxLead:
        return Rational(number_of(a) - number_of(b));
    }
    throw std::logic_error("unknown selector");
}

ExtValue val_on_lasso(const DistanceKind& kind, const Lasso<SignedWeight>& w) {
    const auto& prefix = w.prefix();
    const auto& cycle = w.cycle();

    switch (kind.selector()) {
    case Selector::Discrete: {
        auto nonzero = [](const SignedWeight& x) { return !x.is_zero(); };
        bool any = std::any_of(prefix.begin(), prefix.end(), nonzero) || std::any_of(cycle.begin(), cycle.end(), nonzero);
        return any ? ExtValue::infinity() : ExtValue(0);
    }
    case Selector::PointWise: {
        SignedWeight best = prefix.empty() ? cycle.front() : prefix.front();
        for (const auto* part : {&prefix, &cycle})
            for (const auto& x : *part)
                best = std::max(best, x);
        return ExtValue(best);
    }
    case Selector::Discounted: {
        const Rational& lambda = kind.lambda();
        Rational sum = 0;
        Rational factor = 1;
        for (const auto& x : prefix) {
            sum += factor * finite_entry(x);
            factor *= lambda;
        }
        Rational cycle_sum = 0;
        Rational cycle_factor = 1;
        for (const auto& x : cycle) {
            cycle_sum += cycle_factor * finite_entry(x);
            cycle_factor *= lambda;
        }
        sum += factor * cycle_sum / (1 - cycle_factor);
        return Rational(sum);
    }
    case Selector::LimitAverage: {
        Rational total = 0;
        for (const auto& x : cycle)
            total += finite_entry(x);
        return Rational(total / static_cast<long>(cycle.size()));
    }
    case Selector::Cantor: {
        const std::size_t horizon = prefix.size() + cycle.size();
        for (std::size_t n = 0; n < horizon; ++n)
            if (!w[n].is_zero())
                return Rational(2, static_cast<long>(n) + 1);
        return 0;
    }
    case Selector::MaxLead: {
        Rational cycle_sum = 0;
        for (const auto& x : cycle)
            cycle_sum += finite_entry(x);
        if (sgn(cycle_sum) != 0)
            return ExtValue::infinity();
        Rational lead = 0;
        Rational best = 0;
        for (std::size_t n = 0; n < prefix.size() + cycle.size(); ++n) {
            lead += finite_entry(w[n]);
            best = std::max(best, Rational(abs(lead)));
        }
        return best;
    }
    }
    throw std::logic_error("unknown selector");
}

ExtValue trace_distance(const DistanceKind& kind, const Lasso<Label>& s, const Lasso<Label>& t) {
    const auto aligned = zip(s, t);
    const std::size_t p = aligned.prefix().size();
    const std::size_t horizon = p + aligned.cycle().size();

    switch (kind.selector()) {
    case Selector::Discrete:
        for (std::size_t n = 0; n < horizon; ++n)
            if (aligned[n].first != aligned[n].second)
                return ExtValue::infinity();
        return 0;
    case Selector::PointWise: {
        ExtValue best = 0;
        for (std::size_t n = 0; n < horizon; ++n)
            best = std::max(best, kind.label_distance()(aligned[n].first, aligned[n].second));
        return best;
    }
    case Selector::Discounted: {
        // Σ_{n<p} λ^n d_n + λ^p · (Σ_{j<c} λ^j d_{p+j}) / (1 − λ^c)
        const Rational& lambda = kind.lambda();
        Rational head = 0;
        for (std::size_t n = 0; n < p; ++n)
            head += rational_pow(lambda, n) * finite_distance(kind, aligned[n].first, aligned[n].second);
        Rational tail = 0;
        for (std::size_t j = 0; j < aligned.cycle().size(); ++j)
            tail += rational_pow(lambda, j) * finite_distance(kind, aligned[p + j].first, aligned[p + j].second);
        Rational period = 1 - rational_pow(lambda, aligned.cycle().size());
        return Rational(head + rational_pow(lambda, p) * tail / period);
    }
    case Selector::LimitAverage: {
        Rational total = 0;
        for (const auto& [a, b] : aligned.cycle())
            total += finite_distance(kind, a, b);
        return Rational(total / static_cast<long>(aligned.cycle().size()));
    }
    case Selector::Cantor:
        for (std::size_t n = 0; n < horizon; ++n)
            if (aligned[n].first != aligned[n].second)
                return Rational(1, static_cast<long>(n) + 1);
        return 0;
    case Selector::MaxLead: {
        Rational drift = 0;
        for (const auto& [a, b] : aligned.cycle())
            drift += number_of(a) - number_of(b);
        if (sgn(drift) != 0)
            return ExtValue::infinity();
        Rational lead = 0;
        Rational best = 0;
        for (std::size_t n = 0; n < horizon; ++n) {
            lead += number_of(aligned[n].first) - number_of(aligned[n].second);
            best = std::max(best, Rational(abs(lead)));
        }
        return best;
    }
    }
    throw std::logic_error("unknown selector");
}

Lasso<SignedWeight> interleave(const DistanceKind& kind, const Lasso<Label>& s, const Lasso<Label>& t) {
    const auto aligned = zip(s, t);
    const bool rounds_only = kind.selector() == Selector::Discounted;
    auto expand = [&](const std::vector<std::pair<Label, Label>>& pairs) {
        std::vector<SignedWeight> out;
        for (const auto& [a, b] : pairs) {
            if (!rounds_only)
                out.emplace_back(0);
            out.push_back(f_weight(kind, a, b));
        }
        return out;
    };
    return {expand(aligned.prefix()), expand(aligned.cycle())};
}

} // namespace bdist

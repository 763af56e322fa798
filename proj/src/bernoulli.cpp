#include "rpf/bernoulli.hpp"

namespace rpf {

BernoulliCache::BernoulliCache(std::size_t capacity) {
    numbers_.push_back(Rational(1));
    grow_to(capacity);
}

std::size_t BernoulliCache::capacity() const {
    std::shared_lock lock(mutex_);
    return numbers_.size() - 1;
}

Rational BernoulliCache::number(std::size_t n) {
    {
        std::shared_lock lock(mutex_);
        if (n < numbers_.size()) return numbers_[n];
    }
    std::unique_lock lock(mutex_);
    grow_to(n);
    return numbers_[n];
}

// sum_{k<=n} C(n+1,k) B_k = 0, solved for B_n. Caller holds the lock
// (or is the constructor).
void BernoulliCache::grow_to(std::size_t n) {
    for (std::size_t i = numbers_.size(); i <= n; ++i) {
        if (i > 1 && i % 2 == 1) {
            numbers_.push_back(Rational(0));
            continue;
        }
        Rational acc;
        for (std::size_t k = 0; k < i; ++k) {
            if (numbers_[k].is_zero()) continue;
            acc += Rational(binomial(static_cast<long>(i + 1), static_cast<long>(k))) * numbers_[k];
        }
        numbers_.push_back(-acc / Rational(static_cast<long>(i + 1)));
    }
}

Rational bernoulli_number(std::size_t n) {
    static BernoulliCache cache;
    return cache.number(n);
}

Rational bernoulli_poly(std::size_t n, const Rational& x) {
    // Horner over descending powers of x: coefficient of x^{n-k} is C(n,k) B_k.
    Rational acc;
    for (std::size_t k = 0; k <= n; ++k) {
        acc *= x;
        const Rational b = bernoulli_number(k);
        if (!b.is_zero()) acc += Rational(binomial(static_cast<long>(n), static_cast<long>(k))) * b;
    }
    return acc;
}

Rational d_scalar(std::size_t l) {
    return Rational(2).pow(static_cast<long>(l)) * bernoulli_poly(l, Rational(1, 2));
}

DCoefficients::DCoefficients(const PartList& parts, std::size_t max_n) : order_(parts.size()) {
    std::vector<Rational> scalars;
    scalars.reserve(max_n + 1);
    for (std::size_t l = 0; l <= max_n; ++l) scalars.push_back(d_scalar(l));

    // level 0: D_n^(0) = [n == 0]
    table_.assign(max_n + 1, Rational(0));
    table_[0] = Rational(1);
    for (auto d : parts) {
        std::vector<Rational> next(max_n + 1);
        const Rational dr(static_cast<long>(d));
        for (std::size_t n = 0; n <= max_n; ++n) {
            Rational acc;
            Rational dpow(1);
            for (std::size_t l = 0; l <= n; ++l, dpow *= dr) {
                if (scalars[l].is_zero() || table_[n - l].is_zero()) continue;
                acc += Rational(binomial(static_cast<long>(n), static_cast<long>(l))) * dpow * scalars[l] * table_[n - l];
            }
            next[n] = std::move(acc);
        }
        table_ = std::move(next);
    }
}

Rational d_higher_recursive(std::size_t n, const PartList& parts) { return DCoefficients(parts, n)[n]; }

Rational d_higher_symmetric(std::size_t n, const PartList& parts) {
    const int m = static_cast<int>(parts.size());
    Rational acc;
    for (const auto& r : compositions(static_cast<int>(n), m)) {
        Rational term(multinomial(static_cast<long>(n), r));
        for (int i = 0; i < m && !term.is_zero(); ++i) {
            term *= Rational(static_cast<long>(parts[static_cast<std::size_t>(i)])).pow(r[static_cast<std::size_t>(i)]) *
                    d_scalar(static_cast<std::size_t>(r[static_cast<std::size_t>(i)]));
        }
        acc += term;
    }
    return acc;
}

Rational bernoulli_higher(std::size_t n, const Rational& s, const PartList& parts) {
    const DCoefficients dcoef(parts, n);
    const Rational shifted = s - parts.xi().to_rational();
    Rational acc;
    Rational half_pow(1);
    for (std::size_t l = 0; l <= n; ++l, half_pow *= Rational(1, 2)) {
        if (dcoef[l].is_zero()) continue;
        acc += Rational(binomial(static_cast<long>(n), static_cast<long>(l))) * dcoef[l] * half_pow *
               shifted.pow(static_cast<long>(n - l));
    }
    return acc;
}

}  // namespace rpf

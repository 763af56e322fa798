#pragma once

// Bernoulli numbers and polynomials, and the higher-order Bernoulli
// polynomials B_n^(m)(s | d) generated by
//
//     (prod d_i) t^m e^{st} / prod (e^{d_i t} - 1) = sum_n B_n^(m)(s | d) t^n / n!
//
// Convention: B_1 = -1/2.

#include "rpf/exactnum.hpp"

#include <cstddef>
#include <mutex>
#include <shared_mutex>
#include <vector>

namespace rpf {

/// Memo of B_0..B_capacity. Grows monotonically; concurrent readers share
/// a lock, growth takes it exclusively.
class BernoulliCache {
public:
    explicit BernoulliCache(std::size_t capacity = 32);

    Rational number(std::size_t n);
    std::size_t capacity() const;

private:
    void grow_to(std::size_t n);

    mutable std::shared_mutex mutex_;
    std::vector<Rational> numbers_;
};

Rational bernoulli_number(std::size_t n);

/// B_n(x) = sum_k C(n,k) B_k x^{n-k}.
Rational bernoulli_poly(std::size_t n, const Rational& x);

/// D_l = 2^l B_l(1/2).
Rational d_scalar(std::size_t l);

/// Table of D_n^(m)(d) for n = 0..max_n, built level by level from the
/// single-part scalars.
class DCoefficients {
public:
    DCoefficients(const PartList& parts, std::size_t max_n);

    const Rational& operator[](std::size_t n) const { return table_.at(n); }
    std::size_t order() const { return order_; }
    std::size_t max_n() const { return table_.size() - 1; }

private:
    std::size_t order_;
    std::vector<Rational> table_;
};

/// D_n^(m) via the convolution over the last part.
Rational d_higher_recursive(std::size_t n, const PartList& parts);

/// D_n^(m) via the multinomial sum over compositions of n.
Rational d_higher_symmetric(std::size_t n, const PartList& parts);

/// B_n^(m)(s | d) = sum_l C(n,l) D_l^(m) / 2^l (s - xi)^{n-l}.
Rational bernoulli_higher(std::size_t n, const Rational& s, const PartList& parts);

}  // namespace rpf

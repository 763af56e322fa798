#pragma once

// Polynomial part V_1(s, d) of the shifted partition function and its
// coefficients R^m_j, via the closed symmetric formula and via the
// level-by-level recursion closed by the constant r^m_m.

#include "rpf/exactnum.hpp"

#include <span>
#include <string>
#include <vector>

namespace rpf {

/// Dense polynomial in s. coefficient(j), j = 1..m, multiplies s^{m-j};
/// the degree is m - 1.
class Polynomial {
public:
    explicit Polynomial(std::vector<Rational> descending);

    std::size_t size() const { return coeffs_.size(); }
    std::size_t degree() const { return coeffs_.size() - 1; }
    /// 1-based, highest power first.
    const Rational& coefficient(std::size_t j) const;
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    Rational operator()(const Rational& s) const;
    /// p(s + h), re-expanded.
    Polynomial shifted(const Rational& h) const;

    /// JSON array of exact strings, highest power first.
    std::string to_json() const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);

private:
    std::vector<Rational> coeffs_;
};

/// (sum_i d_i * iB(1/2))^l over the given parts, expanded by compositions:
/// sum_r multinomial(l, r) prod d_i^{r_i} B_{r_i}(1/2).
Rational umbral_power(std::span<const std::int64_t> parts, int l);

Polynomial v1_explicit(const PartList& parts);
Polynomial w1_from_v1(const Polynomial& v1, const PartList& parts);

/// Throws InputError unless 1 <= j <= m.
Rational r_coeff_explicit(std::size_t j, const PartList& parts);

/// Constant closure term r^m_m.
Rational r_closure_constant(const PartList& parts);

Polynomial r_coeffs_recursive(const PartList& parts);

/// Weight (1/z(r)) * multinomial(l, r) splitting (sum d)^l across pivots.
/// `i` is the 1-based pivot; `r` lists the m - 1 exponents of the other
/// positions in order. z counts zero entries over all m positions, the
/// pivot included. Requires l < m.
Rational symmetric_split_weight(int l, int m, int i, std::span<const int> r);

/// V_1 evaluated through the level m-1 constants and r^m_m (compact form).
Rational v1_compact(const PartList& parts, const Rational& s);

}  // namespace rpf

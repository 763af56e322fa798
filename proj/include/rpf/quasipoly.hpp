#pragma once

// Quasi-polynomial certificates for the shifted partition function
//
//     V(s, d) = sum_{j=1..m} R^m_j(s) s^{m-j},    W(n) = V(n + xi),
//
// with periodic coefficients tabulated on the half-integer lattice.
// Two independent constructions are provided: the level-by-level recursion
// (extend_recursive) and the closed symmetric formula (build_explicit).

#include "rpf/exactnum.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rpf {

/// Raised when W(n), n >= 0, is not a nonnegative integer.
class IntegralityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Periodic function on (1/2)Z with period T. The table is indexed by the
/// scaled residue 2s mod 2T and has exactly 2T entries.
class PeriodicFn {
public:
    PeriodicFn(std::int64_t period, std::vector<Rational> table);
    static PeriodicFn zero(std::int64_t period);

    std::int64_t period() const { return period_; }
    const std::vector<Rational>& table() const { return table_; }

    const Rational& at(const HalfLatticePoint& s) const { return table_[s.residue(table_.size())]; }
    /// Value at s = twice / 2; any sign.
    const Rational& at_twice(std::int64_t twice) const;
    Rational& slot(std::size_t residue) { return table_[residue]; }

    /// Same function tabulated at a multiple of the period.
    PeriodicFn retabulated(std::int64_t target_period) const;

    /// Average of f(base + n) over n = 0..T-1.
    Rational coset_mean(const HalfLatticePoint& base) const;

    friend bool operator==(const PeriodicFn&, const PeriodicFn&) = default;

private:
    std::int64_t period_;
    std::vector<Rational> table_;
};

class QuasiPoly {
public:
    /// coeffs[j-1] multiplies s^{m-j}.
    QuasiPoly(PartList parts, std::vector<PeriodicFn> coeffs);
    /// master_period must be a multiple of LCM(parts) and of every
    /// coefficient period.
    QuasiPoly(PartList parts, std::vector<PeriodicFn> coeffs, std::int64_t master_period);

    const PartList& parts() const { return parts_; }
    std::size_t order() const { return parts_.size(); }
    std::int64_t master_period() const { return master_period_; }
    const HalfLatticePoint& xi() const { return xi_; }
    const std::vector<PeriodicFn>& coefficients() const { return coeffs_; }
    /// 1-based.
    const PeriodicFn& coefficient(std::size_t j) const { return coeffs_.at(j - 1); }

private:
    PartList parts_;
    std::vector<PeriodicFn> coeffs_;
    std::int64_t master_period_;
    HalfLatticePoint xi_;
};

/// tau_{n,i}: d_i on the diagonal, LCM(d_1..d_n, d_i) elsewhere.
class TauTable {
public:
    explicit TauTable(const PartList& parts);

    std::size_t size() const { return rows_.size(); }
    /// 1-based; row = pivot i, column = position n.
    std::int64_t at(std::size_t n, std::size_t i) const { return rows_.at(i - 1).at(n - 1); }
    const std::vector<std::vector<std::int64_t>>& rows() const { return rows_; }

private:
    std::vector<std::vector<std::int64_t>> rows_;
};

inline TauTable tau_table(const PartList& parts) { return TauTable(parts); }

/// 1 iff x / d is an integer.
Rational psi(std::int64_t d, const HalfLatticePoint& x);

QuasiPoly base_case(std::int64_t d1);

/// Certificate for prev.parts() + {d_m}, from the certificate of the prefix.
QuasiPoly extend_recursive(const QuasiPoly& prev, std::int64_t dm);

/// base_case followed by extend_recursive over the remaining parts.
QuasiPoly build_recursive(const PartList& parts);

QuasiPoly build_explicit(const PartList& parts);

/// The d_m-periodic closure term r^m_m(s) for the full list.
PeriodicFn closure_term(const PartList& parts);

/// The part of R^m_m(s) produced by the recursion from level m-1,
/// tabulated at LCM(d).
PeriodicFn recursion_free_term(const QuasiPoly& prev, std::int64_t dm);

Rational eval_V(const QuasiPoly& q, const HalfLatticePoint& s);

/// W(n) = V(n + xi). Throws IntegralityError when n >= 0 yields anything
/// other than a nonnegative integer.
Rational eval_W(const QuasiPoly& q, const BigInt& n);

/// Throws InputError unless master_period divides target_period.
QuasiPoly align(const QuasiPoly& q, std::int64_t target_period);

/// V(s) assembled from the level m-1 certificate and r^m_m(s) through the
/// compact form with Bernoulli polynomials of s.
Rational v_compact(const QuasiPoly& prev, const PartList& parts, const HalfLatticePoint& s);

std::string to_json(const QuasiPoly& q);
QuasiPoly quasipoly_from_json(std::string_view text);

}  // namespace rpf

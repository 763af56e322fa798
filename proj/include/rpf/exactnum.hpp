#pragma once

// Exact integers and rationals plus the small combinatorial toolkit
// (lcm, binomials, multinomials, compositions) used by every other module.
//
// Big integers are GMP mpz values. Rational keeps the GMP mpq value in
// canonical form at all times: denominator > 0, gcd(|num|, den) = 1.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rpf {

using BigInt = mpz_class;

/// Raised for malformed or out-of-contract arguments.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(int value) : value_(value) {}   // NOLINT(google-explicit-constructor)
    Rational(const BigInt& value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(const BigInt& num, const BigInt& den);
    Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

    /// Parses "p/q" or "p".
    static Rational parse(std::string_view text);

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }
    bool is_integer() const { return value_.get_den() == 1; }
    bool is_zero() const { return sgn(value_) == 0; }
    int sign() const { return sgn(value_); }

    /// Exact integer value; throws if not an integer.
    BigInt to_integer() const;

    /// "p/q", with "/q" omitted when q = 1.
    std::string to_string() const;

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { Rational r; r.value_ = -value_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    /// Integer power; negative exponents invert (zero base then throws).
    Rational pow(long exponent) const;

    const mpq_class& raw() const { return value_; }

private:
    mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// A point of the half-integer lattice (1/2)Z, stored as 2s.
class HalfLatticePoint {
public:
    HalfLatticePoint() = default;
    explicit HalfLatticePoint(BigInt twice_value) : twice_(std::move(twice_value)) {}

    static HalfLatticePoint from_integer(const BigInt& n) { return HalfLatticePoint(BigInt(2 * n)); }
    static HalfLatticePoint from_twice(long k) { return HalfLatticePoint(BigInt(k)); }
    /// Accepts rationals with denominator 1 or 2.
    static HalfLatticePoint from_rational(const Rational& r);
    /// Parses "k/2" or an integer string.
    static HalfLatticePoint parse(std::string_view text);

    const BigInt& twice_value() const { return twice_; }
    bool is_integer() const { return mpz_even_p(twice_.get_mpz_t()) != 0; }
    Rational to_rational() const { return Rational(twice_, BigInt(2)); }

    /// 2s mod modulus, in [0, modulus).
    std::uint64_t residue(std::uint64_t modulus) const;

    /// "k/2" for half-odd points, plain integer otherwise.
    std::string to_string() const;

    HalfLatticePoint operator+(const HalfLatticePoint& o) const { return HalfLatticePoint(BigInt(twice_ + o.twice_)); }
    HalfLatticePoint operator-(const HalfLatticePoint& o) const { return HalfLatticePoint(BigInt(twice_ - o.twice_)); }
    HalfLatticePoint operator-() const { return HalfLatticePoint(BigInt(-twice_)); }

    friend bool operator==(const HalfLatticePoint& a, const HalfLatticePoint& b) { return a.twice_ == b.twice_; }

private:
    BigInt twice_{0};
};

/// Ordered list of positive integer parts d_1..d_m. Order is preserved.
class PartList {
public:
    using value_type = std::int64_t;

    PartList() = default;
    explicit PartList(std::vector<value_type> parts);
    PartList(std::initializer_list<value_type> parts) : PartList(std::vector<value_type>(parts)) {}

    /// Comma-separated list, e.g. "1,2,3".
    static PartList parse(std::string_view text);

    std::size_t size() const { return parts_.size(); }
    value_type operator[](std::size_t i) const { return parts_[i]; }
    value_type back() const { return parts_.back(); }
    std::span<const value_type> values() const { return parts_; }
    auto begin() const { return parts_.begin(); }
    auto end() const { return parts_.end(); }

    /// First k parts.
    PartList prefix(std::size_t k) const;
    PartList with_appended(value_type d) const;

    std::int64_t sum() const;
    BigInt product() const;
    /// xi = (1/2) * sum of parts.
    HalfLatticePoint xi() const { return HalfLatticePoint::from_twice(static_cast<long>(sum())); }
    std::int64_t lcm() const;

    std::string to_string() const;

    friend bool operator==(const PartList&, const PartList&) = default;

private:
    std::vector<value_type> parts_;
};

std::int64_t lcm_of(std::span<const std::int64_t> values);
inline std::int64_t lcm_of(std::initializer_list<std::int64_t> values) {
    return lcm_of(std::span<const std::int64_t>(values.begin(), values.size()));
}

BigInt binomial(long n, long k);
BigInt factorial(long n);
BigInt multinomial(long n, std::span<const int> r);

/// Enumerates the weak compositions of `total` into `parts` nonnegative
/// entries, in lexicographically descending order: (2,0), (1,1), (0,2).
/// With parts == 0 the only composition is the empty one (total == 0).
class Compositions {
public:
    Compositions(int total, int parts);

    class iterator {
    public:
        using value_type = std::vector<int>;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        const std::vector<int>& operator*() const { return current_; }
        const std::vector<int>* operator->() const { return &current_; }
        iterator& operator++();
        iterator operator++(int) { auto tmp = *this; ++*this; return tmp; }
        friend bool operator==(const iterator& a, const iterator& b) { return a.done_ == b.done_ && (a.done_ || a.current_ == b.current_); }

    private:
        friend class Compositions;
        std::vector<int> current_;
        bool done_ = true;
    };

    iterator begin() const;
    iterator end() const { return {}; }

    /// binomial(total + parts - 1, parts - 1), or the m == 0 special case.
    BigInt count() const;

private:
    int total_;
    int parts_;
};

inline Compositions compositions(int total, int parts) { return {total, parts}; }

}  // namespace rpf

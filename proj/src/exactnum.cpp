#include "rpf/exactnum.hpp"

#include <charconv>
#include <numeric>
#include <ostream>
#include <sstream>

namespace rpf {

namespace {

BigInt parse_bigint(std::string_view text) {
    if (text.empty()) throw InputError("empty integer literal");
    std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (i == text.size()) throw InputError("malformed integer: " + std::string(text));
    for (std::size_t k = i; k < text.size(); ++k) {
        if (text[k] < '0' || text[k] > '9') throw InputError("malformed integer: " + std::string(text));
    }
    std::string digits(text.substr(text[0] == '+' ? 1 : 0));
    return BigInt(digits, 10);
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

}  // namespace

// ---------------------------------------------------------------- Rational

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    text = trim(text);
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_bigint(text));
    BigInt den = parse_bigint(text.substr(slash + 1));
    if (den == 0) throw InputError("zero denominator in " + std::string(text));
    return Rational(parse_bigint(text.substr(0, slash)), den);
}

BigInt Rational::to_integer() const {
    if (!is_integer()) throw std::domain_error("not an integer: " + to_string());
    return value_.get_num();
}

std::string Rational::to_string() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    value_ /= o.value_;
    return *this;
}

Rational Rational::pow(long exponent) const {
    if (exponent < 0) {
        if (is_zero()) throw std::domain_error("zero to a negative power");
        return Rational(1) / pow(-exponent);
    }
    Rational r;
    const auto e = static_cast<unsigned long>(exponent);
    mpz_pow_ui(r.value_.get_num_mpz_t(), value_.get_num_mpz_t(), e);
    mpz_pow_ui(r.value_.get_den_mpz_t(), value_.get_den_mpz_t(), e);
    return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

// -------------------------------------------------------- HalfLatticePoint

HalfLatticePoint HalfLatticePoint::from_rational(const Rational& r) {
    const BigInt den = r.denominator();
    if (den == 1) return from_integer(r.numerator());
    if (den == 2) return HalfLatticePoint(r.numerator());
    throw InputError("not on the half-integer lattice: " + r.to_string());
}

HalfLatticePoint HalfLatticePoint::parse(std::string_view text) {
    return from_rational(Rational::parse(text));
}

std::uint64_t HalfLatticePoint::residue(std::uint64_t modulus) const {
    if (modulus == 0) throw InputError("zero modulus");
    return mpz_fdiv_ui(twice_.get_mpz_t(), modulus);
}

std::string HalfLatticePoint::to_string() const {
    if (is_integer()) return BigInt(twice_ / 2).get_str();
    return twice_.get_str() + "/2";
}

// ---------------------------------------------------------------- PartList

PartList::PartList(std::vector<value_type> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw InputError("part list must not be empty");
    for (auto d : parts_) {
        if (d < 1) throw InputError("parts must be positive integers, got " + std::to_string(d));
    }
}

PartList PartList::parse(std::string_view text) {
    std::vector<value_type> parts;
    text = trim(text);
    if (text.empty()) throw InputError("empty part list");
    while (true) {
        const auto comma = text.find(',');
        std::string_view item = trim(text.substr(0, comma));
        value_type v = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
            throw InputError("malformed part '" + std::string(item) + "'");
        }
        parts.push_back(v);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return PartList(std::move(parts));
}

PartList PartList::prefix(std::size_t k) const {
    if (k == 0 || k > parts_.size()) throw InputError("prefix length out of range");
    return PartList(std::vector<value_type>(parts_.begin(), parts_.begin() + static_cast<std::ptrdiff_t>(k)));
}

PartList PartList::with_appended(value_type d) const {
    auto v = parts_;
    v.push_back(d);
    return PartList(std::move(v));
}

std::int64_t PartList::sum() const { return std::accumulate(parts_.begin(), parts_.end(), std::int64_t{0}); }

BigInt PartList::product() const {
    BigInt p = 1;
    for (auto d : parts_) p *= static_cast<long>(d);
    return p;
}

std::int64_t PartList::lcm() const { return lcm_of(parts_); }

std::string PartList::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
    return os.str();
}

// ------------------------------------------------------------ combinatorics

std::int64_t lcm_of(std::span<const std::int64_t> values) {
    if (values.empty()) throw InputError("lcm of an empty list");
    std::int64_t acc = 1;
    for (auto v : values) {
        if (v < 1) throw InputError("lcm arguments must be positive");
        const std::int64_t step = v / std::gcd(acc, v);
        std::int64_t next = 0;
        if (__builtin_mul_overflow(acc, step, &next)) throw std::overflow_error("lcm exceeds 64 bits");
        acc = next;
    }
    return acc;
}

BigInt binomial(long n, long k) {
    if (n < 0) throw InputError("binomial with negative n");
    if (k < 0 || k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

BigInt factorial(long n) {
    if (n < 0) throw InputError("factorial of a negative number");
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

BigInt multinomial(long n, std::span<const int> r) {
    long total = 0;
    for (int x : r) {
        if (x < 0) throw InputError("multinomial with negative index");
        total += x;
    }
    if (total != n) throw InputError("multinomial indices must sum to n");
    BigInt result = factorial(n);
    for (int x : r) result /= factorial(x);
    return result;
}

// ------------------------------------------------------------ Compositions

Compositions::Compositions(int total, int parts) : total_(total), parts_(parts) {
    if (total < 0 || parts < 0) throw InputError("compositions need nonnegative arguments");
}

Compositions::iterator Compositions::begin() const {
    iterator it;
    if (parts_ == 0) {
        it.done_ = total_ != 0;
        return it;
    }
    it.current_.assign(static_cast<std::size_t>(parts_), 0);
    it.current_[0] = total_;
    it.done_ = false;
    return it;
}

Compositions::iterator& Compositions::iterator::operator++() {
    auto& r = current_;
    const std::size_t m = r.size();
    // rightmost position before the last holding a positive entry
    std::size_t i = m;
    for (std::size_t k = m < 2 ? 0 : m - 1; k-- > 0;) {
        if (r[k] > 0) { i = k; break; }
    }
    if (i == m) {
        done_ = true;
        r.clear();
        return *this;
    }
    int tail = 0;
    for (std::size_t k = i + 1; k < m; ++k) { tail += r[k]; r[k] = 0; }
    --r[i];
    r[i + 1] = tail + 1;
    return *this;
}

BigInt Compositions::count() const {
    if (parts_ == 0) return total_ == 0 ? 1 : 0;
    return binomial(total_ + parts_ - 1, parts_ - 1);
}

}  // namespace rpf

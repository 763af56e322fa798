#include "rpf/polypart.hpp"

#include "rpf/bernoulli.hpp"

#include <sstream>

namespace rpf {

namespace {

Rational half_bernoulli(std::size_t l) { return bernoulli_poly(l, Rational(1, 2)); }

Rational as_rational(std::int64_t v) { return Rational(static_cast<long>(v)); }

}  // namespace

Polynomial::Polynomial(std::vector<Rational> descending) : coeffs_(std::move(descending)) {
    if (coeffs_.empty()) throw InputError("polynomial needs at least one coefficient");
}

const Rational& Polynomial::coefficient(std::size_t j) const {
    if (j < 1 || j > coeffs_.size()) throw InputError("coefficient index out of range");
    return coeffs_[j - 1];
}

Rational Polynomial::operator()(const Rational& s) const {
    Rational acc;
    for (const auto& c : coeffs_) acc = acc * s + c;
    return acc;
}

Polynomial Polynomial::shifted(const Rational& h) const {
    // Taylor shift by repeated synthetic division.
    std::vector<Rational> c(coeffs_.rbegin(), coeffs_.rend());  // ascending
    const std::size_t n = c.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = n - 1; k > i; --k) c[k - 1] += h * c[k];
    }
    return Polynomial(std::vector<Rational>(c.rbegin(), c.rend()));
}

std::string Polynomial::to_json() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < coeffs_.size(); ++i) os << (i ? "," : "") << '"' << coeffs_[i].to_string() << '"';
    os << ']';
    return os.str();
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    const std::size_t n = std::max(a.size(), b.size());
    std::vector<Rational> out(n);
    for (std::size_t k = 0; k < a.size(); ++k) out[n - a.size() + k] += a.coeffs_[k];
    for (std::size_t k = 0; k < b.size(); ++k) out[n - b.size() + k] -= b.coeffs_[k];
    return Polynomial(std::move(out));
}

Rational umbral_power(std::span<const std::int64_t> parts, int l) {
    const int m = static_cast<int>(parts.size());
    Rational acc;
    for (const auto& r : compositions(l, m)) {
        Rational term(multinomial(l, r));
        for (int i = 0; i < m && !term.is_zero(); ++i) {
            const auto ri = static_cast<std::size_t>(r[static_cast<std::size_t>(i)]);
            term *= as_rational(parts[static_cast<std::size_t>(i)]).pow(static_cast<long>(ri)) * half_bernoulli(ri);
        }
        acc += term;
    }
    return acc;
}

Rational r_coeff_explicit(std::size_t j, const PartList& parts) {
    const std::size_t m = parts.size();
    if (j < 1 || j > m) throw InputError("coefficient index j must lie in 1..m");
    const auto mm = static_cast<long>(m);
    const Rational scale = Rational(binomial(mm - 1, static_cast<long>(j) - 1)) /
                           Rational(BigInt(factorial(mm - 1) * parts.product()));
    return scale * umbral_power(parts.values(), static_cast<int>(j) - 1);
}

Polynomial v1_explicit(const PartList& parts) {
    std::vector<Rational> coeffs;
    for (std::size_t j = 1; j <= parts.size(); ++j) coeffs.push_back(r_coeff_explicit(j, parts));
    return Polynomial(std::move(coeffs));
}

Polynomial w1_from_v1(const Polynomial& v1, const PartList& parts) {
    return v1.shifted(parts.xi().to_rational());
}

Rational r_closure_constant(const PartList& parts) {
    const std::size_t m = parts.size();
    const auto mm = static_cast<long>(m);
    const Rational scale = Rational(1) / Rational(BigInt(factorial(mm - 1) * parts.product()));
    return scale * umbral_power(parts.values().first(m - 1), static_cast<int>(m) - 1);
}

Polynomial r_coeffs_recursive(const PartList& parts) {
    std::vector<Rational> prev{Rational(1) / as_rational(parts[0])};
    for (std::size_t m = 2; m <= parts.size(); ++m) {
        const Rational dm = as_rational(parts[m - 1]);
        const auto mm = static_cast<long>(m);
        std::vector<Rational> next(m);
        // prev[k] holds R^{m-1}_{k+1}
        for (std::size_t j = 1; j < m; ++j) {
            Rational acc;
            for (std::size_t l = 0; l < j; ++l) {
                const auto ll = static_cast<long>(l);
                acc += dm.pow(ll - 1) * Rational(binomial(mm - 1 - static_cast<long>(j) + ll, ll)) * half_bernoulli(l) *
                       prev[j - l - 1];
            }
            next[j - 1] = acc / Rational(mm - static_cast<long>(j));
        }
        Rational last = r_closure_constant(parts.prefix(m));
        for (std::size_t l = 1; l < m; ++l) {
            const auto ll = static_cast<long>(l);
            last += dm.pow(ll - 1) / Rational(ll) * half_bernoulli(l) * prev[m - l - 1];
        }
        next[m - 1] = std::move(last);
        prev = std::move(next);
    }
    return Polynomial(std::move(prev));
}

Rational symmetric_split_weight(int l, int m, int i, std::span<const int> r) {
    if (m < 1 || l < 0) throw InputError("split weight needs m >= 1 and l >= 0");
    if (l >= m) throw InputError("split weight requires l < m");
    if (i < 1 || i > m) throw InputError("pivot index out of range");
    if (static_cast<int>(r.size()) != m - 1) throw InputError("exponent vector must have m - 1 entries");
    int zeros = 1;  // the pivot position
    for (int x : r) zeros += (x == 0);
    return Rational(multinomial(l, r)) / Rational(static_cast<long>(zeros));
}

Rational v1_compact(const PartList& parts, const Rational& s) {
    const std::size_t m = parts.size();
    Rational acc = r_closure_constant(parts);
    if (m == 1) return acc;
    const Polynomial lower = v1_explicit(parts.prefix(m - 1));
    const Rational dm = as_rational(parts.back());
    const Rational arg = Rational(1, 2) + s / dm;
    for (std::size_t l = 1; l < m; ++l) {
        const auto ll = static_cast<long>(l);
        acc += dm.pow(ll - 1) / Rational(ll) * bernoulli_poly(l, arg) * lower.coefficient(m - l);
    }
    return acc;
}

}  // namespace rpf

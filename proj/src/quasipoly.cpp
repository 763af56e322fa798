#include "rpf/quasipoly.hpp"

#include "rpf/bernoulli.hpp"
#include "rpf/polypart.hpp"

#include <json.hpp>

#include <map>
#include <utility>

namespace rpf {

namespace {

Rational as_rational(std::int64_t v) { return Rational(static_cast<long>(v)); }

std::size_t wrap(std::int64_t value, std::int64_t modulus) {
    const std::int64_t r = value % modulus;
    return static_cast<std::size_t>(r < 0 ? r + modulus : r);
}

// Element of the group ring Q[Z / L]: coefficient u is the weight of a
// shift by u/2 (mod L/2). Sums of shift operators over the half-lattice
// become products here.
class ShiftSum {
public:
    explicit ShiftSum(std::int64_t length) : weights_(static_cast<std::size_t>(length)) {}

    static ShiftSum unit_at(std::int64_t length, std::int64_t twice_shift) {
        ShiftSum s(length);
        s.add(twice_shift, Rational(1));
        return s;
    }

    std::int64_t length() const { return static_cast<std::int64_t>(weights_.size()); }
    const Rational& operator[](std::size_t u) const { return weights_[u]; }

    void add(std::int64_t twice_shift, const Rational& w) { weights_[wrap(twice_shift, length())] += w; }

    void add_scaled(const ShiftSum& o, const Rational& factor) {
        for (std::size_t u = 0; u < weights_.size(); ++u) {
            if (!o.weights_[u].is_zero()) weights_[u] += factor * o.weights_[u];
        }
    }

    friend ShiftSum operator*(const ShiftSum& a, const ShiftSum& b) {
        const std::int64_t len = a.length();
        ShiftSum out(len);
        for (std::int64_t x = 0; x < len; ++x) {
            const auto& ax = a.weights_[static_cast<std::size_t>(x)];
            if (ax.is_zero()) continue;
            for (std::int64_t y = 0; y < len; ++y) {
                const auto& by = b.weights_[static_cast<std::size_t>(y)];
                if (by.is_zero()) continue;
                out.weights_[wrap(x + y, len)] += ax * by;
            }
        }
        return out;
    }

private:
    std::vector<Rational> weights_;
};

// Shift-operator replacement for one Bernoulli symbol of part d with
// period tau, reduced modulo the pivot's ring length:
//     sum_{p < tau/d} B_r(1 - (p + 1/2) d / tau) S((p + 1/2) d).
ShiftSum bernoulli_shift_sum(std::int64_t d, std::int64_t tau, int r, std::int64_t length) {
    ShiftSum out(length);
    const std::int64_t count = tau / d;
    for (std::int64_t p = 0; p < count; ++p) {
        const std::int64_t twice_shift = (2 * p + 1) * d;
        out.add(twice_shift, bernoulli_poly(static_cast<std::size_t>(r), Rational(1) - Rational(twice_shift, 2 * tau)));
    }
    return out;
}

// g(s) = sum_{p < delta} B_l(1 - (p + 1/2) d_m / tau) src(s - (p + 1/2) d_m),
// delta = tau / d_m, tabulated on src's own grid (g only sees src).
//
// On the ring of 2s residues the shifts by d_m form orbits of length
// exactly delta, and the weight P(p) is a degree-l polynomial in p. Moving
// s by d_m along an orbit turns sum_p P(p) h(p) into sum_p P(p+1) h(p) plus
// one wrap-around term, so the sums G_j = sum_p (Delta^j P)(p) h(p) advance
// with O(l) work per step: G_j <- G_j + G_{j+1} + (D_j(0) - D_j(delta)) h(delta-1).
std::vector<Rational> weighted_shifts(const PeriodicFn& src, std::size_t l, std::int64_t dm, std::int64_t tau) {
    const std::int64_t ring = 2 * src.period();
    const std::int64_t delta = tau / dm;
    const auto& f = src.table();

    // diffs[j][p] = (Delta^j P)(p) for p = 0..delta + l - j
    std::vector<std::vector<Rational>> diffs(l + 1);
    for (std::int64_t p = 0; p <= delta + static_cast<std::int64_t>(l); ++p) {
        diffs[0].push_back(bernoulli_poly(l, Rational(1) - Rational((2 * p + 1) * dm, 2 * tau)));
    }
    for (std::size_t j = 1; j <= l; ++j) {
        for (std::size_t p = 0; p + 1 < diffs[j - 1].size(); ++p) diffs[j].push_back(diffs[j - 1][p + 1] - diffs[j - 1][p]);
    }
    std::vector<Rational> wrap_weight;
    for (std::size_t j = 0; j <= l; ++j) wrap_weight.push_back(diffs[j][0] - diffs[j][static_cast<std::size_t>(delta)]);

    std::vector<Rational> out(f.size());
    std::vector<bool> visited(f.size(), false);
    std::vector<Rational> sums(l + 2);
    for (std::int64_t start = 0; start < ring; ++start) {
        if (visited[static_cast<std::size_t>(start)]) continue;
        for (std::size_t j = 0; j <= l; ++j) {
            Rational acc;
            for (std::int64_t p = 0; p < delta; ++p) {
                const auto& v = f[wrap(start - (2 * p + 1) * dm, ring)];
                if (!v.is_zero()) acc += diffs[j][static_cast<std::size_t>(p)] * v;
            }
            sums[j] = std::move(acc);
        }
        sums[l + 1] = Rational(0);
        std::int64_t k = start;
        for (std::int64_t t = 0; t < delta; ++t) {
            out[static_cast<std::size_t>(k)] = sums[0];
            visited[static_cast<std::size_t>(k)] = true;
            const auto& last = f[wrap(k + dm, ring)];  // h(delta - 1)
            for (std::size_t j = 0; j <= l; ++j) {
                sums[j] += sums[j + 1];
                if (!last.is_zero()) sums[j] += wrap_weight[j] * last;
            }
            k = static_cast<std::int64_t>(wrap(k + 2 * dm, ring));
        }
    }
    return out;
}

std::vector<PeriodicFn> retabulated_all(const QuasiPoly& q, std::int64_t period) {
    std::vector<PeriodicFn> out;
    for (const auto& c : q.coefficients()) out.push_back(c.retabulated(period));
    return out;
}

}  // namespace

// -------------------------------------------------------------- PeriodicFn

PeriodicFn::PeriodicFn(std::int64_t period, std::vector<Rational> table) : period_(period), table_(std::move(table)) {
    if (period_ < 1) throw InputError("period must be positive");
    if (table_.size() != static_cast<std::size_t>(2 * period_)) throw InputError("periodic table must have 2T entries");
}

PeriodicFn PeriodicFn::zero(std::int64_t period) {
    if (period < 1) throw InputError("period must be positive");
    return PeriodicFn(period, std::vector<Rational>(static_cast<std::size_t>(2 * period)));
}

const Rational& PeriodicFn::at_twice(std::int64_t twice) const { return table_[wrap(twice, 2 * period_)]; }

PeriodicFn PeriodicFn::retabulated(std::int64_t target_period) const {
    if (target_period < 1 || target_period % period_ != 0) {
        throw InputError("target period " + std::to_string(target_period) + " is not a multiple of " + std::to_string(period_));
    }
    std::vector<Rational> t(static_cast<std::size_t>(2 * target_period));
    for (std::size_t k = 0; k < t.size(); ++k) t[k] = table_[k % table_.size()];
    return PeriodicFn(target_period, std::move(t));
}

Rational PeriodicFn::coset_mean(const HalfLatticePoint& base) const {
    const auto start = static_cast<std::int64_t>(base.residue(table_.size()));
    Rational acc;
    for (std::int64_t n = 0; n < period_; ++n) acc += at_twice(start + 2 * n);
    return acc / as_rational(period_);
}

// --------------------------------------------------------------- QuasiPoly

namespace {

std::int64_t checked_master(const PartList& parts, const std::vector<PeriodicFn>& coeffs, std::int64_t master) {
    if (master % parts.lcm() != 0) throw InputError("master period must be a multiple of LCM(parts)");
    if (coeffs.size() != parts.size()) throw InputError("quasi-polynomial needs exactly m coefficients");
    for (const auto& c : coeffs) {
        if (master % c.period() != 0) throw InputError("coefficient period does not divide the master period");
    }
    return master;
}

}  // namespace

QuasiPoly::QuasiPoly(PartList parts, std::vector<PeriodicFn> coeffs)
    : QuasiPoly(std::move(parts), std::move(coeffs), 0) {}

QuasiPoly::QuasiPoly(PartList parts, std::vector<PeriodicFn> coeffs, std::int64_t master_period)
    : parts_(std::move(parts)),
      coeffs_(std::move(coeffs)),
      master_period_(checked_master(parts_, coeffs_, master_period == 0 ? parts_.lcm() : master_period)),
      xi_(parts_.xi()) {}

// ---------------------------------------------------------------- TauTable

TauTable::TauTable(const PartList& parts) {
    const std::size_t m = parts.size();
    rows_.assign(m, std::vector<std::int64_t>(m));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t n = 0; n < m; ++n) {
            if (n == i) {
                rows_[i][n] = parts[i];
            } else {
                std::vector<std::int64_t> v(parts.begin(), parts.begin() + static_cast<std::ptrdiff_t>(n + 1));
                v.push_back(parts[i]);
                rows_[i][n] = lcm_of(v);
            }
        }
    }
}

// ------------------------------------------------------------ construction

Rational psi(std::int64_t d, const HalfLatticePoint& x) {
    if (d < 1) throw InputError("psi needs a positive modulus");
    return x.residue(static_cast<std::uint64_t>(2 * d)) == 0 ? Rational(1) : Rational(0);
}

QuasiPoly base_case(std::int64_t d1) { return QuasiPoly(PartList{d1}, {closure_term(PartList{d1})}); }

PeriodicFn closure_term(const PartList& parts) {
    const std::size_t m = parts.size();
    const std::int64_t dm = parts.back();
    const std::int64_t ring = 2 * dm;

    // tau_i = LCM(d_m, d_1, ..., d_i); the last part sits at tau_m = d_m, p_m = 0.
    std::vector<std::int64_t> taus;
    for (std::size_t i = 0; i + 1 < m; ++i) {
        std::vector<std::int64_t> v{dm};
        v.insert(v.end(), parts.begin(), parts.begin() + static_cast<std::ptrdiff_t>(i + 1));
        taus.push_back(lcm_of(v));
    }

    std::map<std::pair<std::size_t, int>, ShiftSum> factors;
    auto factor = [&](std::size_t i, int r) -> const ShiftSum& {
        auto it = factors.find({i, r});
        if (it == factors.end()) {
            it = factors.emplace(std::pair{i, r}, bernoulli_shift_sum(parts[i], taus[i], r, ring)).first;
        }
        return it->second;
    };

    const int order = static_cast<int>(m) - 1;
    ShiftSum total(ring);
    for (const auto& r : compositions(order, order)) {
        Rational weight(multinomial(order, r));
        ShiftSum term = ShiftSum::unit_at(ring, dm);
        for (std::size_t i = 0; i + 1 < m; ++i) {
            weight *= as_rational(taus[i]).pow(r[i] - 1);
            term = term * factor(i, r[i]);
        }
        total.add_scaled(term, weight);
    }

    // Psi_{d_m}(s - shift) is 1 exactly when 2s = twice_shift (mod 2 d_m).
    const Rational norm = Rational(1) / Rational(factorial(order));
    std::vector<Rational> table(static_cast<std::size_t>(ring));
    for (std::size_t k = 0; k < table.size(); ++k) table[k] = total[k] * norm;
    return PeriodicFn(dm, std::move(table));
}

PeriodicFn recursion_free_term(const QuasiPoly& prev, std::int64_t dm) {
    const PartList parts = prev.parts().with_appended(dm);
    const std::size_t m = parts.size();
    const std::int64_t tau = parts.lcm();
    const std::int64_t base = prev.master_period();
    const auto lower = retabulated_all(prev, base);
    const Rational tau_r = as_rational(tau);

    std::vector<Rational> table(static_cast<std::size_t>(2 * base));
    for (std::size_t l = 1; l < m; ++l) {
        const Rational factor = tau_r.pow(static_cast<long>(l) - 1) / Rational(static_cast<long>(l));
        const auto shifted = weighted_shifts(lower[m - l - 1], l, dm, tau);
        for (std::size_t k = 0; k < table.size(); ++k) {
            if (!shifted[k].is_zero()) table[k] += factor * shifted[k];
        }
    }
    return PeriodicFn(base, std::move(table)).retabulated(tau);
}

QuasiPoly extend_recursive(const QuasiPoly& prev, std::int64_t dm) {
    const PartList parts = prev.parts().with_appended(dm);
    const std::size_t m = parts.size();
    const auto mm = static_cast<long>(m);
    const std::int64_t tau = parts.lcm();
    const std::int64_t base = prev.master_period();
    const auto lower = retabulated_all(prev, base);
    const Rational tau_r = as_rational(tau);

    std::vector<PeriodicFn> coeffs;
    for (std::size_t j = 1; j < m; ++j) {
        const auto jj = static_cast<long>(j);
        std::vector<Rational> table(static_cast<std::size_t>(2 * base));
        for (std::size_t l = 0; l < j; ++l) {
            const auto ll = static_cast<long>(l);
            const Rational factor = tau_r.pow(ll - 1) * Rational(binomial(mm - 1 - jj + ll, ll)) / Rational(mm - jj);
            const auto shifted = weighted_shifts(lower[j - l - 1], l, dm, tau);
            for (std::size_t k = 0; k < table.size(); ++k) {
                if (!shifted[k].is_zero()) table[k] += factor * shifted[k];
            }
        }
        coeffs.push_back(PeriodicFn(base, std::move(table)).retabulated(tau));
    }

    PeriodicFn last = recursion_free_term(prev, dm);
    const PeriodicFn closure = closure_term(parts).retabulated(tau);
    for (std::size_t k = 0; k < closure.table().size(); ++k) last.slot(k) += closure.table()[k];
    coeffs.push_back(std::move(last));
    return QuasiPoly(parts, std::move(coeffs));
}

QuasiPoly build_recursive(const PartList& parts) {
    QuasiPoly q = base_case(parts[0]);
    for (std::size_t i = 1; i < parts.size(); ++i) q = extend_recursive(q, parts[i]);
    return q;
}

QuasiPoly build_explicit(const PartList& parts) {
    const std::size_t m = parts.size();
    const int order = static_cast<int>(m) - 1;
    const std::int64_t period = parts.lcm();
    const TauTable tau(parts);
    const Rational norm = Rational(1) / Rational(factorial(order));

    std::vector<std::vector<Rational>> tables(m, std::vector<Rational>(static_cast<std::size_t>(2 * period)));

    for (std::size_t i = 0; i < m; ++i) {
        const std::int64_t di = parts[i];
        const std::int64_t ring = 2 * di;
        std::vector<std::size_t> others;
        for (std::size_t n = 0; n < m; ++n) {
            if (n != i) others.push_back(n);
        }

        std::map<std::pair<std::size_t, int>, ShiftSum> factors;
        auto factor = [&](std::size_t n, int r) -> const ShiftSum& {
            auto it = factors.find({n, r});
            if (it == factors.end()) {
                it = factors.emplace(std::pair{n, r}, bernoulli_shift_sum(parts[n], tau.at(n + 1, i + 1), r, ring)).first;
            }
            return it->second;
        };

        for (int l = 0; l <= order; ++l) {
            ShiftSum accumulated(ring);
            for (const auto& r : compositions(l, order)) {
                Rational weight = symmetric_split_weight(l, static_cast<int>(m), static_cast<int>(i) + 1, r);
                ShiftSum term = ShiftSum::unit_at(ring, di);
                for (std::size_t a = 0; a < others.size(); ++a) {
                    weight *= as_rational(tau.at(others[a] + 1, i + 1)).pow(r[a] - 1);
                    term = term * factor(others[a], r[a]);
                }
                accumulated.add_scaled(term, weight);
            }
            const Rational scale = norm * Rational(binomial(order, l));
            auto& table = tables[static_cast<std::size_t>(l)];
            for (std::size_t k = 0; k < table.size(); ++k) {
                const auto& v = accumulated[k % static_cast<std::size_t>(ring)];
                if (!v.is_zero()) table[k] += scale * v;
            }
        }
    }

    std::vector<PeriodicFn> coeffs;
    for (auto& t : tables) coeffs.emplace_back(period, std::move(t));
    return QuasiPoly(parts, std::move(coeffs));
}

// -------------------------------------------------------------- evaluation

Rational eval_V(const QuasiPoly& q, const HalfLatticePoint& s) {
    const Rational sr = s.to_rational();
    Rational acc;
    for (const auto& c : q.coefficients()) acc = acc * sr + c.at(s);
    return acc;
}

Rational eval_W(const QuasiPoly& q, const BigInt& n) {
    const HalfLatticePoint s = HalfLatticePoint::from_integer(n) + q.xi();
    Rational v = eval_V(q, s);
    if (n >= 0 && (!v.is_integer() || v.sign() < 0)) {
        throw IntegralityError("W(" + n.get_str() + ") for parts {" + q.parts().to_string() +
                               "} is not a nonnegative integer: " + v.to_string());
    }
    return v;
}

QuasiPoly align(const QuasiPoly& q, std::int64_t target_period) {
    if (target_period < 1 || target_period % q.master_period() != 0) {
        throw InputError("alignment target " + std::to_string(target_period) + " is not a multiple of the master period " +
                         std::to_string(q.master_period()));
    }
    return QuasiPoly(q.parts(), retabulated_all(q, target_period), target_period);
}

Rational v_compact(const QuasiPoly& prev, const PartList& parts, const HalfLatticePoint& s) {
    const std::size_t m = parts.size();
    Rational acc = closure_term(parts).at(s);
    if (m == 1) return acc;
    if (!(prev.parts() == parts.prefix(m - 1))) throw InputError("v_compact: certificate does not match the prefix");
    const std::int64_t dm = parts.back();
    const std::int64_t tau = parts.lcm();
    const Rational tau_r = as_rational(tau);
    const Rational sr = s.to_rational();
    for (std::size_t l = 1; l < m; ++l) {
        const Rational factor = tau_r.pow(static_cast<long>(l) - 1) / Rational(static_cast<long>(l));
        const auto& coeff = prev.coefficient(m - l);
        for (std::int64_t p = 0; p < tau / dm; ++p) {
            const HalfLatticePoint shift = HalfLatticePoint::from_twice(static_cast<long>((2 * p + 1) * dm));
            const Rational arg = (sr + shift.to_rational()) / tau_r;
            acc += factor * bernoulli_poly(l, arg) * coeff.at(s + shift);
        }
    }
    return acc;
}

// ----------------------------------------------------------- serialization

std::string to_json(const QuasiPoly& q) {
    using nlohmann::ordered_json;
    ordered_json doc;
    doc["parts"] = std::vector<std::int64_t>(q.parts().begin(), q.parts().end());
    doc["master_period"] = q.master_period();
    doc["xi"] = q.xi().to_string();
    ordered_json coeffs = ordered_json::array();
    const std::size_t m = q.order();
    for (std::size_t j = 1; j <= m; ++j) {
        const auto& c = q.coefficient(j);
        ordered_json entry;
        entry["power"] = m - j;
        entry["period"] = c.period();
        ordered_json values = ordered_json::object();
        for (std::size_t k = 0; k < c.table().size(); ++k) values[std::to_string(k)] = c.table()[k].to_string();
        entry["values"] = std::move(values);
        coeffs.push_back(std::move(entry));
    }
    doc["coefficients"] = std::move(coeffs);
    return doc.dump();
}

QuasiPoly quasipoly_from_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
        PartList parts(doc.at("parts").get<std::vector<std::int64_t>>());
        const auto master = doc.at("master_period").get<std::int64_t>();
        if (!(HalfLatticePoint::parse(doc.at("xi").get<std::string>()) == parts.xi())) {
            throw InputError("xi does not match the parts");
        }
        const std::size_t m = parts.size();
        std::vector<PeriodicFn> coeffs(m, PeriodicFn::zero(1));
        std::vector<bool> seen(m, false);
        for (const auto& entry : doc.at("coefficients")) {
            const auto power = entry.at("power").get<std::size_t>();
            if (power >= m || seen[power]) throw InputError("bad or repeated coefficient power");
            const auto period = entry.at("period").get<std::int64_t>();
            if (period < 1) throw InputError("period must be positive");
            std::vector<Rational> table(static_cast<std::size_t>(2 * period));
            const auto& values = entry.at("values");
            if (values.size() != table.size()) throw InputError("coefficient table must have 2T entries");
            for (auto it = values.begin(); it != values.end(); ++it) {
                const auto k = std::stoull(it.key());
                if (k >= table.size()) throw InputError("residue out of range");
                table[k] = Rational::parse(it.value().get<std::string>());
            }
            coeffs[m - 1 - power] = PeriodicFn(period, std::move(table));
            seen[power] = true;
        }
        for (bool s : seen) {
            if (!s) throw InputError("missing coefficient");
        }
        return QuasiPoly(std::move(parts), std::move(coeffs), master);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed certificate JSON: ") + e.what());
    }
}

}  // namespace rpf

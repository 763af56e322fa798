// Acceptance suite: one line per criterion, non-zero exit if any fails.

#include "rpf/bernoulli.hpp"
#include "rpf/harness.hpp"
#include "rpf/oracle.hpp"
#include "rpf/polypart.hpp"
#include "rpf/quasipoly.hpp"

#include "support/series_oracle.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

using namespace rpf;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool passed = true;
    std::string detail;
};

std::int64_t ns_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - t0).count();
}

Outcome corpus_property(const std::vector<PartList>& lists, Property p, Method method) {
    VerifyOptions o;
    o.properties = {p};
    o.method = method;
    const auto reports = verify_corpus(lists, o);
    std::size_t failed = 0;
    std::string first;
    for (const auto& r : reports) {
        if (r.passed()) continue;
        if (failed++ == 0) first = r.to_text();
    }
    Outcome out{failed == 0, std::to_string(reports.size()) + " sets, " + std::to_string(failed) + " failed"};
    if (!first.empty()) out.detail += "\n" + first;
    return out;
}

std::vector<std::vector<std::int64_t>> multisets(std::size_t max_m, std::int64_t max_part) {
    std::vector<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> cur;
    std::function<void(std::int64_t)> visit = [&](std::int64_t lo) {
        if (!cur.empty()) out.push_back(cur);
        if (cur.size() == max_m) return;
        for (std::int64_t x = lo; x <= max_part; ++x) {
            cur.push_back(x);
            visit(x);
            cur.pop_back();
        }
    };
    visit(1);
    return out;
}

Outcome polynomial_part_consistency() {
    std::size_t checked = 0;
    for (const auto& d : corpus(5, 6)) {
        ++checked;
        if (!(v1_explicit(d) == r_coeffs_recursive(d))) return {false, "polynomial parts differ for " + d.to_string()};
    }
    const auto mean = corpus_property(corpus(5, 6), Property::MeanValue, Method::Oracle);
    if (!mean.passed) return {false, "period averages: " + mean.detail};
    return {true, std::to_string(checked) + " polynomial parts; period averages over " + mean.detail};
}

Outcome bernoulli_checks() {
    const std::vector<Rational> samples{Rational(0), Rational(3, 2), Rational(-7, 3)};
    std::size_t values = 0;
    for (const auto& v : multisets(3, 4)) {
        const PartList d(v);
        std::vector<std::int64_t> neg;
        for (auto x : v) neg.push_back(-x);
        const Rational total(static_cast<long>(d.sum()));
        for (std::size_t n = 0; n <= 8; ++n) {
            for (const auto& s : samples) {
                const Rational b = bernoulli_higher(n, s, d);
                if (b != testing::higher_bernoulli_by_series(n, s, v)) {
                    return {false, "series mismatch n=" + std::to_string(n) + " s=" + s.to_string() + " d=" + d.to_string()};
                }
                if (testing::higher_bernoulli_by_series(n, s, neg) != bernoulli_higher(n, s + total, d)) {
                    return {false, "reflection mismatch n=" + std::to_string(n) + " s=" + s.to_string() + " d=" + d.to_string()};
                }
                ++values;
            }
        }
    }
    std::size_t identities = 0;
    for (std::size_t n = 0; n <= 8; ++n) {
        for (long m = 1; m <= 6; ++m) {
            for (const Rational& x : {Rational(0), Rational(1, 2), Rational(1, 3)}) {
                Rational lhs;
                for (long r = 0; r < m; ++r) lhs += bernoulli_poly(n, x + Rational(r, m));
                if (lhs != Rational(m).pow(1 - static_cast<long>(n)) * bernoulli_poly(n, Rational(m) * x)) {
                    return {false, "multiplication theorem n=" + std::to_string(n) + " m=" + std::to_string(m)};
                }
                ++identities;
            }
        }
    }
    return {true, std::to_string(values) + " series values with reflection, " + std::to_string(identities) + " multiplication identities"};
}

Outcome closed_forms() {
    for (const Method method : {Method::Explicit, Method::Recursive}) {
        const auto q12 = build_certificate(PartList{1, 2}, method);
        const auto q11 = build_certificate(PartList{1, 1}, method);
        for (long n = 0; n <= 200; ++n) {
            if (eval_W(q12, BigInt(n)) != Rational(n / 2 + 1)) return {false, "{1,2} at n=" + std::to_string(n)};
            if (eval_W(q11, BigInt(n)) != Rational(n + 1)) return {false, "{1,1} at n=" + std::to_string(n)};
        }
    }
    return {true, "n in 0..200, both constructions"};
}

std::int64_t min_eval_ns(const QuasiPoly& q, const BigInt& n, int repeats) {
    std::int64_t best = -1;
    for (int i = 0; i < repeats; ++i) {
        const auto t0 = Clock::now();
        const Rational v = eval_W(q, n);
        const auto dt = ns_since(t0);
        if (v.is_zero()) return -1;
        if (best < 0 || dt < best) best = dt;
    }
    return best;
}

std::int64_t min_dp_ns(const PartList& d, std::int64_t n, int repeats) {
    std::int64_t best = -1;
    for (int i = 0; i < repeats; ++i) {
        const auto t0 = Clock::now();
        const auto table = count_dp(d, n);
        const auto dt = ns_since(t0);
        if (table.at(n) == 0) return -1;
        if (best < 0 || dt < best) best = dt;
    }
    return best;
}

Outcome performance() {
    const PartList d{1, 2, 3, 4};
    const auto q = build_explicit(d);
    const BigInt million(1000000);
    if (eval_W(q, million).to_integer() != count_dp(d, 1000000).at(1000000)) return {false, "value at 10^6 disagrees with DP"};

    const auto eval_small = min_eval_ns(q, BigInt(1000), 200);
    const auto eval_million = min_eval_ns(q, million, 200);
    const auto eval_huge = min_eval_ns(q, BigInt("1000000000000"), 200);
    const auto dp_small = min_dp_ns(d, 100000, 3);
    const auto dp_large = min_dp_ns(d, 1000000, 3);

    std::string detail = "eval(10^3) " + std::to_string(eval_small) + " ns, eval(10^6) " + std::to_string(eval_million) +
                         " ns, eval(10^12) " + std::to_string(eval_huge) + " ns; dp(10^5) " + std::to_string(dp_small) +
                         " ns, dp(10^6) " + std::to_string(dp_large) + " ns";
    const bool fast = eval_million >= 0 && eval_million < 1'000'000;
    // DP grows about tenfold per decade; certificate evaluation does not.
    const bool dp_linear = dp_small > 0 && dp_large >= 4 * dp_small && dp_large <= 40 * dp_small;
    const bool eval_flat = eval_small > 0 && eval_huge <= 20 * eval_small + 20'000;
    const bool gap = dp_large > 100 * eval_million;
    if (!fast) detail += "; eval at 10^6 not under 1 ms";
    if (!dp_linear) detail += "; DP scaling not linear";
    if (!eval_flat) detail += "; eval cost grows with n";
    if (!gap) detail += "; no visible gap";
    return {fast && dp_linear && eval_flat && gap, detail};
}

}  // namespace

int main() {
    const auto lists = corpus(4, 6);
    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {"oracle equivalence, explicit construction", [&] { return corpus_property(lists, Property::Oracle, Method::Explicit); }},
        {"oracle equivalence, recursive construction", [&] { return corpus_property(lists, Property::Oracle, Method::Recursive); }},
        {"path agreement of coefficient tables", [&] { return corpus_property(lists, Property::PathAgreement, Method::Oracle); }},
        {"fundamental recurrence over one master period", [&] { return corpus_property(lists, Property::Recurrence, Method::Oracle); }},
        {"parity on the natural grid", [&] { return corpus_property(lists, Property::Parity, Method::Oracle); }},
        {"zeros", [&] { return corpus_property(lists, Property::Zeros, Method::Oracle); }},
        {"polynomial part consistency and period averages", polynomial_part_consistency},
        {"higher-order Bernoulli series, reflection, multiplication theorem", bernoulli_checks},
        {"closed forms for {1,2} and {1,1}", closed_forms},
        {"performance: certificate evaluation vs DP", performance},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = Clock::now();
        Outcome o;
        try {
            o = criteria[i].run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const auto ms = ns_since(t0) / 1'000'000;
        std::cout << (o.passed ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].name << " [" << o.detail << "] ("
                  << ms << " ms)" << std::endl;
        if (!o.passed) ++failures;
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size() << " criteria passed" << std::endl;
    return failures == 0 ? 0 : 1;
}

#include "rpf/quasipoly.hpp"

#include "rpf/bernoulli.hpp"
#include "rpf/oracle.hpp"
#include "rpf/polypart.hpp"

#include <doctest.h>
#include <json.hpp>

#include <algorithm>
#include <numeric>

using namespace rpf;

namespace {

std::vector<Rational> twelve(std::initializer_list<Rational> v) { return std::vector<Rational>(v); }

HalfLatticePoint half(long twice) { return HalfLatticePoint::from_twice(twice); }

// lambda_p d as a twice-value: (2p + 1) d.
long twice_shift(long p, long d) { return (2 * p + 1) * d; }

}  // namespace

TEST_CASE("psi indicator") {
    CHECK(psi(3, half(6)) == Rational(1));
    CHECK(psi(3, half(-12)) == Rational(1));
    CHECK(psi(3, half(4)).is_zero());
    CHECK(psi(3, half(3)).is_zero());
    CHECK(psi(1, half(0)) == Rational(1));
    CHECK(psi(1, half(1)).is_zero());
}

TEST_CASE("periodic functions") {
    const PeriodicFn f(1, {Rational(1), Rational(2)});
    CHECK(f.at(half(5)) == Rational(2));
    CHECK(f.at_twice(-4) == Rational(1));
    const auto g = f.retabulated(3);
    CHECK(g.period() == 3);
    CHECK(g.table().size() == 6);
    for (long k = -8; k <= 8; ++k) CHECK(g.at_twice(k) == f.at_twice(k));
    CHECK_THROWS_AS(f.retabulated(0), InputError);
    CHECK_THROWS_AS(PeriodicFn(2, {Rational(1)}), InputError);
    const PeriodicFn h(2, {Rational(0), Rational(1), Rational(0), Rational(3)});
    CHECK(h.coset_mean(half(1)) == Rational(2));
    CHECK(h.coset_mean(half(0)).is_zero());
}

TEST_CASE("tau table") {
    const TauTable t(PartList{2, 3, 4});
    CHECK(t.at(1, 1) == 2);
    CHECK(t.at(2, 2) == 3);
    CHECK(t.at(2, 1) == 6);
    CHECK(t.at(1, 2) == 6);
    CHECK(t.at(3, 1) == 12);
    CHECK(t.at(1, 3) == 4);
    CHECK(t.at(2, 3) == 12);
}

TEST_CASE("base case") {
    const auto q = base_case(3);
    CHECK(q.order() == 1);
    CHECK(q.master_period() == 3);
    // V(s) = psi_3(s - 3/2)
    for (long k = -12; k <= 12; ++k) CHECK(eval_V(q, half(k)) == psi(3, half(k - 3)));
    CHECK(build_recursive(PartList{3}).coefficient(1) == q.coefficient(1));
    CHECK(build_explicit(PartList{3}).coefficient(1) == q.coefficient(1));
}

TEST_CASE("frozen tables for {2,3}") {
    const auto q = build_recursive(PartList{2, 3});
    CHECK(q.master_period() == 6);
    const Rational z, a(1, 6);
    CHECK(q.coefficient(1).table() == twelve({z, a, z, a, z, a, z, a, z, a, z, a}));
    CHECK(q.coefficient(2).table() == twelve({z, Rational(-1, 12), z, Rational(-1, 4), z, Rational(7, 12), z, Rational(-7, 12), z,
                                              Rational(1, 4), z, Rational(1, 12)}));
    CHECK(build_explicit(PartList{2, 3}).coefficient(2) == q.coefficient(2));
}

TEST_CASE("frozen tables for {1,2}") {
    const auto q = build_explicit(PartList{1, 2});
    CHECK(q.coefficient(1).table() == std::vector<Rational>{0, Rational(1, 2), 0, Rational(1, 2)});
    CHECK(q.coefficient(2).table() == std::vector<Rational>{0, Rational(-1, 4), 0, Rational(1, 4)});
    // constant term of W(n) = n/2 + {1, 1/2}
    for (long n = 0; n < 6; ++n) {
        const HalfLatticePoint s = HalfLatticePoint::from_integer(n) + q.xi();
        CHECK(q.coefficient(2).at(s) + q.coefficient(1).at(s) * q.xi().to_rational() == (n % 2 ? Rational(1, 2) : Rational(1)));
    }
}

// The worked two-part forms, checked pointwise against the general constructions.
TEST_CASE("two-part worked forms") {
    for (long d1 = 1; d1 <= 6; ++d1) {
        for (long d2 = 1; d2 <= 6; ++d2) {
            CAPTURE(d1);
            CAPTURE(d2);
            const long tau2 = std::lcm(d1, d2);
            const auto prev = base_case(d1);
            const auto q = build_recursive(PartList{d1, d2});
            const auto e = build_explicit(PartList{d1, d2});
            const auto free_part = recursion_free_term(prev, d2);
            const auto closure = closure_term(PartList{d1, d2});
            for (long k = 0; k < 2 * tau2; ++k) {
                // first coefficient, both orders of the parts
                Rational r21, r21_swapped;
                for (long p2 = 0; p2 < tau2 / d2; ++p2) r21 += psi(d1, half(k - twice_shift(p2, d2) - d1));
                for (long p1 = 0; p1 < tau2 / d1; ++p1) r21_swapped += psi(d2, half(k - twice_shift(p1, d1) - d2));
                r21 /= Rational(tau2);
                r21_swapped /= Rational(tau2);
                CHECK(q.coefficient(1).at(half(k)) == r21);
                CHECK(e.coefficient(1).at(half(k)) == r21);
                CHECK(r21_swapped == r21);

                // recursion part of the free term
                Rational r22a;
                for (long p2 = 0; p2 < tau2 / d2; ++p2) {
                    r22a += bernoulli_poly(1, Rational(1) - Rational(twice_shift(p2, d2), 2 * tau2)) *
                            psi(d1, half(k - twice_shift(p2, d2) - d1));
                }
                CHECK(free_part.at(half(k)) == r22a);

                // closure, second-line form with the roles of d1 and d2 interchanged
                Rational r22;
                for (long p1 = 0; p1 < tau2 / d1; ++p1) {
                    r22 += bernoulli_poly(1, Rational(1) - Rational(twice_shift(p1, d1), 2 * tau2)) *
                           psi(d2, half(k - d2 - twice_shift(p1, d1)));
                }
                CHECK(closure.at(half(k)) == r22);
                CHECK(q.coefficient(2).at(half(k)) == r22a + r22);
                CHECK(e.coefficient(2).at(half(k)) == r22a + r22);
            }
        }
    }
}

TEST_CASE("certificates reproduce counts and agree across paths") {
    std::vector<std::int64_t> cur;
    auto visit = [&](auto&& self, std::int64_t lo) -> void {
        if (!cur.empty()) {
            const PartList d(cur);
            CAPTURE(d.to_string());
            const auto e = build_explicit(d);
            const auto r = build_recursive(d);
            const std::int64_t top = 2 * d.lcm() + 6;
            const auto counts = count_dp(d, top);
            for (std::int64_t n = 0; n <= top; ++n) {
                CHECK(eval_W(e, BigInt(static_cast<long>(n))) == Rational(counts.at(n)));
                CHECK(eval_W(r, BigInt(static_cast<long>(n))) == Rational(counts.at(n)));
            }
            // W vanishes at -1 .. -(sum d - 1)
            for (std::int64_t n = 1; n < d.sum(); ++n) CHECK(eval_W(e, BigInt(static_cast<long>(-n))).is_zero());
            const auto period = std::lcm(e.master_period(), r.master_period());
            const auto ea = align(e, period), ra = align(r, period);
            for (std::size_t j = 1; j <= d.size(); ++j) CHECK(ea.coefficient(j) == ra.coefficient(j));

            // V from the level below through the compact form
            if (d.size() >= 2) {
                const auto prev = build_explicit(d.prefix(d.size() - 1));
                for (long k = -2 * d.lcm(); k <= 2 * d.lcm(); ++k) CHECK(v_compact(prev, d, half(k)) == eval_V(e, half(k)));
            }
        }
        if (cur.size() == 3) return;
        for (std::int64_t x = lo; x <= 5; ++x) {
            cur.push_back(x);
            self(self, x);
            cur.pop_back();
        }
    };
    visit(visit, 1);
}

TEST_CASE("values are invariant under permutations of the parts") {
    const std::vector<std::vector<std::int64_t>> lists{{1, 2, 3}, {2, 2, 5}, {3, 4, 6, 1}};
    for (auto v : lists) {
        const auto base = build_explicit(PartList(v));
        std::sort(v.begin(), v.end());
        do {
            const auto q = build_recursive(PartList(v));
            for (long k = -30; k <= 30; ++k) CHECK(eval_V(q, half(k)) == eval_V(base, half(k)));
        } while (std::next_permutation(v.begin(), v.end()));
    }
}

TEST_CASE("evaluation at large n") {
    const auto q = build_explicit(PartList{1, 2, 3, 4});
    CHECK(eval_W(q, BigInt(1000000)).to_integer() == BigInt("6944548611611112"));
    // n^3 / 144 dominates far out; check against the DP at a moderate point instead
    CHECK(eval_W(q, BigInt(5000)) == Rational(count_dp(PartList{1, 2, 3, 4}, 5000).at(5000)));
    const auto big = BigInt("1000000000000000000000");
    CHECK(eval_W(q, big).is_integer());
    CHECK(eval_W(q, big).sign() > 0);
}

TEST_CASE("integrality failures are reported") {
    const auto good = build_explicit(PartList{2, 3});
    auto tables = good.coefficients();
    tables[1].slot(1) += Rational(1, 3);
    const QuasiPoly broken(PartList{2, 3}, tables, good.master_period());
    bool raised = false;
    for (long n = 0; n < 12 && !raised; ++n) {
        try {
            eval_W(broken, BigInt(n));
        } catch (const IntegralityError&) {
            raised = true;
        }
    }
    CHECK(raised);
}

TEST_CASE("quasi-polynomial construction errors") {
    CHECK_THROWS_AS(align(build_explicit(PartList{2, 3}), 9), InputError);
    CHECK(align(build_explicit(PartList{2, 3}), 12).master_period() == 12);
    CHECK_THROWS_AS(QuasiPoly(PartList{2, 3}, {PeriodicFn::zero(6)}), InputError);
    CHECK_THROWS_AS(QuasiPoly(PartList{2, 3}, {PeriodicFn::zero(6), PeriodicFn::zero(4)}), InputError);
    CHECK_THROWS_AS(QuasiPoly(PartList{2, 3}, {PeriodicFn::zero(6), PeriodicFn::zero(6)}, 9), InputError);
}

TEST_CASE("certificate JSON round trip") {
    for (const auto& d : {PartList{1}, PartList{1, 2}, PartList{2, 3, 4}, PartList{5, 2, 2}}) {
        const auto q = build_recursive(d);
        const auto text = to_json(q);
        const auto back = quasipoly_from_json(text);
        CHECK(back.parts() == q.parts());
        CHECK(back.master_period() == q.master_period());
        for (std::size_t j = 1; j <= d.size(); ++j) CHECK(back.coefficient(j) == q.coefficient(j));
        CHECK(to_json(back) == text);

        const auto doc = nlohmann::json::parse(text);
        CHECK(doc.at("xi").get<std::string>() == d.xi().to_string());
        CHECK(doc.at("coefficients").size() == d.size());
        CHECK(doc.at("coefficients")[0].at("power").get<std::size_t>() == d.size() - 1);
    }
    CHECK_THROWS_AS(quasipoly_from_json("{"), InputError);
    CHECK_THROWS_AS(quasipoly_from_json(R"({"parts":[1],"master_period":1,"xi":"0","coefficients":[]})"), InputError);
    CHECK_THROWS_AS(quasipoly_from_json(R"({"parts":[1],"master_period":1,"xi":"1/2","coefficients":[]})"), InputError);
    CHECK_THROWS_AS(
        quasipoly_from_json(R"({"parts":[1],"master_period":1,"xi":"1/2","coefficients":[{"power":0,"period":1,"values":{"0":"1"}}]})"),
        InputError);
}

#include "rpf/harness.hpp"

#include "rpf/oracle.hpp"
#include "rpf/polypart.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <thread>

namespace rpf {

Method parse_method(std::string_view text) {
    if (text == "explicit") return Method::Explicit;
    if (text == "recursive") return Method::Recursive;
    if (text == "oracle") return Method::Oracle;
    throw InputError("unknown method '" + std::string(text) + "' (expected explicit, recursive or oracle)");
}

std::string_view method_name(Method m) {
    switch (m) {
        case Method::Explicit: return "explicit";
        case Method::Recursive: return "recursive";
        case Method::Oracle: return "oracle";
    }
    return "?";
}

QuasiPoly build_certificate(const PartList& parts, Method method) {
    switch (method) {
        case Method::Explicit: return build_explicit(parts);
        case Method::Recursive: return build_recursive(parts);
        case Method::Oracle: break;
    }
    throw InputError("the oracle method has no certificate");
}

std::string_view property_name(Property p) {
    switch (p) {
        case Property::Oracle: return "oracle";
        case Property::Recurrence: return "recurrence";
        case Property::Parity: return "parity";
        case Property::Zeros: return "zeros";
        case Property::PathAgreement: return "path-agreement";
        case Property::MeanValue: return "mean-value";
    }
    return "?";
}

const std::vector<Property>& all_properties() {
    static const std::vector<Property> all{Property::Oracle, Property::Recurrence,    Property::Parity,
                                           Property::Zeros,  Property::PathAgreement, Property::MeanValue};
    return all;
}

std::vector<Property> parse_properties(std::string_view text) {
    if (text == "all") return all_properties();
    std::vector<Property> out;
    while (!text.empty()) {
        const auto comma = text.find(',');
        std::string_view name = text.substr(0, comma);
        while (!name.empty() && name.front() == ' ') name.remove_prefix(1);
        while (!name.empty() && name.back() == ' ') name.remove_suffix(1);
        bool found = false;
        for (auto p : all_properties()) {
            if (property_name(p) == name) {
                if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
                found = true;
            }
        }
        if (!found) throw InputError("unknown property '" + std::string(name) + "'");
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    if (out.empty()) throw InputError("empty property list");
    return out;
}

bool VerifyReport::passed() const {
    return std::all_of(results.begin(), results.end(), [](const PropertyResult& r) { return r.passed; });
}

std::string VerifyReport::to_text() const {
    std::ostringstream os;
    os << "parts " << parts.to_string() << ": " << (passed() ? "PASS" : "FAIL") << '\n';
    for (const auto& r : results) {
        os << "  " << property_name(r.property) << ": " << (r.passed ? "pass" : "FAIL");
        if (!r.note.empty()) os << " (" << r.note << ')';
        os << '\n';
        if (r.counterexample) {
            os << "    counterexample at " << r.counterexample->argument << ": expected " << r.counterexample->expected
               << ", got " << r.counterexample->actual << '\n';
        }
    }
    return os.str();
}

nlohmann::ordered_json VerifyReport::to_json() const {
    nlohmann::ordered_json doc;
    doc["parts"] = std::vector<std::int64_t>(parts.begin(), parts.end());
    doc["passed"] = passed();
    nlohmann::ordered_json props = nlohmann::ordered_json::array();
    for (const auto& r : results) {
        nlohmann::ordered_json e;
        e["property"] = property_name(r.property);
        e["passed"] = r.passed;
        if (r.counterexample) {
            e["counterexample"] = {{"argument", r.counterexample->argument},
                                   {"expected", r.counterexample->expected},
                                   {"actual", r.counterexample->actual}};
        }
        if (!r.note.empty()) e["note"] = r.note;
        props.push_back(std::move(e));
    }
    doc["properties"] = std::move(props);
    return doc;
}

namespace {

struct Labeled {
    std::string label;
    QuasiPoly cert;
};

// Twice-values in [lo, hi] with a fixed parity, ordered by |value| then sign.
std::vector<std::int64_t> by_magnitude(std::int64_t lo, std::int64_t hi, std::optional<int> parity) {
    std::vector<std::int64_t> out;
    for (std::int64_t k = lo; k <= hi; ++k) {
        if (!parity || ((k % 2 + 2) % 2) == *parity) out.push_back(k);
    }
    std::stable_sort(out.begin(), out.end(), [](std::int64_t a, std::int64_t b) {
        const auto aa = a < 0 ? -a : a;
        const auto bb = b < 0 ? -b : b;
        return aa != bb ? aa < bb : a > b;
    });
    return out;
}

std::string at_label(const std::string& label, const std::string& arg) {
    return label.empty() ? arg : label + " " + arg;
}

void fail(PropertyResult& r, std::string argument, const Rational& expected, const Rational& actual) {
    r.passed = false;
    r.counterexample = Counterexample{std::move(argument), expected.to_string(), actual.to_string()};
}

PropertyResult check_oracle(const PartList& parts, const std::vector<Labeled>& certs, std::int64_t n_max) {
    PropertyResult r{Property::Oracle, true, std::nullopt, {}};
    const CountTable counts = count_dp(parts, n_max);
    for (std::int64_t n = 0; n <= n_max && r.passed; ++n) {
        for (const auto& c : certs) {
            const HalfLatticePoint s = HalfLatticePoint::from_integer(n) + c.cert.xi();
            const Rational v = eval_V(c.cert, s);
            const Rational expected(counts.at(n));
            if (v != expected) {
                fail(r, at_label(c.label, "n=" + std::to_string(n)), expected, v);
                break;
            }
        }
    }
    r.note = "n in 0.." + std::to_string(n_max);
    return r;
}

PropertyResult check_recurrence(const PartList& parts, const std::vector<Labeled>& certs) {
    PropertyResult r{Property::Recurrence, true, std::nullopt, {}};
    const std::size_t m = parts.size();
    if (m < 2) {
        r.note = "not applicable for m = 1";
        return r;
    }
    const std::int64_t tau = parts.lcm();
    const std::int64_t dm = parts.back();
    const HalfLatticePoint step = HalfLatticePoint::from_integer(dm);
    const HalfLatticePoint half_step = HalfLatticePoint::from_twice(static_cast<long>(dm));
    const HalfLatticePoint period = HalfLatticePoint::from_integer(tau);
    for (const auto& c : certs) {
        const Method method = c.label == "recursive" ? Method::Recursive : Method::Explicit;
        const QuasiPoly lower = build_certificate(parts.prefix(m - 1), method);
        for (const auto k : by_magnitude(-tau, tau - 1, std::nullopt)) {
            const HalfLatticePoint s = HalfLatticePoint::from_twice(static_cast<long>(k));
            // V(s) - V(s - d_m) = V_{m-1}(s - d_m/2)
            const Rational lhs = eval_V(c.cert, s) - eval_V(c.cert, s - step);
            const Rational rhs = eval_V(lower, s - half_step);
            if (lhs != rhs) {
                fail(r, at_label(c.label, "s=" + s.to_string()), rhs, lhs);
                return r;
            }
            // V(s + tau) = V(s) + sum_p V_{m-1}(s + tau - (p + 1/2) d_m)
            Rational repeated = eval_V(c.cert, s);
            for (std::int64_t p = 0; p < tau / dm; ++p) {
                repeated += eval_V(lower, s + period - HalfLatticePoint::from_twice(static_cast<long>((2 * p + 1) * dm)));
            }
            const Rational shifted = eval_V(c.cert, s + period);
            if (shifted != repeated) {
                fail(r, at_label(c.label, "repeated s=" + s.to_string()), repeated, shifted);
                return r;
            }
        }
    }
    r.note = "one master period of the half-lattice";
    return r;
}

PropertyResult check_parity(const PartList& parts, const std::vector<Labeled>& certs) {
    PropertyResult r{Property::Parity, true, std::nullopt, {}};
    const std::int64_t tau = parts.lcm();
    const int natural = static_cast<int>(parts.sum() % 2);
    const bool even = parts.size() % 2 == 0;
    std::size_t off_grid_violations = 0;
    for (const auto& c : certs) {
        for (const auto k : by_magnitude(-4 * tau, 4 * tau, std::nullopt)) {
            const HalfLatticePoint s = HalfLatticePoint::from_twice(static_cast<long>(k));
            const Rational v = eval_V(c.cert, s);
            const Rational mirrored = eval_V(c.cert, -s);
            const Rational expected = even ? -v : v;
            if (mirrored == expected) continue;
            if (((k % 2 + 2) % 2) != natural) {
                ++off_grid_violations;
                continue;
            }
            if (r.passed) fail(r, at_label(c.label, "s=" + (-s).to_string()), expected, mirrored);
        }
    }
    r.note = "natural grid |s| <= " + std::to_string(2 * tau) + "; off-grid mismatches: " + std::to_string(off_grid_violations);
    return r;
}

PropertyResult check_zeros(const PartList& parts, const std::vector<Labeled>& certs) {
    PropertyResult r{Property::Zeros, true, std::nullopt, {}};
    const auto m = static_cast<std::int64_t>(parts.size());
    // even m: s = 0, 1, ..., m/2 - 1; odd m: s = 1/2, 3/2, ..., m/2 - 1
    std::vector<std::int64_t> twice;
    for (std::int64_t t = (m % 2 == 0 ? 0 : 1); t <= m - 2; t += 2) twice.push_back(t);
    for (const auto& c : certs) {
        for (auto t : twice) {
            const HalfLatticePoint s = HalfLatticePoint::from_twice(static_cast<long>(t));
            const Rational v = eval_V(c.cert, s);
            if (!v.is_zero()) {
                fail(r, at_label(c.label, "s=" + s.to_string()), Rational(0), v);
                return r;
            }
        }
    }
    r.note = std::to_string(twice.size()) + (twice.size() == 1 ? " point" : " points");
    return r;
}

PropertyResult check_path_agreement(const PartList& parts) {
    PropertyResult r{Property::PathAgreement, true, std::nullopt, {}};
    const std::int64_t tau = parts.lcm();
    const QuasiPoly a = align(build_explicit(parts), tau);
    const QuasiPoly b = align(build_recursive(parts), tau);
    const std::size_t m = parts.size();
    for (std::size_t j = 1; j <= m; ++j) {
        const auto& ta = a.coefficient(j).table();
        const auto& tb = b.coefficient(j).table();
        for (std::size_t k = 0; k < ta.size(); ++k) {
            if (ta[k] != tb[k]) {
                fail(r, "power " + std::to_string(m - j) + " residue " + std::to_string(k), ta[k], tb[k]);
                return r;
            }
        }
    }
    return r;
}

PropertyResult check_mean_value(const PartList& parts, const std::vector<Labeled>& certs) {
    PropertyResult r{Property::MeanValue, true, std::nullopt, {}};
    for (const auto& c : certs) {
        for (std::size_t j = 1; j <= parts.size(); ++j) {
            const Rational expected = r_coeff_explicit(j, parts);
            const Rational mean = c.cert.coefficient(j).coset_mean(c.cert.xi());
            if (mean != expected) {
                fail(r, at_label(c.label, "j=" + std::to_string(j)), expected, mean);
                return r;
            }
        }
    }
    return r;
}

}  // namespace

VerifyReport verify(const PartList& parts, const VerifyOptions& options) {
    VerifyReport report{parts, {}};
    std::vector<Labeled> certs;
    if (options.method != Method::Recursive) certs.push_back({"explicit", build_explicit(parts)});
    if (options.method != Method::Explicit) certs.push_back({"recursive", build_recursive(parts)});
    const std::int64_t n_max = options.n_max.value_or(3 * parts.lcm() + 10);
    if (n_max < 0) throw InputError("n-max must be nonnegative");

    for (auto p : options.properties) {
        switch (p) {
            case Property::Oracle: report.results.push_back(check_oracle(parts, certs, n_max)); break;
            case Property::Recurrence: report.results.push_back(check_recurrence(parts, certs)); break;
            case Property::Parity: report.results.push_back(check_parity(parts, certs)); break;
            case Property::Zeros: report.results.push_back(check_zeros(parts, certs)); break;
            case Property::PathAgreement: report.results.push_back(check_path_agreement(parts)); break;
            case Property::MeanValue: report.results.push_back(check_mean_value(parts, certs)); break;
        }
    }
    return report;
}

std::vector<PartList> corpus(int max_m, int max_part) {
    if (max_m < 1 || max_part < 1) throw InputError("corpus bounds must be positive");
    std::vector<PartList> out;
    std::vector<std::int64_t> current;
    std::function<void(std::int64_t)> rec = [&](std::int64_t min_part) {
        if (!current.empty()) out.emplace_back(current);
        if (static_cast<int>(current.size()) == max_m) return;
        for (std::int64_t d = min_part; d <= max_part; ++d) {
            current.push_back(d);
            rec(d);
            current.pop_back();
        }
    };
    rec(1);
    std::stable_sort(out.begin(), out.end(), [](const PartList& a, const PartList& b) { return a.size() < b.size(); });
    return out;
}

std::vector<VerifyReport> verify_corpus(const std::vector<PartList>& lists, const VerifyOptions& options, unsigned threads) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, lists.size())));
    std::vector<std::optional<VerifyReport>> slots(lists.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < lists.size(); i = next++) slots[i] = verify(lists[i], options);
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    std::vector<VerifyReport> out;
    out.reserve(slots.size());
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

BenchResult bench(const PartList& parts, std::int64_t n, Method method, int eval_repeats) {
    using clock = std::chrono::steady_clock;
    if (n < 0) throw InputError("bench needs n >= 0");
    if (method == Method::Oracle) method = Method::Explicit;
    BenchResult result{parts, method, n, {}, {}, {}, 0, 0};

    auto t0 = clock::now();
    const QuasiPoly cert = build_certificate(parts, method);
    auto t1 = clock::now();
    result.build_time = std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0);

    const BigInt nn(static_cast<long>(n));
    Rational value;
    eval_repeats = std::max(1, eval_repeats);
    t0 = clock::now();
    for (int i = 0; i < eval_repeats; ++i) value = eval_W(cert, nn);
    t1 = clock::now();
    result.eval_time = std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0) / eval_repeats;
    result.certificate_value = value.to_integer();

    t0 = clock::now();
    const CountTable table = count_dp(parts, n);
    t1 = clock::now();
    result.dp_time = std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0);
    result.dp_value = table.at(n);
    return result;
}

}  // namespace rpf

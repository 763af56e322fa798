// rpf: restricted partition function toolkit.
//
//   rpf eval    --parts 1,2,3 --n 0..10 [--method explicit|recursive|oracle] [--format plain|json|csv]
//   rpf cert    --parts 2,3 [--method explicit|recursive]
//   rpf verify  --parts 1,2,3 [--props oracle,parity] [--n-max 60] [--method explicit|recursive] [--format plain|json]
//   rpf bench   --parts 1,2,3,4 --n 10^6 [--method explicit|recursive] [--format plain|csv]
//   rpf corpus  --max-m 3 --max-part 4 [--props ...] [--format plain|json]
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include "rpf/exactnum.hpp"
#include "rpf/harness.hpp"
#include "rpf/oracle.hpp"
#include "rpf/quasipoly.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <iostream>
#include <optional>
#include <string>
#include <utility>

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

std::int64_t parse_count(std::string_view text) {
    auto parse_plain = [&](std::string_view t) {
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
        if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
            throw rpf::InputError("malformed integer '" + std::string(text) + "'");
        }
        return v;
    };
    const auto caret = text.find('^');
    if (caret == std::string_view::npos) return parse_plain(text);
    const std::int64_t base = parse_plain(text.substr(0, caret));
    const std::int64_t exponent = parse_plain(text.substr(caret + 1));
    if (exponent < 0) throw rpf::InputError("negative exponent in '" + std::string(text) + "'");
    std::int64_t v = 1;
    for (std::int64_t i = 0; i < exponent; ++i) {
        if (__builtin_mul_overflow(v, base, &v)) throw rpf::InputError("'" + std::string(text) + "' overflows");
    }
    return v;
}

// "a..b" inclusive, or a single value.
std::pair<std::int64_t, std::int64_t> parse_range(std::string_view text) {
    const auto dots = text.find("..");
    if (dots == std::string_view::npos) {
        const auto v = parse_count(text);
        return {v, v};
    }
    const auto lo = parse_count(text.substr(0, dots));
    const auto hi = parse_count(text.substr(dots + 2));
    if (lo > hi) throw rpf::InputError("empty range '" + std::string(text) + "'");
    return {lo, hi};
}

void require_format(const std::string& format, std::initializer_list<std::string_view> allowed) {
    for (auto a : allowed) {
        if (format == a) return;
    }
    throw rpf::InputError("unsupported --format '" + format + "' for this command");
}

std::string nanos(std::chrono::nanoseconds ns) { return std::to_string(ns.count()); }

struct Options {
    std::string parts;
    std::string n;
    std::optional<std::int64_t> n_max;
    std::string method;
    std::string props = "all";
    std::string format = "plain";
    int max_m = 0;
    int max_part = 0;
};

int cmd_eval(const Options& o) {
    require_format(o.format, {"plain", "json", "csv"});
    const auto parts = rpf::PartList::parse(o.parts);
    const auto [lo, hi] = parse_range(o.n);
    if (lo < 0) throw rpf::InputError("n must be nonnegative");
    const rpf::Method method = o.method.empty() ? rpf::Method::Explicit : rpf::parse_method(o.method);

    std::vector<rpf::BigInt> values;
    if (method == rpf::Method::Oracle) {
        const auto table = rpf::count_dp(parts, hi);
        for (auto n = lo; n <= hi; ++n) values.push_back(table.at(n));
    } else {
        const auto cert = rpf::build_certificate(parts, method);
        for (auto n = lo; n <= hi; ++n) values.push_back(rpf::eval_W(cert, rpf::BigInt(static_cast<long>(n))).to_integer());
    }

    if (o.format == "json") {
        nlohmann::ordered_json doc;
        doc["parts"] = std::vector<std::int64_t>(parts.begin(), parts.end());
        doc["method"] = rpf::method_name(method);
        nlohmann::ordered_json counts = nlohmann::ordered_json::array();
        for (std::size_t i = 0; i < values.size(); ++i) {
            counts.push_back({{"n", lo + static_cast<std::int64_t>(i)}, {"count", values[i].get_str()}});
        }
        doc["counts"] = std::move(counts);
        std::cout << doc.dump() << '\n';
    } else if (o.format == "csv") {
        std::cout << "n,count\n";
        for (std::size_t i = 0; i < values.size(); ++i) std::cout << lo + static_cast<std::int64_t>(i) << ',' << values[i].get_str() << '\n';
    } else {
        for (std::size_t i = 0; i < values.size(); ++i) std::cout << (i ? " " : "") << values[i].get_str();
        std::cout << '\n';
    }
    return 0;
}

int cmd_cert(const Options& o) {
    require_format(o.format, {"plain", "json"});
    const auto parts = rpf::PartList::parse(o.parts);
    const rpf::Method method = o.method.empty() ? rpf::Method::Explicit : rpf::parse_method(o.method);
    std::cout << rpf::to_json(rpf::build_certificate(parts, method)) << '\n';
    return 0;
}

rpf::VerifyOptions verify_options(const Options& o) {
    rpf::VerifyOptions v;
    v.properties = rpf::parse_properties(o.props);
    v.n_max = o.n_max;
    if (!o.method.empty() && o.method != "both") {
        v.method = rpf::parse_method(o.method);
        if (v.method == rpf::Method::Oracle) throw rpf::InputError("verify checks explicit, recursive or both");
    }
    return v;
}

int cmd_verify(const Options& o) {
    require_format(o.format, {"plain", "json"});
    const auto parts = rpf::PartList::parse(o.parts);
    const auto report = rpf::verify(parts, verify_options(o));
    if (o.format == "json") {
        std::cout << report.to_json().dump() << '\n';
    } else {
        std::cout << report.to_text();
    }
    return report.passed() ? 0 : kExitFailure;
}

int cmd_bench(const Options& o) {
    require_format(o.format, {"plain", "csv"});
    const auto parts = rpf::PartList::parse(o.parts);
    const auto n = parse_count(o.n);
    const rpf::Method method = o.method.empty() ? rpf::Method::Explicit : rpf::parse_method(o.method);
    const auto r = rpf::bench(parts, n, method);
    if (o.format == "csv") {
        std::cout << "parts,method,n,build_ns,eval_ns,dp_ns,certificate_value,dp_value,agree\n";
        std::cout << '"' << parts.to_string() << "\"," << rpf::method_name(r.method) << ',' << n << ',' << nanos(r.build_time) << ','
                  << nanos(r.eval_time) << ',' << nanos(r.dp_time) << ',' << r.certificate_value.get_str() << ','
                  << r.dp_value.get_str() << ',' << (r.agree() ? "yes" : "no") << '\n';
    } else {
        std::cout << "parts " << parts.to_string() << ", method " << rpf::method_name(r.method) << ", n " << n << '\n'
                  << "  certificate build    " << nanos(r.build_time) << " ns\n"
                  << "  certificate eval     " << nanos(r.eval_time) << " ns per call\n"
                  << "  dp up to n           " << nanos(r.dp_time) << " ns\n"
                  << "  value (certificate)  " << r.certificate_value.get_str() << '\n'
                  << "  value (dp)           " << r.dp_value.get_str() << '\n'
                  << "  agree                " << (r.agree() ? "yes" : "no") << '\n';
    }
    return r.agree() ? 0 : kExitFailure;
}

int cmd_corpus(const Options& o) {
    require_format(o.format, {"plain", "json"});
    if (o.max_m < 1 || o.max_part < 1) throw rpf::InputError("--max-m and --max-part must be positive");
    const auto lists = rpf::corpus(o.max_m, o.max_part);
    const auto options = verify_options(o);
    const auto reports = rpf::verify_corpus(lists, options);
    std::size_t failed = 0;
    for (const auto& r : reports) failed += r.passed() ? 0 : 1;

    if (o.format == "json") {
        nlohmann::ordered_json doc;
        doc["sets_checked"] = reports.size();
        doc["failed"] = failed;
        nlohmann::ordered_json all = nlohmann::ordered_json::array();
        for (const auto& r : reports) all.push_back(r.to_json());
        doc["reports"] = std::move(all);
        std::cout << doc.dump() << '\n';
    } else {
        std::cout << "parts";
        for (auto p : options.properties) std::cout << '\t' << rpf::property_name(p);
        std::cout << '\n';
        for (const auto& r : reports) {
            std::cout << r.parts.to_string();
            for (const auto& res : r.results) std::cout << '\t' << (res.passed ? "pass" : "FAIL");
            std::cout << '\n';
        }
        for (const auto& r : reports) {
            if (!r.passed()) std::cout << r.to_text();
        }
        std::cout << reports.size() << " sets checked, " << failed << " failed\n";
    }
    return failed == 0 ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Restricted partition function: quasi-polynomial certificates and verification"};
    app.require_subcommand(1);
    Options o;

    auto* eval = app.add_subcommand("eval", "Print exact counts p(n, d) for n or a range a..b");
    eval->add_option("--parts", o.parts, "Comma-separated parts, order preserved")->required();
    eval->add_option("--n", o.n, "n, a^b, or an inclusive range a..b")->required();
    eval->add_option("--method", o.method, "explicit | recursive | oracle");
    eval->add_option("--format", o.format, "plain | json | csv");

    auto* cert = app.add_subcommand("cert", "Emit the quasi-polynomial certificate as JSON");
    cert->add_option("--parts", o.parts)->required();
    cert->add_option("--method", o.method, "explicit | recursive");
    cert->add_option("--format", o.format, "json");

    auto* verify = app.add_subcommand("verify", "Check structural and oracle properties");
    verify->add_option("--parts", o.parts)->required();
    verify->add_option("--props", o.props, "Comma-separated: oracle,recurrence,parity,zeros,path-agreement,mean-value or all");
    verify->add_option("--n-max", o.n_max, "Upper end of the oracle range (default 3*LCM+10)");
    verify->add_option("--method", o.method, "explicit | recursive | both (default)");
    verify->add_option("--format", o.format, "plain | json");

    auto* bench = app.add_subcommand("bench", "Time certificate evaluation against the DP oracle");
    bench->add_option("--parts", o.parts)->required();
    bench->add_option("--n", o.n, "n or a^b")->required();
    bench->add_option("--method", o.method, "explicit | recursive");
    bench->add_option("--format", o.format, "plain | csv");

    auto* corpus = app.add_subcommand("corpus", "Verify every multiset with m <= max-m and parts <= max-part");
    corpus->add_option("--max-m", o.max_m)->required();
    corpus->add_option("--max-part", o.max_part)->required();
    corpus->add_option("--props", o.props);
    corpus->add_option("--n-max", o.n_max);
    corpus->add_option("--method", o.method, "explicit | recursive | both (default)");
    corpus->add_option("--format", o.format, "plain | json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (eval->parsed()) return cmd_eval(o);
        if (cert->parsed()) return cmd_cert(o);
        if (verify->parsed()) return cmd_verify(o);
        if (bench->parsed()) return cmd_bench(o);
        if (corpus->parsed()) return cmd_corpus(o);
    } catch (const rpf::InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const rpf::IntegralityError& e) {
        std::cerr << "integrality violation: " << e.what() << '\n';
        return kExitFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

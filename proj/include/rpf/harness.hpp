#pragma once

// Property verification, corpus sweeps and timing for the CLI front end.

#include "rpf/exactnum.hpp"
#include "rpf/quasipoly.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rpf {

enum class Method { Explicit, Recursive, Oracle };

Method parse_method(std::string_view text);
std::string_view method_name(Method m);

/// Certificate from the explicit formula or the recursive chain.
QuasiPoly build_certificate(const PartList& parts, Method method);

enum class Property { Oracle, Recurrence, Parity, Zeros, PathAgreement, MeanValue };

std::string_view property_name(Property p);
/// Comma-separated names, or "all".
std::vector<Property> parse_properties(std::string_view text);
const std::vector<Property>& all_properties();

struct Counterexample {
    std::string argument;
    std::string expected;
    std::string actual;
};

struct PropertyResult {
    Property property;
    bool passed = true;
    std::optional<Counterexample> counterexample;
    std::string note;
};

struct VerifyReport {
    PartList parts;
    std::vector<PropertyResult> results;

    bool passed() const;
    std::string to_text() const;
    nlohmann::ordered_json to_json() const;
};

struct VerifyOptions {
    std::vector<Property> properties = all_properties();
    /// Oracle range upper bound; defaults to 3 * LCM + 10.
    std::optional<std::int64_t> n_max;
    /// Which certificates to check. Oracle means "both constructions".
    Method method = Method::Oracle;
};

VerifyReport verify(const PartList& parts, const VerifyOptions& options);

/// Every nondecreasing part list with 1 <= m <= max_m and parts <= max_part.
std::vector<PartList> corpus(int max_m, int max_part);

/// Verifies each list of the corpus, fanning out over `threads` workers
/// (0 picks the hardware concurrency). Reports come back in corpus order.
std::vector<VerifyReport> verify_corpus(const std::vector<PartList>& lists, const VerifyOptions& options,
                                        unsigned threads = 0);

struct BenchResult {
    PartList parts;
    Method method;
    std::int64_t n;
    std::chrono::nanoseconds build_time;
    std::chrono::nanoseconds eval_time;  // per call
    std::chrono::nanoseconds dp_time;
    BigInt certificate_value;
    BigInt dp_value;

    bool agree() const { return certificate_value == dp_value; }
};

BenchResult bench(const PartList& parts, std::int64_t n, Method method, int eval_repeats = 200);

}  // namespace rpf

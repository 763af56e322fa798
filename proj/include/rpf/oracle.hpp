#pragma once

// Ground-truth denumerant counts: coefficients of prod 1/(1 - t^{d_i}).
// Equal parts are distinct coordinates, so {1,1} gives n + 1.

#include "rpf/exactnum.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rpf {

/// Raised when brute-force enumeration would exceed its guard.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultEnumerationGuard = 10'000'000;

struct CountTable {
    PartList parts;
    std::int64_t max_n = 0;
    std::vector<BigInt> counts;

    /// Count at n; 0 for negative n.
    BigInt at(std::int64_t n) const;

    /// "n,count" header followed by one row per n.
    std::string to_csv() const;
};

/// One convolution pass per part.
CountTable count_dp(const PartList& parts, std::int64_t max_n);

/// Guard from RPF_GUARD_LIMIT if set and valid, else the default.
std::uint64_t enumeration_guard_from_env();

/// Nested iteration over all multiplicity vectors. Throws CapacityError if
/// prod (n / d_i + 1) exceeds `guard`.
BigInt count_enum(const PartList& parts, std::int64_t n, std::uint64_t guard = enumeration_guard_from_env());


/// q(s) = p(s - xi); 0 when s - xi is not a nonnegative integer.
BigInt shifted_q(const PartList& parts, const HalfLatticePoint& s);

}  // namespace rpf

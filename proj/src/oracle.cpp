#include "rpf/oracle.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <sstream>

namespace rpf {

BigInt CountTable::at(std::int64_t n) const {
    if (n < 0) return 0;
    if (n > max_n) throw InputError("count requested beyond table bound");
    return counts[static_cast<std::size_t>(n)];
}

std::string CountTable::to_csv() const {
    std::ostringstream os;
    os << "n,count\n";
    for (std::size_t n = 0; n < counts.size(); ++n) os << n << ',' << counts[n].get_str() << '\n';
    return os.str();
}

CountTable count_dp(const PartList& parts, std::int64_t max_n) {
    if (max_n < 0) throw InputError("max_n must be nonnegative");
    CountTable t{parts, max_n, std::vector<BigInt>(static_cast<std::size_t>(max_n) + 1, 0)};
    t.counts[0] = 1;
    for (auto d : parts) {
        // multiply by 1/(1 - t^d)
        for (std::int64_t n = d; n <= max_n; ++n) {
            t.counts[static_cast<std::size_t>(n)] += t.counts[static_cast<std::size_t>(n - d)];
        }
    }
    return t;
}

BigInt count_enum(const PartList& parts, std::int64_t n, std::uint64_t guard) {
    if (n < 0) return 0;
    BigInt space = 1;
    for (auto d : parts) space *= static_cast<unsigned long>(n / d + 1);
    if (space > BigInt(std::to_string(guard))) {
        throw CapacityError("enumeration space " + space.get_str() + " exceeds guard " + std::to_string(guard));
    }
    const std::size_t m = parts.size();
    // Odometer over x_1..x_{m-1}; x_m is forced by divisibility.
    std::vector<std::int64_t> x(m, 0);
    BigInt count = 0;
    std::int64_t used = 0;
    while (true) {
        const std::int64_t rest = n - used;
        if (rest >= 0 && rest % parts.back() == 0) ++count;
        std::size_t k = 0;
        for (; k + 1 < m; ++k) {
            if (used + parts[k] <= n) {
                ++x[k];
                used += parts[k];
                break;
            }
            used -= x[k] * parts[k];
            x[k] = 0;
        }
        if (k + 1 >= m) break;
    }
    return count;
}

std::uint64_t enumeration_guard_from_env() {
    const char* raw = std::getenv("RPF_GUARD_LIMIT");
    if (raw == nullptr) return kDefaultEnumerationGuard;
    std::uint64_t v = 0;
    const char* end = raw + std::strlen(raw);
    auto [ptr, ec] = std::from_chars(raw, end, v);
    if (ec != std::errc() || ptr != end || v == 0) return kDefaultEnumerationGuard;
    return v;
}

BigInt shifted_q(const PartList& parts, const HalfLatticePoint& s) {
    const BigInt twice_n = s.twice_value() - parts.sum();
    if (twice_n < 0 || mpz_odd_p(twice_n.get_mpz_t())) return 0;
    const BigInt n = twice_n / 2;
    if (!n.fits_slong_p()) throw InputError("argument too large for the counting oracle");
    return count_dp(parts, n.get_si()).at(n.get_si());
}

}  // namespace rpf

// Small numeric helpers.
#pragma once

#include <cstdint>
#include <limits>

namespace cliquehom {

/// Binomial coefficient C(n, k), saturating at UINT64_MAX on overflow.
inline unsigned long long binom(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 acc = 1;
    constexpr unsigned __int128 cap = std::numeric_limits<unsigned long long>::max();
    for (long long i = 1; i <= k; ++i) {
        acc = acc * static_cast<unsigned __int128>(n - k + i) / static_cast<unsigned __int128>(i);
        if (acc > cap) return std::numeric_limits<unsigned long long>::max();
    }
    return static_cast<unsigned long long>(acc);
}

/// Integer ceil(a / b) for nonnegative a, positive b.
inline long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

}  // namespace cliquehom

// Minimal exact rational type for edit distances and Betti ratios.
#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

#include "cliquehom/errors.hpp"

namespace cliquehom {

/// Reduced fraction num/den with den > 0. Values stay small here (counts of
/// edges and faces), so 64-bit components with 128-bit compares suffice.
struct Ratio {
    long long num = 0;
    long long den = 1;

    Ratio() = default;
    Ratio(long long n, long long d) : num(n), den(d) {
        if (den == 0) fail(errc::invalid_params, "ratio with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }

    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

    friend bool operator==(const Ratio& a, const Ratio& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
        __int128 lhs = static_cast<__int128>(a.num) * b.den;
        __int128 rhs = static_cast<__int128>(b.num) * a.den;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }
};

}  // namespace cliquehom

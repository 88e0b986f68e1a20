#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace sumdilates {

/// Nonnegative rational in lowest terms. Holds doubling constants |A+A|/|A|.
struct Rational {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    friend bool operator==(const Rational&, const Rational&) = default;
};

inline Rational make_rational(std::uint64_t num, std::uint64_t den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    const std::uint64_t g = std::gcd(num, den);
    return Rational{num / (g ? g : 1), den / (g ? g : 1)};
}

/// Sign of a - b, computed without overflow.
inline int compare(const Rational& a, const Rational& b) {
    using u128 = unsigned __int128;
    const u128 lhs = static_cast<u128>(a.num) * b.den;
    const u128 rhs = static_cast<u128>(b.num) * a.den;
    return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

inline double to_double(const Rational& r) {
    return static_cast<double>(r.num) / static_cast<double>(r.den);
}

inline std::string to_string(const Rational& r) {
    if (r.den == 1) return std::to_string(r.num);
    return std::to_string(r.num) + "/" + std::to_string(r.den);
}

enum class DoublingMode { sum, difference };

} // namespace sumdilates

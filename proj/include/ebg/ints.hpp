#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace ebg {

// Unbounded integers and rationals for everything where values can outgrow
// machine words: admissibility formulas, automorphism orders, indices.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int factorial(std::int64_t n) {
    Int r = 1;
    for (std::int64_t i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Int binom(const Int& n, int k) {
    if (n < k || k < 0) return 0;
    Int r = 1;
    for (int i = 0; i < k; ++i) r *= n - i;
    for (int i = 2; i <= k; ++i) r /= i;
    return r;
}

// Machine-word binomials for census arithmetic. All call sites stay far
// inside int64 range (documented per use).
inline std::int64_t choose2(std::int64_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }
inline std::int64_t choose3(std::int64_t n) { return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6; }
inline std::int64_t choose4(std::int64_t n) {
    if (n < 4) return 0;
    // n up to ~2e4 stays exact; larger k-counts go through Int.
    return n * (n - 1) / 2 * ((n - 2) * (n - 3) / 2) / 6;
}

inline std::string int128_to_string(__int128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 x = neg ? -static_cast<unsigned __int128>(v) : v;
    std::string s;
    while (x > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(x % 10)));
        x /= 10;
    }
    if (neg) s.push_back('-');
    return {s.rbegin(), s.rend()};
}

}  // namespace ebg

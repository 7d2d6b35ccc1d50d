#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <vector>

namespace c2 {

// Exact integer coefficients. Counts and symbolic coefficients both need
// unbounded precision; cpp_int keeps small values inline.
using Int = boost::multiprecision::cpp_int;

inline Int int_gcd(const Int& a, const Int& b) {
    return boost::multiprecision::gcd(a, b);
}

// Floor square root; second member tells whether the input is a perfect square.
inline std::pair<Int, bool> int_sqrt_exact(const Int& n) {
    if (n < 0) return {0, false};
    Int r = boost::multiprecision::sqrt(n);
    return {r, r * r == n};
}

// Prime divisors of |n| by trial division. Used for bad-prime candidates,
// where |n| is a small reduction-leaf coefficient.
inline std::vector<std::int64_t> prime_divisors(Int n) {
    std::vector<std::int64_t> out;
    if (n < 0) n = -n;
    if (n <= 1) return out;
    for (Int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(static_cast<std::int64_t>(p));
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(static_cast<std::int64_t>(n));
    return out;
}

} // namespace c2

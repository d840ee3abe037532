#pragma once

// Integer helpers shared across modules: floor/ceil division, primality,
// quadratic symbols and the exact rational/big-integer aliases.

#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>

#include <gmpxx.h>

#include "qspt/error.hpp"

namespace qspt {

using BigInt = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const BigInt& num, const BigInt& den)
{
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(std::int64_t num, std::int64_t den = 1)
{
    return make_rational(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den)));
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline std::string to_string(const Rational& r) { return r.get_str(); }

constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b)
{
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) {
        --q;
    }
    return q;
}

constexpr std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

/// Residue of a modulo m in [0, m).
constexpr std::int64_t pos_mod(std::int64_t a, std::int64_t m)
{
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

inline std::int64_t isqrt(std::int64_t n)
{
    if (n < 0) {
        return -1;
    }
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) {
        --r;
    }
    while ((r + 1) * (r + 1) <= n) {
        ++r;
    }
    return r;
}

inline bool is_square(std::int64_t n)
{
    if (n < 0) {
        return false;
    }
    std::int64_t r = isqrt(n);
    return r * r == n;
}

constexpr bool is_prime(std::int64_t n)
{
    if (n < 2) {
        return false;
    }
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

inline std::int64_t powmod(std::int64_t base, std::int64_t exp, std::int64_t mod)
{
    __int128 result = 1;
    __int128 b = pos_mod(base, mod);
    while (exp > 0) {
        if (exp & 1) {
            result = result * b % mod;
        }
        b = b * b % mod;
        exp >>= 1;
    }
    return static_cast<std::int64_t>(result);
}

/// Legendre symbol (a|p) by Euler's criterion.
inline int legendre(std::int64_t a, std::int64_t p)
{
    if (p < 3 || !is_prime(p)) {
        throw BadModulus("legendre: modulus " + std::to_string(p) + " is not an odd prime");
    }
    std::int64_t r = pos_mod(a, p);
    if (r == 0) {
        return 0;
    }
    return powmod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

/// The character (12|m).
constexpr int chi12(std::int64_t m)
{
    switch (pos_mod(m, 12)) {
    case 1:
    case 11:
        return 1;
    case 5:
    case 7:
        return -1;
    default:
        return 0;
    }
}

} // namespace qspt

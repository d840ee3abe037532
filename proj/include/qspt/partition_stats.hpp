#pragma once

// Partition statistics: spt(n), the signed triangular weight and its
// generating function A(q), the even/odd-rank count u*(n) of strongly unimodal
// sequences, and the coefficient formulas that express c(n), the
// coefficients of j, through p, spt, a and u*.
//
// Each combinatorial definition has a brute-force enumerator next to the
// fast table builder; the enumerators are guarded to small n.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qspt/arith.hpp"
#include "qspt/error.hpp"
#include "qspt/modular_forms.hpp"
#include "qspt/partitions.hpp"
#include "qspt/report.hpp"
#include "qspt/series.hpp"

namespace qspt {

inline constexpr int kPartitionEnumerationLimit = 60;
inline constexpr int kUnimodalEnumerationLimit = 40;

// ---------------------------------------------------------------------------
// Table builders

/// spt(0..n) from sum_{s>=1} q^s/(1-q^s)^2 * prod_{j>s} 1/(1-q^j).
///
/// s runs downward so the tail product prod_{j>s} 1/(1-q^j) is extended by one
/// factor per step; each step is two O(n) divisions by (1 - q^s).
inline std::vector<BigInt> spt_table(std::int64_t n)
{
    if (n < 0) {
        throw std::invalid_argument("spt_table: n must be >= 0");
    }
    const auto size = static_cast<std::size_t>(n) + 1;
    std::vector<BigInt> spt(size);
    std::vector<BigInt> tail(size); // prod_{j>s} 1/(1-q^j)
    std::vector<BigInt> term(size);
    tail[0] = 1;
    for (std::int64_t s = n; s >= 1; --s) {
        const auto us = static_cast<std::size_t>(s);
        const auto reach = static_cast<std::size_t>(n - s); // the term is shifted by q^s
        // tail <- tail / (1 - q^s) over the whole range; later, smaller s read further.
        for (std::size_t k = us; k < size; ++k) {
            tail[k] += tail[k - us];
        }
        for (std::size_t k = 0; k <= reach; ++k) {
            term[k] = tail[k];
            if (k >= us) {
                term[k] += term[k - us];
            }
            spt[k + us] += term[k];
        }
    }
    return spt;
}

/// a(0..n): coefficients of A(q) = (1/(q;q)_inf) sum_{k>=1} (-1)^(k-1) k q^(k(k+1)/2) / (1 - q^k).
inline std::vector<BigInt> a_series(std::int64_t n)
{
    if (n < 0) {
        throw std::invalid_argument("a_series: n must be >= 0");
    }
    const std::int64_t precision = n + 1;
    std::vector<Rational> inner(static_cast<std::size_t>(precision));
    for (std::int64_t k = 1; k * (k + 1) / 2 <= n; ++k) {
        const long weight = (k % 2 == 1) ? k : -k;
        for (std::int64_t m = k * (k + 1) / 2; m <= n; m += k) {
            inner[static_cast<std::size_t>(m)] += weight;
        }
    }
    const LaurentSeries sum(1, 0, precision, std::move(inner));
    const LaurentSeries a = sum * invert(euler_series(precision));
    std::vector<BigInt> out(static_cast<std::size_t>(precision));
    for (std::int64_t m = 0; m <= n; ++m) {
        out[static_cast<std::size_t>(m)] = a.coeff(m).get_num();
    }
    return out;
}

// ---------------------------------------------------------------------------
// Signed triangular weight and brute-force oracles

/// t_s for a partition given in multiplicity form (m[k] = copies of part k).
inline std::int64_t t_signed(std::span<const int> mult)
{
    std::int64_t total = 0;
    for (std::size_t k = 1; k < mult.size() && mult[k] > 0; ++k) {
        const std::int64_t term = static_cast<std::int64_t>(k) * mult[k];
        total += (k % 2 == 1) ? term : -term;
    }
    return total;
}

inline std::int64_t t_signed(const Partition& lambda)
{
    const auto m = lambda.multiplicities();
    return t_signed(std::span<const int>(m));
}

namespace detail {

inline void guard(std::int64_t n, std::int64_t limit, const char* who)
{
    if (n > limit) {
        throw EnumerationLimit(std::string(who) + ": n = " + std::to_string(n) + " exceeds enumeration guard " +
                               std::to_string(limit));
    }
}

} // namespace detail

/// Total count of smallest parts over all partitions of n, by enumeration.
inline std::int64_t spt_bruteforce(std::int64_t n)
{
    detail::guard(n, kPartitionEnumerationLimit, "spt_bruteforce");
    if (n <= 0) {
        return 0;
    }
    std::int64_t total = 0;
    for_each_partition(static_cast<int>(n), [&](std::span<const int> m) {
        for (std::size_t k = 1; k < m.size(); ++k) {
            if (m[k] > 0) {
                total += m[k];
                return;
            }
        }
    });
    return total;
}

/// sum of t_s(lambda) over partitions of n, by enumeration.
inline std::int64_t ts_sum_bruteforce(std::int64_t n)
{
    detail::guard(n, kPartitionEnumerationLimit, "ts_sum_bruteforce");
    if (n <= 0) {
        return 0;
    }
    std::int64_t total = 0;
    for_each_partition(static_cast<int>(n), [&](std::span<const int> m) { total += t_signed(m); });
    return total;
}

namespace detail {

// Visits every set of distinct parts drawn from {1, ..., top} whose sum is at
// most `budget` (exactly `budget` when `exact`), reporting (sum, count).
// Parts are picked in decreasing order so each set is seen once.
template <class Visit>
void distinct_parts_rec(int top, int budget, bool exact, int sum, int count, Visit& visit)
{
    if (exact && top * (top + 1) / 2 < budget) {
        return;
    }
    if (!exact || budget == 0) {
        visit(sum, count);
    }
    for (int part = std::min(top, budget); part >= 1; --part) {
        distinct_parts_rec(part - 1, budget - part, exact, sum + part, count + 1, visit);
    }
}

} // namespace detail

/// Even-rank minus odd-rank count of strongly unimodal sequences of size n,
/// by enumerating (increasing run, peak, decreasing run) triples.
inline std::int64_t ustar_bruteforce(std::int64_t n)
{
    detail::guard(n, kUnimodalEnumerationLimit, "ustar_bruteforce");
    std::int64_t total = 0;
    for (int peak = 1; peak <= n; ++peak) {
        const int rest = static_cast<int>(n) - peak;
        auto on_left = [&](int left_sum, int left_len) {
            auto on_right = [&](int, int right_len) {
                // rank = s - 2r + 1 = (#after peak) - (#before peak)
                const int rank = right_len - left_len;
                total += (rank % 2 == 0) ? 1 : -1;
            };
            detail::distinct_parts_rec(peak - 1, rest - left_sum, true, 0, 0, on_right);
        };
        detail::distinct_parts_rec(peak - 1, rest, false, 0, 0, on_left);
    }
    return total;
}

// ---------------------------------------------------------------------------
// Arithmetic weights

/// s(n): 2 for n = 1, (-1)^(k+1) when 24n + 25 or 24n + 1 equals (6k+1)^2, else 0.
inline int s_fn(std::int64_t n)
{
    if (n < 1) {
        throw std::invalid_argument("s_fn: n must be >= 1");
    }
    if (n == 1) {
        return 2;
    }
    for (std::int64_t target : {24 * n + 25, 24 * n + 1}) {
        if (!is_square(target)) {
            continue;
        }
        const std::int64_t x = isqrt(target);
        // x^2 = 1 mod 24 forces x = +-1 mod 6; pick the sign with 6k + 1 = +-x.
        const std::int64_t k = (x % 6 == 1) ? (x - 1) / 6 : (-x - 1) / 6;
        return (pos_mod(k, 2) == 1) ? 1 : -1;
    }
    return 0;
}

/// mu_n = 6 - ((1 - 24n) | 5).
inline int mu(std::int64_t n)
{
    if (n < 1) {
        throw std::invalid_argument("mu: n must be >= 1");
    }
    return 6 - legendre(1 - 24 * n, 5);
}

// ---------------------------------------------------------------------------
// Tables

/// Immutable tables of p, spt (to partition_limit) and a, u* (to unimodal_limit).
class StatTables {
public:
    static StatTables build(std::int64_t partition_limit, std::int64_t unimodal_limit)
    {
        StatTables t;
        t.p_ = p_table(partition_limit);
        t.spt_ = spt_table(partition_limit);
        const std::int64_t u = std::min(unimodal_limit, partition_limit);
        t.a_ = a_series(u);
        t.ustar_.resize(t.a_.size());
        for (std::size_t k = 0; k < t.a_.size(); ++k) {
            t.ustar_[k] = 2 * t.a_[k] - t.spt_[k];
        }
        return t;
    }

    static StatTables build(std::int64_t limit) { return build(limit, limit); }

    std::int64_t partition_limit() const noexcept { return static_cast<std::int64_t>(p_.size()) - 1; }
    std::int64_t unimodal_limit() const noexcept { return static_cast<std::int64_t>(a_.size()) - 1; }

    const BigInt& p(std::int64_t n) const { return at(p_, n, "p"); }
    const BigInt& spt(std::int64_t n) const { return at(spt_, n, "spt"); }
    const BigInt& a(std::int64_t n) const { return at(a_, n, "a"); }
    const BigInt& ustar(std::int64_t n) const { return at(ustar_, n, "u*"); }

private:
    static const BigInt& at(const std::vector<BigInt>& v, std::int64_t n, const char* name)
    {
        if (n < 0) {
            throw std::invalid_argument(std::string(name) + ": negative index");
        }
        if (n >= static_cast<std::int64_t>(v.size())) {
            throw TableTooSmall(std::string(name) + "(" + std::to_string(n) + ") is beyond the table", n);
        }
        return v[static_cast<std::size_t>(n)];
    }

    std::vector<BigInt> p_, spt_, a_, ustar_;
};

// ---------------------------------------------------------------------------
// h1, h2, g1, g2 and the c(n) formulas

namespace detail {

inline Rational q(std::int64_t num, std::int64_t den) { return make_rational(num, den); }
inline Rational z(const BigInt& v) { return Rational(v); }

/// n with m = 24n - 1, or 0 when m is not of that form with n >= 1.
inline std::int64_t index_of_23_mod_24(std::int64_t m)
{
    return (m > 0 && pos_mod(m, 24) == 23) ? (m + 1) / 24 : 0;
}

} // namespace detail

/// Which spelling of spt the formulas use: spt directly, or -u* + 2a.
enum class SptSource { Spt, Unimodal };

inline Rational spt_value(const StatTables& t, std::int64_t k, SptSource src)
{
    if (src == SptSource::Spt) {
        return Rational(t.spt(k));
    }
    return Rational(-t.ustar(k) + 2 * t.a(k));
}

inline Rational h1_with(const StatTables& t, std::int64_t m, SptSource src)
{
    const std::int64_t n = detail::index_of_23_mod_24(m);
    if (n == 0) {
        return 0;
    }
    const Rational twelve_fifths = detail::q(12, 5);
    const Rational mm(BigInt(static_cast<long>(m)));
    Rational high = twelve_fifths * spt_value(t, 25 * n - 1, src) + 5 * mm * detail::z(t.p(25 * n - 1));
    Rational low = twelve_fifths * spt_value(t, n, src) + (mm / 5) * detail::z(t.p(n));
    return high + mu(n) * low;
}

inline Rational h2_with(const StatTables& t, std::int64_t m, SptSource src)
{
    if (m <= 0 || pos_mod(m, 25) != 0) {
        return 0;
    }
    const std::int64_t n = detail::index_of_23_mod_24(m / 25);
    if (n == 0 || pos_mod(m, 24) != 23) {
        return 0;
    }
    return 12 * spt_value(t, n, src) + Rational(BigInt(static_cast<long>(24 * n - 1))) * detail::z(t.p(n));
}

inline Rational h1(const StatTables& t, std::int64_t m) { return h1_with(t, m, SptSource::Spt); }
inline Rational h2(const StatTables& t, std::int64_t m) { return h2_with(t, m, SptSource::Spt); }

/// g1, g2 are h1, h2 with every spt(k) written as -u*(k) + 2a(k).
inline Rational g1(const StatTables& t, std::int64_t m) { return h1_with(t, m, SptSource::Unimodal); }
inline Rational g2(const StatTables& t, std::int64_t m) { return h2_with(t, m, SptSource::Unimodal); }

/// One signed summand of the c(n) formula.
struct CTerm {
    std::string label;
    Rational value;
};

namespace detail {

inline void require_c_tables(const StatTables& t, std::int64_t n, SptSource src)
{
    if (n < 1) {
        throw std::invalid_argument("c_formula: n must be >= 1");
    }
    if (t.partition_limit() < 25 * n - 1 || (src == SptSource::Unimodal && t.unimodal_limit() < 25 * n - 1)) {
        throw TableTooSmall("c_formula(" + std::to_string(n) + ")", 25 * n - 1);
    }
}

/// Calls visit(k, (-1)^k, 24n - (6k+1)^2) for every k with a positive argument.
template <class Visit>
void for_each_theta_shift(std::int64_t n, Visit&& visit)
{
    const std::int64_t bound = isqrt(24 * n) + 1;
    for (std::int64_t k = -(bound / 6) - 1; 6 * k + 1 <= bound; ++k) {
        const std::int64_t arg = 24 * n - (6 * k + 1) * (6 * k + 1);
        if (arg > 0) {
            visit(k, pos_mod(k, 2) == 0 ? 1 : -1, arg);
        }
    }
}

} // namespace detail

/// c(n) = s(n)/n + (1/n) sum_k (-1)^k [h1 + h2](24n - (6k+1)^2), with h or g.
inline Rational c_formula_with(const StatTables& t, std::int64_t n, SptSource src)
{
    detail::require_c_tables(t, n, src);
    Rational total(s_fn(n));
    detail::for_each_theta_shift(n, [&](std::int64_t, int sign, std::int64_t arg) {
        total += sign * (h1_with(t, arg, src) + h2_with(t, arg, src));
    });
    return total / Rational(BigInt(static_cast<long>(n)));
}

/// The summands of n*c(n), itemized: s(n), then for each k the three pieces
/// of h1 (or g1) and the h2 (or g2) value, each carrying its sign (-1)^k.
inline std::vector<CTerm> c_formula_terms(const StatTables& t, std::int64_t n, SptSource src)
{
    detail::require_c_tables(t, n, src);
    const bool unimodal = src == SptSource::Unimodal;
    auto spt_label = [&](std::int64_t k) {
        const std::string i = std::to_string(k);
        return unimodal ? "(-(12/5)u*(" + i + ")+(24/5)a(" + i + "))" : "(12/5)spt(" + i + ")";
    };

    std::vector<CTerm> terms;
    terms.push_back({"s(" + std::to_string(n) + ")", Rational(s_fn(n))});
    detail::for_each_theta_shift(n, [&](std::int64_t k, int sign, std::int64_t arg) {
        const std::string pre = sign == 1 ? "+" : "-";
        const std::string where = " [k=" + std::to_string(k) + ", m=" + std::to_string(arg) + "]";
        if (const std::int64_t r = detail::index_of_23_mod_24(arg); r != 0) {
            const Rational mm(BigInt(static_cast<long>(arg)));
            terms.push_back({pre + spt_label(25 * r - 1) + where,
                             sign * detail::q(12, 5) * spt_value(t, 25 * r - 1, src)});
            terms.push_back({pre + std::to_string(5 * arg) + "p(" + std::to_string(25 * r - 1) + ")" + where,
                             sign * 5 * mm * detail::z(t.p(25 * r - 1))});
            terms.push_back({pre + "mu_" + std::to_string(r) + "*(" + spt_label(r) + "+(" + std::to_string(arg) +
                                 "/5)p(" + std::to_string(r) + "))" + where,
                             sign * mu(r) * (detail::q(12, 5) * spt_value(t, r, src) + (mm / 5) * detail::z(t.p(r)))});
        }
        if (Rational v = h2_with(t, arg, src); v != 0) {
            terms.push_back({pre + (unimodal ? "g2(" : "h2(") + std::to_string(arg) + ")" + where, sign * v});
        }
    });
    return terms;
}

/// c(n) from s, h1, h2.
inline Rational c_formula(const StatTables& t, std::int64_t n) { return c_formula_with(t, n, SptSource::Spt); }

/// c(n) from s, g1, g2.
inline Rational c_formula_g(const StatTables& t, std::int64_t n)
{
    return c_formula_with(t, n, SptSource::Unimodal);
}

// ---------------------------------------------------------------------------
// Congruences

enum class CongruenceFamily {
    Andrews,     // spt(5n+4) = 0 mod 5, spt(7n+5) = 0 mod 7, spt(13n+6) = 0 mod 13
    SptPowers,   // spt((l^(2m) n -+ 1)/24) = 0 mod l^m when (-n|l) = 1
    UnimodalA,   // u*(same index) = 2a(same index) mod l^m
};

/// Sign in the index (l^(2m) n + sign) / 24.
enum class SignConvention { Plus, Minus };

inline const char* to_string(SignConvention s) { return s == SignConvention::Plus ? "plus" : "minus"; }

struct CongruenceParams {
    std::int64_t ell = 5;
    std::int64_t m = 1;
    std::int64_t max_n = 200;
    SignConvention sign = SignConvention::Plus;
};

/// Largest table index a congruence check reads.
inline std::int64_t congruence_table_need(CongruenceFamily family, const CongruenceParams& params)
{
    if (family == CongruenceFamily::Andrews) {
        return 13 * params.max_n + 6;
    }
    BigInt modulus;
    mpz_ui_pow_ui(modulus.get_mpz_t(), static_cast<unsigned long>(params.ell), 2 * static_cast<unsigned long>(params.m));
    BigInt top = (modulus * params.max_n + 1) / 24;
    return top.get_si();
}

inline VerificationReport check_congruences(const StatTables& t, CongruenceFamily family,
                                            const CongruenceParams& params)
{
    Stopwatch clock;
    VerificationReport r;
    r.window_lo = 1;
    r.window_hi = params.max_n + 1;
    r.set("max_n", params.max_n);

    const std::int64_t need = congruence_table_need(family, params);
    if (t.partition_limit() < need ||
        (family == CongruenceFamily::UnimodalA && t.unimodal_limit() < need)) {
        throw TableTooSmall("congruence check", need);
    }

    if (family == CongruenceFamily::Andrews) {
        r.check = "andrews_spt_congruences";
        struct Family {
            std::int64_t a, b;
        };
        for (const Family f : {Family{5, 4}, Family{7, 5}, Family{13, 6}}) {
            std::int64_t count = 0;
            for (std::int64_t n = 0; n <= params.max_n; ++n) {
                const std::int64_t idx = f.a * n + f.b;
                BigInt residue = t.spt(idx) % f.a;
                r.expect_equal(idx, Rational(residue), Rational(0));
                ++count;
            }
            r.details.push_back("spt(" + std::to_string(f.a) + "n+" + std::to_string(f.b) + ") = 0 mod " +
                                std::to_string(f.a) + ": " + std::to_string(count) + " instances");
        }
    } else {
        if (params.ell < 5 || !is_prime(params.ell)) {
            throw BadModulus("congruence families need a prime ell >= 5");
        }
        if (params.m < 1) {
            throw std::invalid_argument("congruence families need m >= 1");
        }
        r.check = family == CongruenceFamily::SptPowers ? "spt_power_congruences" : "unimodal_a_congruences";
        r.set("ell", params.ell);
        r.set("m", params.m);
        r.set("sign_convention", to_string(params.sign));
        BigInt ell_2m, ell_m;
        mpz_ui_pow_ui(ell_2m.get_mpz_t(), static_cast<unsigned long>(params.ell), 2 * static_cast<unsigned long>(params.m));
        mpz_ui_pow_ui(ell_m.get_mpz_t(), static_cast<unsigned long>(params.ell), static_cast<unsigned long>(params.m));
        const int sign = params.sign == SignConvention::Plus ? 1 : -1;
        std::int64_t instances = 0, non_integral = 0;
        for (std::int64_t n = 1; n <= params.max_n; ++n) {
            if (legendre(-n, params.ell) != 1) {
                continue;
            }
            BigInt num = ell_2m * n + sign;
            if (num % 24 != 0) {
                ++non_integral;
                continue;
            }
            const std::int64_t idx = BigInt(num / 24).get_si();
            if (idx < 1) {
                continue;
            }
            ++instances;
            if (family == CongruenceFamily::SptPowers) {
                BigInt residue = t.spt(idx) % ell_m;
                r.expect_equal(idx, Rational(residue), Rational(0));
            } else {
                BigInt lhs = t.ustar(idx) % ell_m;
                BigInt rhs = (2 * t.a(idx)) % ell_m;
                if (lhs < 0) {
                    lhs += ell_m;
                }
                if (rhs < 0) {
                    rhs += ell_m;
                }
                r.expect_equal(idx, Rational(lhs), Rational(rhs));
            }
        }
        r.set("instances", instances);
        r.set("non_integral_indices", non_integral);
        r.details.push_back(std::to_string(instances) + " integral indices with (-n|" + std::to_string(params.ell) +
                            ") = 1, " + std::to_string(non_integral) + " non-integral skipped");
    }
    r.runtime_ms = clock.elapsed_ms();
    return r;
}

} // namespace qspt

#pragma once

// The weight 3/2 Hecke operator T(l^2) on series supported on 24Z - 1, the
// holomorphic part
//     M+ = sum spt(n) q^(24n-1) + (1/12) q d/dq P(q),
// M_l = M+ | T(l^2) - (3|l)(1+l) M+, and the closed form
//     M_l = -(l/12) P(q) B_{delta_l}(j(24 tau)) (E4^2 E6 / Delta)(24 tau),
// with delta_l = (l^2 - 1)/24.

#include <cstdint>
#include <string>

#include "qspt/arith.hpp"
#include "qspt/error.hpp"
#include "qspt/j_basis.hpp"
#include "qspt/modular_forms.hpp"
#include "qspt/partition_stats.hpp"
#include "qspt/report.hpp"
#include "qspt/series.hpp"

namespace qspt {

/// A prime l >= 5 with delta_l = (l^2-1)/24 and eps3 = (3|l).
class HeckeContext {
public:
    explicit HeckeContext(std::int64_t ell) : ell_(ell)
    {
        if (ell < 5 || !is_prime(ell)) {
            throw BadModulus("Hecke context needs a prime >= 5, got " + std::to_string(ell));
        }
        delta_ = (ell * ell - 1) / 24;
        eps3_ = legendre(3, ell);
    }

    std::int64_t ell() const noexcept { return ell_; }
    std::int64_t ell_squared() const noexcept { return ell_ * ell_; }
    std::int64_t delta() const noexcept { return delta_; }
    int eps3() const noexcept { return eps3_; }

private:
    std::int64_t ell_;
    std::int64_t delta_;
    int eps3_;
};

/// Partition-table size needed for M+ to be known below `precision`.
constexpr std::int64_t m_plus_table_need(std::int64_t precision)
{
    // Largest n with 24n - 1 < precision.
    return precision <= 0 ? 0 : floor_div(precision, 24);
}

/// Series supported on 24Z - 1 whose q^(24n-1) coefficient is spt(n) (n >= 1).
inline LaurentSeries spt_gen24(const StatTables& t, std::int64_t precision)
{
    const std::int64_t top = m_plus_table_need(precision);
    if (t.partition_limit() < top) {
        throw TableTooSmall("spt_gen24 to precision " + std::to_string(precision), top);
    }
    std::vector<Rational> cs(static_cast<std::size_t>(detail::points_below(23, precision, 24)));
    for (std::size_t k = 0; k < cs.size(); ++k) {
        cs[k] = Rational(t.spt(static_cast<std::int64_t>(k) + 1));
    }
    if (cs.empty()) {
        return LaurentSeries::zero(precision, 24, 23);
    }
    return LaurentSeries(24, 23, precision, std::move(cs));
}

/// P(q) on 24Z - 1 from the p table.
inline LaurentSeries partition_gen24(const StatTables& t, std::int64_t precision)
{
    const std::int64_t top = m_plus_table_need(precision);
    if (t.partition_limit() < top) {
        throw TableTooSmall("P(q) to precision " + std::to_string(precision), top);
    }
    std::vector<Rational> cs(static_cast<std::size_t>(detail::points_below(-1, precision, 24)));
    for (std::size_t k = 0; k < cs.size(); ++k) {
        cs[k] = Rational(t.p(static_cast<std::int64_t>(k)));
    }
    return LaurentSeries(24, -1, precision, std::move(cs));
}

/// M+ = S(q) + (1/12) q d/dq P(q).
inline LaurentSeries m_plus(const StatTables& t, std::int64_t precision)
{
    return spt_gen24(t, precision) + scale(q_derive(partition_gen24(t, precision)), make_rational(1, 12));
}

/// f | T(l^2): coefficient at n is a(l^2 n) + (3|l)(-n|l) a(n) + l a(n/l^2).
/// Output is known below ceil(prec(f) / l^2).
inline LaurentSeries hecke_t(const LaurentSeries& f, const HeckeContext& ctx)
{
    const std::int64_t l2 = ctx.ell_squared();
    const std::int64_t precision = ceil_div(f.precision(), l2);
    if (f.empty()) {
        return LaurentSeries::zero(precision, 24, 23);
    }
    if (f.stride() % 24 != 0 || f.offset() % 24 != 23) {
        throw BadSupport("hecke_t: series must be supported on exponents = 23 mod 24");
    }
    const std::int64_t v = f.valuation();
    const std::int64_t lowest = std::min({ceil_div(v, l2), v, v * l2});
    const std::int64_t start = detail::align_up(lowest, 24, 23);
    if (start >= precision) {
        return LaurentSeries::zero(precision, 24, 23);
    }
    std::vector<Rational> cs(static_cast<std::size_t>(detail::points_below(start, precision, 24)));
    const Rational ell(BigInt(static_cast<long>(ctx.ell())));
    for (std::size_t k = 0; k < cs.size(); ++k) {
        const std::int64_t n = start + 24 * static_cast<std::int64_t>(k);
        Rational c = f.coeff(l2 * n);
        if (const int sym = ctx.eps3() * legendre(-n, ctx.ell()); sym != 0) {
            c += sym * f.coeff(n);
        }
        if (n % l2 == 0) {
            c += ell * f.coeff(n / l2);
        }
        cs[k] = std::move(c);
    }
    return LaurentSeries(24, start, precision, std::move(cs)).trimmed();
}

/// Precision of M+ needed for M+ | T(l^2) to be known below `precision`.
constexpr std::int64_t hecke_input_precision(std::int64_t ell, std::int64_t precision)
{
    return ell * ell * (precision - 1) + 1;
}

/// Partition-table size needed by m_ell / verify_thm11 below `precision`.
constexpr std::int64_t m_ell_table_need(std::int64_t ell, std::int64_t precision)
{
    return m_plus_table_need(hecke_input_precision(ell, precision));
}

/// M+ | T(l^2), computed from the coefficient definition.
inline LaurentSeries hecke_m_plus(const HeckeContext& ctx, const StatTables& t, std::int64_t precision)
{
    return truncate(hecke_t(m_plus(t, hecke_input_precision(ctx.ell(), precision)), ctx), precision);
}

/// M_l = M+ | T(l^2) - (3|l)(1+l) M+.
inline LaurentSeries m_ell(const HeckeContext& ctx, const StatTables& t, std::int64_t precision)
{
    const Rational factor(ctx.eps3() * (1 + ctx.ell()));
    return hecke_m_plus(ctx, t, precision) - scale(m_plus(t, precision), factor);
}

/// -(l/12) P(q) B_{delta_l}(j(24 tau)) (E4^2 E6 / Delta)(24 tau), from j and p alone.
inline LaurentSeries m_ell_closed_form(const HeckeContext& ctx, std::int64_t precision)
{
    const std::int64_t delta = ctx.delta();
    // Valuations: P(q) -1, B(j(24 tau)) -24(delta-1), (E4^2E6/Delta)(24 tau) -24.
    const auto b = b_polynomials(delta);
    const LaurentSeries gen = partition_gen24(precision + 24 * delta);
    const LaurentSeries poly = eval_at_j24(b[static_cast<std::size_t>(delta)], precision + 25);
    const std::int64_t jp_precision = ceil_div(precision + 1 + 24 * (delta - 1), 24) + 1;
    const LaurentSeries jp = stride_expand(jprime_neg_series(jp_precision), 24);
    const LaurentSeries product = gen * poly * jp;
    if (product.precision() < precision) {
        throw OutOfPrecision("m_ell_closed_form: factor precisions too small");
    }
    return scale(truncate(product, precision), make_rational(-ctx.ell(), 12));
}

/// Right-hand side of the Hecke identity: (3|l)(1+l) M+ + M_l(closed form).
inline LaurentSeries thm11_rhs(const HeckeContext& ctx, const StatTables& t, std::int64_t precision)
{
    const Rational factor(ctx.eps3() * (1 + ctx.ell()));
    return scale(m_plus(t, precision), factor) + m_ell_closed_form(ctx, precision);
}

/// q dj/dq(24 tau) * B_{delta_l}(j(24 tau)) = sum r_l(n) q^(24n).
inline LaurentSeries r_ell_series(const HeckeContext& ctx, std::int64_t precision)
{
    const std::int64_t delta = ctx.delta();
    const auto b = b_polynomials(delta);
    const LaurentSeries poly = eval_at_j24(b[static_cast<std::size_t>(delta)], precision + 24);
    const std::int64_t jp_precision = ceil_div(precision + 24 * (delta - 1), 24) + 1;
    const LaurentSeries jp = stride_expand(jprime_neg_series(jp_precision), 24);
    return truncate(negate(poly * jp), precision);
}

namespace detail {

inline VerificationReport hecke_report(const char* check, const HeckeContext& ctx, std::int64_t window)
{
    VerificationReport r;
    r.check = check;
    r.set("ell", ctx.ell());
    r.set("delta", ctx.delta());
    r.set("window", window);
    r.window_hi = window;
    return r;
}

inline void require_hecke_tables(const HeckeContext& ctx, const StatTables& t, std::int64_t window)
{
    if (window < 1) {
        throw std::invalid_argument("window must be >= 1");
    }
    if (const std::int64_t need = m_ell_table_need(ctx.ell(), window); t.partition_limit() < need) {
        throw TableTooSmall("Hecke window " + std::to_string(window) + " for ell = " + std::to_string(ctx.ell()), need);
    }
}

} // namespace detail

/// Compares M+ | T(l^2) from the coefficient definition against the closed form
/// at every exponent below `window`.
inline VerificationReport verify_thm11(const HeckeContext& ctx, const StatTables& t, std::int64_t window)
{
    Stopwatch clock;
    detail::require_hecke_tables(ctx, t, window);
    VerificationReport r = detail::hecke_report("thm1_1", ctx, window);
    const LaurentSeries lhs = hecke_m_plus(ctx, t, window);
    const LaurentSeries rhs = thm11_rhs(ctx, t, window);
    r.window_lo = std::min(lhs.valuation(), rhs.valuation());
    compare_series(r, lhs, rhs, r.window_lo, window);

    std::int64_t nonzero = 0;
    for (const auto& c : lhs.coefficients()) {
        nonzero += sgn(c) != 0 ? 1 : 0;
    }
    r.set("nonzero_coefficients", nonzero);
    r.set("m_plus_exponent_bound", hecke_input_precision(ctx.ell(), window) - 1);
    r.details.push_back("M+|T(" + std::to_string(ctx.ell_squared()) + ") = " + to_string(lhs, 4));
    r.details.push_back("M_" + std::to_string(ctx.ell()) + " = " + to_string(m_ell_closed_form(ctx, std::min<std::int64_t>(window, 24)), 4));
    r.runtime_ms = clock.elapsed_ms();
    return r;
}

/// 12 (M+ | T(l^2)) = (3|l) 12 M+ (mod l), and every coefficient of 12 M_l lies in lZ.
inline VerificationReport verify_mod_ell(const HeckeContext& ctx, const StatTables& t, std::int64_t window)
{
    Stopwatch clock;
    detail::require_hecke_tables(ctx, t, window);
    VerificationReport r = detail::hecke_report("eq9_mod_ell", ctx, window);
    const LaurentSeries hecke = scale(hecke_m_plus(ctx, t, window), Rational(12));
    const LaurentSeries base = scale(m_plus(t, window), Rational(12));
    const LaurentSeries diff = hecke - scale(base, Rational(ctx.eps3()));
    const LaurentSeries m12 = hecke - scale(base, Rational(ctx.eps3() * (1 + ctx.ell())));
    const BigInt ell(static_cast<long>(ctx.ell()));
    r.window_lo = std::min(hecke.valuation(), base.valuation());

    auto residue = [&](const Rational& c) -> Rational {
        // Non-integers are reported as themselves; they can never match 0.
        if (!is_integer(c)) {
            return c;
        }
        BigInt m = c.get_num() % ell;
        return Rational(m);
    };
    for (std::int64_t e = detail::align_up(r.window_lo, 24, 23); e < window; e += 24) {
        r.expect_equal(e, residue(diff.coeff(e)), Rational(0));
        r.expect_equal(e, residue(m12.coeff(e)), Rational(0));
    }
    r.details.push_back("checked 12(M+|T) - (3|l)12M+ and 12M_l modulo " + std::to_string(ctx.ell()));
    r.runtime_ms = clock.elapsed_ms();
    return r;
}

/// r_l series against (12/l) eta(24 tau) M_l with M_l from the Hecke side.
inline VerificationReport verify_r_ell(const HeckeContext& ctx, const StatTables& t, std::int64_t window)
{
    Stopwatch clock;
    // M_l has valuation -l^2 and eta(24 tau) valuation 1: M_l below `window - 1` suffices.
    detail::require_hecke_tables(ctx, t, window);
    VerificationReport r = detail::hecke_report("r_ell", ctx, window);
    const LaurentSeries r_series = r_ell_series(ctx, window);
    const LaurentSeries m = m_ell(ctx, t, window);
    const LaurentSeries eta = eta24_series(window + ctx.ell_squared());
    const LaurentSeries rhs = scale(eta * m, make_rational(12, ctx.ell()));
    const std::int64_t hi = std::min({window, rhs.precision(), r_series.precision()});
    r.window_lo = std::min(r_series.valuation(), rhs.valuation());
    r.window_hi = hi;
    compare_series(r, r_series, rhs, r.window_lo, hi);
    r.details.push_back("sum r_l(n) q^(24n) = " + to_string(r_series, 4));
    r.runtime_ms = clock.elapsed_ms();
    return r;
}

} // namespace qspt

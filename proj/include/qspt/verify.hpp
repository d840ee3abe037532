#pragma once

// Named verification checks. Each check sizes and builds the tables it needs,
// runs the underlying module operations and returns one VerificationReport.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qspt/hecke.hpp"
#include "qspt/j_basis.hpp"
#include "qspt/modular_forms.hpp"
#include "qspt/partition_stats.hpp"
#include "qspt/report.hpp"

namespace qspt {

struct CheckOptions {
    std::optional<std::int64_t> ell;
    std::optional<std::int64_t> m;
    std::optional<std::int64_t> max_n;
    std::optional<std::int64_t> window;
    SignConvention sign = SignConvention::Plus;
};

/// Default exponent window for the Hecke identity at a given prime.
inline std::int64_t default_hecke_window(std::int64_t ell)
{
    switch (ell) {
    case 5:
        return 4800;
    case 7:
        return 2400;
    case 11:
        return 1200;
    default:
        return 600;
    }
}

namespace checks {

inline VerificationReport thm1_1(const CheckOptions& o)
{
    const HeckeContext ctx(o.ell.value_or(5));
    const std::int64_t window = o.window.value_or(default_hecke_window(ctx.ell()));
    Stopwatch clock;
    const auto tables = StatTables::build(m_ell_table_need(ctx.ell(), window), 1);
    auto r = verify_thm11(ctx, tables, window);
    r.runtime_ms = clock.elapsed_ms();
    return r;
}

inline VerificationReport eq9_mod_ell(const CheckOptions& o)
{
    const HeckeContext ctx(o.ell.value_or(5));
    const std::int64_t window = o.window.value_or(default_hecke_window(ctx.ell()));
    Stopwatch clock;
    const auto tables = StatTables::build(m_ell_table_need(ctx.ell(), window), 1);
    auto r = verify_mod_ell(ctx, tables, window);
    r.runtime_ms = clock.elapsed_ms();
    return r;
}

inline VerificationReport r_ell(const CheckOptions& o)
{
    const HeckeContext ctx(o.ell.value_or(5));
    const std::int64_t window = o.window.value_or(600);
    Stopwatch clock;
    const auto tables = StatTables::build(m_ell_table_need(ctx.ell(), window), 1);
    auto r = verify_r_ell(ctx, tables, window);
    r.runtime_ms = clock.elapsed_ms();
    return r;
}

inline void itemize(VerificationReport& r, const StatTables& t, std::int64_t n, SptSource src)
{
    const auto terms = c_formula_terms(t, n, src);
    Rational total;
    std::string line = "c(" + std::to_string(n) + ") = (1/" + std::to_string(n) + ")(";
    for (std::size_t i = 0; i < terms.size(); ++i) {
        total += terms[i].value;
        line += (i == 0 ? "" : " + ") + std::string("(") + terms[i].value.get_str() + ")";
    }
    line += ") = " + Rational(total / n).get_str();
    r.details.push_back(line);
    for (const auto& term : terms) {
        r.details.push_back("  " + term.label + " = " + term.value.get_str());
    }
}

/// c_formula(n) against the q^n coefficient of j for n <= max_n.
inline VerificationReport thm1_2(const CheckOptions& o)
{
    Stopwatch clock;
    const std::int64_t max_n = o.max_n.value_or(20);
    VerificationReport r;
    r.check = "thm1_2";
    r.set("max_n", max_n);
    r.window_lo = 1;
    r.window_hi = max_n + 1;
    const auto tables = StatTables::build(25 * max_n - 1, 1);
    const auto j = j_series(max_n + 1);
    for (std::int64_t n = 1; n <= max_n; ++n) {
        r.expect_equal(n, c_formula(tables, n), j.coeff(n));
    }
    for (std::int64_t n = 1; n <= std::min<std::int64_t>(2, max_n); ++n) {
        itemize(r, tables, n, SptSource::Spt);
    }
    r.runtime_ms = clock.elapsed_ms();
    return r;
}

/// c_formula_g(n) against c_formula(n) and c(n) for n <= max_n.
inline VerificationReport cor1_5(const CheckOptions& o)
{
    Stopwatch clock;
    const std::int64_t max_n = o.max_n.value_or(20);
    VerificationReport r;
    r.check = "cor1_5";
    r.set("max_n", max_n);
    r.window_lo = 1;
    r.window_hi = max_n + 1;
    const auto tables = StatTables::build(25 * max_n - 1, 25 * max_n - 1);
    const auto j = j_series(max_n + 1);
    for (std::int64_t n = 1; n <= max_n; ++n) {
        const Rational via_g = c_formula_g(tables, n);
        r.expect_equal(n, via_g, c_formula(tables, n));
        r.expect_equal(n, via_g, j.coeff(n));
    }
    for (std::int64_t n = 1; n <= std::min<std::int64_t>(2, max_n); ++n) {
        itemize(r, tables, n, SptSource::Spt);
        itemize(r, tables, n, SptSource::Unimodal);
    }
    r.runtime_ms = clock.elapsed_ms();
    return r;
}

/// Enumerated signed-triangular-weight sums against the A(q) coefficients.
inline VerificationReport thm1_3(const CheckOptions& o)
{
    Stopwatch clock;
    const std::int64_t max_n = o.max_n.value_or(40);
    VerificationReport r;
    r.check = "thm1_3";
    r.set("max_n", max_n);
    r.window_lo = 1;
    r.window_hi = max_n + 1;
    const auto a = a_series(max_n);
    for (std::int64_t n = 1; n <= max_n; ++n) {
        r.expect_equal(n, Rational(BigInt(static_cast<long>(ts_sum_bruteforce(n)))),
                       Rational(a[static_cast<std::size_t>(n)]));
    }
    r.runtime_ms = clock.elapsed_ms();
    return r;
}

/// Enumerated strongly unimodal counts against -spt(n) + 2a(n).
inline VerificationReport unimodal_rank(const CheckOptions& o)
{
    Stopwatch clock;
    const std::int64_t max_n = o.max_n.value_or(30);
    VerificationReport r;
    r.check = "unimodal_rank";
    r.set("max_n", max_n);
    r.window_lo = 1;
    r.window_hi = max_n + 1;
    const auto tables = StatTables::build(max_n);
    for (std::int64_t n = 1; n <= max_n; ++n) {
        r.expect_equal(n, Rational(BigInt(static_cast<long>(ustar_bruteforce(n)))), Rational(tables.ustar(n)));
    }
    r.runtime_ms = clock.elapsed_ms();
    return r;
}

inline CongruenceParams congruence_params(const CheckOptions& o)
{
    CongruenceParams p;
    p.ell = o.ell.value_or(5);
    p.m = o.m.value_or(1);
    p.max_n = o.max_n.value_or(200);
    p.sign = o.sign;
    return p;
}

inline VerificationReport cor1_4(const CheckOptions& o)
{
    Stopwatch clock;
    const auto params = congruence_params(o);
    const std::int64_t need = congruence_table_need(CongruenceFamily::UnimodalA, params);
    const auto tables = StatTables::build(need, need);
    auto r = check_congruences(tables, CongruenceFamily::UnimodalA, params);
    r.check = "cor1_4";
    r.runtime_ms = clock.elapsed_ms();
    return r;
}

/// Andrews' three families plus the l-power family for the given l, m.
inline VerificationReport congruences(const CheckOptions& o)
{
    Stopwatch clock;
    const auto params = congruence_params(o);
    const std::int64_t need = std::max(congruence_table_need(CongruenceFamily::Andrews, params),
                                       congruence_table_need(CongruenceFamily::SptPowers, params));
    const auto tables = StatTables::build(need, 1);
    VerificationReport r;
    r.check = "congruences";
    r.set("ell", params.ell);
    r.set("m", params.m);
    r.set("max_n", params.max_n);
    r.set("sign_convention", to_string(params.sign));
    r.window_lo = 1;
    r.window_hi = params.max_n + 1;
    auto andrews = check_congruences(tables, CongruenceFamily::Andrews, params);
    auto powers = check_congruences(tables, CongruenceFamily::SptPowers, params);
    r.set("instances", powers.parameters["instances"]);
    r.absorb(andrews);
    r.absorb(powers);
    r.runtime_ms = clock.elapsed_ms();
    return r;
}

/// Powers j^0..j^degree, each known below `precision`.
class JPowers {
public:
    JPowers(const LaurentSeries& j, std::int64_t degree, std::int64_t precision)
    {
        powers_.push_back(LaurentSeries::constant(Rational(1), precision));
        LaurentSeries running = j;
        for (std::int64_t k = 1; k <= degree; ++k) {
            if (k > 1) {
                running = running * j;
            }
            powers_.push_back(truncate(running, precision));
        }
    }

    LaurentSeries eval(const IntPolynomial& p, std::int64_t precision) const
    {
        LaurentSeries acc = LaurentSeries::zero(precision);
        for (std::int64_t k = 0; k <= p.degree(); ++k) {
            if (p.coeff(k) != 0) {
                acc = acc + scale(powers_[static_cast<std::size_t>(k)], Rational(p.coeff(k)));
            }
        }
        return truncate(acc, precision);
    }

private:
    std::vector<LaurentSeries> powers_;
};

/// The q-expansion identities the Hecke closed form rests on.
inline VerificationReport internal_identities(const CheckOptions& o)
{
    Stopwatch clock;
    const std::int64_t window = o.window.value_or(500);
    const std::int64_t basis_n = 30;
    VerificationReport r;
    r.check = "internal_identities";
    r.set("window", window);
    r.set("basis_max_n", basis_n);
    r.window_lo = 0;
    r.window_hi = window;

    auto sub_report = [](const std::string& name) {
        VerificationReport s;
        s.check = name;
        return s;
    };

    // Exponents 1..window of Delta, i.e. `window` coefficients.
    const std::int64_t P = window + 1;
    const auto e4 = eisenstein_e4(P + 2);
    const auto e6 = eisenstein_e6(P + 2);
    const auto delta = delta_series(P);
    {
        auto s = sub_report("delta = eta^24 = (E4^3 - E6^2)/1728");
        // eta(tau)^24 = q (q;q)^24
        const auto eta24_power = shift(pow(euler_series(P), 24), 1);
        compare_series(s, delta, eta24_power, 0, P);
        compare_series(s, delta, LaurentSeries::from_list(1, P, {1, -24, 252, -1472, 4830}), 0, 6);
        r.absorb(s);
    }
    const auto j = j_series(P);
    const auto jp = jprime_neg_series(P);
    {
        auto s = sub_report("-q dj/dq = E4^2 E6 / Delta");
        compare_series(s, jp, negate(q_derive(j)), -1, P);
        r.absorb(s);
    }
    {
        auto s = sub_report("j * Delta = E4^3");
        compare_series(s, j * delta_series(P + 2), pow(e4, 3), 0, P);
        r.absorb(s);
    }
    {
        auto s = sub_report("integral coefficients of E4, E6, Delta, j, -q dj/dq");
        std::int64_t k = 0;
        for (const LaurentSeries* f : {&e4, &e6, &delta, &j, &jp}) {
            s.expect_equal(k++, Rational(f->is_integral() ? 1 : 0), Rational(1));
        }
        r.absorb(s);
    }
    // Headroom for alpha * J_n(j), whose precision drops by n.
    const auto alpha = alpha_series(P + basis_n);
    {
        auto s = sub_report("alpha = q + O(q^2), alpha * (-q dj/dq) = (q;q)_inf");
        s.expect_equal(0, alpha.coeff(0), Rational(0));
        s.expect_equal(1, alpha.coeff(1), Rational(1));
        compare_series(s, alpha * jp, euler_series(P), 0, P);
        r.absorb(s);
    }

    const auto b = b_polynomials(50);
    const auto faber = faber_polynomials(basis_n);
    {
        auto s = sub_report("B_m monic of degree m-1, m <= 50");
        for (std::int64_t m = 1; m <= 50; ++m) {
            const auto& bm = b[static_cast<std::size_t>(m)];
            s.expect_equal(m, Rational(BigInt(static_cast<long>(bm.degree()))), Rational(BigInt(static_cast<long>(m - 1))));
            s.expect_equal(m, Rational(bm.is_monic() ? 1 : 0), Rational(1));
        }
        r.absorb(s);
    }
    {
        // Coefficient of q^n in alpha * sum J_n(x) q^n = sum B_n(x) q^n, with x formal.
        auto s = sub_report("B_n(x) = sum_{k=1}^{n} alpha(k) J_{n-k}(x), n <= 30");
        for (std::int64_t n = 1; n <= basis_n; ++n) {
            IntPolynomial conv;
            for (std::int64_t k = 1; k <= n; ++k) {
                conv.submul(-alpha.coeff(k).get_num(), faber[static_cast<std::size_t>(n - k)]);
            }
            const auto& bn = b[static_cast<std::size_t>(n)];
            for (std::int64_t d = 0; d <= std::max(bn.degree(), conv.degree()); ++d) {
                s.expect_equal(n, Rational(conv.coeff(d)), Rational(bn.coeff(d)));
            }
        }
        r.absorb(s);
    }
    {
        // Evaluated at j the two sides agree through q^0 only: B_1 = 1 while alpha J_1(j) = 1 - q + ...
        auto s = sub_report("B_n(j) = alpha q^-n + O(q), alpha J_n(j) = B_n(j) + O(q), J_n(j) = q^-n + O(q), n <= 30");
        const JPowers powers(j_series(basis_n + 2), basis_n, 1);
        for (std::int64_t n = 1; n <= basis_n; ++n) {
            const auto bn = powers.eval(b[static_cast<std::size_t>(n)], 1);
            const auto jn = powers.eval(faber[static_cast<std::size_t>(n)], 1);
            compare_series(s, bn, shift(alpha, -n), -n, 1);
            compare_series(s, jn, LaurentSeries::monomial(Rational(1), -n, 1), -n, 1);
            compare_series(s, alpha * jn, bn, -n, 1);
        }
        r.absorb(s);
    }
    r.runtime_ms = clock.elapsed_ms();
    return r;
}

} // namespace checks

using CheckFn = std::function<VerificationReport(const CheckOptions&)>;

inline const std::map<std::string, CheckFn>& check_registry()
{
    static const std::map<std::string, CheckFn> registry{
        {"thm1_1", checks::thm1_1},
        {"thm1_2", checks::thm1_2},
        {"thm1_3", checks::thm1_3},
        {"cor1_4", checks::cor1_4},
        {"cor1_5", checks::cor1_5},
        {"eq9_mod_ell", checks::eq9_mod_ell},
        {"unimodal_rank", checks::unimodal_rank},
        {"r_ell", checks::r_ell},
        {"congruences", checks::congruences},
        {"internal_identities", checks::internal_identities},
    };
    return registry;
}

inline VerificationReport run_check(const std::string& name, const CheckOptions& options)
{
    const auto& registry = check_registry();
    auto it = registry.find(name);
    if (it == registry.end()) {
        throw UnknownName("unknown check '" + name + "'");
    }
    return it->second(options);
}

} // namespace qspt

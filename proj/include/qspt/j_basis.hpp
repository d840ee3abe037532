#pragma once

// Polynomials in j: the family B_m(x) with
//     sum_{m>=1} B_m(x) q^m = (q;q)_inf / (j(tau) - x),
// the Faber polynomials J_n(x) with
//     sum_{n>=0} J_n(x) q^n = (E4^2 E6 / Delta) / (j(tau) - x),
// their evaluation at j(tau) or j(24 tau), and decomposition of a modular
// function of the shape alpha(q) * (principal part) + O(q) in the B_m(j) basis.

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qspt/arith.hpp"
#include "qspt/error.hpp"
#include "qspt/modular_forms.hpp"
#include "qspt/series.hpp"

namespace qspt {

/// Dense polynomial with big-integer coefficients, index = degree.
class IntPolynomial {
public:
    IntPolynomial() = default;

    explicit IntPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) { normalize(); }

    static IntPolynomial constant(const BigInt& c) { return IntPolynomial(std::vector<BigInt>{c}); }

    static IntPolynomial x() { return IntPolynomial(std::vector<BigInt>{0, 1}); }

    /// -1 for the zero polynomial.
    std::int64_t degree() const noexcept { return static_cast<std::int64_t>(coeffs_.size()) - 1; }

    bool is_zero() const noexcept { return coeffs_.empty(); }

    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

    std::span<const BigInt> coefficients() const noexcept { return coeffs_; }

    BigInt coeff(std::int64_t k) const
    {
        if (k < 0 || k > degree()) {
            return 0;
        }
        return coeffs_[static_cast<std::size_t>(k)];
    }

    IntPolynomial& operator+=(const IntPolynomial& o)
    {
        if (o.coeffs_.size() > coeffs_.size()) {
            coeffs_.resize(o.coeffs_.size());
        }
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) {
            coeffs_[k] += o.coeffs_[k];
        }
        normalize();
        return *this;
    }

    IntPolynomial& operator-=(const IntPolynomial& o)
    {
        if (o.coeffs_.size() > coeffs_.size()) {
            coeffs_.resize(o.coeffs_.size());
        }
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) {
            coeffs_[k] -= o.coeffs_[k];
        }
        normalize();
        return *this;
    }

    /// this -= c * o
    void submul(const BigInt& c, const IntPolynomial& o)
    {
        if (o.coeffs_.size() > coeffs_.size()) {
            coeffs_.resize(o.coeffs_.size());
        }
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) {
            mpz_submul(coeffs_[k].get_mpz_t(), c.get_mpz_t(), o.coeffs_[k].get_mpz_t());
        }
        normalize();
    }

    IntPolynomial times_x() const
    {
        if (is_zero()) {
            return {};
        }
        std::vector<BigInt> cs(coeffs_.size() + 1);
        std::copy(coeffs_.begin(), coeffs_.end(), cs.begin() + 1);
        return IntPolynomial(std::move(cs));
    }

    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

    std::string to_string() const
    {
        if (is_zero()) {
            return "0";
        }
        std::string out;
        for (std::int64_t k = degree(); k >= 0; --k) {
            const BigInt& c = coeffs_[static_cast<std::size_t>(k)];
            if (c == 0) {
                continue;
            }
            BigInt a = abs(c);
            out += out.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
            if (a != 1 || k == 0) {
                out += a.get_str();
            }
            if (k >= 1) {
                out += "x";
            }
            if (k >= 2) {
                out += "^" + std::to_string(k);
            }
        }
        return out;
    }

private:
    void normalize()
    {
        while (!coeffs_.empty() && coeffs_.back() == 0) {
            coeffs_.pop_back();
        }
    }

    std::vector<BigInt> coeffs_;
};

namespace detail {

/// Solves (j - x) * sum_{n>=first} P_n(x) q^n = sum_n rhs_n q^n for P_first..P_last,
/// given rhs coefficients starting at exponent first - 1 and j coefficients c(-1), c(0), ...
///
/// Equating q^(n-1): P_n = rhs_(n-1) + x P_(n-1) - sum_{i>=0} c(i) P_(n-1-i).
inline std::vector<IntPolynomial> solve_j_quotient(const LaurentSeries& j, const LaurentSeries& rhs, std::int64_t first,
                                                   std::int64_t last)
{
    std::vector<IntPolynomial> polys(static_cast<std::size_t>(std::max<std::int64_t>(last + 1, 0)));
    for (std::int64_t n = first; n <= last; ++n) {
        IntPolynomial next = IntPolynomial::constant(rhs.coeff(n - 1).get_num());
        if (n - 1 >= first) {
            next += polys[static_cast<std::size_t>(n - 1)].times_x();
        }
        for (std::int64_t k = first; k <= n - 1; ++k) {
            const BigInt c = j.coeff(n - 1 - k).get_num();
            if (c != 0) {
                next.submul(c, polys[static_cast<std::size_t>(k)]);
            }
        }
        polys[static_cast<std::size_t>(n)] = std::move(next);
    }
    return polys;
}

} // namespace detail

/// B_1..B_count; entry m of the result is B_m (entry 0 is the zero polynomial).
inline std::vector<IntPolynomial> b_polynomials(std::int64_t count)
{
    if (count < 1) {
        throw std::invalid_argument("b_polynomials: count must be >= 1");
    }
    // B_{m+1} reads c(0..m-1) and the q^m coefficient of (q;q)_inf, m <= count - 1.
    const auto j = j_series(std::max<std::int64_t>(1, count - 1));
    return detail::solve_j_quotient(j, euler_series(count), 1, count);
}

/// J_0..J_count; entry n of the result is J_n.
inline std::vector<IntPolynomial> faber_polynomials(std::int64_t count)
{
    if (count < 0) {
        throw std::invalid_argument("faber_polynomials: count must be >= 0");
    }
    const std::int64_t precision = std::max<std::int64_t>(1, count);
    return detail::solve_j_quotient(j_series(precision), jprime_neg_series(precision), 0, count);
}

/// p(x) by Horner's rule, known below `precision` when x carries enough terms.
inline LaurentSeries eval_poly(const IntPolynomial& p, const LaurentSeries& x, std::int64_t precision)
{
    if (p.is_zero()) {
        return LaurentSeries::zero(precision, x.stride());
    }
    // Each multiplication by x lowers the precision by |val(x)| when val(x) < 0,
    // so the constant added with k multiplications still to come needs that much headroom.
    const std::int64_t drop = std::max<std::int64_t>(0, -x.valuation());
    const std::int64_t d = p.degree();
    LaurentSeries acc = LaurentSeries::constant(Rational(p.coeff(d)), precision + d * drop, x.stride());
    for (std::int64_t k = d - 1; k >= 0; --k) {
        acc = acc * x + LaurentSeries::constant(Rational(p.coeff(k)), precision + k * drop, x.stride());
    }
    return truncate(acc, precision);
}

/// p(j(24 tau)), stored on 24Z.
inline LaurentSeries eval_at_j24(const IntPolynomial& p, std::int64_t precision)
{
    const std::int64_t j_precision = std::max<std::int64_t>(1, ceil_div(precision, 24) + std::max<std::int64_t>(p.degree(), 0) + 1);
    return eval_poly(p, stride_expand(j_series(j_precision), 24), precision);
}

/// p(j(tau)).
inline LaurentSeries eval_at_j(const IntPolynomial& p, std::int64_t precision)
{
    const std::int64_t j_precision = std::max<std::int64_t>(1, precision + std::max<std::int64_t>(p.degree(), 0) + 1);
    return eval_poly(p, j_series(j_precision), precision);
}

struct BasisDecomposition {
    /// (n, t(n)) for the nonzero principal-part coefficients of f/alpha, n <= -1.
    std::vector<std::pair<std::int64_t, Rational>> terms;
    /// f - sum t(n) B_{-n}(j); O(q) for a function in the span.
    LaurentSeries residual;
};

/// Writes f = sum_{n<=-1} t(n) B_{-n}(j(tau)) where t is the principal part of f/alpha.
/// Throws NotInSpan when the residual has a nonzero coefficient at an exponent <= 0.
inline BasisDecomposition basis_decompose(const LaurentSeries& f, const LaurentSeries& alpha)
{
    if (f.precision() < 1) {
        throw OutOfPrecision("basis_decompose: f must be known through q^0");
    }
    const LaurentSeries ratio = f * invert(alpha);
    BasisDecomposition out;
    std::int64_t depth = 0;
    for (std::size_t k = 0; k < ratio.size() && ratio.exponent_at(k) <= -1; ++k) {
        if (sgn(ratio.coefficients()[k]) != 0) {
            out.terms.emplace_back(ratio.exponent_at(k), ratio.coefficients()[k]);
            depth = std::max(depth, -ratio.exponent_at(k));
        }
    }
    LaurentSeries recon = LaurentSeries::zero(f.precision(), 1);
    if (depth > 0) {
        const auto b = b_polynomials(depth);
        for (const auto& [n, t] : out.terms) {
            recon = recon + scale(eval_at_j(b[static_cast<std::size_t>(-n)], f.precision()), t);
        }
    }
    out.residual = f - recon;
    if (out.residual.precision() < 1) {
        throw OutOfPrecision("basis_decompose: residual is not known through q^0");
    }
    for (std::size_t k = 0; k < out.residual.size() && out.residual.exponent_at(k) <= 0; ++k) {
        if (sgn(out.residual.coefficients()[k]) != 0) {
            throw NotInSpan("basis_decompose: residual has a nonzero coefficient at q^" +
                            std::to_string(out.residual.exponent_at(k)));
        }
    }
    return out;
}

} // namespace qspt

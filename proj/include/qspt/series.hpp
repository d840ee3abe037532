#pragma once

// Truncated Laurent series in q over exact rationals.
//
// A series stores coefficients only on the progression of exponents
//   valuation, valuation + stride, valuation + 2*stride, ...   (< precision)
// and is exactly zero at every other exponent below its precision. Series
// that live on 24Z - 1 or 24Z therefore cost one slot per 24 exponents.
//
// All operations are pure; precisions are always the honest ones implied by
// the inputs, so every coefficient a series reports is exact.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qspt/arith.hpp"
#include "qspt/error.hpp"

namespace qspt {

namespace detail {

/// Number of progression points valuation + stride*k lying below precision.
constexpr std::int64_t points_below(std::int64_t valuation, std::int64_t precision, std::int64_t stride)
{
    return valuation >= precision ? 0 : ceil_div(precision - valuation, stride);
}

/// Smallest exponent >= e that is congruent to offset modulo stride.
constexpr std::int64_t align_up(std::int64_t e, std::int64_t stride, std::int64_t offset)
{
    return e + pos_mod(offset - e, stride);
}

} // namespace detail

class LaurentSeries {
public:
    /// The empty series O(q^precision) on the default progression.
    LaurentSeries() = default;

    /// Coefficients at valuation + stride*k for every such exponent below precision.
    LaurentSeries(std::int64_t stride, std::int64_t valuation, std::int64_t precision,
                  std::vector<Rational> coefficients)
        : stride_(stride), offset_(0), valuation_(valuation), precision_(precision),
          coeffs_(std::move(coefficients))
    {
        if (stride_ < 1) {
            throw std::invalid_argument("LaurentSeries: stride must be >= 1");
        }
        if (valuation_ > precision_) {
            throw std::invalid_argument("LaurentSeries: valuation exceeds precision");
        }
        if (static_cast<std::int64_t>(coeffs_.size()) != detail::points_below(valuation_, precision_, stride_)) {
            throw std::invalid_argument("LaurentSeries: coefficient count does not match [valuation, precision)");
        }
        offset_ = pos_mod(valuation_, stride_);
    }

    /// Zero known exactly below `precision`; keeps the given progression.
    static LaurentSeries zero(std::int64_t precision, std::int64_t stride = 1, std::int64_t offset = 0)
    {
        LaurentSeries s;
        s.stride_ = stride;
        s.offset_ = pos_mod(offset, stride);
        s.valuation_ = precision;
        s.precision_ = precision;
        return s;
    }

    static LaurentSeries monomial(const Rational& c, std::int64_t exponent, std::int64_t precision,
                                  std::int64_t stride = 1)
    {
        if (exponent >= precision) {
            return zero(precision, stride, exponent);
        }
        std::vector<Rational> cs(static_cast<std::size_t>(detail::points_below(exponent, precision, stride)));
        cs[0] = c;
        return LaurentSeries(stride, exponent, precision, std::move(cs)).trimmed();
    }

    static LaurentSeries constant(const Rational& c, std::int64_t precision, std::int64_t stride = 1)
    {
        return monomial(c, 0, precision, stride);
    }

    /// Stride-1 series from a list of coefficients starting at `valuation`.
    static LaurentSeries from_list(std::int64_t valuation, std::int64_t precision,
                                   const std::vector<std::int64_t>& coefficients)
    {
        std::vector<Rational> cs(static_cast<std::size_t>(detail::points_below(valuation, precision, 1)));
        for (std::size_t i = 0; i < coefficients.size() && i < cs.size(); ++i) {
            cs[i] = make_rational(coefficients[i]);
        }
        return LaurentSeries(1, valuation, precision, std::move(cs));
    }

    std::int64_t stride() const noexcept { return stride_; }
    std::int64_t offset() const noexcept { return offset_; }
    std::int64_t valuation() const noexcept { return valuation_; }
    std::int64_t precision() const noexcept { return precision_; }
    std::span<const Rational> coefficients() const noexcept { return coeffs_; }
    std::size_t size() const noexcept { return coeffs_.size(); }
    bool empty() const noexcept { return coeffs_.empty(); }

    std::int64_t exponent_at(std::size_t k) const noexcept
    {
        return valuation_ + stride_ * static_cast<std::int64_t>(k);
    }

    bool on_progression(std::int64_t e) const noexcept { return pos_mod(e - offset_, stride_) == 0; }

    /// Coefficient of q^n. Throws OutOfPrecision when n >= precision.
    Rational coeff(std::int64_t n) const
    {
        if (n >= precision_) {
            throw OutOfPrecision("coefficient of q^" + std::to_string(n) + " requested, precision is " +
                                 std::to_string(precision_));
        }
        if (n < valuation_ || !on_progression(n)) {
            return Rational(0);
        }
        return coeffs_[static_cast<std::size_t>((n - valuation_) / stride_)];
    }

    bool is_integral() const
    {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.get_den() == 1; });
    }

    /// Same series with leading zero slots dropped; a zero series becomes empty.
    LaurentSeries trimmed() const&
    {
        LaurentSeries copy = *this;
        return std::move(copy).trimmed();
    }

    LaurentSeries trimmed() &&
    {
        std::size_t lead = 0;
        while (lead < coeffs_.size() && sgn(coeffs_[lead]) == 0) {
            ++lead;
        }
        if (lead == coeffs_.size()) {
            valuation_ = precision_;
            coeffs_.clear();
        } else if (lead > 0) {
            valuation_ += stride_ * static_cast<std::int64_t>(lead);
            coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
        }
        return std::move(*this);
    }

    friend bool operator==(const LaurentSeries&, const LaurentSeries&) = default;

private:
    std::int64_t stride_ = 1;
    std::int64_t offset_ = 0;
    std::int64_t valuation_ = 0;
    std::int64_t precision_ = 0;
    std::vector<Rational> coeffs_;
};

inline Rational coeff(const LaurentSeries& f, std::int64_t n) { return f.coeff(n); }

/// Keep only exponents below `precision` (never raises the precision).
inline LaurentSeries truncate(const LaurentSeries& f, std::int64_t precision)
{
    std::int64_t p = std::min(precision, f.precision());
    if (f.valuation() >= p) {
        return LaurentSeries::zero(p, f.stride(), f.offset());
    }
    auto n = static_cast<std::size_t>(detail::points_below(f.valuation(), p, f.stride()));
    auto cs = f.coefficients();
    return LaurentSeries(f.stride(), f.valuation(), p, std::vector<Rational>(cs.begin(), cs.begin() + n));
}

inline LaurentSeries scale(const LaurentSeries& f, const Rational& c)
{
    std::vector<Rational> cs(f.coefficients().begin(), f.coefficients().end());
    for (auto& x : cs) {
        x *= c;
    }
    if (f.empty()) {
        return f;
    }
    return LaurentSeries(f.stride(), f.valuation(), f.precision(), std::move(cs)).trimmed();
}

inline LaurentSeries negate(const LaurentSeries& f) { return scale(f, Rational(-1)); }

/// Multiply by q^k.
inline LaurentSeries shift(const LaurentSeries& f, std::int64_t k)
{
    if (f.empty()) {
        return LaurentSeries::zero(f.precision() + k, f.stride(), f.offset() + k);
    }
    std::vector<Rational> cs(f.coefficients().begin(), f.coefficients().end());
    return LaurentSeries(f.stride(), f.valuation() + k, f.precision() + k, std::move(cs));
}

/// Substitute q -> q^m (tau -> m*tau).
inline LaurentSeries stride_expand(const LaurentSeries& f, std::int64_t m)
{
    if (m < 1) {
        throw std::invalid_argument("stride_expand: factor must be >= 1");
    }
    if (f.empty()) {
        return LaurentSeries::zero(f.precision() * m, f.stride() * m, f.offset() * m);
    }
    std::vector<Rational> cs(f.coefficients().begin(), f.coefficients().end());
    // Slots of f at or above valuation stay below m*precision exactly when they were below precision.
    return LaurentSeries(f.stride() * m, f.valuation() * m, f.precision() * m, std::move(cs));
}

/// Inverse of stride_expand: q^(m*n) -> q^n. Requires support on mZ.
inline LaurentSeries contract(const LaurentSeries& f, std::int64_t m)
{
    if (m < 1) {
        throw std::invalid_argument("contract: factor must be >= 1");
    }
    std::int64_t p = ceil_div(f.precision(), m);
    if (f.empty()) {
        return LaurentSeries::zero(p, std::max<std::int64_t>(1, f.stride() / m), 0);
    }
    if (f.stride() % m != 0 || f.offset() % m != 0) {
        throw BadSupport("contract: series is not supported on multiples of " + std::to_string(m));
    }
    std::vector<Rational> cs(f.coefficients().begin(), f.coefficients().end());
    return LaurentSeries(f.stride() / m, f.valuation() / m, p, std::move(cs));
}

/// Coefficientwise n * a(n), i.e. the operator q d/dq.
inline LaurentSeries q_derive(const LaurentSeries& f)
{
    if (f.empty()) {
        return f;
    }
    std::vector<Rational> cs(f.coefficients().begin(), f.coefficients().end());
    for (std::size_t k = 0; k < cs.size(); ++k) {
        cs[k] *= Rational(BigInt(static_cast<long>(f.exponent_at(k))));
    }
    return LaurentSeries(f.stride(), f.valuation(), f.precision(), std::move(cs)).trimmed();
}

inline LaurentSeries add(const LaurentSeries& f, const LaurentSeries& g)
{
    const std::int64_t p = std::min(f.precision(), g.precision());
    if (g.empty()) {
        return truncate(f, p).trimmed();
    }
    if (f.empty()) {
        return truncate(g, p).trimmed();
    }
    const std::int64_t d = std::gcd(std::gcd(f.stride(), g.stride()), f.valuation() - g.valuation());
    const std::int64_t lo = std::min(f.valuation(), g.valuation());
    if (lo >= p) {
        return LaurentSeries::zero(p, d, lo);
    }
    std::vector<Rational> cs(static_cast<std::size_t>(detail::points_below(lo, p, d)));
    for (const LaurentSeries* s : {&f, &g}) {
        auto src = s->coefficients();
        for (std::size_t k = 0; k < src.size(); ++k) {
            std::int64_t e = s->exponent_at(k);
            if (e >= p) {
                break;
            }
            cs[static_cast<std::size_t>((e - lo) / d)] += src[k];
        }
    }
    return LaurentSeries(d, lo, p, std::move(cs)).trimmed();
}

inline LaurentSeries sub(const LaurentSeries& f, const LaurentSeries& g) { return add(f, negate(g)); }

namespace detail {

inline std::vector<std::size_t> nonzero_slots(const LaurentSeries& f)
{
    std::vector<std::size_t> idx;
    auto cs = f.coefficients();
    for (std::size_t k = 0; k < cs.size(); ++k) {
        if (sgn(cs[k]) != 0) {
            idx.push_back(k);
        }
    }
    return idx;
}

} // namespace detail

/// Cauchy product. Cost is proportional to the product of the nonzero supports.
inline LaurentSeries mul(const LaurentSeries& f, const LaurentSeries& g)
{
    const std::int64_t p = std::min(f.precision() + g.valuation(), g.precision() + f.valuation());
    const std::int64_t d = std::gcd(f.stride(), g.stride());
    const std::int64_t v = f.valuation() + g.valuation();
    if (f.empty() || g.empty() || v >= p) {
        return LaurentSeries::zero(p, d, f.offset() + g.offset());
    }
    const auto n = static_cast<std::size_t>(detail::points_below(v, p, d));
    const auto fi = detail::nonzero_slots(f);
    const auto gi = detail::nonzero_slots(g);
    auto fc = f.coefficients();
    auto gc = g.coefficients();

    std::vector<Rational> out(n);
    if (f.is_integral() && g.is_integral()) {
        std::vector<BigInt> acc(n);
        for (std::size_t i : fi) {
            const std::int64_t ei = f.exponent_at(i) + g.valuation();
            if (ei >= p) {
                break;
            }
            for (std::size_t j : gi) {
                const std::int64_t e = ei + g.stride() * static_cast<std::int64_t>(j);
                if (e >= p) {
                    break;
                }
                auto& slot = acc[static_cast<std::size_t>((e - v) / d)];
                mpz_addmul(slot.get_mpz_t(), fc[i].get_num_mpz_t(), gc[j].get_num_mpz_t());
            }
        }
        for (std::size_t k = 0; k < n; ++k) {
            out[k] = Rational(acc[k]);
        }
    } else {
        Rational t;
        for (std::size_t i : fi) {
            const std::int64_t ei = f.exponent_at(i) + g.valuation();
            if (ei >= p) {
                break;
            }
            for (std::size_t j : gi) {
                const std::int64_t e = ei + g.stride() * static_cast<std::int64_t>(j);
                if (e >= p) {
                    break;
                }
                t = fc[i] * gc[j];
                out[static_cast<std::size_t>((e - v) / d)] += t;
            }
        }
    }
    return LaurentSeries(d, v, p, std::move(out)).trimmed();
}

/// Multiplicative inverse; requires a nonzero coefficient at the valuation.
inline LaurentSeries invert(const LaurentSeries& f)
{
    if (f.empty() || sgn(f.coefficients()[0]) == 0) {
        throw LeadingZero("invert: coefficient at the valuation is zero");
    }
    const std::size_t n = f.size();
    auto fc = f.coefficients();
    auto fi = detail::nonzero_slots(f);
    std::vector<Rational> g(n);

    const Rational& lead = fc[0];
    const bool unit_integral = f.is_integral() && (lead == 1 || lead == -1);
    if (unit_integral) {
        // g_k = -lead * sum_{i>=1} f_i g_{k-i}, all in Z.
        std::vector<BigInt> gz(n);
        BigInt acc;
        gz[0] = lead.get_num();
        for (std::size_t k = 1; k < n; ++k) {
            acc = 0;
            for (std::size_t i : fi) {
                if (i == 0) {
                    continue;
                }
                if (i > k) {
                    break;
                }
                mpz_addmul(acc.get_mpz_t(), fc[i].get_num_mpz_t(), gz[k - i].get_mpz_t());
            }
            gz[k] = lead == 1 ? BigInt(-acc) : acc;
        }
        for (std::size_t k = 0; k < n; ++k) {
            g[k] = Rational(gz[k]);
        }
    } else {
        const Rational inv = 1 / lead;
        g[0] = inv;
        Rational acc;
        for (std::size_t k = 1; k < n; ++k) {
            acc = 0;
            for (std::size_t i : fi) {
                if (i == 0) {
                    continue;
                }
                if (i > k) {
                    break;
                }
                acc += fc[i] * g[k - i];
            }
            g[k] = -acc * inv;
        }
    }
    const std::int64_t v = f.valuation();
    return LaurentSeries(f.stride(), -v, f.precision() - 2 * v, std::move(g));
}

inline LaurentSeries pow(const LaurentSeries& f, std::int64_t k)
{
    if (k < 0) {
        return pow(invert(f), -k);
    }
    LaurentSeries result = LaurentSeries::constant(Rational(1), f.precision() - f.valuation(), f.stride());
    if (k == 0) {
        return result;
    }
    LaurentSeries base = f;
    bool first = true;
    while (k > 0) {
        if (k & 1) {
            result = first ? base : mul(result, base);
            first = false;
        }
        k >>= 1;
        if (k > 0) {
            base = mul(base, base);
        }
    }
    return result;
}

inline LaurentSeries operator+(const LaurentSeries& f, const LaurentSeries& g) { return add(f, g); }
inline LaurentSeries operator-(const LaurentSeries& f, const LaurentSeries& g) { return sub(f, g); }
inline LaurentSeries operator-(const LaurentSeries& f) { return negate(f); }
inline LaurentSeries operator*(const LaurentSeries& f, const LaurentSeries& g) { return mul(f, g); }
inline LaurentSeries operator*(const Rational& c, const LaurentSeries& f) { return scale(f, c); }

/// Human-readable form, e.g. "q^-1 + 744 + 196884*q + O(q^2)".
inline std::string to_string(const LaurentSeries& f, std::size_t max_terms = 8)
{
    std::ostringstream os;
    std::size_t shown = 0;
    auto cs = f.coefficients();
    for (std::size_t k = 0; k < cs.size() && shown < max_terms; ++k) {
        if (sgn(cs[k]) == 0) {
            continue;
        }
        os << (shown == 0 ? (sgn(cs[k]) < 0 ? "-" : "") : (sgn(cs[k]) < 0 ? " - " : " + "));
        Rational a = abs(cs[k]);
        std::int64_t e = f.exponent_at(k);
        if (e == 0 || a != 1) {
            os << a.get_str();
            if (e != 0) {
                os << "*";
            }
        }
        if (e != 0) {
            os << "q^" << e;
        }
        ++shown;
    }
    if (shown == 0) {
        os << "0";
    }
    os << " + O(q^" << f.precision() << ")";
    return os.str();
}

} // namespace qspt

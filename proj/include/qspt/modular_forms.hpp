#pragma once

// q-expansions of the classical forms: (q;q)_inf, eta(24 tau), E4, E6, Delta,
// j, -q dj/dq, alpha(q) = (q;q)_inf / (-q dj/dq) and the partition generating
// function P(q) = sum p(n) q^(24n-1) = 1/eta(24 tau).
//
// Every constructor takes an exclusive exponent bound `precision` and returns
// a series known exactly below it. Intermediate products are built with the
// margin their valuations require and then truncated.

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qspt/error.hpp"
#include "qspt/partitions.hpp"
#include "qspt/series.hpp"

namespace qspt {

namespace detail {

inline void require_positive_precision(std::int64_t precision, const char* who)
{
    if (precision < 1) {
        throw std::invalid_argument(std::string(who) + ": precision must be >= 1");
    }
}

/// sigma_k(n) for n = 0..limit-1 (sigma_k(0) unused, left at 0).
inline std::vector<BigInt> divisor_power_sums(std::int64_t limit, unsigned long k)
{
    std::vector<BigInt> sigma(static_cast<std::size_t>(std::max<std::int64_t>(limit, 1)));
    BigInt dk;
    for (std::int64_t d = 1; d < limit; ++d) {
        mpz_ui_pow_ui(dk.get_mpz_t(), static_cast<unsigned long>(d), k);
        for (std::int64_t m = d; m < limit; m += d) {
            sigma[static_cast<std::size_t>(m)] += dk;
        }
    }
    return sigma;
}

inline LaurentSeries eisenstein(std::int64_t precision, unsigned long k, long factor)
{
    auto sigma = divisor_power_sums(precision, k);
    std::vector<Rational> cs(static_cast<std::size_t>(precision));
    cs[0] = 1;
    for (std::int64_t n = 1; n < precision; ++n) {
        cs[static_cast<std::size_t>(n)] = Rational(sigma[static_cast<std::size_t>(n)] * factor);
    }
    return LaurentSeries(1, 0, precision, std::move(cs));
}

} // namespace detail

/// (q;q)_inf = sum_k (-1)^k q^(k(3k-1)/2) over all integers k.
inline LaurentSeries euler_series(std::int64_t precision)
{
    detail::require_positive_precision(precision, "euler_series");
    std::vector<Rational> cs(static_cast<std::size_t>(precision));
    for (std::int64_t k = 0;; ++k) {
        const std::int64_t a = k * (3 * k - 1) / 2;
        const std::int64_t b = k * (3 * k + 1) / 2;
        if (a >= precision) {
            break;
        }
        const long sign = (k % 2 == 0) ? 1 : -1;
        cs[static_cast<std::size_t>(a)] = sign;
        if (k > 0 && b < precision) {
            cs[static_cast<std::size_t>(b)] = sign;
        }
    }
    return LaurentSeries(1, 0, precision, std::move(cs));
}

/// eta(24 tau) = q (q^24; q^24)_inf, stored on 24Z + 1.
inline LaurentSeries eta24_series(std::int64_t precision)
{
    detail::require_positive_precision(precision, "eta24_series");
    // Exponent 24e + 1 < precision  <=>  e < ceil((precision - 1) / 24).
    const std::int64_t inner = std::max<std::int64_t>(1, ceil_div(precision - 1, 24));
    return truncate(shift(stride_expand(euler_series(inner), 24), 1), precision);
}

inline LaurentSeries eisenstein_e4(std::int64_t precision)
{
    detail::require_positive_precision(precision, "eisenstein_e4");
    return detail::eisenstein(precision, 3, 240);
}

inline LaurentSeries eisenstein_e6(std::int64_t precision)
{
    detail::require_positive_precision(precision, "eisenstein_e6");
    return detail::eisenstein(precision, 5, -504);
}

/// Delta = (E4^3 - E6^2) / 1728.
inline LaurentSeries delta_series(std::int64_t precision)
{
    detail::require_positive_precision(precision, "delta_series");
    const auto e4 = eisenstein_e4(precision);
    const auto e6 = eisenstein_e6(precision);
    return scale(pow(e4, 3) - pow(e6, 2), Rational(1, 1728));
}

/// j = E4^3 / Delta.
inline LaurentSeries j_series(std::int64_t precision)
{
    detail::require_positive_precision(precision, "j_series");
    const std::int64_t inner = precision + 2;
    return truncate(pow(eisenstein_e4(inner), 3) * invert(delta_series(inner)), precision);
}

/// -q dj/dq = E4^2 E6 / Delta.
inline LaurentSeries jprime_neg_series(std::int64_t precision)
{
    detail::require_positive_precision(precision, "jprime_neg_series");
    const std::int64_t inner = precision + 2;
    const auto e4 = eisenstein_e4(inner);
    return truncate(e4 * e4 * eisenstein_e6(inner) * invert(delta_series(inner)), precision);
}

/// alpha(q) = (q;q)_inf / (-q dj/dq) = q + O(q^2).
inline LaurentSeries alpha_series(std::int64_t precision)
{
    detail::require_positive_precision(precision, "alpha_series");
    const std::int64_t inner = std::max<std::int64_t>(1, precision - 2);
    return truncate(euler_series(precision) * invert(jprime_neg_series(inner)), precision);
}

/// P(q) = sum_{n>=0} p(n) q^(24n-1), stored on 24Z - 1.
inline LaurentSeries partition_gen24(std::int64_t precision)
{
    detail::require_positive_precision(precision, "partition_gen24");
    const std::int64_t count = detail::points_below(-1, precision, 24);
    const auto p = p_table(std::max<std::int64_t>(0, count - 1));
    std::vector<Rational> cs(static_cast<std::size_t>(count));
    for (std::int64_t n = 0; n < count; ++n) {
        cs[static_cast<std::size_t>(n)] = Rational(p[static_cast<std::size_t>(n)]);
    }
    return LaurentSeries(24, -1, precision, std::move(cs));
}

/// Named constructors, keyed by the names the CLI exposes. Holds no cache, so
/// concurrent lookups are safe.
class FormRegistry {
public:
    using Constructor = std::function<LaurentSeries(std::int64_t)>;

    static const FormRegistry& standard()
    {
        static const FormRegistry registry;
        return registry;
    }

    bool contains(const std::string& name) const { return constructors_.count(name) != 0; }

    LaurentSeries build(const std::string& name, std::int64_t precision) const
    {
        auto it = constructors_.find(name);
        if (it == constructors_.end()) {
            throw UnknownName("unknown series '" + name + "'");
        }
        return it->second(precision);
    }

    std::vector<std::string> names() const
    {
        std::vector<std::string> out;
        for (const auto& [name, _] : constructors_) {
            out.push_back(name);
        }
        return out;
    }

private:
    FormRegistry()
        : constructors_{
              {"euler", euler_series},
              {"eta24", eta24_series},
              {"e4", eisenstein_e4},
              {"e6", eisenstein_e6},
              {"delta", delta_series},
              {"j", j_series},
              {"jprime_neg", jprime_neg_series},
              {"alpha", alpha_series},
              {"partition_gen24", partition_gen24},
          }
    {
    }

    std::map<std::string, Constructor> constructors_;
};

} // namespace qspt

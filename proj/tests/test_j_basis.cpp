#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qspt/j_basis.hpp"

using namespace qspt;

namespace {

IntPolynomial poly(std::initializer_list<long> low_to_high)
{
    std::vector<BigInt> cs;
    for (long c : low_to_high) {
        cs.emplace_back(c);
    }
    return IntPolynomial(std::move(cs));
}

// B_m for m < count from the expansion (q;q) / (j - x) = sum_k x^k (q;q) j^-(k+1),
// using only dense oracle arithmetic.
std::vector<std::vector<BigInt>> b_oracle(std::size_t count)
{
    const std::size_t n = count + 2;
    const auto jc = oracle::j_coefficients(n); // q j = 1 + 744 q + ...
    const auto u = oracle::dense_inverse(jc, n); // 1 / (q j)
    const auto euler = oracle::dense_inverse(oracle::partitions(static_cast<std::int64_t>(n)), n);
    std::vector<std::vector<BigInt>> out(count);
    oracle::Dense upow = euler; // (q;q) u^(k+1) after the first multiply
    for (std::size_t k = 0; k + 1 < count; ++k) {
        upow = oracle::dense_mul(upow, u, n);
        // (q;q) j^-(k+1) = q^(k+1) (q;q) u^(k+1)
        for (std::size_t m = k + 1; m < count; ++m) {
            out[m].resize(std::max(out[m].size(), k + 1));
            out[m][k] = upow[m - k - 1];
        }
    }
    return out;
}

} // namespace

TEST(Polynomial, Basics)
{
    auto p = poly({3, 0, 1});
    EXPECT_EQ(p.degree(), 2);
    EXPECT_TRUE(p.is_monic());
    EXPECT_EQ(p.to_string(), "x^2 + 3");
    p -= poly({3, 0, 1});
    EXPECT_TRUE(p.is_zero());
    EXPECT_EQ(p.degree(), -1);
    EXPECT_EQ(poly({-745, 1}).to_string(), "x - 745");
    EXPECT_EQ(poly({1, 2}).times_x(), poly({0, 1, 2}));
}

TEST(BPolynomials, DisplayedValues)
{
    const auto b = b_polynomials(5);
    EXPECT_EQ(b[1], poly({1}));
    EXPECT_EQ(b[2], poly({-745, 1}));
    EXPECT_EQ(b[3], poly({357395, -1489, 1}));
    // Constant term also confirmed by the generating-function oracle below and by
    // the l = 11 Hecke identity.
    EXPECT_EQ(b[5], poly({49476686690L, -812685832L, 2732795, -2977, 1}));
    EXPECT_EQ(b[5].to_string(), "x^4 - 2977x^3 + 2732795x^2 - 812685832x + 49476686690");
}

TEST(BPolynomials, AgainstGeneratingFunction)
{
    const std::size_t count = 14;
    const auto b = b_polynomials(static_cast<std::int64_t>(count) - 1);
    const auto ref = b_oracle(count);
    for (std::size_t m = 1; m < count; ++m) {
        ASSERT_EQ(b[m], IntPolynomial(ref[m])) << m;
    }
}

TEST(BPolynomials, MonicOfDegreeMMinusOne)
{
    const auto b = b_polynomials(50);
    for (std::int64_t m = 1; m <= 50; ++m) {
        ASSERT_EQ(b[static_cast<std::size_t>(m)].degree(), m - 1);
        ASSERT_TRUE(b[static_cast<std::size_t>(m)].is_monic());
    }
}

TEST(BPolynomials, AtJAreAlphaTimesPole)
{
    const auto alpha = alpha_series(40);
    const auto b = b_polynomials(12);
    for (std::int64_t n = 1; n <= 12; ++n) {
        const auto bn = eval_at_j(b[static_cast<std::size_t>(n)], 1);
        const auto pole = shift(alpha, -n);
        for (std::int64_t e = -n; e < 1; ++e) {
            ASSERT_EQ(bn.coeff(e), pole.coeff(e)) << n << " " << e;
        }
    }
}

TEST(Faber, FirstPolynomials)
{
    const auto f = faber_polynomials(2);
    EXPECT_EQ(f[0], poly({1}));
    EXPECT_EQ(f[1], poly({-744, 1}));
    EXPECT_EQ(f[2], poly({159768, -1488, 1}));
}

TEST(Faber, Normalization)
{
    const auto f = faber_polynomials(12);
    for (std::int64_t n = 0; n <= 12; ++n) {
        const auto& jn = f[static_cast<std::size_t>(n)];
        ASSERT_EQ(jn.degree(), n);
        ASSERT_TRUE(jn.is_monic());
        const auto value = eval_at_j(jn, 1);
        for (std::int64_t e = -n; e < 1; ++e) {
            ASSERT_EQ(value.coeff(e), e == -n ? 1 : 0) << n << " " << e;
        }
    }
}

TEST(Faber, AlphaTimesFaberOnlyMatchesThroughConstantTerm)
{
    // alpha J_n(j) and B_n(j) share their principal part and constant term,
    // but not the q^1 coefficient: for n = 1, B_1 = 1 and alpha (j - 744) = 1 - q + ...
    const auto alpha = alpha_series(10);
    const auto f = faber_polynomials(1);
    const auto lhs = alpha * eval_at_j(f[1], 10);
    EXPECT_EQ(lhs.coeff(0), 1);
    EXPECT_EQ(lhs.coeff(1), -1);
    EXPECT_EQ(eval_at_j(b_polynomials(1)[1], 10).coeff(1), 0);
}

TEST(Eval, HornerPrecision)
{
    const auto p = poly({-745, 1});
    const auto v = eval_at_j(p, 30);
    EXPECT_EQ(v.precision(), 30);
    const auto j = j_series(30);
    for (std::int64_t e = -1; e < 30; ++e) {
        ASSERT_EQ(v.coeff(e), j.coeff(e) - (e == 0 ? 745 : 0));
    }
    const auto v24 = eval_at_j24(p, 200);
    EXPECT_EQ(v24.stride(), 24);
    EXPECT_EQ(v24.precision(), 200);
    EXPECT_EQ(v24.coeff(-24), 1);
    EXPECT_EQ(v24.coeff(0), -1);
    EXPECT_EQ(v24.coeff(24), 196884);
}

TEST(Decompose, BasisElementIsItself)
{
    const auto b = b_polynomials(3);
    const auto f = eval_at_j(b[3], 60);
    const auto d = basis_decompose(f, alpha_series(80));
    ASSERT_EQ(d.terms.size(), 1U);
    EXPECT_EQ(d.terms[0].first, -3);
    EXPECT_EQ(d.terms[0].second, 1);
    EXPECT_TRUE(d.residual.empty());
}

TEST(Decompose, LinearCombination)
{
    const auto b = b_polynomials(4);
    const auto f = scale(eval_at_j(b[4], 50), make_rational(3, 2)) - scale(eval_at_j(b[1], 50), Rational(7));
    const auto d = basis_decompose(f, alpha_series(80));
    ASSERT_EQ(d.terms.size(), 2U);
    EXPECT_EQ(d.terms[0], std::make_pair(std::int64_t{-4}, make_rational(3, 2)));
    EXPECT_EQ(d.terms[1], std::make_pair(std::int64_t{-1}, Rational(-7)));
    EXPECT_TRUE(d.residual.empty());
}

TEST(Decompose, NonModularLeavesResidual)
{
    // q^-1 agrees with B_2(j) + B_1(j) through q^0 but not beyond.
    const auto f = LaurentSeries::monomial(Rational(1), -1, 20);
    const auto d = basis_decompose(f, alpha_series(40));
    ASSERT_EQ(d.terms.size(), 2U);
    EXPECT_FALSE(d.residual.empty());
    EXPECT_GE(d.residual.valuation(), 1);
}

#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "qspt/modular_forms.hpp"
#include "qspt/partition_stats.hpp"

using namespace qspt;

namespace {

// s(n) by scanning k directly.
int s_oracle(std::int64_t n)
{
    if (n == 1) {
        return 2;
    }
    for (std::int64_t k = -2000; k <= 2000; ++k) {
        const std::int64_t sq = (6 * k + 1) * (6 * k + 1);
        if (sq == 24 * n + 25 || sq == 24 * n + 1) {
            return (k % 2 == 0) ? -1 : 1;
        }
    }
    return 0;
}

} // namespace

TEST(Partitions, PartitionValueType)
{
    const Partition lambda{2, 5, 1, 5};
    EXPECT_EQ(lambda.size(), 13);
    EXPECT_EQ(lambda.parts()[0], 5);
    EXPECT_EQ(lambda.multiplicities()[5], 2);
    EXPECT_THROW(Partition({1, 0}), std::invalid_argument);
}

TEST(Partitions, TableAgainstCounting)
{
    const auto p = p_table(500);
    const auto ref = oracle::partitions(500);
    ASSERT_EQ(p.size(), ref.size());
    for (std::size_t n = 0; n < p.size(); ++n) {
        ASSERT_EQ(p[n], ref[n]) << n;
    }
}

TEST(Partitions, EnumerationCount)
{
    const auto ref = oracle::partitions(30);
    for (int n = 0; n <= 30; ++n) {
        std::int64_t count = 0;
        for_each_partition(n, [&](std::span<const int>) { ++count; });
        ASSERT_EQ(BigInt(static_cast<long>(count)), ref[static_cast<std::size_t>(n)]);
    }
}

TEST(Spt, TableAgainstEnumeration)
{
    const auto spt = spt_table(45);
    for (int n = 1; n <= 45; ++n) {
        ASSERT_EQ(spt[static_cast<std::size_t>(n)], BigInt(static_cast<long>(oracle::spt(n)))) << n;
        ASSERT_EQ(spt_bruteforce(n), oracle::spt(n)) << n;
    }
}

TEST(Spt, FirstValues)
{
    const auto spt = spt_table(6);
    const std::vector<long> expected{0, 1, 3, 5, 10, 14, 26};
    for (std::size_t n = 0; n < expected.size(); ++n) {
        EXPECT_EQ(spt[n], expected[n]);
    }
}

TEST(Spt, GuardsEnumeration)
{
    EXPECT_THROW(spt_bruteforce(kPartitionEnumerationLimit + 1), EnumerationLimit);
    EXPECT_THROW(ustar_bruteforce(kUnimodalEnumerationLimit + 1), EnumerationLimit);
}

TEST(SignedTriangularWeight, WorkedExample)
{
    EXPECT_EQ(t_signed(Partition{1, 2, 2, 3, 4, 5, 5, 8}), 6);
    EXPECT_EQ(t_signed(Partition{2, 3}), 0);
    EXPECT_EQ(t_signed(Partition{1, 1, 3}), 2);
}

TEST(SignedTriangularWeight, PartitionsOfSix)
{
    EXPECT_EQ(ts_sum_bruteforce(6), 14);
    EXPECT_EQ(oracle::ts_sum(6), 14);
}

TEST(SignedTriangularWeight, SumsAgainstSeries)
{
    const auto a = a_series(40);
    for (int n = 1; n <= 30; ++n) {
        ASSERT_EQ(BigInt(static_cast<long>(oracle::ts_sum(n))), a[static_cast<std::size_t>(n)]) << n;
    }
}

TEST(Unimodal, FirstValuesOfA)
{
    const auto a = a_series(6);
    const std::vector<long> expected{0, 1, 2, 2, 5, 6, 14};
    for (std::size_t n = 0; n < expected.size(); ++n) {
        EXPECT_EQ(a[n], expected[n]) << n;
    }
}

TEST(Unimodal, UstarAgainstExplicitSequences)
{
    const auto t = StatTables::build(25);
    for (int n = 1; n <= 25; ++n) {
        ASSERT_EQ(ustar_bruteforce(n), oracle::ustar(n)) << n;
        ASSERT_EQ(t.ustar(n), BigInt(static_cast<long>(oracle::ustar(n)))) << n;
    }
    const std::vector<long> head{1, 1, -1, 0, -2, 2};
    for (std::size_t n = 1; n <= head.size(); ++n) {
        EXPECT_EQ(t.ustar(static_cast<std::int64_t>(n)), head[n - 1]);
    }
}

TEST(Weights, SMatchesScan)
{
    for (std::int64_t n = 1; n <= 3000; ++n) {
        ASSERT_EQ(s_fn(n), s_oracle(n)) << n;
    }
    EXPECT_EQ(s_fn(2), 1);
    EXPECT_THROW(s_fn(0), std::invalid_argument);
}

TEST(WeightsProperty, SIsWellDefined)
{
    // At most one of 24n+25, 24n+1 is a square for n >= 2, so the two
    // branches never compete.
    for (std::int64_t n = 2; n <= 1000000; ++n) {
        const int hits = (is_square(24 * n + 25) ? 1 : 0) + (is_square(24 * n + 1) ? 1 : 0);
        ASSERT_LE(hits, 1) << n;
        const int s = s_fn(n);
        ASSERT_TRUE(s == 0 || s == 1 || s == -1);
        ASSERT_EQ(s != 0, hits == 1);
    }
}

TEST(Weights, Mu)
{
    for (std::int64_t n = 1; n <= 200; ++n) {
        ASSERT_EQ(mu(n), 6 - oracle::legendre(1 - 24 * n, 5));
    }
    EXPECT_EQ(mu(1), 7);
    EXPECT_EQ(mu(2), 7);
    EXPECT_EQ(mu(4), 6);
    EXPECT_EQ(mu(5), 5);
}

TEST(CFormula, FirstTwenty)
{
    const auto t = StatTables::build(25 * 20 - 1);
    const auto j = oracle::j_coefficients(23);
    for (std::int64_t n = 1; n <= 20; ++n) {
        ASSERT_EQ(c_formula(t, n), Rational(j[static_cast<std::size_t>(n + 1)])) << n;
        ASSERT_EQ(c_formula_g(t, n), c_formula(t, n)) << n;
    }
}

TEST(CFormula, ItemizedFirstCoefficient)
{
    const auto t = StatTables::build(49);
    std::vector<Rational> values;
    for (const auto& term : c_formula_terms(t, 1, SptSource::Spt)) {
        values.push_back(term.value);
    }
    const std::vector<Rational> expected{Rational(2), Rational(15708), Rational(181125), Rational(49)};
    EXPECT_EQ(values, expected);
}

TEST(CFormula, ItemizedSecondCoefficient)
{
    const auto t = StatTables::build(49);
    for (SptSource src : {SptSource::Spt, SptSource::Unimodal}) {
        std::multiset<Rational> values;
        Rational total;
        for (const auto& term : c_formula_terms(t, 2, src)) {
            values.insert(term.value);
            total += term.value;
        }
        const std::multiset<Rational> expected{Rational(1),      Rational(-49),     Rational(182),
                                               Rational(-15708), Rational(-181125), Rational(2405844),
                                               Rational(40778375)};
        EXPECT_EQ(values, expected);
        EXPECT_EQ(total, 2 * 21493760);
    }
}

TEST(CFormula, HTwoVanishesOffItsSupport)
{
    const auto t = StatTables::build(200);
    for (std::int64_t m = 1; m < 1200; ++m) {
        if (m % 25 != 0 || m % 24 != 23) {
            ASSERT_EQ(h2(t, m), 0) << m;
        }
    }
    // 575 = 25 * 23 = 24 * 24 - 1
    EXPECT_EQ(h2(t, 575), Rational(12 * t.spt(1) + 23 * t.p(1)));
}

TEST(CFormula, TableTooSmall)
{
    const auto t = StatTables::build(40);
    try {
        (void)c_formula(t, 2);
        FAIL() << "expected TableTooSmall";
    } catch (const TableTooSmall& e) {
        EXPECT_EQ(e.required(), 49);
    }
}

TEST(Congruences, AndrewsFamilies)
{
    CongruenceParams params;
    params.max_n = 100;
    const auto t = StatTables::build(congruence_table_need(CongruenceFamily::Andrews, params), 1);
    EXPECT_TRUE(check_congruences(t, CongruenceFamily::Andrews, params).passed());
}

TEST(Congruences, PlusConventionHolds)
{
    CongruenceParams params;
    const auto need = congruence_table_need(CongruenceFamily::SptPowers, params);
    const auto t = StatTables::build(need, need);
    const auto powers = check_congruences(t, CongruenceFamily::SptPowers, params);
    EXPECT_TRUE(powers.passed());
    EXPECT_EQ(powers.compared, 3);
    EXPECT_TRUE(check_congruences(t, CongruenceFamily::UnimodalA, params).passed());
}

TEST(Congruences, MinusConventionFailsAtFirstInstance)
{
    // n = 1: (25 - 1)/24 = 1 and spt(1) = 1 is not divisible by 5.
    CongruenceParams params;
    params.sign = SignConvention::Minus;
    params.max_n = 10;
    const auto need = congruence_table_need(CongruenceFamily::SptPowers, params);
    const auto t = StatTables::build(need, need);
    const auto r = check_congruences(t, CongruenceFamily::SptPowers, params);
    ASSERT_FALSE(r.passed());
    EXPECT_EQ(r.mismatches.front().exponent, 1);
}

TEST(Congruences, HigherPowers)
{
    for (std::int64_t ell : {5, 7}) {
        CongruenceParams params;
        params.ell = ell;
        params.m = 2;
        params.max_n = ell == 5 ? 200 : 50;
        const auto need = congruence_table_need(CongruenceFamily::SptPowers, params);
        const auto t = StatTables::build(need, 1);
        const auto r = check_congruences(t, CongruenceFamily::SptPowers, params);
        EXPECT_TRUE(r.passed()) << ell;
        EXPECT_GT(r.compared, 0) << ell;
    }
}

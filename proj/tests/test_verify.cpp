#include <gtest/gtest.h>

#include "qspt/verify.hpp"

using namespace qspt;

TEST(Verify, EveryCheckPassesOnSmallParameters)
{
    CheckOptions o;
    o.max_n = 12;
    o.window = 240;
    for (const auto& [name, fn] : check_registry()) {
        // The first l = 5 power instance sits at n = 74.
        o.max_n = (name == "cor1_4" || name == "congruences") ? 80 : 12;
        const auto r = fn(o);
        EXPECT_TRUE(r.passed()) << name;
        EXPECT_GT(r.compared, 0) << name;
    }
}

TEST(Verify, UnknownCheck)
{
    EXPECT_THROW(run_check("thm9_9", CheckOptions{}), UnknownName);
}

TEST(Verify, MinusConventionFails)
{
    CheckOptions o;
    o.sign = SignConvention::Minus;
    EXPECT_FALSE(run_check("congruences", o).passed());
    EXPECT_FALSE(run_check("cor1_4", o).passed());
}

TEST(Verify, HeckeRejectsComposite)
{
    CheckOptions o;
    o.ell = 9;
    EXPECT_THROW(run_check("thm1_1", o), BadModulus);
}

TEST(Verify, ItemizedLinesPresent)
{
    CheckOptions o;
    o.max_n = 2;
    const auto r = run_check("cor1_5", o);
    ASSERT_TRUE(r.passed());
    int headers = 0;
    for (const auto& line : r.details) {
        headers += line.rfind("c(", 0) == 0 ? 1 : 0;
    }
    EXPECT_EQ(headers, 4);
    EXPECT_EQ(r.details.front(), "c(1) = (1/1)((2) + (15708) + (181125) + (49)) = 196884");
}

TEST(Verify, DefaultHeckeWindows)
{
    EXPECT_EQ(default_hecke_window(5), 4800);
    EXPECT_EQ(default_hecke_window(7), 2400);
    EXPECT_EQ(default_hecke_window(11), 1200);
}

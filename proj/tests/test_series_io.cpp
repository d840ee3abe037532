#include <gtest/gtest.h>

#include <filesystem>
#include <random>

#include "qspt/modular_forms.hpp"
#include "qspt/report.hpp"
#include "qspt/series_io.hpp"

using namespace qspt;

TEST(SeriesIo, Layout)
{
    const LaurentSeries f(24, -1, 47, {Rational(1), make_rational(-5, 12)});
    const auto j = series_to_json(f, "demo");
    EXPECT_EQ(j.dump(),
              R"({"name":"demo","stride":24,"offset":23,"valuation":-1,"precision":47,)"
              R"("coefficients":[["1","1"],["-5","12"]]})");
}

TEST(SeriesIo, RoundTripForms)
{
    for (const auto& name : FormRegistry::standard().names()) {
        const auto f = FormRegistry::standard().build(name, 60);
        const auto text = series_to_string(f, name);
        const auto back = series_from_string(text);
        EXPECT_EQ(back.name, name);
        EXPECT_EQ(back.series, f) << name;
        EXPECT_EQ(series_to_string(back.series, name), text) << name;
    }
}

TEST(SeriesIoProperty, RoundTripRandom)
{
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> small(-30, 30);
    for (int trial = 0; trial < 100; ++trial) {
        const std::int64_t stride = 1 + (trial % 5);
        const std::int64_t val = small(rng);
        std::vector<Rational> cs(static_cast<std::size_t>(1 + trial % 9));
        for (auto& c : cs) {
            c = make_rational(small(rng), 1 + std::abs(small(rng)));
        }
        cs[0] = make_rational(1 + std::abs(small(rng)), 7);
        const LaurentSeries f(stride, val, val + stride * static_cast<std::int64_t>(cs.size()), cs);
        EXPECT_EQ(series_from_string(series_to_string(f, "x")).series, f);
    }
}

TEST(SeriesIo, EmptySeriesRoundTrip)
{
    const auto z = LaurentSeries::zero(47, 24, 23);
    const auto back = series_from_string(series_to_string(z, "z")).series;
    EXPECT_TRUE(back.empty());
    EXPECT_EQ(back.precision(), 47);
    EXPECT_EQ(back.stride(), 24);
    EXPECT_EQ(back.offset(), 23);
}

TEST(SeriesIo, RejectsMalformed)
{
    EXPECT_THROW(series_from_string("{"), IoError);
    EXPECT_THROW(series_from_string(R"({"name":"x"})"), IoError);
    const std::string base = R"({"name":"x","stride":1,"offset":0,"valuation":0,"precision":1,"coefficients":)";
    EXPECT_THROW(series_from_string(base + R"([["2","4"]]})"), IoError);
    EXPECT_THROW(series_from_string(base + R"([["1","0"]]})"), IoError);
    EXPECT_THROW(series_from_string(base + R"([["1","-3"]]})"), IoError);
    EXPECT_THROW(series_from_string(base + R"([["abc","1"]]})"), IoError);
    EXPECT_NO_THROW(series_from_string(base + R"([["1","3"]]})"));
}

TEST(SeriesIo, AtomicFileWrite)
{
    const auto dir = std::filesystem::temp_directory_path() / "qspt_io_test";
    std::filesystem::create_directories(dir);
    const auto path = dir / "j.json";
    const auto j = j_series(30);
    write_series_file(path, j, "j");
    EXPECT_FALSE(std::filesystem::exists(dir / "j.json.tmp"));
    EXPECT_EQ(read_series_file(path).series, j);
    EXPECT_THROW(read_series_file(dir / "missing.json"), IoError);
    std::filesystem::remove_all(dir);
}

TEST(Report, JsonShape)
{
    VerificationReport r;
    r.check = "demo";
    r.set("ell", 5);
    r.window_lo = -1;
    r.window_hi = 10;
    r.expect_equal(3, Rational(1), Rational(1));
    r.expect_equal(4, Rational(1), make_rational(1, 2));
    const auto j = report_to_json(r);
    EXPECT_EQ(j["status"], "fail");
    EXPECT_EQ(j["compared"], 2);
    EXPECT_EQ(j["mismatches"][0]["exponent"], 4);
    EXPECT_EQ(j["mismatches"][0]["rhs"], "1/2");
    EXPECT_EQ(j["parameters"]["ell"], "5");
}

TEST(Report, CompareSeriesNeedsPrecision)
{
    VerificationReport r;
    const auto f = LaurentSeries::from_list(0, 3, {1, 2, 3});
    EXPECT_THROW(compare_series(r, f, f, 0, 4), OutOfPrecision);
    compare_series(r, f, f, 0, 3);
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.compared, 3);
}

TEST(PolynomialJson, Layout)
{
    const auto b = b_polynomials(3);
    const auto j = polynomial_to_json("B", 3, b[3]);
    EXPECT_EQ(j.dump(), R"({"family":"B","index":3,"coefficients":["357395","-1489","1"]})");
    const auto f = faber_polynomials(2);
    EXPECT_EQ(polynomial_to_json("J", 2, f[2]).dump(), R"({"family":"J","index":2,"coefficients":["159768","-1488","1"]})");
}

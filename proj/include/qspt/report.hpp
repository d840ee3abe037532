#pragma once

// Structured pass/fail record for one verification run.

#include <chrono>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qspt/arith.hpp"
#include "qspt/series.hpp"

namespace qspt {

struct Mismatch {
    std::int64_t exponent;
    Rational lhs;
    Rational rhs;
};

struct VerificationReport {
    std::string check;
    std::map<std::string, std::string> parameters;
    std::int64_t window_lo = 0;
    std::int64_t window_hi = 0; // exclusive
    std::vector<Mismatch> mismatches;
    std::vector<std::string> details;
    std::int64_t runtime_ms = 0;
    // Number of comparisons that were actually made.
    std::int64_t compared = 0;

    bool passed() const noexcept { return mismatches.empty(); }

    void set(const std::string& key, const std::string& value) { parameters[key] = value; }
    void set(const std::string& key, std::int64_t value) { parameters[key] = std::to_string(value); }

    void expect_equal(std::int64_t exponent, const Rational& lhs, const Rational& rhs)
    {
        ++compared;
        if (lhs != rhs) {
            mismatches.push_back({exponent, lhs, rhs});
        }
    }

    /// Folds another report's comparisons into this one, tagging details with its name.
    void absorb(const VerificationReport& other)
    {
        compared += other.compared;
        mismatches.insert(mismatches.end(), other.mismatches.begin(), other.mismatches.end());
        details.push_back(other.check + ": " + (other.passed() ? "pass" : "FAIL") + " (" +
                          std::to_string(other.compared) + " comparisons)");
        for (const auto& d : other.details) {
            details.push_back("  " + d);
        }
    }
};

/// Compares f and g at every exponent in [lo, hi); both must be known there.
inline void compare_series(VerificationReport& report, const LaurentSeries& f, const LaurentSeries& g,
                           std::int64_t lo, std::int64_t hi)
{
    if (f.precision() < hi || g.precision() < hi) {
        throw OutOfPrecision("compare_series: window exceeds available precision");
    }
    std::int64_t step = std::gcd(f.stride(), g.stride());
    if (!f.empty() && !g.empty()) {
        step = std::gcd(step, f.valuation() - g.valuation());
    }
    std::int64_t anchor = !f.empty() ? f.valuation() : (!g.empty() ? g.valuation() : lo);
    for (std::int64_t e = detail::align_up(lo, step, pos_mod(anchor, step)); e < hi; e += step) {
        report.expect_equal(e, f.coeff(e), g.coeff(e));
    }
}

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    std::int64_t elapsed_ms() const
    {
        return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

inline nlohmann::ordered_json report_to_json(const VerificationReport& r)
{
    nlohmann::ordered_json j;
    j["check"] = r.check;
    j["parameters"] = nlohmann::ordered_json(r.parameters);
    j["window"] = {r.window_lo, r.window_hi};
    j["status"] = r.passed() ? "pass" : "fail";
    j["compared"] = r.compared;
    auto mm = nlohmann::ordered_json::array();
    for (const auto& m : r.mismatches) {
        mm.push_back({{"exponent", m.exponent}, {"lhs", m.lhs.get_str()}, {"rhs", m.rhs.get_str()}});
    }
    j["mismatches"] = std::move(mm);
    j["details"] = r.details;
    j["runtime_ms"] = r.runtime_ms;
    return j;
}

} // namespace qspt

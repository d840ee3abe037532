#pragma once

// JSON interchange for LaurentSeries:
//   {"name", "stride", "offset", "valuation", "precision",
//    "coefficients": [[numerator, denominator], ...]}
// with decimal-string numerators/denominators in increasing exponent order.

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "qspt/error.hpp"
#include "qspt/j_basis.hpp"
#include "qspt/series.hpp"

namespace qspt {

inline nlohmann::ordered_json series_to_json(const LaurentSeries& f, const std::string& name)
{
    nlohmann::ordered_json j;
    j["name"] = name;
    j["stride"] = f.stride();
    j["offset"] = f.offset();
    j["valuation"] = f.valuation();
    j["precision"] = f.precision();
    auto arr = nlohmann::ordered_json::array();
    for (const auto& c : f.coefficients()) {
        arr.push_back({c.get_num().get_str(), c.get_den().get_str()});
    }
    j["coefficients"] = std::move(arr);
    return j;
}

/// {"family": "B"|"J", "index": m, "coefficients": [...]}, ascending degree.
inline nlohmann::ordered_json polynomial_to_json(const std::string& family, std::int64_t index, const IntPolynomial& p)
{
    nlohmann::ordered_json j;
    j["family"] = family;
    j["index"] = index;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& c : p.coefficients()) {
        arr.push_back(c.get_str());
    }
    j["coefficients"] = std::move(arr);
    return j;
}

struct NamedSeries {
    std::string name;
    LaurentSeries series;
};

inline NamedSeries series_from_json(const nlohmann::ordered_json& j)
{
    try {
        const auto stride = j.at("stride").get<std::int64_t>();
        const auto offset = j.at("offset").get<std::int64_t>();
        const auto valuation = j.at("valuation").get<std::int64_t>();
        const auto precision = j.at("precision").get<std::int64_t>();
        std::vector<Rational> cs;
        for (const auto& pair : j.at("coefficients")) {
            BigInt num(pair.at(0).get<std::string>());
            BigInt den(pair.at(1).get<std::string>());
            if (den <= 0) {
                throw IoError("series JSON: non-positive denominator");
            }
            Rational r(num, den);
            r.canonicalize();
            if (r.get_num() != num || r.get_den() != den) {
                throw IoError("series JSON: coefficient is not in lowest terms");
            }
            cs.push_back(std::move(r));
        }
        LaurentSeries s = cs.empty() ? LaurentSeries::zero(precision, stride, offset)
                                     : LaurentSeries(stride, valuation, precision, std::move(cs));
        if (s.offset() != pos_mod(offset, stride) || s.valuation() != valuation) {
            throw IoError("series JSON: offset/valuation are inconsistent");
        }
        return {j.at("name").get<std::string>(), std::move(s)};
    } catch (const nlohmann::json::exception& e) {
        throw IoError(std::string("series JSON: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw IoError(std::string("series JSON: ") + e.what());
    }
}

inline std::string series_to_string(const LaurentSeries& f, const std::string& name)
{
    return series_to_json(f, name).dump() + "\n";
}

inline NamedSeries series_from_string(const std::string& text)
{
    nlohmann::ordered_json j;
    try {
        j = nlohmann::ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw IoError(std::string("series JSON: ") + e.what());
    }
    return series_from_json(j);
}

inline NamedSeries read_series_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return series_from_string(buf.str());
}

/// Writes to a sibling temporary file and renames it into place.
inline void write_file_atomic(const std::filesystem::path& path, const std::string& contents)
{
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw IoError("cannot write " + tmp.string());
        }
        out << contents;
        if (!out) {
            throw IoError("short write to " + tmp.string());
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        throw IoError("cannot rename " + tmp.string() + ": " + ec.message());
    }
}

inline void write_series_file(const std::filesystem::path& path, const LaurentSeries& f, const std::string& name)
{
    write_file_atomic(path, series_to_string(f, name));
}

} // namespace qspt

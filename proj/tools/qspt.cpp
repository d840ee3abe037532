// qspt: compute q-series and partition tables, and run verification checks.
//
//   qspt series --name NAME --prec P [--out FILE]
//   qspt table  --name {p,spt,a,ustar,s,c_formula} --max-n K [--format csv|json] [--out FILE]
//   qspt poly   --family B|J --index M [--out FILE]
//   qspt verify CHECK [--ell L] [--m M] [--max-n K] [--window W] [--sign-convention plus|minus]
//
// Series are cached under $QSPT_CACHE (default ./.qspt-cache), one file per name.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qspt/hecke.hpp"
#include "qspt/series_io.hpp"
#include "qspt/verify.hpp"

namespace fs = std::filesystem;
using namespace qspt;

namespace {

// "m_ell:5" -> ("m_ell", 5); plain names have no argument.
std::pair<std::string, std::optional<std::int64_t>> split_name(const std::string& name)
{
    const auto colon = name.find(':');
    if (colon == std::string::npos) {
        return {name, std::nullopt};
    }
    const std::string arg = name.substr(colon + 1);
    std::size_t used = 0;
    std::int64_t value = 0;
    try {
        value = std::stoll(arg, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != arg.size()) {
        throw UnknownName("bad series argument in '" + name + "'");
    }
    return {name.substr(0, colon), value};
}

LaurentSeries build_series(const std::string& name, std::int64_t precision)
{
    if (precision < 1) {
        throw std::invalid_argument("--prec must be >= 1");
    }
    const auto& registry = FormRegistry::standard();
    if (registry.contains(name)) {
        return registry.build(name, precision);
    }
    const auto [base, arg] = split_name(name);
    if (!arg && (base == "mplus" || base == "spt_gen24")) {
        const auto t = StatTables::build(m_plus_table_need(precision), 1);
        return base == "mplus" ? m_plus(t, precision) : spt_gen24(t, precision);
    }
    if (arg && (base == "m_ell" || base == "m_ell_closed" || base == "r_ell")) {
        const HeckeContext ctx(*arg);
        if (base == "m_ell") {
            const auto t = StatTables::build(m_ell_table_need(ctx.ell(), precision), 1);
            return m_ell(ctx, t, precision);
        }
        return base == "m_ell_closed" ? m_ell_closed_form(ctx, precision) : r_ell_series(ctx, precision);
    }
    throw UnknownName("unknown series '" + name + "'");
}

fs::path cache_dir()
{
    const char* env = std::getenv("QSPT_CACHE");
    return fs::path(env != nullptr && *env != '\0' ? env : ".qspt-cache");
}

fs::path cache_file(const std::string& name)
{
    std::string safe = name;
    for (char& c : safe) {
        if (c == ':' || c == '/' || c == '\\') {
            c = '_';
        }
    }
    return cache_dir() / (safe + ".json");
}

// Serves from the cache when a stored copy reaches `precision`; otherwise
// computes and stores. A corrupt cache entry is recomputed.
LaurentSeries cached_series(const std::string& name, std::int64_t precision)
{
    const fs::path file = cache_file(name);
    if (fs::exists(file)) {
        try {
            auto stored = read_series_file(file);
            if (stored.name == name && stored.series.precision() >= precision) {
                return truncate(stored.series, precision);
            }
        } catch (const IoError& e) {
            std::cerr << "qspt: ignoring cache entry " << file << ": " << e.what() << "\n";
        }
    }
    auto f = build_series(name, precision);
    std::error_code ec;
    fs::create_directories(cache_dir(), ec);
    if (!ec) {
        try {
            write_series_file(file, f, name);
        } catch (const IoError& e) {
            std::cerr << "qspt: cache write failed: " << e.what() << "\n";
        }
    }
    return f;
}

void emit(const std::string& text, const std::string& out)
{
    if (out.empty()) {
        std::cout << text;
    } else {
        write_file_atomic(out, text);
    }
}

std::vector<std::string> table_values(const std::string& name, std::int64_t max_n)
{
    std::vector<std::string> values;
    if (name == "s") {
        for (std::int64_t n = 1; n <= max_n; ++n) {
            values.push_back(std::to_string(s_fn(n)));
        }
        return values;
    }
    if (name == "c_formula") {
        const auto t = StatTables::build(25 * max_n - 1, 1);
        for (std::int64_t n = 1; n <= max_n; ++n) {
            values.push_back(c_formula(t, n).get_str());
        }
        return values;
    }
    const bool unimodal = name == "a" || name == "ustar";
    const auto t = StatTables::build(max_n, unimodal ? max_n : 0);
    for (std::int64_t n = 1; n <= max_n; ++n) {
        const BigInt& v = name == "p" ? t.p(n) : name == "spt" ? t.spt(n) : name == "a" ? t.a(n) : t.ustar(n);
        values.push_back(v.get_str());
    }
    return values;
}

std::string render_table(const std::string& name, const std::vector<std::string>& values, const std::string& format)
{
    if (format == "json") {
        nlohmann::ordered_json j;
        j["name"] = name;
        j["max_n"] = values.size();
        auto rows = nlohmann::ordered_json::array();
        for (std::size_t k = 0; k < values.size(); ++k) {
            rows.push_back({{"n", k + 1}, {"value", values[k]}});
        }
        j["values"] = std::move(rows);
        return j.dump(2) + "\n";
    }
    std::ostringstream csv;
    csv << "n,value\n";
    for (std::size_t k = 0; k < values.size(); ++k) {
        csv << (k + 1) << "," << values[k] << "\n";
    }
    return csv.str();
}

void print_summary(const VerificationReport& r)
{
    std::cerr << r.check << ": " << (r.passed() ? "PASS" : "FAIL") << " (" << r.compared << " comparisons, "
              << r.mismatches.size() << " mismatches, " << r.runtime_ms << " ms)\n";
    for (const auto& line : r.details) {
        std::cerr << "  " << line << "\n";
    }
    std::size_t shown = 0;
    for (const auto& m : r.mismatches) {
        if (shown++ == 10) {
            std::cerr << "  ...\n";
            break;
        }
        std::cerr << "  mismatch at " << m.exponent << ": " << m.lhs.get_str() << " != " << m.rhs.get_str() << "\n";
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"q-series, spt and Hecke identity toolkit"};
    app.require_subcommand(1);

    std::string series_name, series_out;
    std::int64_t series_prec = 0;
    auto* series = app.add_subcommand("series", "print a q-series as JSON");
    series->add_option("--name", series_name, "series name")->required();
    series->add_option("--prec", series_prec, "exclusive exponent bound")->required();
    series->add_option("--out", series_out, "output file (default stdout)");

    std::string table_name, table_format = "csv", table_out;
    std::int64_t table_max = 0;
    auto* table = app.add_subcommand("table", "print a table of arithmetic values for n = 1..max-n");
    table->add_option("--name", table_name)
        ->required()
        ->check(CLI::IsMember({"p", "spt", "a", "ustar", "s", "c_formula"}));
    table->add_option("--max-n", table_max)->required()->check(CLI::Range(std::int64_t{1}, std::int64_t{1000000}));
    table->add_option("--format", table_format)->check(CLI::IsMember({"csv", "json"}));
    table->add_option("--out", table_out, "output file (default stdout)");

    std::string poly_family, poly_out;
    std::int64_t poly_index = 0;
    auto* poly = app.add_subcommand("poly", "print B_m or the Faber polynomial J_m as JSON");
    poly->add_option("--family", poly_family)->required()->check(CLI::IsMember({"B", "J"}));
    poly->add_option("--index", poly_index)->required()->check(CLI::Range(std::int64_t{0}, std::int64_t{2000}));
    poly->add_option("--out", poly_out, "output file (default stdout)");

    std::string check_name, sign = "plus";
    CheckOptions options;
    std::int64_t ell = 0, m = 0, max_n = 0, window = 0;
    auto* verify = app.add_subcommand("verify", "run a named check; JSON report on stdout");
    std::vector<std::string> check_names;
    for (const auto& [name, _] : check_registry()) {
        check_names.push_back(name);
    }
    verify->add_option("check", check_name)->required()->check(CLI::IsMember(check_names));
    auto* ell_opt = verify->add_option("--ell", ell);
    auto* m_opt = verify->add_option("--m", m);
    auto* max_opt = verify->add_option("--max-n", max_n);
    auto* window_opt = verify->add_option("--window", window);
    verify->add_option("--sign-convention", sign)->check(CLI::IsMember({"plus", "minus"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (*series) {
            const auto f = cached_series(series_name, series_prec);
            emit(series_to_string(f, series_name), series_out);
            return 0;
        }
        if (*table) {
            emit(render_table(table_name, table_values(table_name, table_max), table_format), table_out);
            return 0;
        }
        if (*poly) {
            if (poly_family == "B" && poly_index < 1) {
                throw std::invalid_argument("B_m needs m >= 1");
            }
            const auto ps = poly_family == "B" ? b_polynomials(poly_index) : faber_polynomials(poly_index);
            const auto& p = ps[static_cast<std::size_t>(poly_index)];
            emit(polynomial_to_json(poly_family, poly_index, p).dump() + "\n", poly_out);
            return 0;
        }
        if (*ell_opt) {
            options.ell = ell;
        }
        if (*m_opt) {
            options.m = m;
        }
        if (*max_opt) {
            options.max_n = max_n;
        }
        if (*window_opt) {
            options.window = window;
        }
        options.sign = sign == "minus" ? SignConvention::Minus : SignConvention::Plus;
        const auto report = run_check(check_name, options);
        std::cout << report_to_json(report).dump(2) << "\n";
        print_summary(report);
        return report.passed() ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "qspt: " << e.what() << "\n";
        return 2;
    }
}

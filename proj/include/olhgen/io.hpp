#pragma once

// CSV and JSON serialization of designs. CSV rows are runs; values are
// doubled integers or, in half units, true levels with one fractional digit.

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "olhgen/catalog.hpp"
#include "olhgen/core.hpp"

namespace olhgen {

enum class Units { doubled, half };
enum class Format { csv, json };

inline std::string_view to_string(Units u) noexcept { return u == Units::doubled ? "doubled" : "half"; }

inline std::string format_level(Level doubled, Units units) {
    if (units == Units::doubled) return std::to_string(doubled);
    const Level whole = doubled / 2;
    const bool half = doubled % 2 != 0;
    std::string s;
    if (doubled < 0) s += '-';
    s += std::to_string(whole < 0 ? -whole : whole);
    s += half ? ".5" : ".0";
    return s;
}

inline void write_csv(std::ostream& out, const DesignMatrix& d, Units units, bool header = false) {
    if (header) {
        for (std::size_t j = 0; j < d.factors(); ++j) out << (j ? "," : "") << 'f' << (j + 1);
        out << '\n';
    }
    for (std::size_t i = 0; i < d.runs(); ++i) {
        for (std::size_t j = 0; j < d.factors(); ++j) out << (j ? "," : "") << format_level(d(i, j), units);
        out << '\n';
    }
}

inline nlohmann::json recipe_to_json(const RecipePtr& r) {
    if (!r) return nullptr;
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [k, v] : r->params) params[k] = v;
    nlohmann::json kids = nlohmann::json::array();
    for (const auto& c : r->children) kids.push_back(recipe_to_json(c));
    return {{"kind", to_string(r->kind)}, {"name", r->name}, {"params", params}, {"children", kids}};
}

inline std::string design_source(const DesignMatrix& d) {
    const auto& r = d.recipe();
    if (r && r->kind == RecipeKind::search) return "search";
    if (r && r->kind == RecipeKind::seed && r->name == "catalog")
        if (auto e = Catalog::instance().best(static_cast<std::size_t>(r->param("n"))); e && e->m == d.factors())
            return std::string(to_string(e->source));
    return "derived-recipe";
}

/// Catalog schema plus units, metrics and the recipe tree.
inline nlohmann::json design_to_json(const DesignMatrix& d, Units units) {
    std::vector<std::vector<Level>> rows;
    for (std::size_t i = 0; i < d.runs(); ++i) {
        auto r = d.doubled().row(i);
        rows.emplace_back(r.begin(), r.end());
    }
    nlohmann::json j = {{"n", d.runs()},
                        {"m", d.factors()},
                        {"units", to_string(units)},
                        {"doubled", rows},
                        {"source", design_source(d)},
                        {"recipe", recipe_to_json(d.recipe())}};
    if (d.recipe()) j["recipe_summary"] = d.recipe()->summary();
    try {
        const auto rep = correlation(d);
        j["rho_max"] = rep.rho_max;
        j["rho_sq"] = rep.rho_sq;
    } catch (const Error&) {
        j["rho_max"] = nullptr;
        j["rho_sq"] = nullptr;
    }
    if (units == Units::half) {
        std::vector<std::vector<double>> levels;
        for (const auto& r : rows) {
            std::vector<double> v;
            for (auto x : r) v.push_back(static_cast<double>(x) / 2.0);
            levels.push_back(std::move(v));
        }
        j["levels"] = levels;
    }
    return j;
}

inline void write_design(std::ostream& out, const DesignMatrix& d, Format format, Units units, bool header = false) {
    if (format == Format::csv)
        write_csv(out, d, units, header);
    else
        out << design_to_json(d, units).dump(2) << '\n';
}

namespace detail {

[[noreturn]] inline void parse_failure(std::size_t line, std::size_t column, const std::string& what) {
    fail(Errc::parse_error, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
}

inline std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

/// Doubled value of a CSV field; `half` fields must be multiples of 0.5.
inline Level parse_field(const std::string& field, bool half, std::size_t line, std::size_t column) {
    const std::string f = trim(field);
    if (f.empty()) parse_failure(line, column, "empty field");
    if (!half) {
        Level v = 0;
        auto [p, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
        if (ec != std::errc{} || p != f.data() + f.size()) parse_failure(line, column, "'" + f + "' is not an integer");
        return v;
    }
    std::size_t i = 0;
    bool neg = false;
    if (f[i] == '-' || f[i] == '+') neg = f[i++] == '-';
    Level whole = 0;
    const std::size_t digits_start = i;
    while (i < f.size() && std::isdigit(static_cast<unsigned char>(f[i]))) whole = whole * 10 + (f[i++] - '0');
    if (i == digits_start) parse_failure(line, column, "'" + f + "' is not a number");
    Level frac = 0;
    if (i < f.size() && f[i] == '.') {
        ++i;
        std::string tail;
        while (i < f.size() && std::isdigit(static_cast<unsigned char>(f[i]))) tail += f[i++];
        while (!tail.empty() && tail.back() == '0') tail.pop_back();
        if (tail == "5")
            frac = 1;
        else if (!tail.empty())
            parse_failure(line, column, "'" + f + "' is not a multiple of 0.5");
    }
    if (i != f.size()) parse_failure(line, column, "'" + f + "' is not a number");
    const Level doubled = 2 * whole + frac;
    return neg ? -doubled : doubled;
}

inline std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

/// Every field starts with a letter.
inline bool looks_like_header(const std::vector<std::string>& fields) {
    for (const auto& f : fields) {
        const auto t = trim(f);
        if (t.empty() || !std::isalpha(static_cast<unsigned char>(t[0]))) return false;
    }
    return true;
}

}  // namespace detail

/// Reads CSV in either unit; a decimal point anywhere selects half units.
inline DesignMatrix read_csv(std::istream& in) {
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    const bool half = std::any_of(lines.begin(), lines.end(), [](const std::string& l) { return l.find('.') != std::string::npos; });
    std::vector<std::vector<Level>> rows;
    std::size_t width = 0;
    for (std::size_t li = 0; li < lines.size(); ++li) {
        if (detail::trim(lines[li]).empty()) continue;
        const auto fields = detail::split_csv(lines[li]);
        if (rows.empty() && width == 0 && detail::looks_like_header(fields)) {
            width = fields.size();
            continue;
        }
        if (width == 0) width = fields.size();
        if (fields.size() != width)
            detail::parse_failure(li + 1, 1, "expected " + std::to_string(width) + " fields, found " +
                                                 std::to_string(fields.size()));
        std::vector<Level> row;
        std::size_t col = 1;
        for (const auto& f : fields) {
            row.push_back(detail::parse_field(f, half, li + 1, col));
            col += f.size() + 1;
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) detail::parse_failure(lines.size() + 1, 1, "no data rows");
    return DesignMatrix::from_rows(rows);
}

inline DesignMatrix read_json(std::istream& in) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& ex) {
        fail(Errc::parse_error, std::string("JSON: ") + ex.what());
    }
    try {
        const auto rows = j.at("doubled").get<std::vector<std::vector<Level>>>();
        if (rows.empty()) fail(Errc::parse_error, "JSON: 'doubled' is empty");
        for (const auto& r : rows)
            if (r.size() != rows.front().size()) fail(Errc::parse_error, "JSON: ragged 'doubled' rows");
        return DesignMatrix::from_rows(rows);
    } catch (const nlohmann::json::exception& ex) {
        fail(Errc::parse_error, std::string("JSON: ") + ex.what());
    }
}

/// Reads a CSV or JSON design; JSON is recognized by its first character.
inline DesignMatrix read_design(std::istream& in) {
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    const auto first = text.find_first_not_of(" \t\r\n");
    std::istringstream body(text);
    if (first != std::string::npos && text[first] == '{') return read_json(body);
    return read_csv(body);
}

inline DesignMatrix read_design_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::invalid_argument, "cannot open " + path);
    return read_design(in);
}

}  // namespace olhgen

#pragma once

// Verified small orthogonal Latin hypercubes: the embedded catalog plus an
// optional on-disk cache of user-found designs (directory named by
// OLHGEN_CACHE, one JSON object per file).

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "olhgen/catalog_data.hpp"
#include "olhgen/core.hpp"

namespace olhgen {

enum class CatalogSource { paper_table, search, derived_recipe };

inline std::string_view to_string(CatalogSource s) noexcept {
    switch (s) {
        case CatalogSource::paper_table: return "paper-table";
        case CatalogSource::search: return "search";
        case CatalogSource::derived_recipe: return "derived-recipe";
    }
    return "unknown";
}

inline CatalogSource parse_catalog_source(std::string_view s) {
    if (s == "paper-table") return CatalogSource::paper_table;
    if (s == "search") return CatalogSource::search;
    if (s == "derived-recipe") return CatalogSource::derived_recipe;
    fail(Errc::parse_error, "unknown catalog source '" + std::string(s) + "'");
}

struct CatalogEntry {
    std::size_t n = 0;
    std::size_t m = 0;
    DesignMatrix matrix;
    CatalogSource source = CatalogSource::search;
};

/// Largest m for which an OLH(n, m) was found by column search, n = 4..21
/// (16 is the published 12-column design).
inline const std::map<std::size_t, std::size_t>& catalog_widths() {
    static const std::map<std::size_t, std::size_t> targets = {
        {4, 2},  {5, 2},  {7, 3},  {8, 4},  {9, 5},  {11, 7}, {12, 6},
        {13, 6}, {15, 6}, {16, 12}, {17, 6}, {19, 6}, {20, 6}, {21, 6}};
    return targets;
}

namespace detail {

inline nlohmann::json entry_to_json(const CatalogEntry& e) {
    std::vector<std::vector<Level>> rows;
    for (std::size_t i = 0; i < e.matrix.runs(); ++i) {
        auto r = e.matrix.doubled().row(i);
        rows.emplace_back(r.begin(), r.end());
    }
    return {{"n", e.n}, {"m", e.m}, {"doubled", rows}, {"source", to_string(e.source)}};
}

inline CatalogEntry entry_from_json(const nlohmann::json& j, const std::string& where) {
    try {
        CatalogEntry e;
        e.n = j.at("n").get<std::size_t>();
        e.m = j.at("m").get<std::size_t>();
        e.source = parse_catalog_source(j.at("source").get<std::string>());
        const auto rows = j.at("doubled").get<std::vector<std::vector<Level>>>();
        if (rows.size() != e.n) fail(Errc::parse_error, where + ": row count differs from n");
        for (const auto& r : rows)
            if (r.size() != e.m) fail(Errc::parse_error, where + ": row length differs from m");
        e.matrix = DesignMatrix::from_rows(
            rows, make_recipe(RecipeKind::seed, "catalog",
                              {{"n", static_cast<std::int64_t>(e.n)}, {"m", static_cast<std::int64_t>(e.m)}}));
        return e;
    } catch (const nlohmann::json::exception& ex) {
        fail(Errc::parse_error, where + ": " + ex.what());
    }
}

inline void validate_entry(const CatalogEntry& e, const std::string& where) {
    if (!is_latin_hypercube(e.matrix)) fail(Errc::condition_violation, where + ": not a Latin hypercube");
    if (!is_orthogonal(e.matrix)) fail(Errc::condition_violation, where + ": columns are not orthogonal");
}

}  // namespace detail

class Catalog {
public:
    /// The embedded designs, each checked against its expected width.
    static Catalog embedded() {
        Catalog c;
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(catalog_data::kEmbeddedJson);
        } catch (const nlohmann::json::exception& ex) {
            fail(Errc::parse_error, std::string("embedded catalog: ") + ex.what());
        }
        for (const auto& j : doc) {
            auto e = detail::entry_from_json(j, "embedded catalog");
            const std::string where = "embedded catalog n=" + std::to_string(e.n);
            detail::validate_entry(e, where);
            auto target = catalog_widths().find(e.n);
            if (target == catalog_widths().end() || target->second != e.m)
                fail(Errc::condition_violation, where + ": m=" + std::to_string(e.m) + " disagrees with the expected width");
            c.entries_.emplace(e.n, std::move(e));
        }
        return c;
    }

    /// Embedded designs plus whatever cache_directory() holds. Loaded once.
    static const Catalog& instance() {
        static const Catalog cat = [] {
            Catalog c = embedded();
            if (const auto dir = cache_directory(); std::filesystem::is_directory(dir)) c.load_directory(dir);
            return c;
        }();
        return cat;
    }

    /// OLHGEN_CACHE, else $XDG_CACHE_HOME/olhgen, else ~/.cache/olhgen.
    static std::filesystem::path cache_directory() {
        if (const char* dir = std::getenv("OLHGEN_CACHE"); dir && *dir) return dir;
        if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "olhgen";
        if (const char* home = std::getenv("HOME"); home && *home)
            return std::filesystem::path(home) / ".cache" / "olhgen";
        return std::filesystem::temp_directory_path() / "olhgen";
    }

    /// Adds every olh_*.json file under `dir`; invalid files raise.
    void load_directory(const std::filesystem::path& dir) {
        std::vector<std::filesystem::path> files;
        for (const auto& f : std::filesystem::directory_iterator(dir)) {
            const auto name = f.path().filename().string();
            if (f.is_regular_file() && name.rfind("olh_", 0) == 0 && f.path().extension() == ".json")
                files.push_back(f.path());
        }
        std::sort(files.begin(), files.end());
        for (const auto& p : files) add(read_file(p), p.string());
    }

    void add(CatalogEntry e, const std::string& where = "catalog entry") {
        detail::validate_entry(e, where);
        entries_.emplace(e.n, std::move(e));
    }

    bool contains(std::size_t n) const { return entries_.count(n) != 0; }

    /// The reference-width design for n.
    const CatalogEntry& seed(std::size_t n) const {
        auto target = catalog_widths().find(n);
        auto [lo, hi] = entries_.equal_range(n);
        for (auto it = lo; it != hi; ++it)
            if (target != catalog_widths().end() && it->second.m == target->second) return it->second;
        fail(Errc::not_in_catalog, "no catalog design for n = " + std::to_string(n));
    }

    /// Widest design for n across embedded and cached entries.
    std::optional<CatalogEntry> best(std::size_t n) const {
        std::optional<CatalogEntry> out;
        auto [lo, hi] = entries_.equal_range(n);
        for (auto it = lo; it != hi; ++it)
            if (!out || it->second.m > out->m) out = it->second;
        return out;
    }

    std::vector<std::size_t> run_sizes() const {
        std::vector<std::size_t> out;
        for (const auto& [n, e] : entries_)
            if (out.empty() || out.back() != n) out.push_back(n);
        return out;
    }

    static CatalogEntry read_file(const std::filesystem::path& p) {
        std::ifstream in(p);
        if (!in) fail(Errc::invalid_argument, "cannot open " + p.string());
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& ex) {
            fail(Errc::parse_error, p.string() + ": " + ex.what());
        }
        return detail::entry_from_json(j, p.string());
    }

    /// Writes `olh_{n}x{m}_{seed}.json` under `dir` and returns its path.
    static std::filesystem::path save(const std::filesystem::path& dir, const CatalogEntry& e, std::uint64_t seed) {
        detail::validate_entry(e, "cache entry");
        std::filesystem::create_directories(dir);
        const auto path = dir / ("olh_" + std::to_string(e.n) + "x" + std::to_string(e.m) + "_" +
                                 std::to_string(seed) + ".json");
        const auto tmp = std::filesystem::path(path.string() + ".tmp");
        {
            std::ofstream out(tmp);
            out << detail::entry_to_json(e).dump() << '\n';
            if (!out) fail(Errc::invalid_argument, "cannot write " + tmp.string());
        }
        std::filesystem::rename(tmp, path);
        return path;
    }

private:
    std::multimap<std::size_t, CatalogEntry> entries_;
};

/// Reference-width design for n from the shared catalog.
inline CatalogEntry seed_olh(std::size_t n) { return Catalog::instance().seed(n); }

}  // namespace olhgen

#pragma once

// Columnwise search for small orthogonal and nearly orthogonal Latin
// hypercubes. Columns are added one at a time; a candidate column is moved by
// best pairwise switches and replaced by a fresh random column (an exchange)
// when that stalls.

#include <algorithm>
#include <cstdint>
#include <future>
#include <limits>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "olhgen/core.hpp"

namespace olhgen {

enum class SearchObjective { exact_orthogonal, min_rho_sq };

struct SearchConfig {
    std::uint64_t t1 = 100;  // exchanges per added column
    std::uint64_t t2 = 50;   // independent restarts
    std::uint64_t seed = 1;
    SearchObjective objective = SearchObjective::exact_orthogonal;
    // Switches taken past a local optimum, each the best one not reversing a
    // recent switch. 0 stops at the first local optimum.
    std::uint64_t walk_steps = 300;
    std::uint64_t tabu_tenure = 10;
    // Accepted columns tried at each depth before backtracking. 1 is plain
    // sequential addition.
    std::uint64_t branching = 4;
    unsigned threads = 1;  // restarts run concurrently; results do not depend on it
};

/// Change of <c, x> when entries p and q of c are swapped.
inline std::int64_t switch_delta(std::span<const Level> c, std::span<const Level> x, std::size_t p, std::size_t q) {
    return (c[q] - c[p]) * (x[p] - x[q]);
}

namespace detail {

inline void validate(const SearchConfig& config) {
    if (config.t1 == 0 || config.t2 == 0) fail(Errc::invalid_argument, "search budgets T1 and T2 must be positive");
    if (config.branching == 0) fail(Errc::invalid_argument, "search branching must be positive");
}

struct Candidate {
    Column column;
    std::int64_t objective = std::numeric_limits<std::int64_t>::max();
};

/// Moves `x` by best pairwise switches on sum_j <x, existing_j>^2. Pure
/// descent first, then up to `walk_steps` tabu moves. Returns the best column
/// visited.
inline Candidate improve(Column x, const std::vector<Column>& existing, const SearchConfig& config) {
    const std::size_t n = x.size();
    const std::size_t m = existing.size();
    std::vector<std::int64_t> prod(m);
    std::int64_t obj = 0;
    for (std::size_t j = 0; j < m; ++j) {
        prod[j] = dot(x, existing[j]);
        obj += prod[j] * prod[j];
    }
    Candidate best{x, obj};
    std::vector<std::uint64_t> tabu_until(n * n, 0);
    std::uint64_t walked = 0;
    bool descending = true;
    for (std::uint64_t step = 1; obj != 0; ++step) {
        std::int64_t move_obj = std::numeric_limits<std::int64_t>::max();
        std::size_t move_p = n, move_q = n;
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                std::int64_t trial = 0;
                for (std::size_t j = 0; j < m; ++j) {
                    const std::int64_t s = prod[j] + switch_delta(x, existing[j], p, q);
                    trial += s * s;
                    if (trial >= move_obj) break;
                }
                if (trial >= move_obj) continue;
                if (!descending && trial != 0 && tabu_until[p * n + q] >= step) continue;
                move_obj = trial;
                move_p = p;
                move_q = q;
            }
        if (descending && move_obj >= obj) {
            descending = false;
            if (config.walk_steps == 0) break;
            continue;
        }
        if (!descending && (move_p == n || walked++ == config.walk_steps)) break;
        for (std::size_t j = 0; j < m; ++j) prod[j] += switch_delta(x, existing[j], move_p, move_q);
        std::swap(x[move_p], x[move_q]);
        obj = move_obj;
        tabu_until[move_p * n + move_q] = step + config.tabu_tenure;
        if (obj < best.objective) best = {x, obj};
    }
    return best;
}

inline Column random_column(std::size_t n, std::mt19937_64& rng) {
    Column x = levels_for(n);
    std::shuffle(x.begin(), x.end(), rng);
    return x;
}

inline std::mt19937_64 restart_engine(std::uint64_t seed, std::uint64_t restart) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(restart), static_cast<std::uint32_t>(restart >> 32)};
    return std::mt19937_64(seq);
}

}  // namespace detail

/// Tries to find a column orthogonal to every existing column, starting from
/// up to T1 random columns. With an empty design the first random column is
/// returned.
inline std::optional<Column> add_column(std::size_t n, const std::vector<Column>& existing, const SearchConfig& config,
                                        std::mt19937_64& rng) {
    detail::validate(config);
    if (n == 0) fail(Errc::invalid_argument, "add_column: run count must be positive");
    for (const auto& c : existing)
        if (c.size() != n) fail(Errc::invalid_argument, "add_column: existing column has the wrong length");
    for (std::uint64_t attempt = 0; attempt < config.t1; ++attempt) {
        auto cand = detail::improve(detail::random_column(n, rng), existing, config);
        if (cand.objective == 0) return std::move(cand.column);
    }
    return std::nullopt;
}

inline std::optional<Column> add_column(const DesignMatrix& existing, const SearchConfig& config, std::mt19937_64& rng) {
    std::vector<Column> cols;
    for (std::size_t j = 0; j < existing.factors(); ++j) cols.push_back(existing.column(j));
    return add_column(existing.runs(), cols, config, rng);
}

struct SearchResult {
    DesignMatrix design;  // the full target on success, otherwise the widest prefix found
    bool success = false;
    std::uint64_t restart = 0;
};

namespace detail {

inline DesignMatrix columns_to_design(std::size_t n, const std::vector<Column>& cols, RecipePtr recipe) {
    IntMatrix x(n, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) x(i, j) = cols[j][i];
    return DesignMatrix(std::move(x), std::move(recipe));
}

struct Extender {
    std::size_t n;
    std::size_t m_target;
    const SearchConfig& config;
    std::mt19937_64 rng;
    std::vector<Column> cols;
    std::vector<Column> widest;

    bool extend() {
        if (cols.size() > widest.size()) widest = cols;
        if (cols.size() == m_target) return true;
        const std::uint64_t tries = cols.size() < 2 ? 1 : config.branching;
        for (std::uint64_t b = 0; b < tries; ++b) {
            auto next = add_column(n, cols, config, rng);
            if (!next) return false;
            cols.push_back(std::move(*next));
            if (extend()) return true;
            cols.pop_back();
        }
        return false;
    }
};

/// One restart of the exact search; the first column is the canonical order.
inline std::vector<Column> olh_restart(std::size_t n, std::size_t m_target, const SearchConfig& config,
                                       std::uint64_t restart) {
    Extender ext{n, m_target, config, restart_engine(config.seed, restart), {levels_for(n)}, {}};
    ext.extend();
    return ext.widest;
}

template <typename Fn, typename Done>
auto run_restarts(std::uint64_t t2, unsigned threads, Fn&& fn, Done&& done) {
    using Result = decltype(fn(std::uint64_t{0}));
    std::vector<Result> results;
    const unsigned width = std::max(1u, threads);
    for (std::uint64_t base = 0; base < t2; base += width) {
        const std::uint64_t end = std::min<std::uint64_t>(t2, base + width);
        if (width == 1) {
            results.push_back(fn(base));
        } else {
            std::vector<std::future<Result>> wave;
            for (std::uint64_t r = base; r < end; ++r) wave.push_back(std::async(std::launch::async, fn, r));
            for (auto& f : wave) results.push_back(f.get());
        }
        for (std::uint64_t r = base; r < end; ++r)
            if (done(results[static_cast<std::size_t>(r)])) {
                results.resize(static_cast<std::size_t>(r) + 1);
                return results;
            }
    }
    return results;
}

inline RecipePtr search_recipe(const char* name, std::size_t n, std::size_t m, const SearchConfig& config) {
    return make_recipe(RecipeKind::search, name,
                       {{"n", static_cast<std::int64_t>(n)},
                        {"m", static_cast<std::int64_t>(m)},
                        {"seed", static_cast<std::int64_t>(config.seed)},
                        {"t1", static_cast<std::int64_t>(config.t1)},
                        {"t2", static_cast<std::int64_t>(config.t2)}});
}

}  // namespace detail

/// Searches for an OLH(n, m_target). Deterministic in the config; the lowest
/// successful restart wins.
inline SearchResult search_olh(std::size_t n, std::size_t m_target, const SearchConfig& config) {
    detail::validate(config);
    if (m_target >= 2 && n >= 1 && !olh_exists(n))
        fail(Errc::no_olh_exists, "no orthogonal Latin hypercube with two or more factors exists for n = " +
                                      std::to_string(n));
    if (n < 4) fail(Errc::invalid_argument, "search_olh: need n >= 4");
    if (m_target < 1 || m_target > n - 1) fail(Errc::invalid_argument, "search_olh: need 1 <= m <= n-1");

    auto results = detail::run_restarts(
        config.t2, config.threads, [&](std::uint64_t r) { return detail::olh_restart(n, m_target, config, r); },
        [&](const std::vector<Column>& cols) { return cols.size() == m_target; });

    std::size_t best = 0;
    for (std::size_t r = 0; r < results.size(); ++r)
        if (results[r].size() > results[best].size()) best = r;
    const auto& cols = results[best];
    SearchResult out;
    out.design = detail::columns_to_design(n, cols, detail::search_recipe("olh", n, cols.size(), config));
    out.success = cols.size() == m_target;
    out.restart = best;
    if (!is_olh(out.design)) fail(Errc::condition_violation, "search produced a design that fails exact verification");
    return out;
}

struct NolhResult {
    DesignMatrix design;
    CorrelationReport report;
};

/// Same engine with orthogonality relaxed: each added column is the best among
/// T1 improved starts, and the restart with the smallest total squared inner
/// product wins.
inline NolhResult search_nolh(std::size_t n, std::size_t m_target, const SearchConfig& config) {
    detail::validate(config);
    if (n < 4) fail(Errc::invalid_argument, "search_nolh: need n >= 4");
    if (m_target < 1) fail(Errc::invalid_argument, "search_nolh: need at least one factor");

    struct Restart {
        std::vector<Column> cols;
        std::int64_t total = 0;
    };
    auto one = [&](std::uint64_t r) {
        auto rng = detail::restart_engine(config.seed, r);
        Restart out;
        out.cols.push_back(levels_for(n));
        while (out.cols.size() < m_target) {
            detail::Candidate best;
            for (std::uint64_t attempt = 0; attempt < config.t1; ++attempt) {
                auto cand = detail::improve(detail::random_column(n, rng), out.cols, config);
                if (cand.objective < best.objective) best = std::move(cand);
                if (best.objective == 0) break;
            }
            out.total += best.objective;
            out.cols.push_back(std::move(best.column));
        }
        return out;
    };
    auto results = detail::run_restarts(config.t2, config.threads, one, [](const Restart& r) { return r.total == 0; });
    std::size_t best = 0;
    for (std::size_t r = 1; r < results.size(); ++r)
        if (results[r].total < results[best].total) best = r;

    NolhResult out;
    out.design = detail::columns_to_design(n, results[best].cols, detail::search_recipe("nolh", n, m_target, config));
    out.report = correlation(out.design);
    return out;
}

}  // namespace olhgen

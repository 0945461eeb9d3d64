#pragma once

// Recipes for OLH(n, m) as data, an executor for them, the table of published
// recipes, and a dynamic-programming planner that composes the construction
// rules for any other n.

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "olhgen/catalog.hpp"
#include "olhgen/fold.hpp"
#include "olhgen/hadamard.hpp"
#include "olhgen/kronecker.hpp"
#include "olhgen/stacking.hpp"

namespace olhgen {

/// Plan nodes. Every node carries its output size as params n and m.
namespace recipes {

inline std::size_t runs_of(const RecipePtr& r) { return static_cast<std::size_t>(r->param("n")); }
inline std::size_t width_of(const RecipePtr& r) { return static_cast<std::size_t>(r->param("m")); }

inline Recipe::Params size_params(std::size_t n, std::size_t m) {
    return {{"n", static_cast<std::int64_t>(n)}, {"m", static_cast<std::int64_t>(m)}};
}

inline RecipePtr catalog(std::size_t n, std::size_t m) { return make_recipe(RecipeKind::seed, "catalog", size_params(n, m)); }

/// Reference-width catalog design for n.
inline RecipePtr catalog(std::size_t n) {
    auto t = catalog_widths().find(n);
    if (t == catalog_widths().end()) fail(Errc::not_in_catalog, "no catalog design for n = " + std::to_string(n));
    return catalog(n, t->second);
}

/// Widest fold-over OLH of order n.
inline RecipePtr fold(std::size_t n) { return make_recipe(RecipeKind::seed, "fold", size_params(n, widest_fold_width(n))); }

/// The single canonical column, an OLH(n, 1) for every n.
inline RecipePtr trivial(std::size_t n) { return make_recipe(RecipeKind::seed, "trivial", size_params(n, 1)); }

inline RecipePtr zero_row(std::size_t m) { return make_recipe(RecipeKind::seed, "zero_row", size_params(1, m)); }

inline RecipePtr select(RecipePtr child, std::size_t m) {
    if (m == width_of(child)) return child;
    if (m > width_of(child)) fail(Errc::invalid_argument, "select: more columns than the child provides");
    auto p = size_params(runs_of(child), m);
    return make_recipe(RecipeKind::select, "select", std::move(p), {std::move(child)});
}

/// Fold of order n1 combined with B: n1 n2 runs.
inline RecipePtr theorem1(std::size_t n1, RecipePtr b) {
    auto p = size_params(n1 * runs_of(b), widest_fold_width(n1) * width_of(b));
    p.emplace_back("n1", static_cast<std::int64_t>(n1));
    return make_recipe(RecipeKind::kronecker, "theorem1", std::move(p), {std::move(b)});
}

/// (L, U) pairing on n0^2 runs with a fold of order n0.
inline RecipePtr prop1(RecipePtr b) {
    const std::size_t n0 = runs_of(b);
    auto p = size_params(n0 * n0, 2 * widest_fold_width(n0) * width_of(b));
    return make_recipe(RecipeKind::prop1_pair, "prop1", std::move(p), {std::move(b)});
}

/// Inner block `a` stacked on the shifted outer block built from a fold of
/// order n1 and B.
inline RecipePtr second(RecipePtr a, std::size_t n1, RecipePtr b) {
    const std::size_t nb = n1 * runs_of(b);
    const std::size_t mb = widest_fold_width(n1) * width_of(b);
    if (runs_of(a) == 1) a = zero_row(mb);
    auto p = size_params(runs_of(a) + nb, std::min(width_of(a), mb));
    p.emplace_back("n_a", static_cast<std::int64_t>(runs_of(a)));
    p.emplace_back("n1", static_cast<std::int64_t>(n1));
    return make_recipe(RecipeKind::stack, "second", std::move(p), {std::move(a), std::move(b)});
}

inline RecipePtr first(RecipePtr a, RecipePtr b) {
    auto p = size_params(runs_of(a) + runs_of(b), std::min(width_of(a), width_of(b)));
    return make_recipe(RecipeKind::stack, "first", std::move(p), {std::move(a), std::move(b)});
}

inline RecipePtr theorem3(RecipePtr child, std::size_t factor, bool plus_one = false) {
    auto p = size_params(factor * runs_of(child) + (plus_one ? 1 : 0), factor / 2 * width_of(child));
    p.emplace_back("factor", static_cast<std::int64_t>(factor));
    p.emplace_back("plus_one", plus_one ? 1 : 0);
    return make_recipe(RecipeKind::theorem3, "theorem3", std::move(p), {std::move(child)});
}

}  // namespace recipes

namespace detail {

inline KroneckerPlan fold_plan(std::size_t n1, const DesignMatrix& B, const std::vector<Level>& magnitudes, Level gamma) {
    auto [A, C] = fold_blocks(widest_fold(n1), magnitudes);
    return KroneckerPlan{std::move(A), B, std::move(C), hadamard_columns(B.runs(), B.factors()), gamma};
}

}  // namespace detail

/// Executes a plan. The output carries `r` as its recipe and is verified.
inline DesignMatrix build(const RecipePtr& r) {
    if (!r) fail(Errc::invalid_argument, "build: empty recipe");
    const std::size_t n = recipes::runs_of(r), m = recipes::width_of(r);
    auto child = [&](std::size_t i) {
        if (i >= r->children.size()) fail(Errc::invalid_argument, "build: " + r->summary() + " is missing a child");
        return build(r->children[i]);
    };
    DesignMatrix out;
    if (r->kind == RecipeKind::seed && r->name == "catalog") {
        auto e = Catalog::instance().best(n);
        if (!e || e->m < m)
            fail(Errc::not_in_catalog, "no catalog OLH(" + std::to_string(n) + ", " + std::to_string(m) + ")");
        out = e->matrix.leading_columns(m);
    } else if (r->kind == RecipeKind::seed && r->name == "fold") {
        out = instantiate_fold(widest_fold(n), odd_magnitudes(n / 2));
    } else if (r->kind == RecipeKind::seed && r->name == "trivial") {
        IntMatrix x(n, 1);
        const Column c = levels_for(n);
        for (std::size_t i = 0; i < n; ++i) x(i, 0) = c[i];
        out = DesignMatrix(std::move(x));
    } else if (r->kind == RecipeKind::seed && r->name == "zero_row") {
        out = zero_row(m);
    } else if (r->kind == RecipeKind::select) {
        out = child(0).leading_columns(m);
    } else if (r->kind == RecipeKind::kronecker && r->name == "theorem1") {
        const auto n1 = static_cast<std::size_t>(r->param("n1"));
        const DesignMatrix B = child(0);
        out = theorem1_olh(detail::fold_plan(n1, B, odd_magnitudes(n1 / 2), static_cast<Level>(B.runs())));
    } else if (r->kind == RecipeKind::prop1_pair) {
        const DesignMatrix B = child(0);
        out = prop1_pair(detail::fold_plan(B.runs(), B, odd_magnitudes(B.runs() / 2), static_cast<Level>(B.runs())));
    } else if (r->kind == RecipeKind::stack && r->name == "second") {
        const auto n1 = static_cast<std::size_t>(r->param("n1"));
        const auto na = r->param("n_a");
        const DesignMatrix a = child(0);
        const DesignMatrix B = child(1);
        auto plan = detail::fold_plan(n1, B, shifted_magnitudes(n1 / 2, na, static_cast<Level>(B.runs())), 1);
        const DesignMatrix outer = prop2_shifted(plan, na);
        out = second_stacking(a.leading_columns(m), outer.leading_columns(m));
    } else if (r->kind == RecipeKind::stack && r->name == "first") {
        out = first_stacking(child(0).leading_columns(m), child(1).leading_columns(m));
    } else if (r->kind == RecipeKind::theorem3) {
        out = theorem3_expand(child(0), static_cast<std::size_t>(r->param("factor")), r->param("plus_one") != 0);
    } else {
        fail(Errc::invalid_argument, "build: cannot execute recipe " + r->summary());
    }
    if (out.runs() != n || out.factors() != m)
        throw Error(Errc::condition_violation, "post",
                    "build: " + r->summary() + " produced " + std::to_string(out.runs()) + "x" +
                        std::to_string(out.factors()));
    if (!is_olh(out)) throw Error(Errc::condition_violation, "post", "build: " + r->summary() + " is not an OLH");
    return out.with_recipe(r);
}

/// Published recipes: the small-run table, the constructions for 23..33, and
/// the multiples of 16 up to 256.
inline const std::map<std::size_t, RecipePtr>& pinned_recipes() {
    static const std::map<std::size_t, RecipePtr> table = [] {
        using namespace recipes;
        std::map<std::size_t, RecipePtr> t;
        for (const auto& [n, m] : catalog_widths()) t[n] = catalog(n, m);
        const auto unit = trivial(1);
        t[23] = first(select(catalog(11), 6), catalog(12));
        t[24] = theorem3(catalog(12), 2);
        t[25] = first(catalog(13), catalog(12));
        t[27] = second(catalog(11), 16, unit);
        t[28] = second(catalog(12), 16, unit);
        t[29] = second(catalog(13), 16, unit);
        t[31] = second(catalog(15), 16, unit);
        t[32] = theorem1(2, catalog(16));
        t[33] = second(recipes::zero_row(1), 2, catalog(16));
        t[48] = theorem3(catalog(12), 4);
        t[64] = prop1(catalog(8));
        t[80] = second(catalog(16), 4, catalog(16));
        t[96] = theorem3(catalog(12), 8);
        t[112] = second(catalog(16), 8, catalog(12));
        t[128] = theorem3(catalog(16), 8);
        t[144] = prop1(catalog(12));
        t[160] = second(prop1(catalog(8)), 8, catalog(12));
        t[176] = second(catalog(16), 8, catalog(20));
        t[192] = theorem3(catalog(12), 16);
        t[208] = second(catalog(16), 16, catalog(12));
        t[224] = second(theorem3(catalog(12), 8), 8, catalog(16));
        t[240] = second(theorem3(catalog(12), 4), 16, catalog(12));
        t[256] = prop1(catalog(16));
        return t;
    }();
    return table;
}

inline std::optional<RecipePtr> pinned_recipe(std::size_t n) {
    auto it = pinned_recipes().find(n);
    if (it == pinned_recipes().end()) return std::nullopt;
    return it->second;
}

namespace detail {

/// best[n] = widest plan found for n runs, filled in increasing n.
class Planner {
public:
    RecipePtr plan(std::size_t n) {
        std::lock_guard<std::mutex> lock(mutex_);
        fill(n);
        return best_[n];
    }

    /// Every top-level rule that applies to n, children taken from the table.
    std::vector<RecipePtr> candidates(std::size_t n) {
        std::lock_guard<std::mutex> lock(mutex_);
        fill(n - 1);
        return gather(n);
    }

private:
    std::size_t width(std::size_t n) const { return recipes::width_of(best_[n]); }

    void fill(std::size_t n) {
        if (best_.empty()) best_.push_back(nullptr);
        while (best_.size() <= n) {
            RecipePtr cur;
            for (auto& c : gather(best_.size()))
                if (!cur || recipes::width_of(c) > recipes::width_of(cur)) cur = std::move(c);
            best_.push_back(std::move(cur));
        }
    }

    /// OLH(n2, m2) usable as B with m2 Hadamard columns of order n2.
    std::optional<RecipePtr> b_block(std::size_t n2) const {
        if (!hadamard_supported(n2)) return std::nullopt;
        return recipes::select(best_[n2], std::min(width(n2), n2));
    }

    std::vector<RecipePtr> gather(std::size_t n) const {
        std::vector<RecipePtr> out{recipes::trivial(n)};
        if (auto e = Catalog::instance().best(n)) out.push_back(recipes::catalog(n, e->m));
        if (fold_order_supported(n)) out.push_back(recipes::fold(n));
        for (std::size_t n1 = 2; n1 < n; ++n1) {
            if (n % n1 != 0 || !fold_order_supported(n1)) continue;
            if (auto b = b_block(n / n1)) out.push_back(recipes::theorem1(n1, *b));
        }
        for (std::size_t n0 = 2; n0 * n0 <= n; ++n0)
            if (n0 * n0 == n && fold_order_supported(n0))
                if (auto b = b_block(n0)) out.push_back(recipes::prop1(*b));
        for (std::size_t nb = 2; nb < n; nb += 2) {
            const std::size_t na = n - nb;
            const RecipePtr a = na == 1 ? recipes::zero_row(1) : best_[na];
            for (std::size_t n1 = 2; n1 <= nb; n1 += 2) {
                if (nb % n1 != 0 || !fold_order_supported(n1)) continue;
                if (auto b = b_block(nb / n1)) out.push_back(recipes::second(a, n1, *b));
            }
        }
        if (n % 2 == 1 && n >= 7) {
            const std::size_t lo = n / 2, hi = n / 2 + 1;
            const std::size_t even = lo % 2 == 0 ? lo : hi;
            if (even % 4 == 0 && olh_exists(lo) && olh_exists(hi)) out.push_back(recipes::first(best_[lo], best_[hi]));
        }
        return out;
    }

    std::mutex mutex_;
    std::vector<RecipePtr> best_;
};

inline Planner& planner() {
    static Planner p;
    return p;
}

}  // namespace detail

/// Widest plan the construction rules reach for n runs.
inline RecipePtr plan_widest(std::size_t n) {
    if (n == 0) fail(Errc::invalid_argument, "run count must be positive");
    return detail::planner().plan(n);
}

/// Top-level plans for n, one per applicable rule, widest first.
inline std::vector<RecipePtr> plan_candidates(std::size_t n) {
    if (n == 0) fail(Errc::invalid_argument, "run count must be positive");
    auto out = detail::planner().candidates(n);
    std::stable_sort(out.begin(), out.end(),
                     [](const RecipePtr& a, const RecipePtr& b) { return recipes::width_of(a) > recipes::width_of(b); });
    return out;
}

inline void require_olh_size(std::size_t n) {
    if (!olh_exists(n))
        fail(Errc::no_olh_exists, "no orthogonal Latin hypercube with two or more factors exists for n = " +
                                      std::to_string(n) + " (n = 2, 3 or n = 4k+2)");
}

/// The published recipe when there is one, otherwise the widest plan.
inline DesignMatrix construct_best(std::size_t n) {
    require_olh_size(n);
    auto pinned = pinned_recipe(n);
    DesignMatrix out = build(pinned ? *pinned : plan_widest(n));
    if (out.factors() < lower_bound_m(n))
        throw Error(Errc::condition_violation, "post",
                    "construct_best(" + std::to_string(n) + ") falls below the lower bound");
    return out;
}

/// The widest plan, even where it beats the published recipe.
inline DesignMatrix construct_widest(std::size_t n) {
    require_olh_size(n);
    return build(plan_widest(n));
}

}  // namespace olhgen

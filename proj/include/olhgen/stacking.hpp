#pragma once

// Vertical stacking of orthogonal designs on complementary level sets, and
// the fold/Hadamard expansion of a seed OLH.

#include <algorithm>
#include <string>
#include <vector>

#include "olhgen/catalog.hpp"
#include "olhgen/fold.hpp"
#include "olhgen/hadamard.hpp"
#include "olhgen/kronecker.hpp"

namespace olhgen {

/// 1 x m design of zeros: the one-run block of the outer-band stack.
inline DesignMatrix zero_row(std::size_t m) {
    return DesignMatrix(IntMatrix(1, m, 0),
                        make_recipe(RecipeKind::seed, "zero_row", {{"n", 1}, {"m", static_cast<std::int64_t>(m)}}));
}

/// Vertical concatenation of two designs whose columns together use every
/// level of an (n_a + n_b)-run Latin hypercube exactly once.
inline DesignMatrix stack(const DesignMatrix& Da, const DesignMatrix& Db) {
    if (Da.factors() != Db.factors())
        fail(Errc::invalid_argument, "stack: column counts differ (" + std::to_string(Da.factors()) + " vs " +
                                         std::to_string(Db.factors()) + ")");
    const std::size_t n = Da.runs() + Db.runs();
    const Column expected = levels_for(n);
    IntMatrix x = vstack(Da.doubled(), Db.doubled());
    for (std::size_t j = 0; j < x.cols(); ++j) {
        Column c = x.column(j);
        std::sort(c.begin(), c.end());
        if (c != expected)
            fail(Errc::invalid_argument, "stack: level sets of column " + std::to_string(j + 1) +
                                             " overlap or do not cover the " + std::to_string(n) + "-run levels");
    }
    std::vector<RecipePtr> kids;
    if (Da.recipe()) kids.push_back(Da.recipe());
    if (Db.recipe()) kids.push_back(Db.recipe());
    DesignMatrix out(std::move(x), make_recipe(RecipeKind::stack, "stack", {{"n", static_cast<std::int64_t>(n)}},
                                               std::move(kids)));
    if (is_orthogonal(Da) && is_orthogonal(Db) && !is_olh(out))
        throw Error(Errc::condition_violation, "post", "stack output fails exact OLH verification");
    return out;
}

/// Odd/even split: |n_a - n_b| = 1, the even run count divisible by 4. Each
/// input's doubled entries become the output's true levels.
inline DesignMatrix first_stacking(const DesignMatrix& a, const DesignMatrix& b) {
    const std::size_t na = a.runs(), nb = b.runs();
    if ((na > nb ? na - nb : nb - na) != 1)
        fail(Errc::invalid_argument, "first stacking needs |n_a - n_b| = 1 (got " + std::to_string(na) + ", " +
                                         std::to_string(nb) + ")");
    const std::size_t even = na % 2 == 0 ? na : nb;
    if (even % 4 != 0)
        fail(Errc::invalid_argument, "first stacking needs the even run count divisible by 4 (got " +
                                         std::to_string(even) + ")");
    if (a.factors() != b.factors()) fail(Errc::invalid_argument, "first stacking: column counts differ");
    if (!is_olh(a) || !is_olh(b)) fail(Errc::invalid_argument, "first stacking needs two orthogonal Latin hypercubes");
    IntMatrix xa = a.doubled(), xb = b.doubled();
    xa *= 2;
    xb *= 2;
    DesignMatrix out = stack(DesignMatrix(std::move(xa)), DesignMatrix(std::move(xb)));
    std::vector<RecipePtr> kids;
    if (a.recipe()) kids.push_back(a.recipe());
    if (b.recipe()) kids.push_back(b.recipe());
    return out.with_recipe(make_recipe(RecipeKind::stack, "first",
                                       {{"n_a", static_cast<std::int64_t>(na)}, {"n_b", static_cast<std::int64_t>(nb)}},
                                       std::move(kids)));
}

/// Inner/outer split: `a` is an OLH(n_a, m) (or a zero row when n_a = 1) and
/// `shifted_b` has doubled levels +-(n_a+1), ..., +-(n_a+n_b-1).
inline DesignMatrix second_stacking(const DesignMatrix& a, const DesignMatrix& shifted_b) {
    const std::size_t na = a.runs(), nb = shifted_b.runs();
    if (a.factors() != shifted_b.factors()) fail(Errc::invalid_argument, "second stacking: column counts differ");
    if (nb % 2 != 0) fail(Errc::invalid_argument, "second stacking needs an even outer block");
    const Column outer = shifted_level_set(nb, static_cast<Level>(na));
    for (std::size_t j = 0; j < shifted_b.factors(); ++j) {
        Column c = shifted_b.column(j);
        std::sort(c.begin(), c.end());
        if (c != outer)
            fail(Errc::invalid_argument, "second stacking: column " + std::to_string(j + 1) +
                                             " of the outer block is not on the shifted level set");
    }
    if (!is_olh(a) || !is_orthogonal(shifted_b))
        fail(Errc::invalid_argument, "second stacking needs orthogonal inputs");
    DesignMatrix out = stack(a, shifted_b);
    std::vector<RecipePtr> kids;
    if (a.recipe()) kids.push_back(a.recipe());
    if (shifted_b.recipe()) kids.push_back(shifted_b.recipe());
    return out.with_recipe(make_recipe(RecipeKind::stack, "second",
                                       {{"n_a", static_cast<std::int64_t>(na)}, {"n_b", static_cast<std::int64_t>(nb)}},
                                       std::move(kids)));
}

namespace detail {

inline DesignMatrix top_rows(const DesignMatrix& d, std::size_t count) {
    IntMatrix x(count, d.factors());
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < d.factors(); ++j) x(i, j) = d(i, j);
    return DesignMatrix(std::move(x));
}

/// A and C for a fold of order n1 with the given magnitudes.
inline std::pair<SignMatrix, DesignMatrix> fold_blocks(const SymbolicFoldMatrix& fold, const std::vector<Level>& values) {
    const DesignMatrix full = instantiate_fold(fold, values);
    auto [A, C] = fold_pair(fold.top_sign_pattern(), top_rows(full, fold.order() / 2));
    const auto recipe = make_recipe(RecipeKind::seed, "fold",
                                    {{"n", static_cast<std::int64_t>(fold.order())},
                                     {"m", static_cast<std::int64_t>(fold.cols())}});
    return {std::move(A), C.with_recipe(recipe)};
}

inline SignMatrix hadamard_columns(std::size_t order, std::size_t m) {
    if (!hadamard_supported(order))
        fail(Errc::unsupported_order, "no Hadamard matrix of order " + std::to_string(order) + " is available");
    if (m > order) fail(Errc::invalid_argument, "more factors than Hadamard columns");
    return hadamard(order).leading_columns(m);
}

}  // namespace detail

/// OLH(n, m) -> OLH(f n, (f/2) m), or OLH(f n + 1, (f/2) m) with plus_one,
/// for f in {2, 4, 8, 16}.
inline DesignMatrix theorem3_expand(const DesignMatrix& olh, std::size_t factor, bool plus_one) {
    if (factor != 2 && factor != 4 && factor != 8 && factor != 16)
        fail(Errc::unsupported_order, "expansion factor must be 2, 4, 8 or 16 (got " + std::to_string(factor) + ")");
    const std::size_t n = olh.runs();
    if (n % 4 != 0) fail(Errc::invalid_argument, "expansion needs a run count divisible by 4");
    if (!hadamard_supported(n))
        fail(Errc::unsupported_order, "no Hadamard matrix of order " + std::to_string(n) + " is available");
    if (!is_olh(olh)) fail(Errc::invalid_argument, "expansion needs an orthogonal Latin hypercube");

    const auto fold = table3_matrix(factor);
    const auto k = factor / 2;
    const Level na = plus_one ? 1 : 0;
    auto [A, C] = detail::fold_blocks(fold, plus_one ? shifted_magnitudes(k, 1, static_cast<Level>(n)) : odd_magnitudes(k));
    KroneckerPlan plan{std::move(A), olh, std::move(C), detail::hadamard_columns(n, olh.factors()),
                       plus_one ? Level{1} : static_cast<Level>(n)};
    DesignMatrix out = plus_one ? second_stacking(zero_row(plan.m1() * plan.m2()), prop2_shifted(plan, na))
                                : theorem1_olh(plan);
    std::vector<RecipePtr> kids;
    if (olh.recipe()) kids.push_back(olh.recipe());
    return out.with_recipe(make_recipe(RecipeKind::theorem3, "theorem3",
                                       {{"n", static_cast<std::int64_t>(out.runs())},
                                        {"m", static_cast<std::int64_t>(out.factors())},
                                        {"factor", static_cast<std::int64_t>(factor)},
                                        {"plus_one", plus_one ? 1 : 0}},
                                       std::move(kids)));
}

/// Lower bound on the number of factors of an n-run OLH from the 16k + j
/// case analysis. Below 17 runs the search table also counts.
inline std::size_t lower_bound_m(std::size_t n) {
    if (!olh_exists(n)) return 1;
    std::size_t m = 2;
    const std::size_t k16 = n / 16, j16 = n % 16;
    if (k16 >= 1) m = std::max<std::size_t>(m, 6);
    if (j16 == 11) m = std::max<std::size_t>(m, 7);
    if ((j16 == 0 || j16 == 1) && k16 >= 2) m = std::max<std::size_t>(m, 12);
    if ((n % 32 == 0 || n % 32 == 1) && n / 32 >= 2) m = std::max<std::size_t>(m, 24);
    if ((n % 64 == 0 || n % 64 == 1) && n / 64 >= 2) m = std::max<std::size_t>(m, 48);
    if (auto t = catalog_widths().find(n); n < 17 && t != catalog_widths().end()) m = std::max(m, t->second);
    return m;
}

}  // namespace olhgen

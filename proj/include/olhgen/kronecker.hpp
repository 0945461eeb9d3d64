#pragma once

// L = A (x) B + gamma C (x) D and the constructions built on it. Everything is
// in doubled units: 2L = A (x) 2B + gamma 2C (x) D, exact since A and D are +-1.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "olhgen/core.hpp"

namespace olhgen {

struct KroneckerPlan {
    SignMatrix A;     // n1 x m1
    DesignMatrix B;   // n2 x m2
    DesignMatrix C;   // n1 x m1
    SignMatrix D;     // n2 x m2
    Level gamma = 0;  // multiplies the doubled C entries

    std::size_t n1() const noexcept { return A.rows(); }
    std::size_t m1() const noexcept { return A.cols(); }
    std::size_t n2() const noexcept { return B.runs(); }
    std::size_t m2() const noexcept { return B.factors(); }
};

namespace detail {

inline void check_shapes(const KroneckerPlan& plan) {
    if (plan.A.rows() != plan.C.runs() || plan.A.cols() != plan.C.factors())
        fail(Errc::invalid_argument, "A and C must share a shape");
    if (plan.B.runs() != plan.D.rows() || plan.B.factors() != plan.D.cols())
        fail(Errc::invalid_argument, "B and D must share a shape");
}

inline std::vector<RecipePtr> plan_children(const KroneckerPlan& plan) {
    std::vector<RecipePtr> kids;
    if (plan.B.recipe()) kids.push_back(plan.B.recipe());
    if (plan.C.recipe()) kids.push_back(plan.C.recipe());
    return kids;
}

inline Recipe::Params plan_params(const KroneckerPlan& plan) {
    return {{"n1", static_cast<std::int64_t>(plan.n1())},
            {"n2", static_cast<std::int64_t>(plan.n2())},
            {"m1", static_cast<std::int64_t>(plan.m1())},
            {"m2", static_cast<std::int64_t>(plan.m2())},
            {"gamma", plan.gamma}};
}

inline IntMatrix raw_combine(const KroneckerPlan& plan) {
    IntMatrix out = kron(plan.A.entries(), plan.B.doubled());
    IntMatrix second = kron(plan.C.doubled(), plan.D.entries());
    second *= plan.gamma;
    out += second;
    return out;
}

/// For every column: whenever x(p, i) = -x(p', i), signs(p, i) = signs(p', i).
inline bool mirrored_rows_share_sign(const IntMatrix& x, const IntMatrix& signs) {
    for (std::size_t i = 0; i < x.cols(); ++i) {
        std::map<Level, std::set<std::int64_t>> by_value;
        for (std::size_t p = 0; p < x.rows(); ++p) by_value[x(p, i)].insert(signs(p, i));
        for (const auto& [v, s] : by_value) {
            if (v < 0) continue;
            if (v == 0) {
                if (s.size() > 1) return false;
                continue;
            }
            auto mirror = by_value.find(-v);
            if (mirror == by_value.end()) continue;
            std::set<std::int64_t> both = s;
            both.insert(mirror->second.begin(), mirror->second.end());
            if (both.size() > 1) return false;
        }
    }
    return true;
}

inline bool is_zero(const IntMatrix& x) {
    return std::all_of(x.data().begin(), x.data().end(), [](std::int64_t v) { return v == 0; });
}

[[noreturn]] inline void clause_failure(const std::string& clause, const std::string& what) {
    throw Error(Errc::condition_violation, clause, "condition (" + clause + ") fails: " + what);
}

/// Clauses shared by the orthogonal constructions: (i), (iii), (iv).
inline void check_common_clauses(const KroneckerPlan& plan) {
    if (!plan.A.is_column_orthogonal()) clause_failure("i", "A has non-orthogonal columns");
    if (!plan.D.is_column_orthogonal()) clause_failure("i", "D has non-orthogonal columns");
    if (!is_zero(cross_product(plan.A.entries(), plan.C.doubled())) &&
        !is_zero(cross_product(plan.B.doubled(), plan.D.entries())))
        clause_failure("iii", "neither A^T C nor B^T D vanishes");
    const bool a = mirrored_rows_share_sign(plan.C.doubled(), plan.A.entries());
    const bool b = mirrored_rows_share_sign(plan.B.doubled(), plan.D.entries());
    if (!a && !b) clause_failure("iv", "(a) fails for A, C and (b) fails for B, D");
}

inline void check_theorem1(const KroneckerPlan& plan) {
    check_shapes(plan);
    if (plan.gamma != static_cast<Level>(plan.n2()))
        fail(Errc::invalid_argument, "gamma must equal n2 = " + std::to_string(plan.n2()));
    if (!is_olh(plan.B)) clause_failure("ii", "B is not an orthogonal Latin hypercube");
    if (!is_olh(plan.C)) clause_failure("ii", "C is not an orthogonal Latin hypercube");
    check_common_clauses(plan);
}

inline void post_verify(const DesignMatrix& d, const char* what) {
    if (!is_olh(d))
        throw Error(Errc::condition_violation, "post", std::string(what) + " output fails exact OLH verification");
}

}  // namespace detail

/// Raw A (x) B + gamma C (x) D. No hypotheses are checked.
inline DesignMatrix kron_combine(const KroneckerPlan& plan) {
    detail::check_shapes(plan);
    return DesignMatrix(detail::raw_combine(plan), make_recipe(RecipeKind::kronecker, "combine",
                                                               detail::plan_params(plan), detail::plan_children(plan)));
}

struct Lemma1Report {
    bool cond_i = false;
    bool cond_iia = false;
    bool cond_iib = false;

    bool sufficient() const noexcept { return cond_i && (cond_iia || cond_iib); }
};

inline Lemma1Report lemma1_check(const KroneckerPlan& plan) {
    detail::check_shapes(plan);
    Lemma1Report r;
    r.cond_i = is_latin_hypercube(plan.B) && is_latin_hypercube(plan.C);
    r.cond_iia = detail::mirrored_rows_share_sign(plan.C.doubled(), plan.A.entries());
    r.cond_iib = detail::mirrored_rows_share_sign(plan.B.doubled(), plan.D.entries());
    return r;
}

/// Orthogonal Latin hypercube with n1 n2 runs and m1 m2 factors. Violated
/// hypotheses raise condition_violation with the clause name.
inline DesignMatrix theorem1_olh(const KroneckerPlan& plan) {
    detail::check_theorem1(plan);
    DesignMatrix out(detail::raw_combine(plan),
                     make_recipe(RecipeKind::kronecker, "theorem1", detail::plan_params(plan), detail::plan_children(plan)));
    detail::post_verify(out, "theorem1_olh");
    return out;
}

/// (L, U) with U = -n0 A (x) B + C (x) D: 2 m1 m2 factors on n0^2 runs.
inline DesignMatrix prop1_pair(const KroneckerPlan& plan) {
    detail::check_shapes(plan);
    if (plan.n1() != plan.n2())
        fail(Errc::invalid_argument, "prop1_pair needs n1 = n2 (got " + std::to_string(plan.n1()) + " and " +
                                         std::to_string(plan.n2()) + ")");
    detail::check_theorem1(plan);
    const IntMatrix L = detail::raw_combine(plan);
    IntMatrix U = kron(plan.A.entries(), plan.B.doubled());
    U *= -static_cast<Level>(plan.n1());
    U += kron(plan.C.doubled(), plan.D.entries());
    DesignMatrix out(hstack(L, U), make_recipe(RecipeKind::prop1_pair, "prop1", detail::plan_params(plan),
                                               detail::plan_children(plan)));
    detail::post_verify(out, "prop1_pair");
    return out;
}

/// Sorted doubled level set {+-(n_a+1), +-(n_a+3), ..., +-(n_a+n-1)}.
inline Column shifted_level_set(std::size_t n, Level n_a) {
    Column v = levels_for(n);
    for (auto& x : v) x += x > 0 ? n_a : (x < 0 ? -n_a : 0);
    if (n % 2 == 1) fail(Errc::invalid_argument, "shifted level set needs an even run count");
    return v;
}

inline bool columns_match_level_set(const IntMatrix& x, const Column& sorted_levels) {
    for (std::size_t j = 0; j < x.cols(); ++j) {
        Column c = x.column(j);
        std::sort(c.begin(), c.end());
        if (c != sorted_levels) return false;
    }
    return true;
}

/// gamma = 1 variant: an orthogonal design whose doubled levels are
/// +-(n_a+1), ..., +-(n_a+n-1), the outer block for stacking.
inline DesignMatrix prop2_shifted(const KroneckerPlan& plan, Level n_a) {
    detail::check_shapes(plan);
    if (plan.gamma != 1) fail(Errc::invalid_argument, "prop2_shifted needs gamma = 1");
    if (n_a < 0) fail(Errc::invalid_argument, "prop2_shifted needs n_a >= 0");
    if (plan.n1() % 2 != 0) fail(Errc::invalid_argument, "prop2_shifted needs an even n1");
    if (!is_olh(plan.B)) detail::clause_failure("ii", "B is not an orthogonal Latin hypercube");
    const auto n2 = static_cast<Level>(plan.n2());
    Column c_levels;
    for (std::size_t i = 1; i <= plan.n1() / 2; ++i) {
        const Level v = n_a + (2 * static_cast<Level>(i) - 1) * n2;
        c_levels.push_back(v);
        c_levels.push_back(-v);
    }
    std::sort(c_levels.begin(), c_levels.end());
    if (!is_orthogonal(plan.C) || !columns_match_level_set(plan.C.doubled(), c_levels))
        detail::clause_failure("ii", "C is not an orthogonal design on the shifted level set");
    detail::check_common_clauses(plan);

    auto params = detail::plan_params(plan);
    params.emplace_back("n_a", n_a);
    DesignMatrix out(detail::raw_combine(plan),
                     make_recipe(RecipeKind::prop2, "prop2", std::move(params), detail::plan_children(plan)));
    const std::size_t n = plan.n1() * plan.n2();
    if (!is_orthogonal(out) || !columns_match_level_set(out.doubled(), shifted_level_set(n, n_a)))
        throw Error(Errc::condition_violation, "post", "prop2_shifted output fails exact verification");
    return out;
}

/// A = (A0; A0), C = (C0; -C0), after checking that the columns of (A, C)
/// are mutually orthogonal.
inline std::pair<SignMatrix, DesignMatrix> fold_pair(const SignMatrix& A0, const DesignMatrix& C0) {
    if (A0.rows() != C0.runs() || A0.cols() != C0.factors())
        fail(Errc::invalid_argument, "fold_pair: A0 and C0 must share a shape");
    IntMatrix neg = C0.doubled();
    neg *= -1;
    SignMatrix A(vstack(A0.entries(), A0.entries()));
    DesignMatrix C(vstack(C0.doubled(), neg), C0.recipe());
    const IntMatrix joined = hstack(A.entries(), C.doubled());
    const IntMatrix gram = cross_product(joined, joined);
    for (std::size_t i = 0; i < gram.rows(); ++i)
        for (std::size_t j = i + 1; j < gram.cols(); ++j)
            if (gram(i, j) != 0)
                throw Error(Errc::condition_violation, "ac",
                            "fold_pair: columns " + std::to_string(i) + " and " + std::to_string(j) +
                                " of (A, C) are not orthogonal");
    return {std::move(A), std::move(C)};
}

}  // namespace olhgen

#pragma once

// Correlation metrics of L = A (x) B + n2 C (x) D predicted from those of B
// and C.

#include <algorithm>

#include "olhgen/core.hpp"
#include "olhgen/kronecker.hpp"

namespace olhgen {

struct RhoPrediction {
    double rho_sq = 0.0;
    double rho_max = 0.0;
    WeightSet weights;
};

namespace detail {

inline void check_prop4_hypotheses(const KroneckerPlan& plan) {
    check_shapes(plan);
    if (plan.gamma != static_cast<Level>(plan.n2()))
        fail(Errc::invalid_argument, "prediction needs gamma = n2 = " + std::to_string(plan.n2()));
    const auto lemma = lemma1_check(plan);
    if (!lemma.cond_i) clause_failure("i", "B and C must be Latin hypercubes");
    if (!lemma.cond_iia && !lemma.cond_iib) clause_failure("iv", "(a) fails for A, C and (b) fails for B, D");
    if (!plan.A.is_column_orthogonal()) clause_failure("i", "A has non-orthogonal columns");
    if (!plan.D.is_column_orthogonal()) clause_failure("i", "D has non-orthogonal columns");
    if (!is_zero(cross_product(plan.A.entries(), plan.C.doubled())) &&
        !is_zero(cross_product(plan.B.doubled(), plan.D.entries())))
        clause_failure("iii", "neither A^T C nor B^T D vanishes");
}

}  // namespace detail

/// rho^2(L) = w1 rho^2(B) + w2 rho^2(C), rho_M(L) = max(w3 rho_M(B), w4 rho_M(C)).
inline RhoPrediction predict_rho(const KroneckerPlan& plan, const CorrelationReport& rho_b, const CorrelationReport& rho_c) {
    detail::check_prop4_hypotheses(plan);
    RhoPrediction p;
    p.weights = prop4_weights(static_cast<std::int64_t>(plan.n1()), static_cast<std::int64_t>(plan.n2()),
                              static_cast<std::int64_t>(plan.m1()), static_cast<std::int64_t>(plan.m2()));
    p.rho_sq = to_double(p.weights.w1) * rho_b.rho_sq + to_double(p.weights.w2) * rho_c.rho_sq;
    p.rho_max = std::max(to_double(p.weights.w3) * rho_b.rho_max, to_double(p.weights.w4) * rho_c.rho_max);
    return p;
}

inline RhoPrediction predict_rho(const KroneckerPlan& plan) {
    return predict_rho(plan, correlation(plan.B), correlation(plan.C));
}

/// (2L)'(2L) from the ingredients: n1 I (x) (2B)'(2B) + n2^2 (2C)'(2C) (x) n2 I.
inline IntMatrix predicted_gram(const KroneckerPlan& plan) {
    const auto n1 = static_cast<std::int64_t>(plan.n1());
    const auto n2 = static_cast<std::int64_t>(plan.n2());
    IntMatrix eye1(plan.m1(), plan.m1()), eye2(plan.m2(), plan.m2());
    for (std::size_t i = 0; i < plan.m1(); ++i) eye1(i, i) = n1;
    for (std::size_t i = 0; i < plan.m2(); ++i) eye2(i, i) = n2;
    IntMatrix out = kron(eye1, cross_product(plan.B.doubled(), plan.B.doubled()));
    IntMatrix second = kron(cross_product(plan.C.doubled(), plan.C.doubled()), eye2);
    second *= n2 * n2;
    out += second;
    return out;
}

}  // namespace olhgen

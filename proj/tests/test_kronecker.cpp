#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "olhgen/catalog.hpp"
#include "olhgen/fold.hpp"
#include "olhgen/hadamard.hpp"
#include "olhgen/kronecker.hpp"
#include "olhgen/published_designs.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace olhgen;

namespace {

DesignMatrix b0(std::size_t m) { return DesignMatrix(published::lh16x16().left_columns(m)); }

KroneckerPlan two_by_sixteen(std::size_t m2, Level gamma = 16) {
    return KroneckerPlan{SignMatrix::ones(2, 1), b0(m2), DesignMatrix(IntMatrix{{1}, {-1}}),
                         hadamard(16).leading_columns(m2), gamma};
}

}  // namespace

TEST(KronIdentities, RandomIntegerMatrices) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::size_t> dim(1, 4);
    for (int t = 0; t < 200; ++t) {
        const std::size_t p = dim(rng), q = dim(rng), r = dim(rng), s = dim(rng), u = dim(rng), v = dim(rng);
        const auto A = oracle::random_ints(p, q, rng), B = oracle::random_ints(r, s, rng);
        const auto C = oracle::random_ints(q, u, rng), D = oracle::random_ints(s, v, rng);
        const auto E = oracle::random_ints(p, q, rng);
        EXPECT_EQ(oracle::grid(kron(A, B)), oracle::kron(oracle::grid(A), oracle::grid(B)));
        EXPECT_EQ(multiply(kron(A, B), kron(C, D)), kron(multiply(A, C), multiply(B, D)));
        EXPECT_EQ(kron(A, B).transposed(), kron(A.transposed(), B.transposed()));
        EXPECT_EQ(kron(A + E, B), kron(A, B) + kron(E, B));
        EXPECT_EQ(cross_product(kron(A, B), kron(A, B)), kron(cross_product(A, A), cross_product(B, B)));
    }
}

TEST(KroneckerOlh, ThirtyTwoRunsTwelveFactors) {
    const auto L = theorem1_olh(two_by_sixteen(12));
    EXPECT_EQ(L.runs(), 32u);
    EXPECT_EQ(L.factors(), 12u);
    EXPECT_TRUE(oracle::olh(L));
    ASSERT_TRUE(L.recipe());
    EXPECT_EQ(L.recipe()->kind, RecipeKind::kronecker);
}

TEST(KroneckerOlh, FoldTimesCatalogSeeds) {
    for (std::size_t n1 : {2, 4, 8, 16})
        for (std::size_t n2 : {4, 8, 12, 16, 20}) {
            const auto B = seed_olh(n2).matrix;
            const auto f = table3_matrix(n1);
            const auto full = instantiate_fold(f, odd_magnitudes(n1 / 2));
            IntMatrix top(n1 / 2, f.cols());
            for (std::size_t i = 0; i < n1 / 2; ++i)
                for (std::size_t j = 0; j < f.cols(); ++j) top(i, j) = full(i, j);
            auto [A, C] = fold_pair(f.top_sign_pattern(), DesignMatrix(top));
            KroneckerPlan plan{A, B, C, hadamard(n2).leading_columns(B.factors()), static_cast<Level>(n2)};
            const auto L = theorem1_olh(plan);
            EXPECT_EQ(L.runs(), n1 * n2);
            EXPECT_EQ(L.factors(), f.cols() * B.factors());
            EXPECT_TRUE(oracle::olh(L)) << n1 << "x" << n2;
        }
}

TEST(KroneckerOlh, ClauseViolations) {
    auto plan = two_by_sixteen(12, 15);
    EXPECT_ERRC(theorem1_olh(plan), Errc::invalid_argument);

    plan = two_by_sixteen(13);
    auto e = raised([&] { theorem1_olh(plan); });
    EXPECT_EQ(e.code(), Errc::condition_violation);
    EXPECT_EQ(e.clause(), "ii");

    plan = two_by_sixteen(12);
    IntMatrix d = plan.D.entries();
    for (std::size_t i = 0; i < d.rows(); ++i) d(i, 1) = d(i, 0);
    plan.D = SignMatrix(d);
    e = raised([&] { theorem1_olh(plan); });
    EXPECT_EQ(e.clause(), "i");

    plan = two_by_sixteen(12);
    plan.A = SignMatrix(IntMatrix{{1}, {-1}});
    plan.C = DesignMatrix(IntMatrix{{1}, {-1}});
    plan.D = SignMatrix::ones(16, 12);
    e = raised([&] { theorem1_olh(plan); });
    EXPECT_EQ(e.code(), Errc::condition_violation);
}

TEST(KroneckerOlh, ShapeMismatch) {
    auto plan = two_by_sixteen(12);
    plan.D = hadamard(16).leading_columns(11);
    EXPECT_ERRC(kron_combine(plan), Errc::invalid_argument);
}

TEST(LatinHypercubeConditions, RandomSignMatricesD) {
    std::mt19937_64 rng(17);
    const DesignMatrix C(IntMatrix{{1, -1}, {-1, 1}});
    for (int t = 0; t < 100; ++t) {
        KroneckerPlan plan{SignMatrix::ones(2, 2), DesignMatrix(published::lh16x16()), C,
                           SignMatrix(oracle::random_signs(16, 16, rng)), 16};
        const auto rep = lemma1_check(plan);
        EXPECT_TRUE(rep.cond_i);
        EXPECT_TRUE(rep.cond_iia);
        const auto L = kron_combine(plan);
        EXPECT_EQ(L.runs(), 32u);
        EXPECT_EQ(L.factors(), 32u);
        EXPECT_TRUE(oracle::latin(oracle::grid(L.doubled())));
    }
}

TEST(LatinHypercubeConditions, SufficientImpliesLatin) {
    // Random small plans: whenever the check says sufficient, L must be a Latin hypercube.
    std::mt19937_64 rng(23);
    int sufficient = 0;
    for (int t = 0; t < 400; ++t) {
        const std::size_t n1 = 2, n2 = 4 + 4 * (t % 2), m1 = 1 + t % 2, m2 = 2;
        IntMatrix b(n2, m2), c(n1, m1);
        for (std::size_t j = 0; j < m2; ++j) {
            Column col = levels_for(n2);
            std::shuffle(col.begin(), col.end(), rng);
            for (std::size_t i = 0; i < n2; ++i) b(i, j) = col[i];
        }
        for (std::size_t j = 0; j < m1; ++j) {
            Column col = levels_for(n1);
            std::shuffle(col.begin(), col.end(), rng);
            for (std::size_t i = 0; i < n1; ++i) c(i, j) = col[i];
        }
        KroneckerPlan plan{SignMatrix(oracle::random_signs(n1, m1, rng)), DesignMatrix(b), DesignMatrix(c),
                           SignMatrix(oracle::random_signs(n2, m2, rng)), static_cast<Level>(n2)};
        if (!lemma1_check(plan).sufficient()) continue;
        ++sufficient;
        EXPECT_TRUE(oracle::latin(oracle::grid(kron_combine(plan).doubled())));
    }
    EXPECT_GT(sufficient, 50);
}

TEST(PairConstruction, DoublesTheFactorCount) {
    for (std::size_t n0 : {4, 8, 12, 16}) {
        const auto B = seed_olh(n0).matrix;
        const std::size_t k = n0 / 2;
        const auto f = widest_fold(n0);
        const auto full = instantiate_fold(f, odd_magnitudes(k));
        IntMatrix top(k, f.cols());
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < f.cols(); ++j) top(i, j) = full(i, j);
        auto [A, C] = fold_pair(f.top_sign_pattern(), DesignMatrix(top));
        KroneckerPlan plan{A, B, C, hadamard(n0).leading_columns(B.factors()), static_cast<Level>(n0)};
        const auto LU = prop1_pair(plan);
        EXPECT_EQ(LU.runs(), n0 * n0);
        EXPECT_EQ(LU.factors(), 2 * f.cols() * B.factors());
        EXPECT_TRUE(oracle::olh(LU)) << n0;
    }
    EXPECT_ERRC(prop1_pair(two_by_sixteen(12)), Errc::invalid_argument);
}

TEST(ShiftedDesign, OuterBandOfThirtyThree) {
    KroneckerPlan plan{SignMatrix::ones(2, 1), b0(12), DesignMatrix(IntMatrix{{-17}, {17}}),
                       hadamard(16).leading_columns(12), 1};
    const auto Db = prop2_shifted(plan, 1);
    EXPECT_EQ(Db.runs(), 32u);
    EXPECT_TRUE(is_orthogonal(Db));
    Column expected;
    for (Level v = 1; v <= 16; ++v) {
        expected.push_back(2 * v);
        expected.push_back(-2 * v);
    }
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(shifted_level_set(32, 1), expected);
    for (std::size_t j = 0; j < 12; ++j) {
        Column c = Db.column(j);
        std::sort(c.begin(), c.end());
        EXPECT_EQ(c, expected);
    }
}

TEST(ShiftedDesign, RejectsWrongLevels) {
    KroneckerPlan plan{SignMatrix::ones(2, 1), b0(12), DesignMatrix(IntMatrix{{-15}, {15}}),
                       hadamard(16).leading_columns(12), 1};
    const auto e = raised([&] { prop2_shifted(plan, 1); });
    EXPECT_EQ(e.code(), Errc::condition_violation);
    EXPECT_EQ(e.clause(), "ii");
    plan.gamma = 16;
    EXPECT_ERRC(prop2_shifted(plan, 1), Errc::invalid_argument);
}

TEST(FoldPair, RejectsNonOrthogonalColumns) {
    const SignMatrix A0(IntMatrix{{1, 1}, {1, 1}});
    const DesignMatrix C0(IntMatrix{{1, 3}, {3, -1}});
    const auto e = raised([&] { fold_pair(A0, C0); });
    EXPECT_EQ(e.code(), Errc::condition_violation);
    EXPECT_EQ(e.clause(), "ac");
}

TEST(KronCombine, HandWorkedColumn) {
    const KroneckerPlan plan{SignMatrix::ones(2, 1), DesignMatrix(IntMatrix{{-1}, {1}}), DesignMatrix(IntMatrix{{1}, {-1}}),
                             SignMatrix::ones(2, 1), 2};
    EXPECT_EQ(kron_combine(plan).doubled(), (IntMatrix{{1}, {3}, {-3}, {-1}}));
}

TEST(KronCombine, ZeroGammaIsPlainProduct) {
    auto plan = two_by_sixteen(12, 0);
    EXPECT_EQ(oracle::grid(kron_combine(plan).doubled()),
              oracle::kron(oracle::grid(plan.A.entries()), oracle::grid(plan.B.doubled())));
}

TEST(LatinHypercubeConditions, AllOnesD) {
    std::mt19937_64 rng(23);
    for (std::size_t n2 : {3, 4, 7, 16}) {
        IntMatrix b(n2, 3);
        for (std::size_t j = 0; j < 3; ++j) {
            Column c = levels_for(n2);
            std::shuffle(c.begin(), c.end(), rng);
            for (std::size_t i = 0; i < n2; ++i) b(i, j) = c[i];
        }
        const KroneckerPlan plan{SignMatrix::ones(2, 1), DesignMatrix(b), DesignMatrix(IntMatrix{{1}, {-1}}),
                                 SignMatrix::ones(n2, 3), static_cast<Level>(n2)};
        EXPECT_TRUE(lemma1_check(plan).cond_iib) << n2;
    }
}

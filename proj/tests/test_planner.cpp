#include <gtest/gtest.h>

#include "olhgen/planner.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace olhgen;

TEST(ConstructBest, SixteenKRunTable) {
    const std::vector<std::pair<std::size_t, std::size_t>> rows = {
        {32, 12},  {48, 12},  {64, 32},  {80, 12},  {96, 24},  {112, 12}, {128, 48}, {144, 24},
        {160, 24}, {176, 12}, {192, 48}, {208, 12}, {224, 24}, {240, 12}, {256, 192}};
    for (auto [n, m] : rows) {
        const auto d = construct_best(n);
        EXPECT_EQ(d.runs(), n);
        EXPECT_EQ(d.factors(), m) << n;
        EXPECT_TRUE(oracle::olh(d)) << n;
    }
}

TEST(ConstructBest, MeetsLowerBoundFrom17To33) {
    for (std::size_t n = 17; n <= 33; ++n) {
        if (n % 4 == 2) continue;
        const auto d = construct_best(n);
        EXPECT_GE(d.factors(), lower_bound_m(n)) << n;
        EXPECT_TRUE(oracle::olh(d)) << n;
    }
    EXPECT_EQ(construct_best(33).factors(), 12u);
    EXPECT_EQ(construct_best(27).factors(), 7u);
}

TEST(ConstructBest, EveryFeasibleRunCountUpTo300) {
    for (std::size_t n = 4; n <= 300; ++n) {
        if (!olh_exists(n)) continue;
        const auto d = construct_best(n);
        EXPECT_EQ(d.runs(), n);
        EXPECT_GE(d.factors(), lower_bound_m(n)) << n;
        EXPECT_TRUE(is_olh(d)) << n;
        ASSERT_TRUE(d.recipe());
        EXPECT_TRUE(d.recipe()->well_founded()) << n;
    }
}

TEST(ConstructBest, ImpossibleRunCounts) {
    for (std::size_t n : {2, 3, 6, 10, 14, 102}) {
        const auto e = raised([&] { construct_best(n); });
        EXPECT_EQ(e.code(), Errc::no_olh_exists);
        EXPECT_NE(std::string(e.what()).find("4k+2"), std::string::npos);
    }
}

TEST(Planner, WidestNeverNarrowerThanPinned) {
    for (const auto& [n, r] : pinned_recipes()) EXPECT_GE(recipes::width_of(plan_widest(n)), recipes::width_of(r)) << n;
    EXPECT_EQ(construct_widest(208).factors(), 24u);
    EXPECT_EQ(construct_widest(240).factors(), 24u);
}

TEST(Planner, CandidatesByRule) {
    const auto cands = plan_candidates(64);
    ASSERT_FALSE(cands.empty());
    for (std::size_t i = 1; i < cands.size(); ++i)
        EXPECT_GE(recipes::width_of(cands[i - 1]), recipes::width_of(cands[i]));
    bool kron = false, pair = false, second = false;
    for (const auto& r : cands) {
        kron = kron || r->kind == RecipeKind::kronecker;
        pair = pair || r->kind == RecipeKind::prop1_pair;
        second = second || (r->kind == RecipeKind::stack && r->name == "second");
        EXPECT_EQ(recipes::runs_of(r), 64u);
        EXPECT_TRUE(is_olh(build(r)));
    }
    EXPECT_TRUE(kron && pair && second);
}

TEST(Planner, RecipeSummaryIsReadable) {
    const auto d = construct_best(33);
    EXPECT_EQ(d.recipe()->summary(),
              "stack[second](n=33, m=12, n_a=1, n1=2, seed[zero_row](n=1, m=12), seed[catalog](n=16, m=12))");
}

TEST(Build, RejectsUnknownRecipe) {
    EXPECT_ERRC(build(make_recipe(RecipeKind::seed, "mystery", {{"n", 4}, {"m", 2}})), Errc::invalid_argument);
    EXPECT_ERRC(build(recipes::catalog(12, 7)), Errc::not_in_catalog);
}

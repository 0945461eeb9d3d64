// Acceptance run: one PASS/FAIL line per criterion with its wall time against
// the budget. Exit status is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "olhgen/olhgen.hpp"
#include "oracles.hpp"

using namespace olhgen;

namespace {

std::vector<DesignMatrix> constructed;  // every LH built below, for the square-sum law

struct Outcome {
    bool ok = true;
    std::string detail;
};

void check(Outcome& o, bool cond, const std::string& what) {
    if (!cond) {
        o.ok = false;
        if (!o.detail.empty()) o.detail += "; ";
        o.detail += what;
    }
}

DesignMatrix keep(DesignMatrix d) {
    constructed.push_back(d);
    return d;
}

DesignMatrix b0() { return DesignMatrix(published::lh16x16()); }

Outcome table1_integrity() {
    Outcome o;
    const auto B = b0();
    check(o, B.runs() == 16 && B.factors() == 16, "shape");
    check(o, is_latin_hypercube(B), "not a Latin hypercube");
    const auto g = oracle::grid(B.doubled());
    check(o, oracle::latin(g), "oracle: not a Latin hypercube");
    int zero = 0;
    for (std::size_t a = 0; a < 12; ++a)
        for (std::size_t b = a + 1; b < 12; ++b) zero += oracle::column_dot(g, a, b) == 0;
    check(o, zero == 66, std::to_string(zero) + " of 66 inner products vanish");
    check(o, is_olh(B.leading_columns(12)), "first 12 columns not an OLH");
    o.detail = o.ok ? "16x16 LH, 66/66 inner products zero in the first 12 columns" : o.detail;
    return o;
}

KroneckerPlan example1_plan(SignMatrix D, std::size_t m2) {
    return KroneckerPlan{SignMatrix::ones(2, 2), b0().leading_columns(m2),
                         DesignMatrix(IntMatrix{{1, -1}, {-1, 1}}), std::move(D), 16};
}

Outcome example2() {
    Outcome o;
    auto plan = example1_plan(hadamard(16).leading_columns(12), 12);
    plan.A = SignMatrix::ones(2, 1);
    plan.C = DesignMatrix(IntMatrix{{1}, {-1}});
    const auto L = keep(theorem1_olh(plan));
    check(o, L.runs() == 32 && L.factors() == 12, "shape");
    check(o, oracle::olh(L), "oracle: not an OLH");
    if (o.ok) o.detail = "OLH(32, 12) from B0 columns 1-12 and a Hadamard D";
    return o;
}

Outcome example3() {
    Outcome o;
    KroneckerPlan plan{SignMatrix::ones(2, 1), b0().leading_columns(12), DesignMatrix(IntMatrix{{-17}, {17}}),
                       hadamard(16).leading_columns(12), 1};
    const auto Db = prop2_shifted(plan, 1);
    const auto L = keep(second_stacking(zero_row(12), Db));
    check(o, L.runs() == 33 && L.factors() == 12, "shape");
    check(o, oracle::olh(L), "oracle: not an OLH");
    Column expected;
    for (Level v = -32; v <= 32; v += 2) expected.push_back(v);
    for (std::size_t j = 0; j < L.factors(); ++j) {
        Column c = L.column(j);
        std::sort(c.begin(), c.end());
        check(o, c == expected, "column " + std::to_string(j + 1) + " is not a permutation of {0, +-2, ..., +-32}");
    }
    if (o.ok) o.detail = "OLH(33, 12), every column a permutation of {0, +-2, ..., +-32}";
    return o;
}

Outcome lemma1_soundness() {
    Outcome o;
    std::mt19937_64 rng(20240601);
    int lh = 0;
    for (int t = 0; t < 100; ++t) {
        auto plan = example1_plan(SignMatrix(oracle::random_signs(16, 16, rng)), 16);
        const auto rep = lemma1_check(plan);
        const auto L = kron_combine(plan);
        check(o, rep.sufficient(), "trial " + std::to_string(t) + ": hypotheses not detected");
        const bool ok = is_latin_hypercube(L) && oracle::latin(oracle::grid(L.doubled()));
        lh += ok;
        if (t == 0) keep(L);
    }
    check(o, lh == 100, std::to_string(lh) + "/100 Latin hypercubes");
    if (o.ok) o.detail = "100/100 random D give a 32x32 Latin hypercube";
    return o;
}

Outcome theorem2_oracle() {
    Outcome o;
    check(o, count_orthogonal_mates(6) == 0 && brute_force_no_olh(6), "n=6 has an orthogonal mate");
    check(o, brute_force_no_olh(10), "n=10 has an orthogonal mate");
    check(o, count_orthogonal_mates(8) > 0, "control n=8 has no mate");
    SearchConfig config;
    for (std::size_t n : {4, 5}) {
        const auto r = search_olh(n, 2, config);
        check(o, r.success && oracle::olh(r.design), "search_olh(" + std::to_string(n) + ", 2) failed");
        keep(r.design);
    }
    if (o.ok) o.detail = "no mates for n=6 (720) and n=10 (3628800); OLH(4,2), OLH(5,2) found";
    return o;
}

std::string fixed(double v, int digits) {
    std::ostringstream s;
    s.setf(std::ios::fixed);
    s.precision(digits);
    s << v;
    return s.str();
}

Outcome prop4_example4() {
    Outcome o;
    const auto w = prop4_weights(2, 16, 1, 15);
    check(o, std::fabs(to_double(w.w1) - 0.0621) <= 1e-4, "w1 = " + std::to_string(to_double(w.w1)));
    check(o, std::fabs(to_double(w.w3) - 0.2493) <= 1e-4, "w3 = " + std::to_string(to_double(w.w3)));

    KroneckerPlan plan{SignMatrix::ones(2, 1), DesignMatrix(published::nolh16x15()), DesignMatrix(IntMatrix{{1}, {-1}}),
                       hadamard(16).leading_columns(15), 16};
    const auto L = keep(kron_combine(plan));
    check(o, is_latin_hypercube(L), "L is not a Latin hypercube");
    const auto pred = predict_rho(plan);
    const auto direct = oracle::rho(oracle::grid(L.doubled()));
    const auto measured = correlation(L);
    auto rel = [](double a, double b) { return std::fabs(a - b) / std::max(std::fabs(b), 1e-300); };
    check(o, rel(pred.rho_sq, direct.sq) <= 1e-12, "rho^2 prediction off by " + std::to_string(rel(pred.rho_sq, direct.sq)));
    check(o, rel(pred.rho_max, direct.max) <= 1e-12, "rho_M prediction off by " + std::to_string(rel(pred.rho_max, direct.max)));
    check(o, rel(measured.rho_sq, direct.sq) <= 1e-12, "library rho^2 disagrees with the oracle");

    const auto rb = correlation(plan.B);
    check(o, fixed(rb.rho_sq, 4) == "0.0003", "rho^2(B) = " + fixed(rb.rho_sq, 6));
    check(o, fixed(rb.rho_max, 4) == "0.0765", "rho_M(B) = " + fixed(rb.rho_max, 6));
    check(o, fixed(to_double(w.w1) * 0.0003, 5) == "0.00002", "rounded rho^2(L) " + fixed(to_double(w.w1) * 0.0003, 6));
    check(o, fixed(to_double(w.w3) * 0.0765, 4) == "0.0191", "rounded rho_M(L) " + fixed(to_double(w.w3) * 0.0765, 6));
    check(o, fixed(direct.sq, 5) == "0.00002", "measured rho^2(L) = " + fixed(direct.sq, 6));
    check(o, fixed(direct.max, 4) == "0.0191", "measured rho_M(L) = " + fixed(direct.max, 6));
    if (o.ok)
        o.detail = "w1=" + fixed(to_double(w.w1), 4) + " w3=" + fixed(to_double(w.w3), 4) + " rho^2(L)=" +
                   fixed(direct.sq, 5) + " rho_M(L)=" + fixed(direct.max, 4);
    return o;
}

Outcome theorem3_chain() {
    Outcome o;
    const auto s = seed_olh(12).matrix;
    const auto a = keep(theorem3_expand(s, 16, false));
    check(o, a.runs() == 192 && a.factors() == 48 && oracle::olh(a), "OLH(192, 48) failed");
    const auto b = keep(theorem3_expand(a, 4, false));
    check(o, b.runs() == 768 && b.factors() == 96 && oracle::olh(b), "OLH(768, 96) failed");
    if (o.ok) o.detail = "OLH(12,6) -> OLH(192,48) -> OLH(768,96)";
    return o;
}

Outcome table4() {
    Outcome o;
    const std::vector<std::pair<std::size_t, std::size_t>> rows = {
        {32, 12},  {48, 12},  {64, 32},  {80, 12},  {96, 24},  {112, 12}, {128, 48}, {144, 24},
        {160, 24}, {176, 12}, {192, 48}, {208, 12}, {224, 24}, {240, 12}, {256, 192}};
    int good = 0;
    for (auto [n, m] : rows) {
        const auto d = keep(construct_best(n));
        const bool ok = d.runs() == n && d.factors() == m && oracle::olh(d);
        check(o, ok, "n=" + std::to_string(n) + " gave m=" + std::to_string(d.factors()));
        good += ok;
    }
    if (o.ok) o.detail = std::to_string(good) + "/15 rows exact, including 32 (n=64), 24 (n=144), 192 (n=256)";
    return o;
}

Outcome prop3_sweep() {
    Outcome o;
    std::string widths;
    for (std::size_t n = 17; n <= 33; ++n) {
        if (n % 4 == 2) continue;
        const auto d = keep(construct_best(n));
        const bool ok = d.runs() == n && d.factors() >= lower_bound_m(n) && oracle::olh(d);
        check(o, ok, "n=" + std::to_string(n) + ": m=" + std::to_string(d.factors()) + " < " +
                         std::to_string(lower_bound_m(n)));
        widths += " " + std::to_string(n) + ":" + std::to_string(d.factors());
    }
    if (o.ok) o.detail = "m per n:" + widths;
    return o;
}

Outcome table2_search() {
    Outcome o;
    std::string found;
    for (std::size_t n : {4, 5, 7, 8, 9, 12}) {
        const std::size_t m = catalog_widths().at(n);
        bool hit = false;
        for (std::uint64_t seed = 1; seed <= 5 && !hit; ++seed) {
            SearchConfig config;
            config.seed = seed;
            const auto r = search_olh(n, m, config);
            hit = r.success && oracle::olh(r.design);
            if (hit) {
                keep(r.design);
                found += " " + std::to_string(n) + "@seed" + std::to_string(seed);
            }
        }
        check(o, hit, "OLH(" + std::to_string(n) + ", " + std::to_string(m) + ") not reached in 5 seeds");
    }
    for (std::size_t n : {11, 13, 15, 17, 19, 20, 21}) {
        const auto e = seed_olh(n);
        check(o, e.m == catalog_widths().at(n) && e.source == CatalogSource::search && oracle::olh(e.matrix),
              "catalog OLH(" + std::to_string(n) + ") regression");
        keep(e.matrix);
    }
    if (o.ok) o.detail = "searched" + found + "; 11..21 pinned to the catalog";
    return o;
}

Outcome properties() {
    Outcome o;
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::size_t> dim(1, 4);
    int kron_ok = 0;
    for (int t = 0; t < 200; ++t) {
        const std::size_t p = dim(rng), q = dim(rng), r = dim(rng), s = dim(rng), u = dim(rng), v = dim(rng);
        const auto A = oracle::random_ints(p, q, rng), B = oracle::random_ints(r, s, rng);
        const auto C = oracle::random_ints(q, u, rng), D = oracle::random_ints(s, v, rng);
        const auto AB = oracle::kron(oracle::grid(A), oracle::grid(B));
        bool ok = oracle::grid(kron(A, B)) == AB;
        ok = ok && oracle::grid(multiply(kron(A, B), kron(C, D))) == oracle::grid(kron(multiply(A, C), multiply(B, D)));
        ok = ok && oracle::grid(kron(A, B).transposed()) == oracle::grid(kron(A.transposed(), B.transposed()));
        kron_ok += ok;
    }
    check(o, kron_ok == 200, "Kronecker identities " + std::to_string(kron_ok) + "/200");

    int delta_ok = 0;
    for (int t = 0; t < 1000; ++t) {
        const std::size_t n = 4 + t % 17;
        Column c = levels_for(n), x = levels_for(n);
        std::shuffle(c.begin(), c.end(), rng);
        std::shuffle(x.begin(), x.end(), rng);
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        const std::size_t a = pick(rng), b = pick(rng);
        std::int64_t before = 0, after = 0;
        for (std::size_t i = 0; i < n; ++i) before += c[i] * x[i];
        Column c2 = c;
        std::swap(c2[a], c2[b]);
        for (std::size_t i = 0; i < n; ++i) after += c2[i] * x[i];
        delta_ok += switch_delta(c, x, a, b) == after - before;
    }
    check(o, delta_ok == 1000, "switch_delta " + std::to_string(delta_ok) + "/1000");

    int sums = 0, lhs = 0;
    for (const auto& d : constructed) {
        if (!is_latin_hypercube(d)) continue;
        ++lhs;
        const auto g = oracle::grid(d.doubled());
        bool ok = true;
        for (std::size_t j = 0; j < d.factors(); ++j)
            ok = ok && oracle::column_dot(g, j, j) == oracle::square_sum(static_cast<std::int64_t>(d.runs())) &&
                 lh_column_square_sum(static_cast<std::int64_t>(d.runs())) == oracle::column_dot(g, j, j);
        sums += ok;
    }
    check(o, sums == lhs, "square-sum law holds on " + std::to_string(sums) + "/" + std::to_string(lhs));

    int hads = 0;
    for (std::size_t n = 1; n <= 64; ++n) {
        if (!hadamard_supported(n)) continue;
        const auto H = oracle::grid(hadamard(n).entries());
        const auto G = oracle::matmul(oracle::transpose(H), H);
        bool ok = true;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) ok = ok && G[i][j] == (i == j ? static_cast<std::int64_t>(n) : 0);
        check(o, ok, "H'H != nI for n=" + std::to_string(n));
        ++hads;
    }

    for (std::size_t order : {2, 4, 8, 16}) {
        const auto fold = table3_matrix(order);
        std::uniform_int_distribution<std::int64_t> value(-1000, 1000);
        for (int t = 0; t < 100; ++t) {
            std::vector<std::int64_t> x(fold.symbols());
            for (auto& v : x) v = value(rng);
            const auto g = oracle::grid(fold.substitute(x));
            check(o, oracle::orthogonal(g), "fold of order " + std::to_string(order) + " not orthogonal");
        }
    }
    if (o.ok)
        o.detail = "200 Kronecker, 1000 switch_delta, " + std::to_string(lhs) + " square-sum designs, " +
                   std::to_string(hads) + " Hadamard orders, 4x100 fold substitutions";
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double budget;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "B0 integrity", 0.1, table1_integrity},
        {2, "32x12 Kronecker OLH", 0.1, example2},
        {3, "33x12 stacked OLH", 0.1, example3},
        {4, "Latin hypercube soundness for random D", 5, lemma1_soundness},
        {5, "existence oracle", 60, theorem2_oracle},
        {6, "correlation propagation", 1, prop4_example4},
        {7, "expansion chain", 30, theorem3_chain},
        {8, "16k-run table", 120, table4},
        {9, "lower-bound sweep 17..33", 30, prop3_sweep},
        {10, "small-run search", 300, table2_search},
        {11, "property suites", 60, properties},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& ex) {
            o.ok = false;
            o.detail = std::string("exception: ") + ex.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool in_time = secs < c.budget;
        if (!in_time) o.detail += (o.detail.empty() ? "" : "; ") + std::string("over budget");
        const bool pass = o.ok && in_time;
        failed += !pass;
        std::printf("%s %2d %-40s %8.3fs (< %gs)  %s\n", pass ? "PASS" : "FAIL", c.id, c.name, secs, c.budget,
                    o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed;
}

#pragma once

// Domain types and exact validators. Every design is stored in doubled units
// (2 x true level) so levels of both parities are integers and all checks are
// exact integer arithmetic.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "olhgen/error.hpp"
#include "olhgen/matrix.hpp"
#include "olhgen/recipe.hpp"

namespace olhgen {

using Level = std::int64_t;
using Column = std::vector<Level>;

/// Doubled levels of an n-run Latin hypercube: -(n-1), -(n-3), ..., n-1.
inline Column levels_for(std::size_t n) {
    if (n == 0) fail(Errc::invalid_argument, "levels_for: run count must be positive");
    Column out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = -static_cast<Level>(n - 1) + 2 * static_cast<Level>(i);
    return out;
}

/// Sum of squared doubled levels of one Latin hypercube column: n(n^2-1)/3.
constexpr std::int64_t lh_column_square_sum(std::int64_t n) noexcept { return n * (n * n - 1) / 3; }

inline std::int64_t dot(std::span<const Level> a, std::span<const Level> b) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

/// n x m design in doubled units, with optional provenance.
class DesignMatrix {
public:
    DesignMatrix() = default;

    explicit DesignMatrix(IntMatrix doubled, RecipePtr recipe = nullptr)
        : doubled_(std::move(doubled)), recipe_(std::move(recipe)) {
        if (doubled_.rows() == 0 || doubled_.cols() == 0)
            fail(Errc::invalid_argument, "design matrix must have at least one run and one factor");
    }

    static DesignMatrix from_rows(const std::vector<std::vector<Level>>& rows, RecipePtr recipe = nullptr) {
        return DesignMatrix(IntMatrix::from_rows(rows), std::move(recipe));
    }

    std::size_t runs() const noexcept { return doubled_.rows(); }
    std::size_t factors() const noexcept { return doubled_.cols(); }
    Level operator()(std::size_t r, std::size_t c) const { return doubled_(r, c); }

    const IntMatrix& doubled() const noexcept { return doubled_; }
    const RecipePtr& recipe() const noexcept { return recipe_; }
    Column column(std::size_t c) const { return doubled_.column(c); }

    DesignMatrix with_recipe(RecipePtr recipe) const { return DesignMatrix(doubled_, std::move(recipe)); }

    /// Leading `count` factors; records a select node when the count shrinks.
    DesignMatrix leading_columns(std::size_t count) const {
        if (count == 0 || count > factors())
            fail(Errc::invalid_argument, "cannot select " + std::to_string(count) + " of " +
                                             std::to_string(factors()) + " columns");
        if (count == factors()) return *this;
        RecipePtr r;
        if (recipe_)
            r = make_recipe(RecipeKind::select, "", {{"m", static_cast<std::int64_t>(count)}}, {recipe_});
        return DesignMatrix(doubled_.left_columns(count), r);
    }

    friend bool operator==(const DesignMatrix& a, const DesignMatrix& b) { return a.doubled_ == b.doubled_; }

private:
    IntMatrix doubled_;
    RecipePtr recipe_;
};

/// Rectangular +-1 matrix (the A and D roles, Hadamard matrices).
class SignMatrix {
public:
    SignMatrix() = default;

    explicit SignMatrix(IntMatrix entries) : entries_(std::move(entries)) {
        if (entries_.rows() == 0 || entries_.cols() == 0)
            fail(Errc::invalid_argument, "sign matrix must be non-empty");
        for (auto v : entries_.data())
            if (v != 1 && v != -1) fail(Errc::invalid_argument, "sign matrix entries must be +1 or -1");
    }

    static SignMatrix ones(std::size_t rows, std::size_t cols) { return SignMatrix(IntMatrix(rows, cols, 1)); }

    std::size_t rows() const noexcept { return entries_.rows(); }
    std::size_t cols() const noexcept { return entries_.cols(); }
    std::int64_t operator()(std::size_t r, std::size_t c) const { return entries_(r, c); }
    const IntMatrix& entries() const noexcept { return entries_; }

    /// Columns pairwise orthogonal (the sense used for A and D).
    bool is_column_orthogonal() const {
        const auto gram = cross_product(entries_, entries_);
        for (std::size_t i = 0; i < gram.rows(); ++i)
            for (std::size_t j = i + 1; j < gram.cols(); ++j)
                if (gram(i, j) != 0) return false;
        return true;
    }

    SignMatrix leading_columns(std::size_t count) const {
        if (count == 0 || count > cols()) fail(Errc::invalid_argument, "sign matrix column selection out of range");
        return SignMatrix(entries_.left_columns(count));
    }

private:
    IntMatrix entries_;
};

inline bool is_latin_column(std::span<const Level> column) {
    Column sorted(column.begin(), column.end());
    std::sort(sorted.begin(), sorted.end());
    const auto n = static_cast<Level>(sorted.size());
    for (Level i = 0; i < n; ++i)
        if (sorted[static_cast<std::size_t>(i)] != -(n - 1) + 2 * i) return false;
    return true;
}

/// Every column is a permutation of levels_for(n).
inline bool is_latin_hypercube(const IntMatrix& doubled) {
    for (std::size_t c = 0; c < doubled.cols(); ++c)
        if (!is_latin_column(doubled.column(c))) return false;
    return true;
}
inline bool is_latin_hypercube(const DesignMatrix& d) { return is_latin_hypercube(d.doubled()); }

/// All pairwise column inner products vanish (vacuous for one column).
inline bool is_orthogonal(const IntMatrix& x) {
    const auto gram = cross_product(x, x);
    for (std::size_t i = 0; i < gram.rows(); ++i)
        for (std::size_t j = i + 1; j < gram.cols(); ++j)
            if (gram(i, j) != 0) return false;
    return true;
}
inline bool is_orthogonal(const DesignMatrix& d) { return is_orthogonal(d.doubled()); }

inline bool is_olh(const DesignMatrix& d) { return is_latin_hypercube(d) && is_orthogonal(d); }

struct Classification {
    bool latin_hypercube = false;
    bool orthogonal = false;
    bool centered = false;  // every column sums to zero
};

inline Classification classify(const DesignMatrix& d) {
    Classification c;
    c.latin_hypercube = is_latin_hypercube(d);
    c.orthogonal = is_orthogonal(d);
    c.centered = true;
    for (std::size_t j = 0; j < d.factors() && c.centered; ++j) {
        std::int64_t s = 0;
        for (std::size_t i = 0; i < d.runs(); ++i) s += d(i, j);
        c.centered = (s == 0);
    }
    return c;
}

struct CorrelationReport {
    Matrix<double> rho;     // m x m, unit diagonal
    double rho_max = 0.0;   // max_{i<j} |rho_ij|
    double rho_sq = 0.0;    // mean over i<j of rho_ij^2
};

/// Pairwise column correlations d_i'd_j / sqrt(d_i'd_i d_j'd_j) from exact
/// integer inner products.
inline CorrelationReport correlation(const IntMatrix& x) {
    const auto gram = cross_product(x, x);
    const std::size_t m = x.cols();
    for (std::size_t i = 0; i < m; ++i)
        if (gram(i, i) == 0)
            fail(Errc::degenerate_column, "column " + std::to_string(i + 1) + " has all levels equal to zero");
    CorrelationReport rep;
    rep.rho = Matrix<double>(m, m, 0.0);
    double sum_sq = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        rep.rho(i, i) = 1.0;
        for (std::size_t j = i + 1; j < m; ++j) {
            const double r = static_cast<double>(gram(i, j)) /
                             std::sqrt(static_cast<double>(gram(i, i)) * static_cast<double>(gram(j, j)));
            rep.rho(i, j) = rep.rho(j, i) = r;
            rep.rho_max = std::max(rep.rho_max, std::abs(r));
            sum_sq += r * r;
        }
    }
    if (m > 1) rep.rho_sq = sum_sq / (static_cast<double>(m) * static_cast<double>(m - 1) / 2.0);
    return rep;
}
inline CorrelationReport correlation(const DesignMatrix& d) { return correlation(d.doubled()); }

/// An orthogonal Latin hypercube with at least two factors exists iff n >= 4
/// and n is not of the form 4k+2.
constexpr bool olh_exists(std::size_t n) noexcept { return n >= 4 && n % 4 != 2; }

inline constexpr std::size_t brute_force_limit = 10;

/// Number of permutations x of levels_for(n) orthogonal to the canonical
/// column. Exhaustive; n <= 10.
inline std::uint64_t count_orthogonal_mates(std::size_t n) {
    if (n == 0) fail(Errc::invalid_argument, "run count must be positive");
    if (n > brute_force_limit)
        fail(Errc::budget_exceeded, "exhaustive enumeration limited to n <= " + std::to_string(brute_force_limit));
    const Column base = levels_for(n);
    Column perm = base;
    std::uint64_t mates = 0;
    do {
        if (dot(base, perm) == 0) ++mates;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return mates;
}

/// True iff no two-column orthogonal Latin hypercube of n runs exists.
inline bool brute_force_no_olh(std::size_t n) { return count_orthogonal_mates(n) == 0; }

using Rational = boost::rational<std::int64_t>;

/// Weights that propagate rho^2 and rho_M through the Kronecker construction.
struct WeightSet {
    Rational w1, w2, w3, w4;
    std::int64_t n1 = 0, n2 = 0, m1 = 0, m2 = 0;
};

inline WeightSet prop4_weights(std::int64_t n1, std::int64_t n2, std::int64_t m1, std::int64_t m2) {
    if (n1 < 2 || n2 < 2) fail(Errc::invalid_argument, "prop4_weights: n1 and n2 must be at least 2");
    if (m1 < 1 || m2 < 1) fail(Errc::invalid_argument, "prop4_weights: m1 and m2 must be positive");
    if (m1 * m2 < 2) fail(Errc::invalid_argument, "prop4_weights: m1*m2 must be at least 2 (denominator vanishes)");
    const std::int64_t n = n1 * n2;
    const std::int64_t nn = n * n - 1;
    const std::int64_t b = n2 * n2 - 1;
    const std::int64_t c = n1 * n1 - 1;
    WeightSet w;
    w.n1 = n1;
    w.n2 = n2;
    w.m1 = m1;
    w.m2 = m2;
    // Built from reduced factors to keep intermediate products small.
    const Rational ratio_b(b, nn);
    const Rational ratio_c(n2 * n2 * c, nn);
    w.w1 = Rational(m2 - 1, m1 * m2 - 1) * ratio_b * ratio_b;
    w.w2 = Rational(m1 - 1, m1 * m2 - 1) * ratio_c * ratio_c;
    w.w3 = ratio_b;
    w.w4 = ratio_c;
    return w;
}

inline double to_double(const Rational& r) { return boost::rational_cast<double>(r); }

}  // namespace olhgen

#pragma once

// Fold-over building blocks: the four symbolic matrices of orders 2, 4, 8 and
// 16, a two-column fold pattern for any order divisible by 4, and their
// instantiation as designs.

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "olhgen/core.hpp"

namespace olhgen {

/// Entry of a symbolic fold matrix: sign * x_index (index is 1-based).
struct SymbolicEntry {
    int sign = 1;
    int index = 1;
};

/// order x (order/2) matrix over symbols x_1..x_{order/2} with fold-over
/// structure: the bottom half is the negated top half.
class SymbolicFoldMatrix {
public:
    SymbolicFoldMatrix(std::size_t order, std::size_t cols, std::vector<SymbolicEntry> top_half)
        : order_(order), cols_(cols) {
        if (order_ < 2 || order_ % 2 != 0) fail(Errc::invalid_argument, "fold order must be even");
        if (top_half.size() != (order_ / 2) * cols_) fail(Errc::invalid_argument, "fold top half has wrong size");
        entries_.resize(order_ * cols_);
        for (std::size_t r = 0; r < order_ / 2; ++r)
            for (std::size_t c = 0; c < cols_; ++c) {
                const auto e = top_half[r * cols_ + c];
                entries_[r * cols_ + c] = e;
                entries_[(r + order_ / 2) * cols_ + c] = {-e.sign, e.index};
            }
    }

    std::size_t order() const noexcept { return order_; }
    std::size_t rows() const noexcept { return order_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t symbols() const noexcept { return order_ / 2; }
    const SymbolicEntry& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    /// Numeric substitution x_i := values[i-1].
    template <typename T>
    Matrix<T> substitute(const std::vector<T>& values) const {
        if (values.size() != symbols()) fail(Errc::invalid_argument, "fold substitution needs order/2 values");
        Matrix<T> out(order_, cols_);
        for (std::size_t r = 0; r < order_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) {
                const auto& e = at(r, c);
                out(r, c) = static_cast<T>(e.sign) * values[static_cast<std::size_t>(e.index - 1)];
            }
        return out;
    }

    /// Sign pattern of the top half (all x_i := 1), the S block of A = (S; S).
    SignMatrix top_sign_pattern() const {
        IntMatrix s(order_ / 2, cols_);
        for (std::size_t r = 0; r < order_ / 2; ++r)
            for (std::size_t c = 0; c < cols_; ++c) s(r, c) = at(r, c).sign;
        return SignMatrix(s);
    }

private:
    std::size_t order_;
    std::size_t cols_;
    std::vector<SymbolicEntry> entries_;
};

namespace detail {

inline SymbolicFoldMatrix parse_fold(std::size_t order, std::size_t cols, std::initializer_list<int> signed_indices) {
    std::vector<SymbolicEntry> top;
    top.reserve(signed_indices.size());
    for (int v : signed_indices) top.push_back({v < 0 ? -1 : 1, v < 0 ? -v : v});
    return SymbolicFoldMatrix(order, cols, std::move(top));
}

}  // namespace detail

/// The published fold matrices of order 2, 4, 8 and 16 (top halves shown as
/// signed symbol indices).
inline SymbolicFoldMatrix table3_matrix(std::size_t order) {
    switch (order) {
        case 2: return detail::parse_fold(2, 1, {1});
        case 4: return detail::parse_fold(4, 2, {1, 2, 2, -1});
        case 8:
            return detail::parse_fold(8, 4, {
                1, -2, 4, 3,
                2, 1, 3, -4,
                3, -4, -2, -1,
                4, 3, -1, 2,
            });
        case 16:
            return detail::parse_fold(16, 8, {
                1, -2, -4, -3, -8, 7, 5, 6,
                2, 1, -3, 4, -7, -8, -6, 5,
                3, -4, 2, 1, -6, -5, 7, -8,
                4, 3, 1, -2, -5, 6, -8, -7,
                5, -6, -8, 7, 4, 3, -1, -2,
                6, 5, -7, -8, 3, -4, 2, -1,
                7, -8, 6, -5, 2, -1, -3, 4,
                8, 7, 5, 6, 1, 2, 4, 3,
            });
        default:
            fail(Errc::unsupported_order,
                 "fold matrices are available for orders 2, 4, 8 and 16 only (got " + std::to_string(order) + ")");
    }
}

/// Two-column fold pattern for order divisible by 4: the first column lists
/// x_1..x_{k}, the second pairs adjacent symbols as (x_{2i}, -x_{2i-1}).
inline SymbolicFoldMatrix two_column_fold(std::size_t order) {
    if (order == 0 || order % 4 != 0)
        fail(Errc::invalid_argument, "two-column fold requires an order divisible by 4 (got " + std::to_string(order) + ")");
    const std::size_t half = order / 2;
    std::vector<SymbolicEntry> top(half * 2);
    for (std::size_t i = 0; i < half; ++i) {
        top[i * 2] = {1, static_cast<int>(i + 1)};
        if (i % 2 == 0)
            top[i * 2 + 1] = {1, static_cast<int>(i + 2)};
        else
            top[i * 2 + 1] = {-1, static_cast<int>(i)};
    }
    return SymbolicFoldMatrix(order, 2, std::move(top));
}

/// Widest available fold matrix of the given order.
inline SymbolicFoldMatrix widest_fold(std::size_t order) {
    if (order == 2 || order == 4 || order == 8 || order == 16) return table3_matrix(order);
    return two_column_fold(order);
}

inline bool fold_order_supported(std::size_t order) noexcept {
    return order == 2 || (order >= 4 && order % 4 == 0);
}

/// Column count of widest_fold(order).
inline std::size_t widest_fold_width(std::size_t order) noexcept {
    if (order == 2 || order == 4 || order == 8 || order == 16) return order / 2;
    return 2;
}

/// Substitutes positive, distinct doubled magnitudes for the symbols.
inline DesignMatrix instantiate_fold(const SymbolicFoldMatrix& fold, const std::vector<Level>& values) {
    if (values.size() != fold.symbols())
        fail(Errc::invalid_argument, "instantiate_fold: expected " + std::to_string(fold.symbols()) + " values, got " +
                                         std::to_string(values.size()));
    std::set<Level> seen;
    for (auto v : values) {
        if (v <= 0) fail(Errc::invalid_argument, "instantiate_fold: values must be positive");
        if (!seen.insert(v).second) fail(Errc::invalid_argument, "instantiate_fold: values must be distinct");
    }
    return DesignMatrix(fold.substitute(values));
}

/// Odd magnitudes 1, 3, ..., 2k-1: the doubled levels that turn a fold of
/// order 2k into an orthogonal Latin hypercube.
inline std::vector<Level> odd_magnitudes(std::size_t k) {
    std::vector<Level> v(k);
    for (std::size_t i = 0; i < k; ++i) v[i] = 2 * static_cast<Level>(i) + 1;
    return v;
}

/// Magnitudes n_a + (2i-1) n2, i = 1..k: the shifted C of the outer-band
/// construction.
inline std::vector<Level> shifted_magnitudes(std::size_t k, Level n_a, Level n2) {
    std::vector<Level> v(k);
    for (std::size_t i = 0; i < k; ++i) v[i] = n_a + (2 * static_cast<Level>(i) + 1) * n2;
    return v;
}

/// Fold-over OLH(n1, 2) for n1 divisible by 4.
inline DesignMatrix fold_olh2(std::size_t n1) {
    if (n1 == 0 || n1 % 4 != 0)
        fail(Errc::invalid_argument, "fold_olh2 requires n1 divisible by 4 (got " + std::to_string(n1) + ")");
    return instantiate_fold(two_column_fold(n1), odd_magnitudes(n1 / 2));
}

}  // namespace olhgen

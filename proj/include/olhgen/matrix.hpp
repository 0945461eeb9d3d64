#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace olhgen {

/// Dense row-major matrix. Small and value-semantic; the designs handled here
/// rarely exceed a few hundred rows and columns.
template <typename T>
class Matrix {
public:
    using value_type = T;

    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, T fill = T{})
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    Matrix(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw std::invalid_argument("ragged matrix initializer");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
        Matrix out;
        out.rows_ = rows.size();
        out.cols_ = rows.empty() ? 0 : rows.front().size();
        out.data_.reserve(out.rows_ * out.cols_);
        for (const auto& row : rows) {
            if (row.size() != out.cols_) throw std::invalid_argument("ragged matrix rows");
            out.data_.insert(out.data_.end(), row.begin(), row.end());
        }
        return out;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return data_.empty(); }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

    std::vector<T> column(std::size_t c) const {
        std::vector<T> out(rows_);
        for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
        return out;
    }

    const std::vector<T>& data() const noexcept { return data_; }

    Matrix transposed() const {
        Matrix out(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
        return out;
    }

    /// First `count` columns.
    Matrix left_columns(std::size_t count) const {
        if (count > cols_) throw std::out_of_range("left_columns: count exceeds column count");
        Matrix out(rows_, count);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < count; ++c) out(r, c) = (*this)(r, c);
        return out;
    }

    Matrix& operator+=(const Matrix& other) {
        if (rows_ != other.rows_ || cols_ != other.cols_)
            throw std::invalid_argument("matrix shape mismatch in +=");
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
        return *this;
    }

    Matrix& operator*=(T scalar) {
        for (auto& v : data_) v *= scalar;
        return *this;
    }

    friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
    friend Matrix operator*(T scalar, Matrix m) { return m *= scalar; }
    friend Matrix operator-(Matrix m) { return m *= T(-1); }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<std::int64_t>;

/// Kronecker product: block (i, j) of the result is a(i, j) * b.
template <typename T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
    Matrix<T> out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const T aij = a(i, j);
            for (std::size_t p = 0; p < b.rows(); ++p)
                for (std::size_t q = 0; q < b.cols(); ++q)
                    out(i * b.rows() + p, j * b.cols() + q) = aij * b(p, q);
        }
    return out;
}

template <typename T>
Matrix<T> multiply(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
    Matrix<T> out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const T aik = a(i, k);
            if (aik == T{}) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

/// AᵀB without materializing the transpose.
template <typename T>
Matrix<T> cross_product(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("cross product row mismatch");
    Matrix<T> out(a.cols(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t i = 0; i < a.cols(); ++i) {
            const T ai = a(r, i);
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += ai * b(r, j);
        }
    return out;
}

/// Vertical concatenation.
template <typename T>
Matrix<T> vstack(const Matrix<T>& top, const Matrix<T>& bottom) {
    if (top.cols() != bottom.cols()) throw std::invalid_argument("vstack column mismatch");
    Matrix<T> out(top.rows() + bottom.rows(), top.cols());
    for (std::size_t r = 0; r < top.rows(); ++r)
        for (std::size_t c = 0; c < top.cols(); ++c) out(r, c) = top(r, c);
    for (std::size_t r = 0; r < bottom.rows(); ++r)
        for (std::size_t c = 0; c < top.cols(); ++c) out(top.rows() + r, c) = bottom(r, c);
    return out;
}

/// Horizontal concatenation.
template <typename T>
Matrix<T> hstack(const Matrix<T>& left, const Matrix<T>& right) {
    if (left.rows() != right.rows()) throw std::invalid_argument("hstack row mismatch");
    Matrix<T> out(left.rows(), left.cols() + right.cols());
    for (std::size_t r = 0; r < left.rows(); ++r) {
        for (std::size_t c = 0; c < left.cols(); ++c) out(r, c) = left(r, c);
        for (std::size_t c = 0; c < right.cols(); ++c) out(r, left.cols() + c) = right(r, c);
    }
    return out;
}

}  // namespace olhgen

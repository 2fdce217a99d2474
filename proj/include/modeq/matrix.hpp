#pragma once

#include "modeq/rational.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace modeq {

/// Row-major rectangular matrix of exact values.
template <typename T>
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
        if (rows == 0 || cols == 0) throw DomainError("matrix dimensions must be positive");
    }

    /// From nested rows; every row must have the same length.
    explicit Matrix(const std::vector<std::vector<T>>& rows) : Matrix(rows.size(), rows.empty() ? 0 : rows[0].size()) {
        for (std::size_t i = 0; i < rows_; ++i) {
            if (rows[i].size() != cols_) throw DomainError("ragged matrix rows");
            for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = rows[i][j];
        }
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    /// Copy without row `r` and column `c`.
    Matrix minor(std::size_t r, std::size_t c) const {
        Matrix m(rows_ - 1, cols_ - 1);
        for (std::size_t i = 0, mi = 0; i < rows_; ++i) {
            if (i == r) continue;
            for (std::size_t j = 0, mj = 0; j < cols_; ++j) {
                if (j == c) continue;
                m(mi, mj++) = (*this)(i, j);
            }
            ++mi;
        }
        return m;
    }

private:
    std::size_t rows_, cols_;
    std::vector<T> data_;
};

using ExactMatrix = Matrix<Rational>;

/// Bareiss fraction-free elimination. Each division is exact, so for integer
/// entries the intermediates stay integers and grow only linearly in size.
template <typename T>
T bareiss_determinant(Matrix<T> a) {
    if (!a.square()) throw DomainError("determinant of a non-square matrix");
    const std::size_t n = a.rows();
    T sign(1);
    T prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == T(0)) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == T(0)) ++p;
            if (p == n) return T(0);
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
            }
            a(i, k) = T(0);
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

/// Laplace expansion along the first row. Exponential cost; small matrices only.
template <typename T>
T cofactor_determinant(const Matrix<T>& a) {
    if (!a.square()) throw DomainError("determinant of a non-square matrix");
    const std::size_t n = a.rows();
    if (n == 1) return a(0, 0);
    T total(0);
    for (std::size_t j = 0; j < n; ++j) {
        if (a(0, j) == T(0)) continue;
        T term = a(0, j) * cofactor_determinant(a.minor(0, j));
        if (j % 2 == 0) total += term;
        else total -= term;
    }
    return total;
}

inline Rational direct_determinant(const ExactMatrix& m) { return bareiss_determinant(m); }

} // namespace modeq

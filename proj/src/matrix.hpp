#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace vel {

/// Dense row-major matrix used for eigenvector storage and general products.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t dim) {
        Matrix m(dim, dim);
        for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const double> data() const noexcept { return data_; }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

/// Real symmetric matrix. Every write goes to both (i, j) and (j, i), so the
/// stored entries are exactly symmetric at all times.
class SymmetricMatrix {
public:
    SymmetricMatrix() = default;
    explicit SymmetricMatrix(std::size_t dim) : dense_(dim, dim) {}

    /// Throws std::invalid_argument unless `m` is square and exactly symmetric.
    static SymmetricMatrix from_dense(const Matrix& m) {
        if (m.rows() != m.cols()) throw std::invalid_argument("matrix is not square");
        SymmetricMatrix s(m.rows());
        for (std::size_t i = 0; i < m.rows(); ++i) {
            for (std::size_t j = i; j < m.cols(); ++j) {
                if (m(i, j) != m(j, i)) throw std::invalid_argument("matrix is not symmetric");
                s.set(i, j, m(i, j));
            }
        }
        return s;
    }

    std::size_t dim() const noexcept { return dense_.rows(); }

    void set(std::size_t i, std::size_t j, double value) {
        dense_(i, j) = value;
        dense_(j, i) = value;
    }

    double operator()(std::size_t i, std::size_t j) const { return dense_(i, j); }

    const Matrix& dense() const noexcept { return dense_; }

    friend bool operator==(const SymmetricMatrix&, const SymmetricMatrix&) = default;

private:
    Matrix dense_;
};

}  // namespace vel

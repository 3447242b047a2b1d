#pragma once

#include "dtv/scalar.hpp"

#include <optional>
#include <vector>

namespace dtv {

// Dense matrices over the exact scalar field.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(size_t r, size_t c) : rows_(r), cols_(c), a_(r * c) {}

    static Matrix identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    ExactScalar& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const ExactScalar& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const ExactScalar& s) const;
    bool operator==(const Matrix& o) const;
    bool is_zero() const;

    Matrix transpose() const;

    struct Elimination {
        int rank = 0;
        std::vector<std::pair<int, int>> pivots; // (row, col) in elimination order
    };
    // Exact Gaussian elimination; returns rank and pivot witness.
    Elimination rank_certificate() const;

    // Kernel basis (column vectors) of this * x = 0.
    std::vector<std::vector<ExactScalar>> kernel() const;

    // Solve this * x = b; nullopt if inconsistent. If underdetermined the
    // free variables are set to zero.
    std::optional<std::vector<ExactScalar>> solve(const std::vector<ExactScalar>& b) const;

    std::optional<Matrix> inverse() const;

private:
    size_t rows_, cols_;
    std::vector<ExactScalar> a_;
};

} // namespace dtv

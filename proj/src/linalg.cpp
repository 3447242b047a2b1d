#include "dtv/linalg.hpp"

namespace dtv {

Matrix Matrix::identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = ExactScalar(1L);
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    Matrix r(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const ExactScalar& x = at(i, k);
            if (x.is_zero()) continue;
            for (size_t j = 0; j < o.cols_; ++j) {
                if (o.at(k, j).is_zero()) continue;
                r.at(i, j) += x * o.at(k, j);
            }
        }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    Matrix r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    Matrix r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

Matrix Matrix::scaled(const ExactScalar& s) const {
    Matrix r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t i = 0; i < a_.size(); ++i)
        if (a_[i] != o.a_[i]) return false;
    return true;
}

bool Matrix::is_zero() const {
    for (auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

Matrix Matrix::transpose() const {
    Matrix r(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

namespace {

struct Reduced {
    Matrix m;                     // row-reduced copy
    std::vector<int> pivot_col;   // per pivot row
    std::vector<int> pivot_row_of_col;
};

Reduced row_reduce(Matrix m) {
    Reduced out{Matrix(), {}, std::vector<int>(m.cols(), -1)};
    size_t r = 0;
    for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        // pick the structurally simplest nonzero pivot to limit blowup
        size_t best = m.rows();
        size_t best_size = SIZE_MAX;
        for (size_t i = r; i < m.rows(); ++i) {
            if (m.at(i, c).is_zero()) continue;
            size_t sz = m.at(i, c).num_factors().size() + m.at(i, c).den_factors().size();
            if (sz < best_size) {
                best = i;
                best_size = sz;
            }
        }
        if (best == m.rows()) continue;
        if (best != r)
            for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(r, j), m.at(best, j));
        ExactScalar inv = m.at(r, c).inverse();
        for (size_t j = c; j < m.cols(); ++j) m.at(r, j) = m.at(r, j) * inv;
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            ExactScalar f = m.at(i, c);
            for (size_t j = c; j < m.cols(); ++j) m.at(i, j) = m.at(i, j) - f * m.at(r, j);
        }
        out.pivot_col.push_back((int)c);
        out.pivot_row_of_col[c] = (int)r;
        ++r;
    }
    out.m = std::move(m);
    return out;
}

} // namespace

Matrix::Elimination Matrix::rank_certificate() const {
    Reduced red = row_reduce(*this);
    Elimination e;
    e.rank = (int)red.pivot_col.size();
    for (size_t i = 0; i < red.pivot_col.size(); ++i)
        e.pivots.push_back({(int)i, red.pivot_col[i]});
    return e;
}

std::vector<std::vector<ExactScalar>> Matrix::kernel() const {
    Reduced red = row_reduce(*this);
    std::vector<std::vector<ExactScalar>> basis;
    for (size_t c = 0; c < cols_; ++c) {
        if (red.pivot_row_of_col[c] >= 0) continue;
        std::vector<ExactScalar> v(cols_);
        v[c] = ExactScalar(1L);
        for (size_t pc = 0; pc < cols_; ++pc) {
            int pr = red.pivot_row_of_col[pc];
            if (pr >= 0) v[pc] = -red.m.at(pr, c);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<ExactScalar>> Matrix::solve(const std::vector<ExactScalar>& b) const {
    Matrix aug(rows_, cols_ + 1);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_) = b[i];
    }
    Reduced red = row_reduce(aug);
    // inconsistent if a pivot falls in the augmented column
    for (int pc : red.pivot_col)
        if (pc == (int)cols_) return std::nullopt;
    std::vector<ExactScalar> x(cols_);
    for (size_t c = 0; c < cols_; ++c) {
        int pr = red.pivot_row_of_col[c];
        if (pr >= 0) x[c] = red.m.at(pr, cols_);
    }
    return x;
}

std::optional<Matrix> Matrix::inverse() const {
    if (rows_ != cols_) return std::nullopt;
    Matrix aug(rows_, 2 * cols_);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_ + i) = ExactScalar(1L);
    }
    Reduced red = row_reduce(aug);
    if ((int)red.pivot_col.size() < (int)rows_) return std::nullopt;
    for (size_t i = 0; i < rows_; ++i)
        if (red.pivot_col[i] != (int)i) return std::nullopt;
    Matrix inv(rows_, cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) inv.at(i, j) = red.m.at(i, cols_ + j);
    return inv;
}

} // namespace dtv

#pragma once

#include <utility>
#include <vector>

#include "rookmaze/field.hpp"

namespace rookmaze {

// Dense matrix over an exact field, 0-based indices.
template <class F>
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, F(0)) {
        if (rows < 0 || cols < 0) throw DomainError("negative matrix dimension");
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = F(1);
        return m;
    }
    // 1's on the antidiagonal.
    static Matrix antidiagonal(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, n - 1 - i) = F(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    F& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const F& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

    Matrix operator+(const Matrix& o) const {
        same_shape(o);
        Matrix r(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
        return r;
    }
    Matrix operator-(const Matrix& o) const {
        same_shape(o);
        Matrix r(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
        return r;
    }
    Matrix operator-() const {
        Matrix r(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
        return r;
    }
    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw DomainError("matrix shape mismatch in product");
        Matrix r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const F& x = (*this)(i, k);
                if (is_zero(x)) continue;
                for (int j = 0; j < o.cols_; ++j) r(i, j) += x * o(k, j);
            }
        return r;
    }
    Matrix scaled(const F& s) const {
        Matrix r(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
        return r;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    Matrix block(int r0, int c0, int nr, int nc) const {
        if (r0 < 0 || c0 < 0 || r0 + nr > rows_ || c0 + nc > cols_) throw DomainError("block out of range");
        Matrix r(nr, nc);
        for (int i = 0; i < nr; ++i)
            for (int j = 0; j < nc; ++j) r(i, j) = (*this)(r0 + i, c0 + j);
        return r;
    }
    void set_block(int r0, int c0, const Matrix& b) {
        if (r0 < 0 || c0 < 0 || r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw DomainError("block out of range");
        for (int i = 0; i < b.rows_; ++i)
            for (int j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
    }

    bool is_zero_matrix() const {
        for (const F& x : a_)
            if (!is_zero(x)) return false;
        return true;
    }
    bool is_upper() const {
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < i && j < cols_; ++j)
                if (!is_zero((*this)(i, j))) return false;
        return true;
    }
    bool is_strictly_upper() const {
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j <= i && j < cols_; ++j)
                if (!is_zero((*this)(i, j))) return false;
        return true;
    }
    F trace() const {
        F t(0);
        for (int i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
        return t;
    }

private:
    void same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix shape mismatch");
    }

    int rows_ = 0, cols_ = 0;
    std::vector<F> a_;
};

// Reduced row echelon form and pivot columns.
template <class F>
std::pair<Matrix<F>, std::vector<int>> rref(Matrix<F> m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int p = row;
        while (p < m.rows() && is_zero(m(p, col))) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
        F inv = F(1) / m(row, col);
        for (int j = 0; j < m.cols(); ++j) m(row, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || is_zero(m(i, col))) continue;
            F f = m(i, col);
            for (int j = 0; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

template <class F>
int rank(const Matrix<F>& m) {
    return static_cast<int>(rref(m).second.size());
}

// Basis of {v : m v = 0}, one vector per free column.
template <class F>
std::vector<std::vector<F>> nullspace(const Matrix<F>& m) {
    auto [r, pivots] = rref(m);
    std::vector<char> is_pivot(m.cols(), 0);
    for (int p : pivots) is_pivot[p] = 1;
    std::vector<std::vector<F>> basis;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<F> v(m.cols(), F(0));
        v[free] = F(1);
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r(static_cast<int>(k), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class F>
F det(Matrix<F> m) {
    if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
    const int n = m.rows();
    F d(1);
    for (int col = 0; col < n; ++col) {
        int p = col;
        while (p < n && is_zero(m(p, col))) ++p;
        if (p == n) return F(0);
        if (p != col) {
            for (int j = 0; j < n; ++j) std::swap(m(p, j), m(col, j));
            d = -d;
        }
        d *= m(col, col);
        F inv = F(1) / m(col, col);
        for (int i = col + 1; i < n; ++i) {
            if (is_zero(m(i, col))) continue;
            F f = m(i, col) * inv;
            for (int j = col; j < n; ++j) m(i, j) -= f * m(col, j);
        }
    }
    return d;
}

template <class F>
Matrix<F> inverse(const Matrix<F>& m) {
    if (m.rows() != m.cols()) throw DomainError("inverse of a non-square matrix");
    const int n = m.rows();
    if (n == 0) return m;
    Matrix<F> aug(n, 2 * n);
    aug.set_block(0, 0, m);
    aug.set_block(0, n, Matrix<F>::identity(n));
    auto [r, pivots] = rref(aug);
    if (static_cast<int>(pivots.size()) < n || pivots[n - 1] != n - 1) throw DomainError("matrix is singular");
    return r.block(0, n, n, n);
}

}  // namespace rookmaze

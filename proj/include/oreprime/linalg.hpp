#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "oreprime/error.hpp"

namespace oreprime {

/// Dense row-major matrix over an exact field F. F must provide + - * /,
/// isZero() and isOne(). The zero element is passed explicitly because
/// finite-field elements carry their field.
template <class F>
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, F zero) : rows_(rows), cols_(cols), zero_(zero), a_(rows * cols, zero) {}

    static Matrix identity(std::size_t n, F zero, F one) {
        Matrix m(n, n, zero);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const F& zero() const { return zero_; }

    F& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const F& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    const std::vector<F>& data() const { return a_; }

    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.cols_ != y.rows_) throw DomainError("matrix shape mismatch");
        Matrix r(x.rows_, y.cols_, x.zero_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t k = 0; k < x.cols_; ++k) {
                const F& xik = x(i, k);
                if (xik.isZero()) continue;
                for (std::size_t j = 0; j < y.cols_; ++j) r(i, j) = r(i, j) + xik * y(k, j);
            }
        return r;
    }
    friend Matrix operator+(const Matrix& x, const Matrix& y) {
        Matrix r = x;
        for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = r.a_[i] + y.a_[i];
        return r;
    }
    friend Matrix operator-(const Matrix& x, const Matrix& y) {
        Matrix r = x;
        for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = r.a_[i] - y.a_[i];
        return r;
    }
    Matrix scaled(const F& s) const {
        Matrix r = *this;
        for (auto& v : r.a_) v = s * v;
        return r;
    }
    std::vector<F> apply(const std::vector<F>& v) const {
        std::vector<F> out(rows_, zero_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!v[j].isZero()) out[i] = out[i] + (*this)(i, j) * v[j];
        return out;
    }
    bool isZero() const {
        for (const auto& v : a_)
            if (!v.isZero()) return false;
        return true;
    }
    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

private:
    std::size_t rows_, cols_;
    F zero_;
    std::vector<F> a_;
};

/// In-place reduced row echelon form; returns the pivot columns.
template <class F>
std::vector<std::size_t> rref(Matrix<F>& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && m(sel, col).isZero()) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(row, j));
        F inv = m(row, col);
        if (!inv.isOne()) {
            for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = m(row, j) / inv;
        }
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).isZero()) continue;
            F f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class F>
std::size_t rank(Matrix<F> m) {
    return rref(m).size();
}

/// Basis of {v : m v = 0}, one vector per free column, in increasing free-column order.
template <class F>
std::vector<std::vector<F>> nullspace(Matrix<F> m, const F& one) {
    auto pivots = rref(m);
    std::vector<bool> isPivot(m.cols(), false);
    for (auto p : pivots) isPivot[p] = true;
    std::vector<std::vector<F>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (isPivot[free]) continue;
        std::vector<F> v(m.cols(), m.zero());
        v[free] = one;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Some x with A x = b, or nullopt when the system is inconsistent.
template <class F>
std::optional<std::vector<F>> solve(const Matrix<F>& a, const std::vector<F>& b) {
    Matrix<F> aug(a.rows(), a.cols() + 1, a.zero());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
    std::vector<F> x(a.cols(), a.zero());
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, a.cols());
    return x;
}

template <class F>
F determinant(Matrix<F> m, const F& one) {
    if (m.rows() != m.cols()) throw DomainError("determinant of non-square matrix");
    F det = one;
    std::size_t n = m.rows();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t sel = c;
        while (sel < n && m(sel, c).isZero()) ++sel;
        if (sel == n) return m.zero();
        if (sel != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(sel, j), m(c, j));
            det = -det;
        }
        det = det * m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c).isZero()) continue;
            F f = m(i, c) / m(c, c);
            for (std::size_t j = c; j < n; ++j) m(i, j) = m(i, j) - f * m(c, j);
        }
    }
    return det;
}

/// Incrementally maintained echelon basis of a subspace of F^n; used for
/// span closures (submodules, algebra spans).
template <class F>
class EchelonBasis {
public:
    EchelonBasis(std::size_t n, F zero) : n_(n), zero_(zero) {}

    std::size_t dim() const { return rows_.size(); }
    std::size_t ambient() const { return n_; }
    const std::vector<std::vector<F>>& vectors() const { return original_; }

    /// Reduces v against the basis; returns the residue.
    std::vector<F> reduce(std::vector<F> v) const {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const F& c = v[pivot_[r]];
            if (c.isZero()) continue;
            F f = c;
            for (std::size_t j = 0; j < n_; ++j)
                if (!rows_[r][j].isZero()) v[j] = v[j] - f * rows_[r][j];
        }
        return v;
    }
    bool contains(const std::vector<F>& v) const {
        auto r = reduce(v);
        for (const auto& x : r)
            if (!x.isZero()) return false;
        return true;
    }
    /// Adds v if independent; returns true when the span grew.
    bool insert(const std::vector<F>& v) {
        auto r = reduce(v);
        std::size_t p = 0;
        while (p < n_ && r[p].isZero()) ++p;
        if (p == n_) return false;
        F inv = r[p];
        for (auto& x : r) x = x / inv;
        for (auto& row : rows_) {
            if (row[p].isZero()) continue;
            F f = row[p];
            for (std::size_t j = 0; j < n_; ++j) row[j] = row[j] - f * r[j];
        }
        rows_.push_back(std::move(r));
        pivot_.push_back(p);
        original_.push_back(v);
        return true;
    }

private:
    std::size_t n_;
    F zero_;
    std::vector<std::vector<F>> rows_;
    std::vector<std::size_t> pivot_;
    std::vector<std::vector<F>> original_;
};

}  // namespace oreprime

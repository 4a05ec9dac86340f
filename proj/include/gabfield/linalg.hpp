#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "gabfield/poly.hpp"

namespace gabfield {

/// Rectangular dense matrix over an exact field value type.
template <FieldValue F>
class Matrix {
  public:
    Matrix(std::size_t rows, std::size_t cols, const F& fill)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n, const F& one) {
        Matrix m(n, n, one.zero_like());
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = one;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    F& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const F& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
        Matrix r(a.rows_, b.cols_, a.data_.empty() ? b.data_.at(0).zero_like()
                                                   : a.data_.at(0).zero_like());
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a.at(i, k).is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    r.at(i, j) = r.at(i, j) + a.at(i, k) * b.at(k, j);
            }
        return r;
    }

  private:
    std::size_t rows_, cols_;
    std::vector<F> data_;
};

/// In-place reduced row echelon form with exact arithmetic. Pivot rule is
/// first nonzero entry in column order, which keeps results deterministic.
/// Returns the pivot columns in order.
template <FieldValue F>
std::vector<std::size_t> rref_in_place(Matrix<F>& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && m.at(sel, col).is_zero()) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(row, j));
        F inv_pivot = m.at(row, col).one_like() / m.at(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) = m.at(row, j) * inv_pivot;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            F factor = m.at(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m.at(i, j) = m.at(i, j) - factor * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <FieldValue F>
std::size_t rank_of(Matrix<F> m) {
    return rref_in_place(m).size();
}

/// Basis of the right kernel {v : M v = 0}, one vector per free column,
/// in free-column order (deterministic given the fixed pivot rule).
template <FieldValue F>
std::vector<std::vector<F>> kernel_basis(Matrix<F> m, const F& one) {
    std::vector<std::size_t> pivots = rref_in_place(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<F>> basis;
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<F> v(m.cols(), one.zero_like());
        v[free_col] = one;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m.at(i, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace gabfield

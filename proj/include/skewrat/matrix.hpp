#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "error.hpp"

namespace skewrat {

/// Dense matrix over an exact base field (F_p or Q). Row-major.
template <class B>
class Matrix {
   public:
    Matrix(std::size_t rows, std::size_t cols, const B& zero)
        : rows_(rows), cols_(cols), zero_(zero), data_(rows * cols, zero) {}

    static Matrix identity(std::size_t n, const B& zero, const B& one) {
        Matrix m(n, n, zero);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const B& zero() const noexcept { return zero_; }

    B& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const B& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<B> column(std::size_t c) const {
        std::vector<B> out;
        out.reserve(rows_);
        for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
        return out;
    }

    void set_column(std::size_t c, std::span<const B> values) {
        for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = values[r];
    }

    std::vector<B> apply(std::span<const B> x) const {
        std::vector<B> out;
        out.reserve(rows_);
        for (std::size_t r = 0; r < rows_; ++r) {
            B acc = zero_;
            for (std::size_t c = 0; c < cols_; ++c) acc += (*this)(r, c) * x[c];
            out.push_back(std::move(acc));
        }
        return out;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        Matrix out(a.rows_, b.cols_, a.zero_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (is_zero(a(i, k))) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
            }
        return out;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) {
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
        return a;
    }

    friend Matrix operator-(Matrix a, const Matrix& b) {
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
        return a;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

   private:
    std::size_t rows_;
    std::size_t cols_;
    B zero_;
    std::vector<B> data_;
};

/// Reduced row echelon form together with its pivot columns.
template <class B>
struct Echelon {
    Matrix<B> reduced;
    std::vector<std::size_t> pivots;
};

template <class B>
Echelon<B> row_reduce(Matrix<B> m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && is_zero(m(sel, col))) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
        const B inv = inverse(m(row, col));
        for (std::size_t c = col; c < m.cols(); ++c) m(row, c) = m(row, c) * inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || is_zero(m(r, col))) continue;
            const B factor = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

template <class B>
std::size_t rank(const Matrix<B>& m) {
    return row_reduce(m).pivots.size();
}

template <class B>
bool is_invertible(const Matrix<B>& m) {
    return m.rows() == m.cols() && rank(m) == m.rows();
}

/// Basis of {x : m x = 0}.
template <class B>
std::vector<std::vector<B>> nullspace(const Matrix<B>& m, const B& zero, const B& one) {
    const auto ech = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : ech.pivots) is_pivot[p] = true;
    std::vector<std::vector<B>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<B> v(m.cols(), zero);
        v[free] = one;
        for (std::size_t i = 0; i < ech.pivots.size(); ++i) v[ech.pivots[i]] = -ech.reduced(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Some solution of m x = rhs, or nullopt when the system is inconsistent.
template <class B>
std::optional<std::vector<B>> solve_any(const Matrix<B>& m, std::span<const B> rhs, const B& zero) {
    Matrix<B> aug(m.rows(), m.cols() + 1, zero);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
        aug(r, m.cols()) = rhs[r];
    }
    const auto ech = row_reduce(std::move(aug));
    if (!ech.pivots.empty() && ech.pivots.back() == m.cols()) return std::nullopt;
    std::vector<B> x(m.cols(), zero);
    for (std::size_t i = 0; i < ech.pivots.size(); ++i) x[ech.pivots[i]] = ech.reduced(i, m.cols());
    return x;
}

/// Unique solution of a square nonsingular system; nullopt when m is singular.
template <class B>
std::optional<std::vector<B>> solve_unique(const Matrix<B>& m, std::span<const B> rhs, const B& zero) {
    if (!is_invertible(m)) return std::nullopt;
    return solve_any(m, rhs, zero);
}

}  // namespace skewrat

#pragma once

// Exact dense linear algebra over Z and Q. Sizes in this project stay below
// ~25, so everything is plain Gaussian elimination on GMP numbers.

#include "tyurin/integer.hpp"

#include <cassert>
#include <optional>
#include <vector>

namespace tyurin {

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols)
    {
        Matrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            assert(rows[i].size() == cols);
            for (std::size_t j = 0; j < cols; ++j)
                m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<T> row(std::size_t r) const
    {
        return std::vector<T>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
    }

    std::vector<T> col(std::size_t c) const
    {
        std::vector<T> out(rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            out[r] = (*this)(r, c);
        return out;
    }

    Matrix transpose() const
    {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                t(c, r) = (*this)(r, c);
        return t;
    }

    void swap_rows(std::size_t a, std::size_t b)
    {
        if (a == b)
            return;
        for (std::size_t c = 0; c < cols_; ++c)
            std::swap((*this)(a, c), (*this)(b, c));
    }

    void swap_cols(std::size_t a, std::size_t b)
    {
        if (a == b)
            return;
        for (std::size_t r = 0; r < rows_; ++r)
            std::swap((*this)(r, a), (*this)(r, b));
    }

    /// row[dst] += k * row[src]
    void add_row(std::size_t dst, std::size_t src, const T& k)
    {
        for (std::size_t c = 0; c < cols_; ++c)
            (*this)(dst, c) += k * (*this)(src, c);
    }

    /// col[dst] += k * col[src]
    void add_col(std::size_t dst, std::size_t src, const T& k)
    {
        for (std::size_t r = 0; r < rows_; ++r)
            (*this)(r, dst) += k * (*this)(r, src);
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        assert(a.cols_ == b.rows_);
        Matrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a(i, k) == 0)
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    out(i, j) += a(i, k) * b(k, j);
            }
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

RatMatrix to_rational(const IntMatrix& m);

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& m);

std::size_t rank(const IntMatrix& m);
std::size_t rank(const RatMatrix& m);

/// A particular solution of A x = b (free variables set to 0), or nullopt
/// when the system is inconsistent.
std::optional<std::vector<Rational>> solve(const RatMatrix& a, const std::vector<Rational>& b);

/// Basis of the right null space over Q.
std::vector<std::vector<Rational>> nullspace(const RatMatrix& a);

std::optional<RatMatrix> inverse(const RatMatrix& a);

/// Bareiss fraction-free determinant.
Integer determinant(const IntMatrix& a);

/// Basis of {x in Z^n : A x = 0}. The returned lattice is saturated.
std::vector<LatticeVector> integer_kernel(const IntMatrix& a);

struct SmithForm {
    IntMatrix u; // unimodular, rows x rows
    IntMatrix d; // diagonal, d = u * a * v
    IntMatrix v; // unimodular, cols x cols
};

SmithForm smith_normal_form(const IntMatrix& a);

/// Nonzero diagonal entries of the Smith form, ascending by divisibility.
std::vector<Integer> invariant_factors(const IntMatrix& a);

/// Unimodular matrix whose first column is the primitive vector c.
IntMatrix unimodular_completion(const LatticeVector& c);

/// Scales a rational vector to the primitive integer vector with the same
/// direction (positive multiple). Zero maps to zero.
LatticeVector primitive_integer(const std::vector<Rational>& v);

} // namespace tyurin

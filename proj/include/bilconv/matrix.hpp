#pragma once

#include <cassert>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bilconv/scalar.hpp"

namespace bilconv {

/// Dense row-major matrix over one scalar domain.
template <typename T>
class Matrix {
public:
    using value_type = T;

    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows_ * cols_)
            throw std::invalid_argument("matrix entry count does not match shape");
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<T>& data() const { return data_; }
    std::vector<T>& data() { return data_; }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<T> data_;
};

template <typename T>
Matrix<T> matmul(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matmul shape mismatch");
    Matrix<T> c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const T& aik = a(i, k);
            if (scalar_is_zero(aik)) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

template <typename T>
std::vector<T> matvec(const Matrix<T>& m, const std::vector<T>& x) {
    if (m.cols() != x.size()) throw std::invalid_argument("matvec shape mismatch");
    std::vector<T> y(m.rows(), T(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) y[i] += m(i, j) * x[j];
    return y;
}

/// y = M^T x without forming the transpose.
template <typename T>
std::vector<T> matvec_transposed(const Matrix<T>& m, const std::vector<T>& x) {
    if (m.rows() != x.size()) throw std::invalid_argument("matvec shape mismatch");
    std::vector<T> y(m.cols(), T(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) y[j] += m(i, j) * x[i];
    return y;
}

template <typename T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
    Matrix<T> k(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (scalar_is_zero(a(i, j))) continue;
            for (std::size_t p = 0; p < b.rows(); ++p)
                for (std::size_t q = 0; q < b.cols(); ++q)
                    k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
        }
    return k;
}

/// Gaussian elimination with partial pivoting on scalar magnitude.
/// Exact over rationals; the generators only ever invert at generation time.
template <typename T>
Matrix<T> inverse(const Matrix<T>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
    const std::size_t n = m.rows();
    Matrix<T> a = m;
    Matrix<T> inv = Matrix<T>::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        auto best = scalar_mag(a(col, col));
        for (std::size_t r = col + 1; r < n; ++r) {
            auto cand = scalar_mag(a(r, col));
            if (cand > best) { best = cand; piv = r; }
        }
        if (scalar_is_zero(a(piv, col))) throw std::domain_error("singular matrix");
        if (piv != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(col, j), a(piv, j));
                std::swap(inv(col, j), inv(piv, j));
            }
        T d = a(col, col);
        for (std::size_t j = 0; j < n; ++j) { a(col, j) /= d; inv(col, j) /= d; }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || scalar_is_zero(a(r, col))) continue;
            T f = a(r, col);
            for (std::size_t j = 0; j < n; ++j) {
                a(r, j) -= f * a(col, j);
                inv(r, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

/// Solve M x = rhs by the same elimination as inverse(); exact over rationals.
template <typename T>
std::vector<T> solve(Matrix<T> a, std::vector<T> rhs) {
    if (a.rows() != a.cols() || a.rows() != rhs.size())
        throw std::invalid_argument("solve shape mismatch");
    const std::size_t n = a.rows();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        auto best = scalar_mag(a(col, col));
        for (std::size_t r = col + 1; r < n; ++r) {
            auto cand = scalar_mag(a(r, col));
            if (cand > best) { best = cand; piv = r; }
        }
        if (scalar_is_zero(a(piv, col))) throw std::domain_error("singular system");
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(col, j), a(piv, j));
            std::swap(rhs[col], rhs[piv]);
        }
        T d = a(col, col);
        for (std::size_t j = 0; j < n; ++j) a(col, j) /= d;
        rhs[col] /= d;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || scalar_is_zero(a(r, col))) continue;
            T f = a(r, col);
            for (std::size_t j = 0; j < n; ++j) a(r, j) -= f * a(col, j);
            rhs[r] -= f * rhs[col];
        }
    }
    return rhs;
}

template <typename T>
std::size_t nnz(const Matrix<T>& m) {
    std::size_t count = 0;
    for (const T& x : m.data())
        if (!scalar_is_zero(x)) ++count;
    return count;
}

inline Matrix<double> to_real(const Matrix<Rational>& m) {
    Matrix<double> out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).to_double();
    return out;
}

inline Matrix<Complex> to_complex(const Matrix<double>& m) {
    Matrix<Complex> out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Complex(m(i, j), 0.0);
    return out;
}

}  // namespace bilconv

#pragma once

#include <optional>
#include <vector>

#include "bilconv/matrix.hpp"
#include "bilconv/poly.hpp"

namespace bilconv {

/// Interpolation node: a finite exact rational or the point at infinity.
/// Within a node set all nodes are distinct and infinity, if present, is last.
struct Node {
    std::optional<Rational> value;  // nullopt marks infinity

    static Node finite(Rational v) { return Node{std::move(v)}; }
    static Node infinity() { return Node{std::nullopt}; }
    bool is_infinity() const { return !value.has_value(); }

    friend bool operator==(const Node& a, const Node& b) { return a.value == b.value; }
};

/// Lower-trapezoidal Toeplitz T_<f> with n columns; column j holds f shifted down by j.
/// T_<f> g computes the linear convolution f * g.
template <typename T>
Matrix<T> toeplitz_of(const std::vector<T>& f, std::size_t n) {
    if (f.empty() || n == 0) throw std::invalid_argument("toeplitz_of: empty input");
    Matrix<T> t(n + f.size() - 1, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < f.size(); ++i) t(i + j, j) = f[i];
    return t;
}

/// Circulant C_<f>, entry (i,j) = f_{(i-j) mod n}; C_<f> g is cyclic convolution.
template <typename T>
Matrix<T> circulant_of(const std::vector<T>& f) {
    if (f.empty()) throw std::invalid_argument("circulant_of: empty input");
    const std::size_t n = f.size();
    Matrix<T> c(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) c(i, j) = f[(i + n - j) % n];
    return c;
}

/// Truncated-transpose Vandermonde: entry (i,l) = x_l^i for finite nodes.
/// An infinity column is zero except a 1 in the last requested row.
/// The square matrix (rows = nodes) used for the decode inverse is the
/// transpose of this with num_rows equal to the node count.
Matrix<Rational> vandermonde(const std::vector<Node>& nodes, std::size_t num_rows);

/// Same shape over real nodes (Chebyshev path); no infinity handling needed.
Matrix<double> vandermonde_real(const std::vector<double>& nodes, std::size_t num_rows);

/// Remainder operator X_m^d: deg(m) x (d+1) with X p = coefficients of p mod m
/// for any polynomial p of degree at most d. Built as [I  -L U^-1] from the
/// column split of T_<m>; when d < deg m no reduction is needed and the
/// operator is the identity padded with zero rows.
Matrix<Rational> mod_operator(const Polynomial<Rational>& m, std::size_t d);

/// Bezout cofactors: Mhat*Nhat + mhat*nhat = 1 with deg Nhat <= deg mhat - 1
/// and deg nhat <= deg Mhat - 1, via the stacked-Toeplitz system against e0.
/// Throws std::domain_error when the inputs are not coprime.
std::pair<Polynomial<Rational>, Polynomial<Rational>> bezout_solve(
    const Polynomial<Rational>& Mhat, const Polynomial<Rational>& mhat);

/// DFT matrix, entry (m,k) = exp(-2*pi*i/n)^(m*k).
Matrix<Complex> dft_matrix(std::size_t n);

/// DCT-1 matrix of size (N+1)x(N+1): entry (i,j) = eps_{N,j} cos(i*j*pi/N)
/// with eps = 1/2 at j in {0, N} and 1 elsewhere. Satisfies C^-1 = (2/N) C.
Matrix<double> dct1_matrix(std::size_t N);

}  // namespace bilconv

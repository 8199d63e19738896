#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bilconv/bilinear.hpp"
#include "bilconv/structured.hpp"

namespace bilconv {

// Two node schemes: the pinned small-integer sequence (exact) and first-kind
// Chebyshev points (real). The cost tables depend on the integer sequence.

/// 0, 1, -1, 2, -2, 3, -3, ... with the infinity point last. Deterministic.
std::vector<Node> default_nodes(std::size_t count);

/// cos((2i+1)pi/(2R)) on [-1,1]; no infinity node.
std::vector<double> chebyshev_nodes(std::size_t count);

/// Toom-Cook: A and B are the first r and n rows of the truncated-transpose
/// Vandermonde, C the inverse of the square matrix (infinity-node convention
/// folds the leading-coefficient product into the last row/column).
BilinearAlgorithm<Rational> toom_cook(std::size_t r, std::size_t n,
                                      const std::vector<Node>& nodes);

/// Same construction over real nodes (used with the Chebyshev scheme).
BilinearAlgorithm<double> toom_cook_real(std::size_t r, std::size_t n,
                                         const std::vector<double>& nodes);

/// Pairwise-coprime polynomial divisors with sum of degrees n+r-1.
struct DivisorSet {
    std::vector<Polynomial<Rational>> divisors;

    Polynomial<Rational> product() const;
    std::size_t degree_sum() const;
    /// Verifies pairwise coprimality by solving Bezout on every pair.
    void check_coprime() const;
};

/// Parses "x^2+1; x; x+1; x-1" with rational coefficients ("x+1/2");
/// each polynomial is a sum of terms c*x^k with c rational.
DivisorSet parse_divisors(const std::string& text);
Polynomial<Rational> parse_polynomial(const std::string& text);

/// The cumulative divisor list of the Winograd cost table for a size-n
/// convolution (n = 2: x^2+1, x; each later n appends two more).
DivisorSet table3_divisors(std::size_t n);

/// A default divisor set with the given degree sum: the table list prefix
/// when one fits exactly, otherwise distinct linear factors x, x-1, x+1, ...
DivisorSet default_divisors(std::size_t degree_sum);

/// CRT assembly over the divisor set (exact rationals). Sub-algorithms
/// default to the trivial rank-1 triple for degree-1 divisors and Toom-Cook
/// with default nodes for higher degree; callers may override per degree.
BilinearAlgorithm<Rational> winograd(
    std::size_t r, std::size_t n, const DivisorSet& divisors,
    const std::map<std::size_t, BilinearAlgorithm<Rational>>& sub_algs = {});

/// (D^T, D^T, D^-1): cyclic convolution of size n in the complex domain.
BilinearAlgorithm<Complex> dft_cyclic_alg(std::size_t n);

/// Cyclic size n+r-1 DFT algorithm with A, B truncated to r and n rows
/// (the zero padding is absorbed into the truncation).
BilinearAlgorithm<Complex> dft_linear_alg(std::size_t r, std::size_t n);

/// DCT-1 linear convolution for two length-n inputs: both inputs are
/// zero-padded (floor(n/2)+1 leading, floor(3n/2)+2 trailing), pushed through
/// the DCT-1 triple, scaled by 2, and the output window holding the linear
/// convolution is extracted. The window offset is calibrated once against
/// direct_conv at construction and frozen into the decode matrix.
BilinearAlgorithm<double> dct_linear_alg(std::size_t n);

/// Literal fixed algorithms.
BilinearAlgorithm<Rational> karatsuba_alg();
BilinearAlgorithm<Rational> sparse3_alg();
BilinearAlgorithm<Rational> direct_alg(std::size_t r, std::size_t n);

}  // namespace bilconv

#pragma once

#include <vector>

#include "bilconv/bilinear.hpp"

namespace bilconv {

/// Factorization n = gamma * eta of a long linear convolution into gamma
/// blocks of length eta.
struct OverlapShape {
    std::size_t gamma;
    std::size_t eta;

    std::size_t n() const { return gamma * eta; }
};

/// Recomposition matrix Q^(gamma,eta): (2n-1) x (2gamma-1)(2eta-1) 0/1 matrix
/// with q_ij = 1 iff i = j - (eta-1) floor(j / (2eta-1)). Every column has
/// exactly one 1 and every row at most two, so ||Q||_2 <= sqrt(2).
template <typename T>
Matrix<T> overlap_add_matrix(OverlapShape shape) {
    if (shape.gamma < 1 || shape.eta < 1)
        throw std::invalid_argument("overlap_add_matrix: gamma, eta >= 1");
    const std::size_t n = shape.n();
    const std::size_t block = 2 * shape.eta - 1;
    Matrix<T> q(2 * n - 1, (2 * shape.gamma - 1) * block);
    for (std::size_t j = 0; j < q.cols(); ++j) {
        std::size_t i = j - (shape.eta - 1) * (j / block);
        q(i, j) = T(1);
    }
    return q;
}

/// Compose linear(gamma,gamma) with linear(eta,eta) into linear(gamma*eta,
/// gamma*eta): Kronecker-nest, then fold the 2D output back to 1D by the
/// recomposition matrix (C <- Q (C_gamma x C_eta)). Vector index k maps to
/// chunk (k / eta, k mod eta).
template <typename T>
BilinearAlgorithm<T> overlap_add_nest(const BilinearAlgorithm<T>& alg_gamma,
                                      const BilinearAlgorithm<T>& alg_eta) {
    const auto& vg = alg_gamma.variant;
    const auto& ve = alg_eta.variant;
    if (vg.kind != ConvVariant::Kind::linear || ve.kind != ConvVariant::Kind::linear ||
        vg.r != vg.n || ve.r != ve.n || alg_gamma.vec_nested || alg_eta.vec_nested)
        throw std::invalid_argument("overlap_add_nest: square 1D linear algorithms required");
    OverlapShape shape{vg.n, ve.n};
    Matrix<T> c = matmul(overlap_add_matrix<T>(shape), kron(alg_gamma.C, alg_eta.C));
    return make_algorithm(kron(alg_gamma.A, alg_eta.A), kron(alg_gamma.B, alg_eta.B),
                          std::move(c), ConvVariant::linear(shape.n(), shape.n()),
                          "overlap-add " + std::to_string(shape.gamma) + "x" +
                              std::to_string(shape.eta) + " of (" + alg_gamma.provenance +
                              ") and (" + alg_eta.provenance + ")");
}

/// Blocked small-filter convolution: split g into n/r chunks, convolve each
/// chunk with f by alg_r, overlap-add the tails. Equals T_<f> g. When r does
/// not divide n, g is zero-padded and the result truncated.
template <typename T>
std::vector<T> small_filter_conv(const std::vector<T>& f, const std::vector<T>& g,
                                 const BilinearAlgorithm<T>& alg_r) {
    if (f.empty() || g.empty())
        throw std::invalid_argument("small_filter_conv: empty input");
    const std::size_t r = f.size();
    if (alg_r.variant.kind != ConvVariant::Kind::linear || alg_r.variant.r != r ||
        alg_r.variant.n != r)
        throw std::invalid_argument("small_filter_conv: algorithm must be linear(r,r)");
    const std::size_t n = g.size();
    const std::size_t blocks = (n + r - 1) / r;
    std::vector<T> y(blocks * r + r - 1, T(0));
    std::vector<T> chunk(r);
    for (std::size_t b = 0; b < blocks; ++b) {
        for (std::size_t i = 0; i < r; ++i) {
            std::size_t idx = b * r + i;
            chunk[i] = idx < n ? g[idx] : T(0);
        }
        std::vector<T> part = apply(alg_r, f, chunk);
        for (std::size_t i = 0; i < part.size(); ++i) y[b * r + i] += part[i];
    }
    y.resize(n + r - 1);
    return y;
}

/// CRT index split for n = n1*n2 with gcd(n1,n2) = 1: e1 = n2*m2, e2 = n1*m1
/// where n1*m1 + n2*m2 = 1.
struct CrtSplit {
    std::size_t n1, n2;
    long long m1, m2;
    std::size_t e1, e2;
};

/// Permutation with [P]_ij = 1 iff j = (floor(i/n2) e1 + (i mod n2) e2) mod n.
std::pair<Matrix<Rational>, CrtSplit> crt_permutation(std::size_t n1, std::size_t n2);

/// Agarwal-Cooley: cyclic(n1*n2) from coprime cyclic parts, with the CRT
/// permutation folded into all three matrices:
/// (P^T (A1 x A2), P^T (B1 x B2), P^T (C1 x C2)).
template <typename T>
BilinearAlgorithm<T> agarwal_cooley_nest(const BilinearAlgorithm<T>& alg_n1,
                                         const BilinearAlgorithm<T>& alg_n2) {
    if (alg_n1.variant.kind != ConvVariant::Kind::cyclic ||
        alg_n2.variant.kind != ConvVariant::Kind::cyclic)
        throw std::invalid_argument("agarwal_cooley_nest: cyclic algorithms required");
    const std::size_t n1 = alg_n1.variant.n, n2 = alg_n2.variant.n;
    auto [p_rat, split] = crt_permutation(n1, n2);
    Matrix<T> pt(p_rat.cols(), p_rat.rows());
    for (std::size_t i = 0; i < p_rat.rows(); ++i)
        for (std::size_t j = 0; j < p_rat.cols(); ++j)
            if (!p_rat(i, j).is_zero()) pt(j, i) = T(1);
    return make_algorithm(matmul(pt, kron(alg_n1.A, alg_n2.A)),
                          matmul(pt, kron(alg_n1.B, alg_n2.B)),
                          matmul(pt, kron(alg_n1.C, alg_n2.C)),
                          ConvVariant::cyclic(n1 * n2),
                          "agarwal-cooley " + std::to_string(n1) + "*" +
                              std::to_string(n2));
}

/// Rank factors of one 2D input: M = sum_i sigma_i u_i v_i^T.
template <typename T>
struct RankFactors2D {
    std::vector<T> sigma;
    std::vector<std::vector<T>> u;  // left vectors
    std::vector<std::vector<T>> v;  // right vectors
};

/// 2D convolution from rank decompositions: sum_{ij} sigma_i sigma_j
/// (u_i * u_j)(v_i * v_j)^T with every 1D convolution run through alg1d.
template <typename T>
Matrix<T> low_rank_conv2d(const RankFactors2D<T>& F, const RankFactors2D<T>& G,
                          const BilinearAlgorithm<T>& alg1d) {
    if (F.sigma.size() != F.u.size() || F.sigma.size() != F.v.size() ||
        G.sigma.size() != G.u.size() || G.sigma.size() != G.v.size())
        throw std::invalid_argument("low_rank_conv2d: inconsistent factor counts");
    const std::size_t out = alg1d.variant.out_len();
    Matrix<T> y(out, out);
    for (std::size_t i = 0; i < F.sigma.size(); ++i)
        for (std::size_t j = 0; j < G.sigma.size(); ++j) {
            T w = F.sigma[i] * G.sigma[j];
            if (scalar_is_zero(w)) continue;
            std::vector<T> uu = apply(alg1d, F.u[i], G.u[j]);
            std::vector<T> vv = apply(alg1d, F.v[i], G.v[j]);
            for (std::size_t a = 0; a < out; ++a)
                for (std::size_t b = 0; b < out; ++b) y(a, b) += w * uu[a] * vv[b];
        }
    return y;
}

}  // namespace bilconv

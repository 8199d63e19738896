#pragma once

#include <string>
#include <vector>

#include "bilconv/matrix.hpp"
#include "bilconv/tensor.hpp"

namespace bilconv {

/// The three convolution variants. linear(r,n) maps sizes (r,n) -> n+r-1;
/// cyclic(n) keeps everything at n; correlation(r,m) slides a size-r filter
/// over an input of size m+r-1 producing m outputs.
struct ConvVariant {
    enum class Kind { linear, cyclic, correlation };
    Kind kind;
    std::size_t r;  // filter size (== n for cyclic)
    std::size_t n;  // input size for linear/cyclic, output size for correlation

    static ConvVariant linear(std::size_t r, std::size_t n) {
        return {Kind::linear, r, n};
    }
    static ConvVariant cyclic(std::size_t n) { return {Kind::cyclic, n, n}; }
    static ConvVariant correlation(std::size_t r, std::size_t n_out) {
        return {Kind::correlation, r, n_out};
    }

    std::size_t f_len() const { return r; }
    std::size_t g_len() const {
        switch (kind) {
            case Kind::linear: return n;
            case Kind::cyclic: return n;
            case Kind::correlation: return n + r - 1;
        }
        return 0;
    }
    std::size_t out_len() const {
        switch (kind) {
            case Kind::linear: return n + r - 1;
            case Kind::cyclic: return n;
            case Kind::correlation: return n;
        }
        return 0;
    }

    const char* name() const {
        switch (kind) {
            case Kind::linear: return "linear";
            case Kind::cyclic: return "cyclic";
            case Kind::correlation: return "correlation";
        }
        return "?";
    }

    friend bool operator==(const ConvVariant& a, const ConvVariant& b) {
        return a.kind == b.kind && a.r == b.r && a.n == b.n;
    }
};

/// The 0/1 order-3 tensor whose CP decompositions are exactly the bilinear
/// algorithms for the variant: linear t_ijk = [i+j=k], cyclic [(i+j-k) mod n = 0],
/// correlation [i-j+k = 0].
class ConvTensor {
public:
    explicit ConvTensor(ConvVariant v) : v_(v) {}

    ConvVariant variant() const { return v_; }
    std::size_t dim_i() const { return v_.f_len(); }
    std::size_t dim_j() const { return v_.g_len(); }
    std::size_t dim_k() const { return v_.out_len(); }

    int entry(std::size_t i, std::size_t j, std::size_t k) const {
        switch (v_.kind) {
            case ConvVariant::Kind::linear: return i + j == k ? 1 : 0;
            case ConvVariant::Kind::cyclic: return (i + j) % v_.n == k % v_.n ? 1 : 0;
            case ConvVariant::Kind::correlation: return j == i + k ? 1 : 0;
        }
        return 0;
    }

private:
    ConvVariant v_;
};

inline ConvTensor conv_tensor(ConvVariant v) { return ConvTensor(v); }

/// A bilinear algorithm (A, B, C) computing y = C[(A^T f) .* (B^T g)].
/// vec_nested marks raw Kronecker compositions whose matrix row counts are
/// products of the base sizes rather than the 1D variant formulas.
template <typename T>
struct BilinearAlgorithm {
    Matrix<T> A, B, C;
    ConvVariant variant;
    std::string provenance;
    bool vec_nested = false;

    std::size_t rank() const { return A.cols(); }

    void check() const {
        if (A.cols() != B.cols() || A.cols() != C.cols())
            throw std::invalid_argument("bilinear algorithm: rank mismatch across A, B, C");
        if (!vec_nested) {
            if (A.rows() != variant.f_len() || B.rows() != variant.g_len() ||
                C.rows() != variant.out_len())
                throw std::invalid_argument("bilinear algorithm: row counts do not match variant");
            if (variant.kind == ConvVariant::Kind::linear && rank() < variant.out_len())
                throw std::invalid_argument("bilinear algorithm: rank below n+r-1");
        }
    }
};

template <typename T>
BilinearAlgorithm<T> make_algorithm(Matrix<T> a, Matrix<T> b, Matrix<T> c,
                                    ConvVariant v, std::string provenance) {
    BilinearAlgorithm<T> alg{std::move(a), std::move(b), std::move(c), v,
                             std::move(provenance)};
    alg.check();
    return alg;
}

namespace detail {
template <typename T>
struct residual_type { using type = double; };
template <>
struct residual_type<Rational> { using type = Rational; };
}  // namespace detail

/// Max over (i,j,k) of |sum_l a_il b_jl c_kl - t_ijk|. Exact over rationals.
template <typename T>
typename detail::residual_type<T>::type validate(const BilinearAlgorithm<T>& alg) {
    if (alg.vec_nested)
        throw std::invalid_argument("validate: raw nested algorithms have no 1D tensor");
    ConvTensor t(alg.variant);
    using R = typename detail::residual_type<T>::type;
    R worst(0);
    const std::size_t rk = alg.rank();
    for (std::size_t i = 0; i < t.dim_i(); ++i)
        for (std::size_t j = 0; j < t.dim_j(); ++j)
            for (std::size_t k = 0; k < t.dim_k(); ++k) {
                T s(0);
                for (std::size_t l = 0; l < rk; ++l)
                    s += alg.A(i, l) * alg.B(j, l) * alg.C(k, l);
                s -= T(t.entry(i, j, k));
                R mag = scalar_mag(s);
                if (mag > worst) worst = mag;
            }
    return worst;
}

template <typename T>
std::vector<T> apply(const BilinearAlgorithm<T>& alg, const std::vector<T>& f,
                     const std::vector<T>& g) {
    if (f.size() != alg.A.rows() || g.size() != alg.B.rows())
        throw std::invalid_argument("apply: input sizes do not match algorithm");
    std::vector<T> u = matvec_transposed(alg.A, f);
    std::vector<T> v = matvec_transposed(alg.B, g);
    for (std::size_t l = 0; l < u.size(); ++l) u[l] *= v[l];
    return matvec(alg.C, u);
}

/// Swap the roles of B and C: a linear(r,n) algorithm becomes a
/// correlation(r,n) algorithm and vice versa; rank and columns untouched.
template <typename T>
BilinearAlgorithm<T> interchange(const BilinearAlgorithm<T>& alg) {
    if (alg.variant.kind == ConvVariant::Kind::cyclic)
        throw std::invalid_argument("interchange: cyclic algorithms are not supported");
    ConvVariant v = alg.variant.kind == ConvVariant::Kind::linear
                        ? ConvVariant::correlation(alg.variant.r, alg.variant.n)
                        : ConvVariant::linear(alg.variant.r, alg.variant.n);
    return make_algorithm(alg.A, alg.C, alg.B, v,
                          alg.provenance + " interchanged");
}

/// Raw Kronecker nesting (A1 x A2, B1 x B2, C1 x C2); rank R1*R2. The result
/// acts on row-major vectorized inputs (vec concatenates rows).
template <typename T>
BilinearAlgorithm<T> kron_nest(const BilinearAlgorithm<T>& a1,
                               const BilinearAlgorithm<T>& a2) {
    if (a1.variant.kind != a2.variant.kind)
        throw std::invalid_argument("kron_nest: variant kinds differ");
    BilinearAlgorithm<T> out{kron(a1.A, a2.A), kron(a1.B, a2.B), kron(a1.C, a2.C),
                             ConvVariant{a1.variant.kind, a1.variant.r * a2.variant.r,
                                         a1.variant.n * a2.variant.n},
                             a1.provenance + " (x) " + a2.provenance,
                             /*vec_nested=*/true};
    out.check();
    return out;
}

/// 2D application Y = C[(A^T F A) .* (B^T G B)] C^T.
template <typename T>
Matrix<T> apply_2d(const BilinearAlgorithm<T>& alg, const Matrix<T>& F,
                   const Matrix<T>& G) {
    if (F.rows() != alg.A.rows() || F.cols() != alg.A.rows() ||
        G.rows() != alg.B.rows() || G.cols() != alg.B.rows())
        throw std::invalid_argument("apply_2d: input shapes do not match algorithm");
    Matrix<T> at = alg.A.transpose();
    Matrix<T> bt = alg.B.transpose();
    Matrix<T> u = matmul(matmul(at, F), alg.A);
    Matrix<T> v = matmul(matmul(bt, G), alg.B);
    for (std::size_t i = 0; i < u.rows(); ++i)
        for (std::size_t j = 0; j < u.cols(); ++j) u(i, j) *= v(i, j);
    return matmul(matmul(alg.C, u), alg.C.transpose());
}

/// d-fold nested application: mode-wise encode, elementwise multiply,
/// mode-wise decode. The d-fold Kronecker matrices are never materialized.
template <typename T>
Tensor<T> apply_nd(const BilinearAlgorithm<T>& alg, const Tensor<T>& F,
                   const Tensor<T>& G, std::size_t max_order = 4) {
    const std::size_t d = F.order();
    if (d == 0 || d != G.order())
        throw std::invalid_argument("apply_nd: tensor orders disagree");
    if (d > max_order)
        throw std::invalid_argument("apply_nd: tensor order exceeds supported limit");
    if (!F.cubical() || !G.cubical())
        throw std::invalid_argument("apply_nd: cubical tensors required");
    if (F.dims()[0] != alg.A.rows() || G.dims()[0] != alg.B.rows())
        throw std::invalid_argument("apply_nd: sizes do not match algorithm");

    Matrix<T> at = alg.A.transpose();
    Matrix<T> bt = alg.B.transpose();
    Tensor<T> u = F, v = G;
    for (std::size_t mode = 0; mode < d; ++mode) {
        u = mode_apply(at, u, mode);
        v = mode_apply(bt, v, mode);
    }
    for (std::size_t x = 0; x < u.size(); ++x) u.data()[x] *= v.data()[x];
    for (std::size_t mode = 0; mode < d; ++mode) u = mode_apply(alg.C, u, mode);
    return u;
}

inline BilinearAlgorithm<double> to_real(const BilinearAlgorithm<Rational>& alg) {
    BilinearAlgorithm<double> out{to_real(alg.A), to_real(alg.B), to_real(alg.C),
                                  alg.variant, alg.provenance, alg.vec_nested};
    return out;
}

}  // namespace bilconv

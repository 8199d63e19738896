#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bilconv/bilinear.hpp"

namespace bilconv {

enum class AppliedAs { direct, transposed };

struct MatrixCost {
    std::size_t nnz = 0;
    std::size_t adds = 0;   // nnz - rows of the operator as applied
    std::size_t mults = 0;  // nnz
};

/// Addition/multiplication upper bounds for a matrix-vector product; entries
/// are counted nonzero exactly (rationals exactly, floats against 0.0 since
/// generated matrices are conversions of exact values).
template <typename T>
MatrixCost matrix_cost(const Matrix<T>& m, AppliedAs applied) {
    MatrixCost c;
    c.nnz = nnz(m);
    const std::size_t rows = applied == AppliedAs::direct ? m.rows() : m.cols();
    c.adds = c.nnz > rows ? c.nnz - rows : 0;
    c.mults = c.nnz;
    return c;
}

/// Per-matrix bounds plus the algorithm totals including the R elementwise
/// products.
struct CostReport {
    MatrixCost a, b, c;
    std::size_t rank = 0;
    std::size_t total_adds = 0;
    std::size_t total_mults = 0;  // includes +R
};

template <typename T>
CostReport alg_cost(const BilinearAlgorithm<T>& alg) {
    CostReport r;
    r.a = matrix_cost(alg.A, AppliedAs::transposed);
    r.b = matrix_cost(alg.B, AppliedAs::transposed);
    r.c = matrix_cost(alg.C, AppliedAs::direct);
    r.rank = alg.rank();
    r.total_adds = r.a.adds + r.b.adds + r.c.adds;
    r.total_mults = r.a.mults + r.b.mults + r.c.mults + r.rank;
    return r;
}

/// Shape and cost of one Kronecker factor as applied.
struct KronPart {
    std::size_t rows, cols;
    std::size_t adds, mults;
};

/// Structured-application cost of a Kronecker product, mode by mode:
/// sum_i T(A_i) * prod_{j<i} rows_j * prod_{j>i} cols_j.
std::pair<std::uint64_t, std::uint64_t> kron_cost(const std::vector<KronPart>& parts);

/// Complex (adds, mults) of the radix-2 FFT under the cost-recurrence
/// convention: (0, 2) at n = 2, (n(log n - 1)/2, n log n / 2) above.
std::pair<std::uint64_t, std::uint64_t> fft_cost(std::size_t n);

/// Convolutional-layer dimensions: N images, K filters, H channels, m output
/// tile, r filter size, D_H x D_W images, P = D_H*D_W/m^2 tiles per image.
struct CnnLayerDims {
    std::size_t images, filters, channels;
    std::size_t tile_out, filter_size;
    std::size_t img_h, img_w;

    std::size_t tiles_per_image() const;  // P, must be integral
};

struct CnnCost {
    Rational filter_transform;   // T(F) = KH T(A)
    Rational image_transform;    // T(D) = PNH T(B)
    Rational products;           // T(M) = PKHN R^2
    Rational inverse_transform;  // T(I) = PKN T(C)
    Rational total;
    Rational lavin_total;        // closed form, equal to total exactly
};

/// Breakdown per the four-term layer model plus the equivalent closed form
/// alpha'(1 + beta'/K + gamma'/(N P) + delta'/H) N D_H D_W H K, where the
/// tile count in the gamma' term spans the whole batch.
template <typename T>
CnnCost cnn_layer_cost(const CnnLayerDims& dims, const BilinearAlgorithm<T>& alg);

/// One row of a regenerated cost table next to the published values.
struct TableRow {
    std::string label;
    std::string variant = "linear";
    std::string generator;
    std::size_t rank = 0, expected_rank = 0;
    MatrixCost a, c;
    MatrixCost expected_a, expected_c;
    bool annotated = false;  // known publication artifact, see the table notes
    std::string note;

    bool rank_matches() const { return rank == expected_rank; }
    bool matches() const;
};

std::vector<TableRow> table_report(int which);  // 2, 3, or 4
std::string table_csv(const std::vector<TableRow>& rows);

}  // namespace bilconv

#include "bilconv/cost.hpp"

#include <sstream>
#include <stdexcept>

#include "bilconv/adapters.hpp"
#include "bilconv/generators.hpp"

namespace bilconv {

std::pair<std::uint64_t, std::uint64_t> kron_cost(const std::vector<KronPart>& parts) {
    if (parts.size() < 2) throw std::invalid_argument("kron_cost: need at least 2 parts");
    std::uint64_t adds = 0, mults = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        std::uint64_t weight = 1;
        for (std::size_t j = 0; j < i; ++j) weight *= parts[j].rows;
        for (std::size_t j = i + 1; j < parts.size(); ++j) weight *= parts[j].cols;
        adds += parts[i].adds * weight;
        mults += parts[i].mults * weight;
    }
    return {adds, mults};
}

std::pair<std::uint64_t, std::uint64_t> fft_cost(std::size_t n) {
    if (n < 2 || (n & (n - 1)) != 0)
        throw std::invalid_argument("fft_cost: n must be a power of two >= 2");
    if (n == 2) return {0, 2};
    std::uint64_t logn = 0;
    for (std::size_t v = n; v > 1; v >>= 1) ++logn;
    return {n * (logn - 1) / 2, n * logn / 2};
}

std::size_t CnnLayerDims::tiles_per_image() const {
    const std::size_t m2 = tile_out * tile_out;
    if (m2 == 0 || (img_h * img_w) % m2 != 0)
        throw std::invalid_argument("cnn dims: D_H*D_W must be divisible by m^2");
    return img_h * img_w / m2;
}

namespace {

// Scalar flop count of the 2D tile transform by one matrix, applied on both
// sides (row pass then column pass), via the structured Kronecker cost.
template <typename T>
Rational transform_cost_2d(const Matrix<T>& m, AppliedAs applied) {
    MatrixCost c = matrix_cost(m, applied);
    std::size_t rows = applied == AppliedAs::direct ? m.rows() : m.cols();
    std::size_t cols = applied == AppliedAs::direct ? m.cols() : m.rows();
    KronPart part{rows, cols, c.adds, c.mults};
    auto [adds, mults] = kron_cost({part, part});
    return Rational(static_cast<long long>(adds + mults));
}

}  // namespace

template <typename T>
CnnCost cnn_layer_cost(const CnnLayerDims& dims, const BilinearAlgorithm<T>& alg) {
    if (alg.variant.out_len() != 2 * dims.tile_out - 1 &&
        alg.variant.out_len() != dims.tile_out)
        throw std::invalid_argument("cnn_layer_cost: algorithm output does not match tile");
    const Rational P(static_cast<long long>(dims.tiles_per_image()));
    const Rational N(static_cast<long long>(dims.images));
    const Rational K(static_cast<long long>(dims.filters));
    const Rational H(static_cast<long long>(dims.channels));
    const Rational R(static_cast<long long>(alg.rank()));
    const Rational R2 = R * R;
    const Rational m2(static_cast<long long>(dims.tile_out * dims.tile_out));
    const Rational area(static_cast<long long>(dims.img_h * dims.img_w));

    const Rational tA = transform_cost_2d(alg.A, AppliedAs::transposed);
    const Rational tB = transform_cost_2d(alg.B, AppliedAs::transposed);
    const Rational tC = transform_cost_2d(alg.C, AppliedAs::direct);

    CnnCost c;
    c.filter_transform = K * H * tA;
    c.image_transform = P * N * H * tB;
    c.products = P * K * H * N * R2;
    c.inverse_transform = P * K * N * tC;
    c.total = c.filter_transform + c.image_transform + c.products + c.inverse_transform;

    // Lavin closed form; the tile count in the filter term covers the batch.
    const Rational alpha = R2 / m2;
    const Rational beta = tB / R2;
    const Rational gamma = tA / R2;
    const Rational delta = tC / R2;
    c.lavin_total =
        alpha * (Rational(1) + beta / K + gamma / (N * P) + delta / H) * N * area * H * K;
    return c;
}

template CnnCost cnn_layer_cost<Rational>(const CnnLayerDims&,
                                          const BilinearAlgorithm<Rational>&);
template CnnCost cnn_layer_cost<double>(const CnnLayerDims&,
                                        const BilinearAlgorithm<double>&);

bool TableRow::matches() const {
    auto eq = [](const MatrixCost& x, const MatrixCost& y) {
        return x.nnz == y.nnz && x.adds == y.adds && x.mults == y.mults;
    };
    return rank == expected_rank && eq(a, expected_a) && eq(c, expected_c);
}

namespace {

MatrixCost triple(std::size_t nnz, std::size_t adds, std::size_t mults) {
    return MatrixCost{nnz, adds, mults};
}

TableRow make_row(std::string label, std::string generator,
                  const BilinearAlgorithm<Rational>& alg, std::size_t expected_rank,
                  MatrixCost ea, MatrixCost ec) {
    CostReport r = alg_cost(alg);
    TableRow row;
    row.label = std::move(label);
    row.variant = alg.variant.name();
    row.generator = std::move(generator);
    row.rank = r.rank;
    row.expected_rank = expected_rank;
    row.a = r.a;
    row.c = r.c;
    row.expected_a = ea;
    row.expected_c = ec;
    return row;
}

std::vector<TableRow> table2_rows() {
    struct E { std::size_t n, rank; MatrixCost a, c; };
    // published values; the decode columns for n >= 4 count roundoff junk in
    // entries that are exactly zero, so the exact counts sit below them
    const E exp[] = {
        {2, 3, triple(4, 1, 4), triple(5, 2, 5)},
        {3, 5, triple(11, 6, 11), triple(16, 11, 16)},
        {4, 7, triple(22, 15, 22), triple(36, 29, 36)},
        {5, 9, triple(37, 28, 37), triple(65, 56, 65)},
        {6, 11, triple(56, 45, 56), triple(101, 90, 101)},
        {7, 13, triple(79, 66, 79), triple(145, 132, 145)},
        {8, 15, triple(106, 91, 106), triple(197, 182, 197)},
        {9, 17, triple(137, 120, 137), triple(257, 240, 257)},
    };
    std::vector<TableRow> rows;
    for (const E& e : exp) {
        auto alg = toom_cook(e.n, e.n, default_nodes(2 * e.n - 1));
        TableRow row = make_row(std::to_string(e.n), "toom-cook", alg, e.rank, e.a, e.c);
        if (!row.matches()) {
            row.annotated = true;
            row.note = "published decode count includes float-roundoff nonzeros";
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<TableRow> table3_rows() {
    struct E { std::size_t n, rank; MatrixCost a, c; };
    const E exp[] = {
        {2, 4, triple(5, 1, 5), triple(7, 4, 7)},
        {3, 6, triple(13, 7, 13), triple(20, 15, 20)},
        {4, 8, triple(25, 17, 25), triple(39, 32, 39)},
        {5, 10, triple(41, 31, 41), triple(72, 63, 72)},
        {6, 12, triple(61, 49, 61), triple(107, 96, 107)},
        {7, 14, triple(85, 71, 85), triple(156, 143, 156)},
        {8, 17, triple(113, 96, 113), triple(216, 201, 216)},
        {9, 20, triple(145, 125, 145), triple(288, 271, 288)},
    };
    std::vector<TableRow> rows;
    for (const E& e : exp) {
        auto alg = winograd(e.n, e.n, table3_divisors(e.n));
        TableRow row = make_row(std::to_string(e.n), "winograd", alg, e.rank, e.a, e.c);
        if (e.n == 8 && !row.matches()) {
            row.annotated = true;
            row.note = "published decode count includes float-roundoff nonzeros; "
                       "exact count with pinned sub-algorithms";
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<TableRow> table4_rows() {
    auto toom_of = [](std::size_t n) { return toom_cook(n, n, default_nodes(2 * n - 1)); };
    auto nest = [](const BilinearAlgorithm<Rational>& a,
                   const BilinearAlgorithm<Rational>& b) {
        return overlap_add_nest(a, b);
    };
    struct E {
        const char* label;
        BilinearAlgorithm<Rational> alg;
        std::size_t rank;
        MatrixCost a, c;
    };
    std::vector<E> exp;
    exp.push_back({"2x2", nest(toom_of(2), toom_of(2)), 9, triple(16, 7, 16),
                   triple(25, 18, 25)});
    exp.push_back({"2x3", nest(toom_of(2), toom_of(3)), 15, triple(44, 29, 44),
                   triple(76, 65, 76)});
    exp.push_back({"2x4", nest(toom_of(2), toom_of(4)), 21, triple(88, 67, 88),
                   triple(162, 147, 162)});
    exp.push_back({"2x2x2", nest(toom_of(2), nest(toom_of(2), toom_of(2))), 27,
                   triple(64, 37, 64), triple(125, 110, 125)});
    exp.push_back({"3x3", nest(toom_of(3), toom_of(3)), 25, triple(121, 96, 121),
                   triple(228, 211, 228)});

    std::vector<TableRow> rows;
    for (const E& e : exp) {
        TableRow row = make_row(e.label, "nested-toom", e.alg, e.rank, e.a, e.c);
        if (std::string(e.label) == "2x4" && !row.matches()) {
            row.annotated = true;
            row.note = "inherits the size-4 decode roundoff artifact through the "
                       "Kronecker factor";
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

std::vector<TableRow> table_report(int which) {
    switch (which) {
        case 2: return table2_rows();
        case 3: return table3_rows();
        case 4: return table4_rows();
        default: throw std::invalid_argument("table_report: table 2, 3, or 4");
    }
}

std::string table_csv(const std::vector<TableRow>& rows) {
    std::ostringstream os;
    os << "n,variant,generator,rank,nnzA,addsA,multsA,nnzC,addsC,multsC,"
          "expected_rank,expected_nnzA,expected_addsA,expected_multsA,"
          "expected_nnzC,expected_addsC,expected_multsC,match,annotated,note\n";
    for (const TableRow& r : rows) {
        os << r.label << ',' << r.variant << ',' << r.generator << ',' << r.rank << ','
           << r.a.nnz << ',' << r.a.adds << ',' << r.a.mults << ',' << r.c.nnz << ','
           << r.c.adds << ',' << r.c.mults << ',' << r.expected_rank << ','
           << r.expected_a.nnz << ',' << r.expected_a.adds << ',' << r.expected_a.mults
           << ',' << r.expected_c.nnz << ',' << r.expected_c.adds << ','
           << r.expected_c.mults << ',' << (r.matches() ? 1 : 0) << ','
           << (r.annotated ? 1 : 0) << ",\"" << r.note << "\"\n";
    }
    return os.str();
}

}  // namespace bilconv

// Acceptance suite: one checkable criterion per function, one pass/fail line
// per criterion on stdout. Run with no arguments for the full suite or with a
// criterion number (1..11) to run a single one; exit status counts failures.

#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "bilconv/accuracy.hpp"
#include "bilconv/adapters.hpp"
#include "bilconv/cost.hpp"
#include "bilconv/fastexec.hpp"
#include "bilconv/generators.hpp"

using namespace bilconv;

namespace {

std::vector<double> rand_vec(std::mt19937_64& eng, std::size_t n) {
    std::vector<double> v(n);
    for (auto& x : v) x = (eng() >> 11) * 0x1.0p-53;
    return v;
}

double norm2(const std::vector<double>& v) {
    double s = 0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

double rel_err(const std::vector<double>& got, const std::vector<double>& want) {
    double num = 0, den = 0;
    for (std::size_t i = 0; i < got.size(); ++i) {
        num += (got[i] - want[i]) * (got[i] - want[i]);
        den += want[i] * want[i];
    }
    return std::sqrt(num / den);
}

BilinearAlgorithm<Rational> toom_of(std::size_t n) {
    return toom_cook(n, n, default_nodes(2 * n - 1));
}

// ---------------------------------------------------------------------------
// 1. Toom cost table, exact integer reproduction of every row.

bool criterion1(std::ostream& os) {
    auto rows = table_report(2);
    bool ok = true;
    const std::size_t want_rank[] = {3, 5, 7, 9, 11, 13, 15, 17};
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].rank != want_rank[i]) ok = false;
        if (!rows[i].matches()) {
            ok = false;
            os << "    row n=" << rows[i].label << ": measured C ("
               << rows[i].c.nnz << "," << rows[i].c.adds << "," << rows[i].c.mults
               << ") vs published (" << rows[i].expected_c.nnz << ","
               << rows[i].expected_c.adds << "," << rows[i].expected_c.mults << ")"
               << (rows[i].annotated ? "  [" + rows[i].note + "]" : "") << "\n";
        }
    }
    return ok;
}

// ---------------------------------------------------------------------------
// 2. Winograd cost table: ranks exact, counts exact except annotated rows.

bool criterion2(std::ostream& os) {
    auto rows = table_report(3);
    bool ok = true;
    const std::size_t want_rank[] = {4, 6, 8, 10, 12, 14, 17, 20};
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].rank != want_rank[i]) {
            os << "    row n=" << rows[i].label << ": rank " << rows[i].rank
               << " != " << want_rank[i] << "\n";
            ok = false;
            continue;
        }
        if (!rows[i].matches()) {
            os << "    row n=" << rows[i].label << ": measured C (" << rows[i].c.nnz
               << "," << rows[i].c.adds << "," << rows[i].c.mults << ") vs published ("
               << rows[i].expected_c.nnz << "," << rows[i].expected_c.adds << ","
               << rows[i].expected_c.mults << ")";
            if (rows[i].annotated) {
                os << "  [annotated: " << rows[i].note << "]\n";
            } else {
                os << "  [unannotated mismatch]\n";
                ok = false;
            }
        }
    }
    return ok;
}

// ---------------------------------------------------------------------------
// 3. Nested table: ranks and counts.

bool criterion3(std::ostream& os) {
    auto rows = table_report(4);
    bool ok = true;
    const std::size_t want_rank[] = {9, 15, 21, 27, 25};
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].rank != want_rank[i]) ok = false;
        if (!rows[i].matches()) {
            ok = false;
            os << "    row " << rows[i].label << ": measured C (" << rows[i].c.nnz
               << "," << rows[i].c.adds << "," << rows[i].c.mults << ") vs published ("
               << rows[i].expected_c.nnz << "," << rows[i].expected_c.adds << ","
               << rows[i].expected_c.mults << ")"
               << (rows[i].annotated ? "  [" + rows[i].note + "]" : "") << "\n";
        }
    }
    return ok;
}

// ---------------------------------------------------------------------------
// 4. Tensor validation: exact zero for rational generators, < 1e-12 for the
//    transform-based ones up to n = 16.

bool criterion4(std::ostream& os) {
    bool ok = true;
    auto expect_zero = [&](const BilinearAlgorithm<Rational>& alg, const std::string& what) {
        if (!validate(alg).is_zero()) {
            os << "    " << what << ": nonzero exact residual\n";
            ok = false;
        }
    };
    for (std::size_t n = 2; n <= 9; ++n) {
        expect_zero(toom_of(n), "toom n=" + std::to_string(n));
        expect_zero(winograd(n, n, table3_divisors(n)), "winograd n=" + std::to_string(n));
    }
    expect_zero(overlap_add_nest(toom_of(2), toom_of(2)), "nested 2x2");
    expect_zero(overlap_add_nest(toom_of(2), toom_of(4)), "nested 2x4");
    expect_zero(overlap_add_nest(toom_of(2), overlap_add_nest(toom_of(2), toom_of(2))),
                "nested 2x2x2");
    expect_zero(overlap_add_nest(toom_of(3), toom_of(3)), "nested 3x3");
    expect_zero(karatsuba_alg(), "karatsuba");
    expect_zero(sparse3_alg(), "sparse3");
    expect_zero(direct_alg(4, 5), "direct 4x5");

    for (std::size_t n = 2; n <= 16; ++n) {
        double r1 = validate(dft_cyclic_alg(n));
        double r2 = validate(dft_linear_alg(n, n));
        double r3 = validate(dct_linear_alg(n));
        if (r1 >= 1e-12 || r2 >= 1e-12 || r3 >= 1e-12) {
            os << "    transform residual too large at n=" << n << ": " << r1 << " "
               << r2 << " " << r3 << "\n";
            ok = false;
        }
    }
    return ok;
}

// ---------------------------------------------------------------------------
// 5. Oracle equivalence over every generator, r, n <= 6, 100 trials each.

bool criterion5(std::ostream& os) {
    bool ok = true;
    std::mt19937_64 eng(20240901);
    auto check_real = [&](const BilinearAlgorithm<double>& alg, const std::string& what) {
        double worst = 0;
        for (int trial = 0; trial < 100; ++trial) {
            auto f = rand_vec(eng, alg.variant.f_len());
            auto g = rand_vec(eng, alg.variant.g_len());
            worst = std::max(worst, rel_err(apply(alg, f, g),
                                            direct_conv(f, g, alg.variant)));
        }
        if (worst >= 1e-10) {
            os << "    " << what << ": worst rel err " << worst << "\n";
            ok = false;
        }
    };
    auto check_complex = [&](const BilinearAlgorithm<Complex>& alg, const std::string& what) {
        double worst = 0;
        for (int trial = 0; trial < 100; ++trial) {
            auto f = rand_vec(eng, alg.variant.f_len());
            auto g = rand_vec(eng, alg.variant.g_len());
            std::vector<Complex> fc(f.begin(), f.end()), gc(g.begin(), g.end());
            auto yc = apply(alg, fc, gc);
            std::vector<double> y(yc.size());
            for (std::size_t i = 0; i < yc.size(); ++i) y[i] = yc[i].real();
            worst = std::max(worst, rel_err(y, direct_conv(f, g, alg.variant)));
        }
        if (worst >= 1e-9) {
            os << "    " << what << ": worst rel err " << worst << "\n";
            ok = false;
        }
    };

    for (std::size_t r = 2; r <= 6; ++r)
        for (std::size_t n = 2; n <= 6; ++n) {
            std::string tag = " r=" + std::to_string(r) + " n=" + std::to_string(n);
            check_real(to_real(toom_cook(r, n, default_nodes(n + r - 1))), "toom" + tag);
            check_real(to_real(winograd(r, n, default_divisors(n + r - 1))),
                       "winograd" + tag);
            check_real(to_real(direct_alg(r, n)), "direct" + tag);
            check_complex(dft_linear_alg(r, n), "dft-linear" + tag);
            if (r == n) {
                check_real(toom_cook_real(n, n, chebyshev_nodes(2 * n - 1)),
                           "toom-chebyshev" + tag);
                check_real(dct_linear_alg(n), "dct" + tag);
                check_complex(dft_cyclic_alg(n), "dft-cyclic" + tag);
            }
        }
    check_real(to_real(karatsuba_alg()), "karatsuba");
    check_real(to_real(sparse3_alg()), "sparse3");
    check_real(to_real(overlap_add_nest(toom_of(2), toom_of(2))), "nested 2x2");
    check_real(to_real(overlap_add_nest(toom_of(2), toom_of(3))), "nested 2x3");
    return ok;
}

// ---------------------------------------------------------------------------
// 6. Qualitative error orderings of the experiment harness.

bool criterion6(std::ostream& os) {
    ExperimentConfig config;
    config.generators = {"toom-integer", "toom-chebyshev", "winograd", "nested-toom"};
    config.dims = {2, 3};
    config.sizes = {4, 5, 6, 7, 8, 9};
    config.trials = 10;
    config.base_seed = 1;
    auto records = run_experiment(config);
    bool ok = true;

    // (a) toom-integer mean non-decreasing over n = 4..9 at d = 3
    double prev = -1;
    for (std::size_t n = 4; n <= 9; ++n) {
        double mean = mean_rel_err(records, "toom-integer", 3, n);
        if (mean < prev) {
            os << "    (a) toom-integer mean decreased at d=3 n=" << n << "\n";
            ok = false;
        }
        prev = mean;
    }
    // (b) winograd < toom-chebyshev < toom-integer
    auto ordering = [&](std::size_t d, std::size_t n) {
        double wi = mean_rel_err(records, "winograd", d, n);
        double ch = mean_rel_err(records, "toom-chebyshev", d, n);
        double ti = mean_rel_err(records, "toom-integer", d, n);
        if (!(wi < ch && ch < ti)) {
            os << "    (b) ordering failed at d=" << d << " n=" << n << ": " << wi
               << " / " << ch << " / " << ti << "\n";
            ok = false;
        }
    };
    for (std::size_t n : {7, 8, 9}) ordering(2, n);
    for (std::size_t n : {7, 8}) ordering(3, n);
    // (c) nested < toom-integer at n in {8, 9}, d in {2, 3}
    for (std::size_t d : {2, 3})
        for (std::size_t n : {8, 9}) {
            double ne = mean_rel_err(records, "nested-toom", d, n);
            double ti = mean_rel_err(records, "toom-integer", d, n);
            if (!(ne < ti)) {
                os << "    (c) nested >= toom-integer at d=" << d << " n=" << n << "\n";
                ok = false;
            }
        }
    return ok;
}

// ---------------------------------------------------------------------------
// 7. First-order error bounds hold with 10% slack.

bool criterion7(std::ostream& os) {
    std::mt19937_64 eng(20240902);
    bool ok = true;

    auto run_1d = [&](const BilinearAlgorithm<double>& alg, double eps) {
        auto f = rand_vec(eng, alg.variant.f_len());
        auto g = rand_vec(eng, alg.variant.g_len());
        auto df = rand_vec(eng, f.size()), dg = rand_vec(eng, g.size());
        std::vector<double> f2 = f, g2 = g;
        for (std::size_t i = 0; i < f.size(); ++i)
            f2[i] += df[i] * (eps * norm2(f) / norm2(df));
        for (std::size_t i = 0; i < g.size(); ++i)
            g2[i] += dg[i] * (eps * norm2(g) / norm2(dg));
        auto y = apply(alg, f, g), y2 = apply(alg, f2, g2);
        double delta = 0;
        for (std::size_t i = 0; i < y.size(); ++i)
            delta += (y[i] - y2[i]) * (y[i] - y2[i]);
        delta = std::sqrt(delta);
        auto bound = error_bound(alg, norm2(f), norm2(g), eps,
                                 alg.variant.kind == ConvVariant::Kind::linear &&
                                         alg.provenance.find("overlap") != std::string::npos
                                     ? 0
                                     : 1);
        return std::pair<double, double>{delta, bound.value};
    };
    (void)run_1d;

    auto check = [&](double measured, double bound, const std::string& what) {
        if (measured > 1.1 * bound) {
            os << "    " << what << ": measured " << measured << " > 1.1 * " << bound
               << "\n";
            ok = false;
        }
    };

    // Thm-style 1D bound
    {
        auto alg = to_real(toom_of(3));
        for (int c = 0; c < 20; ++c) {
            double eps = (c % 2) ? 1e-6 : 1e-8;
            auto f = rand_vec(eng, 3), g = rand_vec(eng, 3);
            auto df = rand_vec(eng, 3), dg = rand_vec(eng, 3);
            std::vector<double> f2 = f, g2 = g;
            for (std::size_t i = 0; i < 3; ++i) {
                f2[i] += df[i] * (eps * norm2(f) / norm2(df));
                g2[i] += dg[i] * (eps * norm2(g) / norm2(dg));
            }
            auto y = apply(alg, f, g), y2 = apply(alg, f2, g2);
            std::vector<double> diff(y.size());
            for (std::size_t i = 0; i < y.size(); ++i) diff[i] = y[i] - y2[i];
            check(norm2(diff), error_bound(alg, norm2(f), norm2(g), eps, 1).value,
                  "1d case " + std::to_string(c));
        }
    }

    // nested d = 2, 3 via mode-wise application
    for (std::size_t d : {2, 3}) {
        auto base = to_real(toom_of(d == 2 ? 3 : 2));
        const std::size_t n = base.variant.n;
        for (int c = 0; c < 20; ++c) {
            double eps = (c % 2) ? 1e-6 : 1e-8;
            std::vector<std::size_t> dims(d, n);
            Tensor<double> F(dims), G(dims), F2(dims), G2(dims);
            for (auto& x : F.data()) x = (eng() >> 11) * 0x1.0p-53;
            for (auto& x : G.data()) x = (eng() >> 11) * 0x1.0p-53;
            auto dF = F, dG = G;
            for (auto& x : dF.data()) x = (eng() >> 11) * 0x1.0p-53;
            for (auto& x : dG.data()) x = (eng() >> 11) * 0x1.0p-53;
            double fn = norm2(F.data()), gn = norm2(G.data());
            double dfn = norm2(dF.data()), dgn = norm2(dG.data());
            F2 = F;
            G2 = G;
            for (std::size_t i = 0; i < F.size(); ++i)
                F2.data()[i] += dF.data()[i] * (eps * fn / dfn);
            for (std::size_t i = 0; i < G.size(); ++i)
                G2.data()[i] += dG.data()[i] * (eps * gn / dgn);
            auto Y = apply_nd(base, F, G), Y2 = apply_nd(base, F2, G2);
            std::vector<double> diff(Y.size());
            for (std::size_t i = 0; i < Y.size(); ++i)
                diff[i] = Y.data()[i] - Y2.data()[i];
            check(norm2(diff), error_bound(base, fn, gn, eps, d).value,
                  "nd d=" + std::to_string(d) + " case " + std::to_string(c));
        }
    }

    // overlap-add, two levels: 1D convolution of size n^2
    {
        auto base = to_real(toom_of(3));
        auto composed = to_real(overlap_add_nest(toom_of(3), toom_of(3)));
        for (int c = 0; c < 20; ++c) {
            double eps = (c % 2) ? 1e-6 : 1e-8;
            auto f = rand_vec(eng, 9), g = rand_vec(eng, 9);
            auto df = rand_vec(eng, 9), dg = rand_vec(eng, 9);
            std::vector<double> f2 = f, g2 = g;
            for (std::size_t i = 0; i < 9; ++i) {
                f2[i] += df[i] * (eps * norm2(f) / norm2(df));
                g2[i] += dg[i] * (eps * norm2(g) / norm2(dg));
            }
            auto y = apply(composed, f, g), y2 = apply(composed, f2, g2);
            std::vector<double> diff(y.size());
            for (std::size_t i = 0; i < y.size(); ++i) diff[i] = y[i] - y2[i];
            check(norm2(diff),
                  error_bound(base, norm2(f), norm2(g), eps, 2, /*overlap=*/true).value,
                  "overlap d=2 case " + std::to_string(c));
        }
    }
    return ok;
}

// ---------------------------------------------------------------------------
// 8. FFT counters equal the closed form; fft matches the dense transform.

bool criterion8(std::ostream& os) {
    bool ok = true;
    std::mt19937_64 eng(20240903);
    for (std::size_t n : {2, 4, 8, 16}) {
        OpCounter c;
        std::vector<Complex> x(n);
        for (auto& v : x) v = Complex((eng() >> 11) * 0x1.0p-53, 0);
        auto y = fft(x, &c);
        auto [adds, mults] = fft_cost(n);
        if (c.adds != adds || c.mults != mults) {
            os << "    n=" << n << ": counters (" << c.adds << "," << c.mults
               << ") vs closed form (" << adds << "," << mults << ")\n";
            ok = false;
        }
        auto want = matvec(dft_matrix(n), x);
        double num = 0, den = 0;
        for (std::size_t i = 0; i < n; ++i) {
            num += std::norm(y[i] - want[i]);
            den += std::norm(want[i]);
        }
        if (std::sqrt(num / den) >= 1e-12) {
            os << "    n=" << n << ": fft does not match the dense transform\n";
            ok = false;
        }
    }
    return ok;
}

// ---------------------------------------------------------------------------
// 9. Hankel recursion cost: count(2n) = 3 count(n) for n = 2^k, k = 3..6.

bool criterion9(std::ostream& os) {
    bool ok = true;
    std::mt19937_64 eng(20240904);
    std::uint64_t prev = 0;
    for (std::size_t k = 3; k <= 6; ++k) {
        std::size_t n = std::size_t{1} << k;
        OpCounter c;
        auto f = rand_vec(eng, n), g = rand_vec(eng, n);
        hankel_sym_conv(f, g, &c, /*threshold=*/4);
        if (k > 3 && c.mults != 3 * prev) {
            os << "    count(" << n << ") = " << c.mults << " != 3 * " << prev << "\n";
            ok = false;
        }
        prev = c.mults;
    }
    return ok;
}

// ---------------------------------------------------------------------------
// 10. CNN layer cost breakdown equals the closed form exactly.

bool criterion10(std::ostream& os) {
    bool ok = true;
    std::mt19937_64 eng(20240905);
    auto alg = toom_of(2);
    auto alg3 = toom_of(3);
    for (int c = 0; c < 50; ++c) {
        CnnLayerDims dims;
        bool use3 = (c % 3 == 0);
        dims.tile_out = use3 ? 3 : 2;
        dims.filter_size = dims.tile_out;
        dims.images = 1 + eng() % 8;
        dims.filters = 1 + eng() % 8;
        dims.channels = 1 + eng() % 8;
        dims.img_h = dims.tile_out * (1 + eng() % 6);
        dims.img_w = dims.tile_out * (1 + eng() % 6);
        auto cost = use3 ? cnn_layer_cost(dims, alg3) : cnn_layer_cost(dims, alg);
        if (!(cost.total == cost.lavin_total)) {
            os << "    case " << c << ": breakdown " << cost.total.str()
               << " != closed form " << cost.lavin_total.str() << "\n";
            ok = false;
        }
    }
    return ok;
}

// ---------------------------------------------------------------------------
// 11. Composition correctness against oracles.

bool criterion11(std::ostream& os) {
    bool ok = true;
    std::mt19937_64 eng(20240906);
    auto expect = [&](double err, const std::string& what) {
        if (err >= 1e-10) {
            os << "    " << what << ": rel err " << err << "\n";
            ok = false;
        }
    };

    // overlap-add compositions
    struct NestCase { const char* label; BilinearAlgorithm<Rational> alg; };
    std::vector<NestCase> nests;
    nests.push_back({"2x2", overlap_add_nest(toom_of(2), toom_of(2))});
    nests.push_back({"2x4", overlap_add_nest(toom_of(2), toom_of(4))});
    nests.push_back({"2x2x2", overlap_add_nest(toom_of(2),
                                               overlap_add_nest(toom_of(2), toom_of(2)))});
    for (const auto& nc : nests) {
        auto alg = to_real(nc.alg);
        const std::size_t n = alg.variant.n;
        double worst = 0;
        for (int t = 0; t < 25; ++t) {
            auto f = rand_vec(eng, n), g = rand_vec(eng, n);
            worst = std::max(worst, rel_err(apply(alg, f, g),
                                            direct_conv(f, g, alg.variant)));
        }
        expect(worst, std::string("overlap-add ") + nc.label);
    }

    // Agarwal-Cooley at n = 6, 12, 15
    for (auto [n1, n2] : {std::pair<std::size_t, std::size_t>{2, 3}, {3, 4}, {3, 5}}) {
        auto alg = agarwal_cooley_nest(dft_cyclic_alg(n1), dft_cyclic_alg(n2));
        const std::size_t n = n1 * n2;
        double worst = 0;
        for (int t = 0; t < 25; ++t) {
            auto f = rand_vec(eng, n), g = rand_vec(eng, n);
            std::vector<Complex> fc(f.begin(), f.end()), gc(g.begin(), g.end());
            auto yc = apply(alg, fc, gc);
            std::vector<double> y(n);
            for (std::size_t i = 0; i < n; ++i) y[i] = yc[i].real();
            worst = std::max(worst, rel_err(y, direct_conv(f, g, ConvVariant::cyclic(n))));
        }
        expect(worst, "agarwal-cooley n=" + std::to_string(n));
    }

    // small-filter blocking for r <= 4, n <= 20
    for (std::size_t r = 2; r <= 4; ++r) {
        auto alg = to_real(toom_of(r));
        double worst = 0;
        for (std::size_t n = r; n <= 20; ++n)
            for (int t = 0; t < 5; ++t) {
                auto f = rand_vec(eng, r), g = rand_vec(eng, n);
                worst = std::max(worst,
                                 rel_err(small_filter_conv(f, g, alg),
                                         direct_conv(f, g, ConvVariant::linear(r, n))));
            }
        expect(worst, "small-filter r=" + std::to_string(r));
    }

    // low-rank 2D with ranks up to 3, n up to 6; the 1D engine is the
    // better-conditioned CRT algorithm above n = 2
    for (std::size_t n : {2, 4, 6}) {
        auto alg = to_real(n == 2 ? toom_of(2) : winograd(n, n, table3_divisors(n)));
        for (std::size_t rank = 1; rank <= 3; ++rank) {
            RankFactors2D<double> F, G;
            Matrix<double> Fm(n, n), Gm(n, n);
            for (std::size_t k = 0; k < rank; ++k) {
                F.sigma.push_back(0.25 + (eng() % 8) * 0.25);
                G.sigma.push_back(0.25 + (eng() % 8) * 0.25);
                F.u.push_back(rand_vec(eng, n));
                F.v.push_back(rand_vec(eng, n));
                G.u.push_back(rand_vec(eng, n));
                G.v.push_back(rand_vec(eng, n));
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j) {
                        Fm(i, j) += F.sigma[k] * F.u[k][i] * F.v[k][j];
                        Gm(i, j) += G.sigma[k] * G.u[k][i] * G.v[k][j];
                    }
            }
            auto lr = low_rank_conv2d(F, G, alg);
            auto full = apply_2d(alg, Fm, Gm);
            double num = 0, den = 0;
            for (std::size_t i = 0; i < lr.rows(); ++i)
                for (std::size_t j = 0; j < lr.cols(); ++j) {
                    num += (lr(i, j) - full(i, j)) * (lr(i, j) - full(i, j));
                    den += full(i, j) * full(i, j);
                }
            expect(std::sqrt(num / den),
                   "low-rank n=" + std::to_string(n) + " rank=" + std::to_string(rank));
        }
    }
    return ok;
}

struct Criterion {
    int index;
    const char* summary;
    std::function<bool(std::ostream&)> run;
};

}  // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> criteria = {
        {1, "Toom cost table exact reproduction", criterion1},
        {2, "Winograd cost table ranks and counts", criterion2},
        {3, "nested cost table reproduction", criterion3},
        {4, "tensor validation residuals", criterion4},
        {5, "oracle equivalence, 100 trials per generator and size", criterion5},
        {6, "qualitative accuracy orderings", criterion6},
        {7, "first-order error bounds with 10% slack", criterion7},
        {8, "fft counters and dense-transform agreement", criterion8},
        {9, "hankel recursion multiplication counts", criterion9},
        {10, "cnn layer cost closed-form identity", criterion10},
        {11, "composition correctness vs oracles", criterion11},
    };

    int only = 0;
    if (argc > 1) only = std::atoi(argv[1]);

    int failures = 0;
    for (const auto& c : criteria) {
        if (only && c.index != only) continue;
        std::ostringstream detail;
        bool pass = false;
        try {
            pass = c.run(detail);
        } catch (const std::exception& e) {
            detail << "    exception: " << e.what() << "\n";
        }
        std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.index << ": "
                  << c.summary << "\n" << detail.str();
        if (!pass) ++failures;
    }
    return failures;
}

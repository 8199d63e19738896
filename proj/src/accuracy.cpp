#include "bilconv/accuracy.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "bilconv/adapters.hpp"
#include "bilconv/fastexec.hpp"
#include "bilconv/generators.hpp"

namespace bilconv {

namespace {

double mag2(double x) { return x * x; }
double mag2(const Complex& x) { return std::norm(x); }

// u = M^H (M v)
template <typename T>
std::vector<T> gram_apply(const Matrix<T>& m, const std::vector<T>& v) {
    std::vector<T> w = matvec(m, v);
    std::vector<T> u(m.cols(), T(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if constexpr (is_complex_v<T>) u[j] += std::conj(m(i, j)) * w[i];
            else u[j] += m(i, j) * w[i];
        }
    return u;
}

template <typename T>
double vec_norm(const std::vector<T>& v) {
    double s = 0.0;
    for (const auto& x : v) s += mag2(x);
    return std::sqrt(s);
}

template <typename T>
SpectralNorm spectral_norm_impl(const Matrix<T>& m) {
    SpectralNorm out;
    if (m.rows() == 0 || m.cols() == 0 || nnz(m) == 0) return out;

    std::vector<T> v(m.cols());
    std::mt19937_64 eng(0x5eed);
    for (auto& x : v) x = T(((eng() >> 11) * 0x1.0p-53) + 0.5);
    double vn = vec_norm(v);
    for (auto& x : v) x /= T(vn);

    double prev = -1.0;
    for (int iter = 0; iter < 1000; ++iter) {
        std::vector<T> w = matvec(m, v);
        double sigma = vec_norm(w);  // ||M v|| with ||v|| = 1
        std::vector<T> u = gram_apply(m, v);
        double un = vec_norm(u);
        if (un == 0.0) { out.value = sigma; return out; }
        for (auto& x : u) x /= T(un);
        v = std::move(u);
        if (prev >= 0.0 && std::abs(sigma - prev) <= 1e-10 * std::max(sigma, 1e-300)) {
            out.value = sigma;
            return out;
        }
        prev = sigma;
    }
    double fro = 0.0;
    for (const auto& x : m.data()) fro += mag2(x);
    out.value = std::sqrt(fro);
    out.frobenius_fallback = true;
    return out;
}

}  // namespace

SpectralNorm spectral_norm(const Matrix<double>& m) { return spectral_norm_impl(m); }
SpectralNorm spectral_norm(const Matrix<Complex>& m) { return spectral_norm_impl(m); }

template <typename T>
ErrorBound error_bound(const BilinearAlgorithm<T>& alg, double f_norm, double g_norm,
                       double eps, std::size_t d, bool overlap) {
    if (eps <= 0.0 || d < 1) throw std::invalid_argument("error_bound: eps > 0, d >= 1");
    ErrorBound b;
    b.norm_a = spectral_norm(alg.A).value;
    b.norm_b = spectral_norm(alg.B).value;
    b.norm_c = spectral_norm(alg.C).value;
    b.f_norm = f_norm;
    b.g_norm = g_norm;
    b.eps = eps;
    b.d = d;
    b.overlap = overlap;
    double factor = 2.0 * (overlap ? std::pow(2.0, static_cast<double>(d) / 2.0) : 1.0);
    b.value = factor * std::pow(b.norm_c * b.norm_a * b.norm_b, static_cast<double>(d)) *
              f_norm * g_norm * eps;
    return b;
}

template ErrorBound error_bound<double>(const BilinearAlgorithm<double>&, double, double,
                                        double, std::size_t, bool);
template ErrorBound error_bound<Complex>(const BilinearAlgorithm<Complex>&, double,
                                         double, double, std::size_t, bool);

std::uint64_t fnv1a64(std::initializer_list<std::uint64_t> values) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (std::uint64_t v : values)
        for (int byte = 0; byte < 8; ++byte) {
            h ^= (v >> (8 * byte)) & 0xff;
            h *= 0x100000001b3ull;
        }
    return h;
}

namespace {

double next_unit(std::mt19937_64& eng) { return (eng() >> 11) * 0x1.0p-53; }

// Real-domain algorithm for one generator at size n (square linear conv).
BilinearAlgorithm<double> build_real_generator(const std::string& name, std::size_t n) {
    if (name == "toom-integer")
        return to_real(toom_cook(n, n, default_nodes(2 * n - 1)));
    if (name == "toom-chebyshev")
        return toom_cook_real(n, n, chebyshev_nodes(2 * n - 1));
    if (name == "winograd") {
        if (n >= 2 && n <= 9) return to_real(winograd(n, n, table3_divisors(n)));
        return to_real(winograd(n, n, default_divisors(2 * n - 1)));
    }
    if (name == "nested-toom") {
        auto toom_of = [](std::size_t k) {
            return toom_cook(k, k, default_nodes(2 * k - 1));
        };
        switch (n) {
            case 4: return to_real(overlap_add_nest(toom_of(2), toom_of(2)));
            case 6: return to_real(overlap_add_nest(toom_of(2), toom_of(3)));
            case 8:
                return to_real(overlap_add_nest(
                    toom_of(2), overlap_add_nest(toom_of(2), toom_of(2))));
            case 9: return to_real(overlap_add_nest(toom_of(3), toom_of(3)));
            default:
                throw std::domain_error("nested-toom: size " + std::to_string(n) +
                                        " has no pinned nesting");
        }
    }
    throw std::invalid_argument("unknown generator '" + name + "'");
}

}  // namespace

bool generator_applicable(const std::string& name, std::size_t n) {
    if (name == "nested-toom") return n == 4 || n == 6 || n == 8 || n == 9;
    if (name == "dft") return true;
    return n >= 2;
}

std::vector<AccuracyRecord> run_experiment(const ExperimentConfig& config) {
    std::vector<AccuracyRecord> records;
    // complex generators handled separately from the real pipeline
    for (std::size_t d : config.dims) {
        if (d < 1 || d > 4) throw std::invalid_argument("experiment dims must be 1..4");
        for (std::size_t n : config.sizes) {
            for (std::size_t trial = 0; trial < config.trials; ++trial) {
                const std::uint64_t seed = config.base_seed ^ fnv1a64({d, n, trial});
                std::mt19937_64 eng(seed);
                std::vector<std::size_t> dims(d, n);
                Tensor<double> F(dims), G(dims);
                for (auto& x : F.data()) x = next_unit(eng);
                for (auto& x : G.data()) x = next_unit(eng);
                Tensor<double> want = direct_conv_nd(F, G);
                const double want_norm = vec_norm(want.data());

                for (const std::string& gen : config.generators) {
                    if (!generator_applicable(gen, n)) continue;
                    Tensor<double> got;
                    if (gen == "dft") {
                        BilinearAlgorithm<Complex> alg = dft_linear_alg(n, n);
                        Tensor<Complex> Fc(dims), Gc(dims);
                        for (std::size_t i = 0; i < F.size(); ++i) {
                            Fc.data()[i] = Complex(F.data()[i], 0.0);
                            Gc.data()[i] = Complex(G.data()[i], 0.0);
                        }
                        Tensor<Complex> Yc = apply_nd(alg, Fc, Gc);
                        got = Tensor<double>(Yc.dims());
                        for (std::size_t i = 0; i < Yc.size(); ++i)
                            got.data()[i] = Yc.data()[i].real();
                    } else {
                        BilinearAlgorithm<double> alg = build_real_generator(gen, n);
                        got = apply_nd(alg, F, G);
                    }
                    double err = 0.0;
                    for (std::size_t i = 0; i < got.size(); ++i)
                        err += mag2(got.data()[i] - want.data()[i]);
                    err = std::sqrt(err) / want_norm;
                    records.push_back(AccuracyRecord{gen, d, n, trial, seed, err});
                }
            }
        }
    }
    return records;
}

double mean_rel_err(const std::vector<AccuracyRecord>& records,
                    const std::string& generator, std::size_t d, std::size_t n) {
    double sum = 0.0;
    std::size_t count = 0;
    for (const auto& r : records)
        if (r.generator == generator && r.d == d && r.n == n) {
            sum += r.rel_err;
            ++count;
        }
    if (count == 0) throw std::invalid_argument("mean_rel_err: no matching records");
    return sum / static_cast<double>(count);
}

std::string records_csv(const std::vector<AccuracyRecord>& records) {
    std::ostringstream os;
    os << "generator,d,n,trial,seed,rel_err\n";
    os.precision(17);
    for (const auto& r : records)
        os << r.generator << ',' << r.d << ',' << r.n << ',' << r.trial << ','
           << r.seed << ',' << r.rel_err << '\n';
    return os.str();
}

std::string aggregate_csv(const std::vector<AccuracyRecord>& records) {
    std::map<std::tuple<std::string, std::size_t, std::size_t>,
             std::pair<double, std::size_t>> agg;
    for (const auto& r : records) {
        auto& slot = agg[{r.generator, r.d, r.n}];
        slot.first += r.rel_err;
        slot.second += 1;
    }
    std::ostringstream os;
    os << "generator,d,n,mean_rel_err\n";
    os.precision(17);
    for (const auto& [key, val] : agg)
        os << std::get<0>(key) << ',' << std::get<1>(key) << ',' << std::get<2>(key)
           << ',' << val.first / static_cast<double>(val.second) << '\n';
    return os.str();
}

}  // namespace bilconv

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bilconv/bilinear.hpp"

namespace bilconv {

struct SpectralNorm {
    double value = 0.0;
    bool frobenius_fallback = false;  // iteration cap hit; value is the upper bound
};

/// Largest singular value by power iteration on M^T M (M* M for complex),
/// relative tolerance 1e-10, capped at 1000 iterations; on a cap hit the
/// Frobenius norm is returned as a certified upper bound with the flag set.
SpectralNorm spectral_norm(const Matrix<double>& m);
SpectralNorm spectral_norm(const Matrix<Complex>& m);

/// Unit roundoff for the heuristic use of the bounds as a roundoff model;
/// the theorems themselves bound input perturbations.
inline constexpr double kUnitRoundoff = 0x1.0p-53;

struct ErrorBound {
    double value = 0.0;
    double norm_a = 0.0, norm_b = 0.0, norm_c = 0.0;
    double f_norm = 0.0, g_norm = 0.0;
    double eps = 0.0;
    std::size_t d = 1;
    bool overlap = false;
    bool first_order = true;
};

/// First-order perturbation bound 2 ||C||^d ||A||^d ||B||^d ||f|| ||g|| eps;
/// the overlap-add variant multiplies by 2^(d/2). When eps models roundoff
/// rather than an input perturbation, pass unit roundoff 2^-53 (heuristic).
template <typename T>
ErrorBound error_bound(const BilinearAlgorithm<T>& alg, double f_norm, double g_norm,
                       double eps, std::size_t d, bool overlap = false);

/// One experiment trial: relative error of a generated algorithm against the
/// direct oracle on shared random inputs (2-norm, Frobenius for d > 1).
struct AccuracyRecord {
    std::string generator;
    std::size_t d = 1;
    std::size_t n = 0;
    std::size_t trial = 0;
    std::uint64_t seed = 0;
    double rel_err = 0.0;
};

struct ExperimentConfig {
    std::vector<std::string> generators;  // toom-integer, toom-chebyshev, winograd, nested-toom, dft
    std::vector<std::size_t> dims;        // 1..4
    std::vector<std::size_t> sizes;       // 2..9
    std::size_t trials = 10;
    std::uint64_t base_seed = 1;
};

/// Deterministic harness: for each (d, n, trial) one input pair is drawn from
/// [0,1) with seed = base_seed ^ fnv1a64(d, n, trial) and fed to every
/// generator. PRNG: mt19937_64, doubles from the top 53 bits.
std::vector<AccuracyRecord> run_experiment(const ExperimentConfig& config);

/// Whether a generator name can produce the requested (d, n) combination.
bool generator_applicable(const std::string& name, std::size_t n);

double mean_rel_err(const std::vector<AccuracyRecord>& records,
                    const std::string& generator, std::size_t d, std::size_t n);

std::string records_csv(const std::vector<AccuracyRecord>& records);
std::string aggregate_csv(const std::vector<AccuracyRecord>& records);

/// FNV-1a over the little-endian bytes of the values (the pinned seed hash).
std::uint64_t fnv1a64(std::initializer_list<std::uint64_t> values);

}  // namespace bilconv

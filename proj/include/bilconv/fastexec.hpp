#pragma once

#include <cstdint>
#include <vector>

#include "bilconv/bilinear.hpp"
#include "bilconv/tensor.hpp"

namespace bilconv {

/// Reference summations straight from the variant formulas. Everything else
/// in this library is tested against these.
template <typename T>
std::vector<T> direct_conv(const std::vector<T>& f, const std::vector<T>& g,
                           ConvVariant v) {
    if (f.size() != v.f_len() || g.size() != v.g_len())
        throw std::invalid_argument("direct_conv: sizes do not match variant");
    std::vector<T> y(v.out_len(), T(0));
    switch (v.kind) {
        case ConvVariant::Kind::linear:
            for (std::size_t i = 0; i < f.size(); ++i)
                for (std::size_t j = 0; j < g.size(); ++j) y[i + j] += f[i] * g[j];
            break;
        case ConvVariant::Kind::cyclic:
            for (std::size_t i = 0; i < f.size(); ++i)
                for (std::size_t j = 0; j < g.size(); ++j)
                    y[(i + j) % v.n] += f[i] * g[j];
            break;
        case ConvVariant::Kind::correlation:
            for (std::size_t k = 0; k < y.size(); ++k)
                for (std::size_t i = 0; i < f.size(); ++i) y[k] += f[i] * g[k + i];
            break;
    }
    return y;
}

/// d-dimensional linear convolution by direct summation; d <= 4.
template <typename T>
Tensor<T> direct_conv_nd(const Tensor<T>& F, const Tensor<T>& G,
                         std::size_t max_order = 4) {
    const std::size_t d = F.order();
    if (d == 0 || d != G.order())
        throw std::invalid_argument("direct_conv_nd: tensor orders disagree");
    if (d > max_order)
        throw std::invalid_argument("direct_conv_nd: tensor order exceeds supported limit");
    if (!F.cubical() || !G.cubical())
        throw std::invalid_argument("direct_conv_nd: cubical tensors required");
    const std::size_t r = F.dims()[0], n = G.dims()[0];
    std::vector<std::size_t> out_dims(d, n + r - 1);
    Tensor<T> Y(out_dims);

    std::vector<std::size_t> fi(d, 0), gi(d, 0), yi(d, 0);
    const std::size_t ftot = F.size(), gtot = G.size();
    for (std::size_t a = 0; a < ftot; ++a) {
        {
            std::size_t rem = a;
            for (std::size_t k = d; k-- > 0;) { fi[k] = rem % r; rem /= r; }
        }
        const T& fv = F.data()[a];
        if (scalar_is_zero(fv)) continue;
        for (std::size_t b = 0; b < gtot; ++b) {
            std::size_t rem = b;
            for (std::size_t k = d; k-- > 0;) { gi[k] = rem % n; rem /= n; }
            for (std::size_t k = 0; k < d; ++k) yi[k] = fi[k] + gi[k];
            Y.at(yi) += fv * G.data()[b];
        }
    }
    return Y;
}

/// Complex op counters at the granularity of the radix-2 cost recurrence:
/// one count per butterfly pair, one count per twiddle product.
struct OpCounter {
    std::uint64_t adds = 0;
    std::uint64_t mults = 0;
};

/// Radix-2 DIT FFT; length must be a power of two. When counting, a size-2
/// transform is costed (0 adds, 2 mults) and nested size-2 butterflies
/// contribute one multiply each, so totals telescope to the closed form
/// (n(log n - 1)/2, n log n / 2) used by the cost model.
std::vector<Complex> fft(const std::vector<Complex>& x, OpCounter* counter = nullptr);

/// Inverse via conjugation: conj(fft(conj(x)))/n.
std::vector<Complex> ifft(const std::vector<Complex>& x);

/// Linear convolution by zero-padding to the next power of two >= n+r-1,
/// forward FFTs, pointwise multiply, inverse FFT, truncate.
std::vector<Complex> fft_conv(const std::vector<Complex>& f,
                              const std::vector<Complex>& g);
std::vector<double> fft_conv(const std::vector<double>& f,
                             const std::vector<double>& g);

/// Linear convolution via the symmetric-Hankel embedding: reverse g, embed in
/// a square Hankel of power-of-two size, split recursively into 3 half-size
/// Hankel products, direct product at sizes <= threshold. The multiplication
/// counter satisfies count(2n) = 3 count(n) above the threshold.
std::vector<double> hankel_sym_conv(const std::vector<double>& f,
                                    const std::vector<double>& g,
                                    OpCounter* counter = nullptr,
                                    std::size_t threshold = 4);

}  // namespace bilconv

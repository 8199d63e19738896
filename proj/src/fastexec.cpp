#include "bilconv/fastexec.hpp"

#include <cmath>
#include <stdexcept>

namespace bilconv {

namespace {

bool is_pow2(std::size_t n) { return n > 0 && (n & (n - 1)) == 0; }

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

void fft_rec(std::vector<Complex>& x, OpCounter* counter) {
    const std::size_t n = x.size();
    if (n == 1) return;
    if (n == 2) {
        Complex a = x[0], b = x[1];
        x[0] = a + b;
        x[1] = a - b;
        if (counter) counter->mults += 1;  // nested base case under the recurrence
        return;
    }
    std::vector<Complex> even(n / 2), odd(n / 2);
    for (std::size_t i = 0; i < n / 2; ++i) {
        even[i] = x[2 * i];
        odd[i] = x[2 * i + 1];
    }
    fft_rec(even, counter);
    fft_rec(odd, counter);
    const double step = -2.0 * M_PI / static_cast<double>(n);
    for (std::size_t k = 0; k < n / 2; ++k) {
        Complex w = std::polar(1.0, step * static_cast<double>(k));
        Complex t = w * odd[k];
        x[k] = even[k] + t;
        x[k + n / 2] = even[k] - t;
    }
    if (counter) {
        counter->adds += n / 2;   // one per butterfly pair
        counter->mults += n / 2;  // one per twiddle product
    }
}

}  // namespace

std::vector<Complex> fft(const std::vector<Complex>& x, OpCounter* counter) {
    if (!is_pow2(x.size()))
        throw std::invalid_argument("fft: length must be a power of two");
    std::vector<Complex> y = x;
    if (counter && x.size() == 2) {
        // A standalone 2-point transform is costed (0, 2) by convention.
        Complex a = y[0], b = y[1];
        y[0] = a + b;
        y[1] = a - b;
        counter->mults += 2;
        return y;
    }
    fft_rec(y, counter);
    return y;
}

std::vector<Complex> ifft(const std::vector<Complex>& x) {
    std::vector<Complex> y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = std::conj(x[i]);
    y = fft(y);
    const double scale = 1.0 / static_cast<double>(x.size());
    for (auto& v : y) v = std::conj(v) * scale;
    return y;
}

std::vector<Complex> fft_conv(const std::vector<Complex>& f,
                              const std::vector<Complex>& g) {
    if (f.empty() || g.empty()) throw std::invalid_argument("fft_conv: empty input");
    const std::size_t out = f.size() + g.size() - 1;
    const std::size_t m = next_pow2(out);
    std::vector<Complex> fp(m, Complex(0)), gp(m, Complex(0));
    for (std::size_t i = 0; i < f.size(); ++i) fp[i] = f[i];
    for (std::size_t i = 0; i < g.size(); ++i) gp[i] = g[i];
    fp = fft(fp);
    gp = fft(gp);
    for (std::size_t i = 0; i < m; ++i) fp[i] *= gp[i];
    fp = ifft(fp);
    fp.resize(out);
    return fp;
}

std::vector<double> fft_conv(const std::vector<double>& f,
                             const std::vector<double>& g) {
    std::vector<Complex> fc(f.begin(), f.end()), gc(g.begin(), g.end());
    std::vector<Complex> yc = fft_conv(fc, gc);
    std::vector<double> y(yc.size());
    for (std::size_t i = 0; i < yc.size(); ++i) y[i] = yc[i].real();
    return y;
}

namespace {

// Product of the size-s symmetric Hankel block whose anti-diagonals are
// x[off .. off+2s-2] with the vector z, recursing on the 2x2 block split.
std::vector<double> hankel_product(const std::vector<double>& x, std::size_t off,
                                   std::size_t s, const std::vector<double>& z,
                                   OpCounter* counter, std::size_t threshold) {
    if (s <= threshold) {
        std::vector<double> y(s, 0.0);
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t j = 0; j < s; ++j) y[i] += x[off + i + j] * z[j];
        if (counter) counter->mults += s * s;
        return y;
    }
    const std::size_t h = s / 2;
    // blocks: H(x1) = anti-diags [off, off+2h-2], H(x2) shifts by h, H(x3) by 2h
    std::vector<double> z1(z.begin(), z.begin() + h);
    std::vector<double> z2(z.begin() + h, z.end());
    std::vector<double> z12(h);
    for (std::size_t i = 0; i < h; ++i) z12[i] = z1[i] + z2[i];

    std::vector<double> d1(2 * h - 1), d3(2 * h - 1);
    for (std::size_t i = 0; i < 2 * h - 1; ++i) {
        d1[i] = x[off + i] - x[off + h + i];
        d3[i] = x[off + 2 * h + i] - x[off + h + i];
    }
    std::vector<double> p1 = hankel_product(d1, 0, h, z1, counter, threshold);
    std::vector<double> p2 = hankel_product(x, off + h, h, z12, counter, threshold);
    std::vector<double> p3 = hankel_product(d3, 0, h, z2, counter, threshold);

    std::vector<double> y(s);
    for (std::size_t i = 0; i < h; ++i) {
        y[i] = p1[i] + p2[i];
        y[h + i] = p2[i] + p3[i];
    }
    return y;
}

}  // namespace

std::vector<double> hankel_sym_conv(const std::vector<double>& f,
                                    const std::vector<double>& g,
                                    OpCounter* counter, std::size_t threshold) {
    if (f.empty() || g.empty())
        throw std::invalid_argument("hankel_sym_conv: empty input");
    const std::size_t out = f.size() + g.size() - 1;
    const std::size_t n = next_pow2(std::max(f.size(), g.size()));
    const std::size_t s = 2 * n;  // square Hankel size, even and a power of two

    // anti-diagonal vector [0^(n-1), f, 0^(...)] of length 2s-1
    std::vector<double> x(2 * s - 1, 0.0);
    for (std::size_t i = 0; i < f.size(); ++i) x[n - 1 + i] = f[i];
    // g zero-padded to length n, reversed, then padded to length s
    std::vector<double> z(s, 0.0);
    for (std::size_t j = 0; j < n; ++j)
        if (n - 1 - j < g.size()) z[j] = g[n - 1 - j];

    std::vector<double> y = hankel_product(x, 0, s, z, counter, threshold);
    y.resize(out);
    return y;
}

}  // namespace bilconv

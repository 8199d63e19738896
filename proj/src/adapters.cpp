#include "bilconv/adapters.hpp"

#include <numeric>
#include <stdexcept>

namespace bilconv {

namespace {

// extended Euclid: returns (g, x, y) with a*x + b*y = g
std::tuple<long long, long long, long long> ext_gcd(long long a, long long b) {
    if (b == 0) return {a, 1, 0};
    auto [g, x, y] = ext_gcd(b, a % b);
    return {g, y, x - (a / b) * y};
}

}  // namespace

std::pair<Matrix<Rational>, CrtSplit> crt_permutation(std::size_t n1, std::size_t n2) {
    auto [g, x, y] = ext_gcd(static_cast<long long>(n1), static_cast<long long>(n2));
    if (g != 1) throw std::domain_error("crt_permutation: sizes are not coprime");
    const long long n = static_cast<long long>(n1 * n2);
    auto wrap = [n](long long v) { return static_cast<std::size_t>(((v % n) + n) % n); };
    CrtSplit split;
    split.n1 = n1;
    split.n2 = n2;
    split.m1 = x;
    split.m2 = y;
    split.e1 = wrap(static_cast<long long>(n2) * y);
    split.e2 = wrap(static_cast<long long>(n1) * x);

    Matrix<Rational> p(n1 * n2, n1 * n2);
    for (std::size_t i = 0; i < n1 * n2; ++i) {
        std::size_t j = wrap(static_cast<long long>((i / n2) * split.e1 +
                                                    (i % n2) * split.e2));
        p(i, j) = Rational(1);
    }
    return {std::move(p), split};
}

}  // namespace bilconv

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bilconv/structured.hpp"

using namespace bilconv;

namespace {

Rational q(long long n, long long d = 1) { return Rational(BigInt(n), BigInt(d)); }

Polynomial<Rational> poly(std::initializer_list<long long> coeffs) {
    std::vector<Rational> c;
    for (long long v : coeffs) c.push_back(q(v));
    return Polynomial<Rational>(std::move(c));
}

Polynomial<Rational> random_poly(std::mt19937_64& eng, std::size_t degree) {
    std::uniform_int_distribution<long long> num(-9, 9);
    std::uniform_int_distribution<long long> den(1, 9);
    std::vector<Rational> c(degree + 1);
    for (std::size_t i = 0; i < degree; ++i) c[i] = q(num(eng), den(eng));
    c[degree] = q(num(eng) | 1, den(eng));  // nonzero leading coefficient
    return Polynomial<Rational>(std::move(c));
}

}  // namespace

TEST_CASE("rational normalization and arithmetic") {
    CHECK(Rational(BigInt(4), BigInt(-6)) == q(-2, 3));
    CHECK((q(1, 3) + q(-2, 6)).is_zero());
    CHECK(q(1, 2).str() == "1/2");
    CHECK(Rational::parse("-3/9") == q(-1, 3));
    CHECK(Rational::parse("7") == q(7));
    CHECK(q(1, 4).to_double() == 0.25);
    CHECK(abs(q(-5, 2)) == q(5, 2));
    CHECK_THROWS_AS(q(1) / q(0), std::domain_error);
}

TEST_CASE("poly_mul matches the convolution summation") {
    // (1+2x)(3+4x) = 3 + 10x + 8x^2
    CHECK(poly_mul(poly({1, 2}), poly({3, 4})) == poly({3, 10, 8}));
    CHECK(poly_mul(poly({5, -1, 2}), poly({1})) == poly({5, -1, 2}));
    CHECK(poly_mul(poly({5, -1, 2}), Polynomial<Rational>{}).is_zero());
}

TEST_CASE("poly_divmod identities") {
    // x^3 / (x^2+1): q = x, rho = -x
    auto [quo, rem] = poly_divmod(poly({0, 0, 0, 1}), poly({1, 0, 1}));
    CHECK(quo == poly({0, 1}));
    CHECK(rem == poly({0, -1}));

    auto [q2, r2] = poly_divmod(poly({1, 2}), poly({0, 0, 1}));
    CHECK(q2.is_zero());
    CHECK(r2 == poly({1, 2}));

    auto [q3, r3] = poly_divmod(poly({-1, 0, 1}), poly({-1, 1}));
    CHECK(q3 == poly({1, 1}));
    CHECK(r3.is_zero());

    CHECK_THROWS_AS(poly_divmod(poly({1}), Polynomial<Rational>{}), std::domain_error);

    // p = q*m + rho with deg rho < deg m on random inputs
    std::mt19937_64 eng(7);
    for (int it = 0; it < 50; ++it) {
        auto p = random_poly(eng, 1 + eng() % 7);
        auto m = random_poly(eng, 1 + eng() % 4);
        auto [quot, rho] = poly_divmod(p, m);
        Polynomial<Rational> back = poly_mul(quot, m);
        std::vector<Rational> sum = back.padded(p.degree() + 1);
        for (std::size_t i = 0; i < rho.coeffs().size(); ++i) sum[i] += rho.coeff(i);
        CHECK(Polynomial<Rational>(sum) == p);
        if (!rho.is_zero()) CHECK(rho.degree() < m.degree());
    }
}

TEST_CASE("toeplitz_of structure and convolution oracle") {
    auto t = toeplitz_of<Rational>({q(1), q(2)}, 3);
    CHECK(t.rows() == 4);
    CHECK(t.cols() == 3);
    Matrix<Rational> want(4, 3, {q(1), q(0), q(0), q(2), q(1), q(0), q(0), q(2), q(1),
                                 q(0), q(0), q(2)});
    CHECK(t == want);

    auto single = toeplitz_of<Rational>({q(7)}, 2);
    CHECK(single == Matrix<Rational>(2, 2, {q(7), q(0), q(0), q(7)}));

    // T_<f> g = linear convolution
    auto y = matvec(t, std::vector<Rational>{q(3), q(4), q(5)});
    CHECK(y == std::vector<Rational>{q(3), q(10), q(13), q(10)});
    CHECK_THROWS(toeplitz_of<Rational>({}, 2));
}

TEST_CASE("circulant_of structure and cyclic oracle") {
    auto c = circulant_of<Rational>({q(1), q(2)});
    CHECK(c == Matrix<Rational>(2, 2, {q(1), q(2), q(2), q(1)}));
    auto e0 = circulant_of<Rational>({q(1), q(0), q(0)});
    CHECK(e0 == Matrix<Rational>::identity(3));
    CHECK(matvec(c, std::vector<Rational>{q(3), q(4)}) ==
          std::vector<Rational>{q(11), q(10)});
}

TEST_CASE("vandermonde with infinity node") {
    std::vector<Node> nodes{Node::finite(q(0)), Node::finite(q(1)), Node::infinity()};
    auto v2 = vandermonde(nodes, 2);
    CHECK(v2 == Matrix<Rational>(2, 3, {q(1), q(1), q(0), q(0), q(1), q(1)}));

    CHECK(vandermonde({Node::finite(q(0))}, 1) == Matrix<Rational>(1, 1, {q(1)}));

    // square form and its exact inverse
    auto sq = vandermonde(nodes, 3).transpose();
    CHECK(sq == Matrix<Rational>(3, 3, {q(1), q(0), q(0), q(1), q(1), q(1), q(0), q(0), q(1)}));
    auto inv = inverse(sq);
    CHECK(inv == Matrix<Rational>(3, 3,
                                  {q(1), q(0), q(0), q(-1), q(1), q(-1), q(0), q(0), q(1)}));
    CHECK(nnz(inv) == 5);

    // infinity column has exactly one nonzero; dropping it leaves classic powers
    auto enc = vandermonde(nodes, 3);
    std::size_t inf_nnz = 0;
    for (std::size_t i = 0; i < 3; ++i)
        if (!enc(i, 2).is_zero()) ++inf_nnz;
    CHECK(inf_nnz == 1);

    CHECK_THROWS(vandermonde({Node::finite(q(1)), Node::finite(q(1))}, 2));
    CHECK_THROWS(vandermonde({Node::infinity(), Node::finite(q(1))}, 2));
}

TEST_CASE("mod_operator examples") {
    CHECK(mod_operator(poly({-1, 1}), 1) == Matrix<Rational>(1, 2, {q(1), q(1)}));
    CHECK(mod_operator(poly({1, 0, 1}), 3) ==
          Matrix<Rational>(2, 4, {q(1), q(0), q(-1), q(0), q(0), q(1), q(0), q(-1)}));
    CHECK(mod_operator(poly({0, 0, 1}), 1) == Matrix<Rational>::identity(2));
    CHECK_THROWS_AS(mod_operator(Polynomial<Rational>{}, 2), std::domain_error);

    // non-monic divisors normalize first; the remainder is unchanged
    CHECK(mod_operator(poly({-2, 2}), 1) == mod_operator(poly({-1, 1}), 1));
    CHECK(mod_operator(poly({3, 0, 3}), 3) == mod_operator(poly({1, 0, 1}), 3));
}

TEST_CASE("mod_operator agrees with poly_divmod on random polynomials") {
    std::mt19937_64 eng(11);
    for (int it = 0; it < 60; ++it) {
        std::size_t dm = 1 + eng() % 4;
        std::size_t d = eng() % 8;
        auto m = random_poly(eng, dm);
        auto p = random_poly(eng, d);
        auto x = mod_operator(m, d);
        CHECK(x.rows() == dm);
        CHECK(x.cols() == d + 1);
        auto got = matvec(x, p.padded(d + 1));
        auto rho = poly_divmod(p, m).second;
        auto want = rho.padded(dm);
        CHECK(got == want);
    }
}

TEST_CASE("bezout_solve identities and degree bounds") {
    auto [N1, n1] = bezout_solve(poly({0, 1}), poly({-1, 1}));
    CHECK(N1 == poly({1}));
    CHECK(n1 == poly({-1}));

    auto [N2, n2] = bezout_solve(poly({-1, 1}), poly({1, 1}));
    CHECK(N2 == Polynomial<Rational>({q(-1, 2)}));
    CHECK(n2 == Polynomial<Rational>({q(1, 2)}));

    CHECK_THROWS_AS(bezout_solve(poly({0, 1}), poly({0, 0, 1})), std::domain_error);

    std::mt19937_64 eng(13);
    int done = 0;
    while (done < 25) {
        auto a = random_poly(eng, 1 + eng() % 3);
        auto b = random_poly(eng, 1 + eng() % 3);
        try {
            auto [N, nn] = bezout_solve(a, b);
            auto lhs = poly_mul(a, N);
            auto rhs = poly_mul(b, nn);
            std::vector<Rational> sum = lhs.padded(8);
            auto rv = rhs.padded(8);
            for (std::size_t i = 0; i < 8; ++i) sum[i] += rv[i];
            CHECK(Polynomial<Rational>(sum) == poly({1}));
            if (!N.is_zero()) CHECK(N.degree() <= b.degree() - 1);
            if (!nn.is_zero()) CHECK(nn.degree() <= a.degree() - 1);
            ++done;
        } catch (const std::domain_error&) {
            // shared root, skip
        }
    }
}

TEST_CASE("dft_matrix definition and inverse") {
    auto d2 = dft_matrix(2);
    CHECK(d2(0, 0).real() == doctest::Approx(1.0));
    CHECK(d2(1, 1).real() == doctest::Approx(-1.0));
    CHECK(dft_matrix(1)(0, 0).real() == doctest::Approx(1.0));

    for (std::size_t n : {2, 4, 8, 16, 32, 64}) {
        auto d = dft_matrix(n);
        double worst = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Complex s(0);
                for (std::size_t k = 0; k < n; ++k) s += d(i, k) * std::conj(d(j, k));
                s /= static_cast<double>(n);
                if (i == j) s -= 1.0;
                worst = std::max(worst, std::abs(s));
            }
        CHECK(worst < 1e-13);
    }
}

TEST_CASE("dct1_matrix definition and inverse") {
    auto c1 = dct1_matrix(1);
    CHECK(c1(0, 0) == doctest::Approx(0.5));
    CHECK(c1(0, 1) == doctest::Approx(0.5));
    CHECK(c1(1, 0) == doctest::Approx(0.5));
    CHECK(c1(1, 1) == doctest::Approx(-0.5));

    auto c4 = dct1_matrix(4);
    for (std::size_t j = 0; j <= 4; ++j)
        CHECK(c4(0, j) == doctest::Approx(j == 0 || j == 4 ? 0.5 : 1.0));

    auto prod = matmul(c4, c4);
    for (std::size_t i = 0; i <= 4; ++i)
        for (std::size_t j = 0; j <= 4; ++j)
            CHECK(prod(i, j) * (2.0 / 4.0) == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-12));
}

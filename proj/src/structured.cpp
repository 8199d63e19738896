#include "bilconv/structured.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace bilconv {

namespace {

void check_distinct(const std::vector<Node>& nodes) {
    std::size_t inf_count = 0;
    std::set<std::pair<std::string, std::string>> seen;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i].is_infinity()) {
            ++inf_count;
            if (i + 1 != nodes.size())
                throw std::invalid_argument("infinity node must be last");
        } else {
            auto key = std::make_pair(nodes[i].value->num().str(),
                                      nodes[i].value->den().str());
            if (!seen.insert(key).second)
                throw std::invalid_argument("duplicate interpolation node");
        }
    }
    if (inf_count > 1) throw std::invalid_argument("at most one infinity node");
}

}  // namespace

Matrix<Rational> vandermonde(const std::vector<Node>& nodes, std::size_t num_rows) {
    if (nodes.empty() || num_rows == 0)
        throw std::invalid_argument("vandermonde: empty node set");
    check_distinct(nodes);
    Matrix<Rational> v(num_rows, nodes.size());
    for (std::size_t l = 0; l < nodes.size(); ++l) {
        if (nodes[l].is_infinity()) {
            v(num_rows - 1, l) = Rational(1);
        } else {
            Rational p(1);
            for (std::size_t i = 0; i < num_rows; ++i) {
                v(i, l) = p;
                p *= *nodes[l].value;
            }
        }
    }
    return v;
}

Matrix<double> vandermonde_real(const std::vector<double>& nodes, std::size_t num_rows) {
    if (nodes.empty() || num_rows == 0)
        throw std::invalid_argument("vandermonde: empty node set");
    Matrix<double> v(num_rows, nodes.size());
    for (std::size_t l = 0; l < nodes.size(); ++l) {
        double p = 1.0;
        for (std::size_t i = 0; i < num_rows; ++i) {
            v(i, l) = p;
            p *= nodes[l];
        }
    }
    return v;
}

Matrix<Rational> mod_operator(const Polynomial<Rational>& m, std::size_t d) {
    if (m.is_zero()) throw std::domain_error("mod_operator: zero divisor");
    if (m.degree() == 0) return Matrix<Rational>(0, d + 1);  // everything reduces to 0

    // Normalize to monic; the remainder is unchanged by scaling the divisor.
    Polynomial<Rational> monic = m;
    if (m.coeff(m.degree()) != Rational(1)) {
        std::vector<Rational> c = m.coeffs();
        Rational lead = c.back();
        for (auto& x : c) x /= lead;
        monic = Polynomial<Rational>(std::move(c));
    }
    const std::size_t dm = monic.degree();

    if (d < dm) {
        // deg p < deg m: p mod m = p, embedded into deg(m) coefficient slots.
        Matrix<Rational> x(dm, d + 1);
        for (std::size_t i = 0; i <= d; ++i) x(i, i) = Rational(1);
        return x;
    }

    const std::size_t ncols = d - dm + 1;
    Matrix<Rational> t = toeplitz_of(monic.coeffs(), ncols);  // (d+1) x ncols
    Matrix<Rational> l(dm, ncols), u(ncols, ncols);
    for (std::size_t i = 0; i < dm; ++i)
        for (std::size_t j = 0; j < ncols; ++j) l(i, j) = t(i, j);
    for (std::size_t i = 0; i < ncols; ++i)
        for (std::size_t j = 0; j < ncols; ++j) u(i, j) = t(dm + i, j);
    // U is upper triangular with unit diagonal for monic m, so always invertible.
    Matrix<Rational> lu = matmul(l, inverse(u));

    Matrix<Rational> x(dm, d + 1);
    for (std::size_t i = 0; i < dm; ++i) {
        x(i, i) = Rational(1);
        for (std::size_t j = 0; j < ncols; ++j) x(i, dm + j) = -lu(i, j);
    }
    return x;
}

std::pair<Polynomial<Rational>, Polynomial<Rational>> bezout_solve(
    const Polynomial<Rational>& Mhat, const Polynomial<Rational>& mhat) {
    if (Mhat.is_zero() || mhat.is_zero())
        throw std::domain_error("bezout_solve: zero polynomial");
    const std::size_t dM = Mhat.degree();
    const std::size_t dm = mhat.degree();
    if (dM == 0) {
        // constant Mhat: Nhat = 1/Mhat, nhat = 0
        return {Polynomial<Rational>({Rational(1) / Mhat.coeff(0)}), Polynomial<Rational>{}};
    }
    if (dm == 0)
        return {Polynomial<Rational>{}, Polynomial<Rational>({Rational(1) / mhat.coeff(0)})};

    const std::size_t n = dM + dm;
    Matrix<Rational> sys(n, n);
    Matrix<Rational> tM = toeplitz_of(Mhat.coeffs(), dm);  // n x dm
    Matrix<Rational> tm = toeplitz_of(mhat.coeffs(), dM);  // n x dM
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < dm; ++j) sys(i, j) = tM(i, j);
        for (std::size_t j = 0; j < dM; ++j) sys(i, dm + j) = tm(i, j);
    }
    std::vector<Rational> e0(n, Rational(0));
    e0[0] = Rational(1);
    std::vector<Rational> sol;
    try {
        sol = solve(sys, e0);
    } catch (const std::domain_error&) {
        throw std::domain_error("bezout_solve: polynomials are not coprime");
    }
    std::vector<Rational> nh(sol.begin(), sol.begin() + dm);
    std::vector<Rational> nl(sol.begin() + dm, sol.end());
    return {Polynomial<Rational>(std::move(nh)), Polynomial<Rational>(std::move(nl))};
}

Matrix<Complex> dft_matrix(std::size_t n) {
    if (n < 1) throw std::invalid_argument("dft_matrix: n >= 1 required");
    Matrix<Complex> d(n, n);
    const double step = -2.0 * M_PI / static_cast<double>(n);
    for (std::size_t m = 0; m < n; ++m)
        for (std::size_t k = 0; k < n; ++k)
            d(m, k) = std::polar(1.0, step * static_cast<double>((m * k) % n));
    return d;
}

Matrix<double> dct1_matrix(std::size_t N) {
    if (N < 1) throw std::invalid_argument("dct1_matrix: N >= 1 required");
    Matrix<double> c(N + 1, N + 1);
    for (std::size_t i = 0; i <= N; ++i)
        for (std::size_t j = 0; j <= N; ++j) {
            double eps = (j == 0 || j == N) ? 0.5 : 1.0;
            c(i, j) = eps * std::cos(static_cast<double>(i * j) * M_PI /
                                     static_cast<double>(N));
        }
    return c;
}

}  // namespace bilconv

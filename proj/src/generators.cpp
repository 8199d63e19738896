#include "bilconv/generators.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "bilconv/fastexec.hpp"

namespace bilconv {

std::vector<Node> default_nodes(std::size_t count) {
    if (count == 0) throw std::invalid_argument("default_nodes: count >= 1");
    std::vector<Node> nodes;
    nodes.push_back(Node::finite(Rational(0)));
    long long k = 1;
    while (nodes.size() + 1 < count) {
        nodes.push_back(Node::finite(Rational(k)));
        if (nodes.size() + 1 < count) nodes.push_back(Node::finite(Rational(-k)));
        ++k;
    }
    if (nodes.size() < count) nodes.push_back(Node::infinity());
    return nodes;
}

std::vector<double> chebyshev_nodes(std::size_t count) {
    std::vector<double> nodes(count);
    for (std::size_t i = 0; i < count; ++i)
        nodes[i] = std::cos((2.0 * static_cast<double>(i) + 1.0) * M_PI /
                            (2.0 * static_cast<double>(count)));
    return nodes;
}

BilinearAlgorithm<Rational> toom_cook(std::size_t r, std::size_t n,
                                      const std::vector<Node>& nodes) {
    const std::size_t R = n + r - 1;
    if (nodes.size() != R)
        throw std::invalid_argument("toom_cook: need exactly n+r-1 nodes");
    Matrix<Rational> a = vandermonde(nodes, r);
    Matrix<Rational> b = vandermonde(nodes, n);
    // square V with rows indexed by nodes = transpose of the full-height form
    Matrix<Rational> c = inverse(vandermonde(nodes, R).transpose());

    std::string prov = "toom-cook nodes";
    for (const Node& nd : nodes)
        prov += nd.is_infinity() ? " inf" : " " + nd.value->str();
    return make_algorithm(std::move(a), std::move(b), std::move(c),
                          ConvVariant::linear(r, n), std::move(prov));
}

BilinearAlgorithm<double> toom_cook_real(std::size_t r, std::size_t n,
                                         const std::vector<double>& nodes) {
    const std::size_t R = n + r - 1;
    if (nodes.size() != R)
        throw std::invalid_argument("toom_cook_real: need exactly n+r-1 nodes");
    for (std::size_t i = 0; i < R; ++i)
        for (std::size_t j = i + 1; j < R; ++j)
            if (nodes[i] == nodes[j])
                throw std::invalid_argument("toom_cook_real: duplicate node");
    Matrix<double> a = vandermonde_real(nodes, r);
    Matrix<double> b = vandermonde_real(nodes, n);
    Matrix<double> c = inverse(vandermonde_real(nodes, R).transpose());
    return make_algorithm(std::move(a), std::move(b), std::move(c),
                          ConvVariant::linear(r, n), "toom-cook real nodes");
}

Polynomial<Rational> DivisorSet::product() const {
    Polynomial<Rational> m({Rational(1)});
    for (const auto& d : divisors) m = poly_mul(m, d);
    return m;
}

std::size_t DivisorSet::degree_sum() const {
    std::size_t s = 0;
    for (const auto& d : divisors) {
        if (d.is_zero()) throw std::domain_error("divisor set contains zero polynomial");
        s += d.degree();
    }
    return s;
}

void DivisorSet::check_coprime() const {
    for (std::size_t i = 0; i < divisors.size(); ++i)
        for (std::size_t j = i + 1; j < divisors.size(); ++j) {
            try {
                bezout_solve(divisors[i], divisors[j]);
            } catch (const std::domain_error&) {
                throw std::domain_error("divisors " + std::to_string(i) + " and " +
                                        std::to_string(j) + " are not coprime");
            }
        }
}

namespace {

// One term of the divisor grammar: [c][*][x[^k]] with c rational.
void parse_term(const std::string& term, std::vector<Rational>& coeffs) {
    std::string t;
    for (char ch : term)
        if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
    if (t.empty() || t == "+" || t == "-")
        throw std::invalid_argument("empty term in polynomial");

    Rational sign(1);
    std::size_t pos = 0;
    if (t[0] == '+') { pos = 1; }
    else if (t[0] == '-') { sign = Rational(-1); pos = 1; }

    std::size_t xpos = t.find('x', pos);
    Rational coef(1);
    std::size_t power = 0;
    if (xpos == std::string::npos) {
        coef = Rational::parse(t.substr(pos));
    } else {
        std::string cstr = t.substr(pos, xpos - pos);
        if (!cstr.empty() && cstr.back() == '*') cstr.pop_back();
        if (!cstr.empty()) coef = Rational::parse(cstr);
        power = 1;
        if (xpos + 1 < t.size()) {
            if (t[xpos + 1] != '^')
                throw std::invalid_argument("bad term '" + term + "'");
            power = std::stoul(t.substr(xpos + 2));
        }
    }
    if (coeffs.size() <= power) coeffs.resize(power + 1, Rational(0));
    coeffs[power] += sign * coef;
}

}  // namespace

Polynomial<Rational> parse_polynomial(const std::string& text) {
    std::vector<Rational> coeffs;
    std::string term;
    bool in_term = false;
    for (char ch : text) {
        if ((ch == '+' || ch == '-') && in_term) {
            parse_term(term, coeffs);
            term.clear();
            term += ch;
            continue;
        }
        if (!std::isspace(static_cast<unsigned char>(ch))) in_term = true;
        term += ch;
    }
    if (!term.empty()) parse_term(term, coeffs);
    return Polynomial<Rational>(std::move(coeffs));
}

DivisorSet parse_divisors(const std::string& text) {
    DivisorSet set;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ';')) {
        if (part.find_first_not_of(" \t") == std::string::npos) continue;
        set.divisors.push_back(parse_polynomial(part));
    }
    if (set.divisors.empty()) throw std::invalid_argument("empty divisor list");
    return set;
}

namespace {

// Cumulative divisor sequence behind the Winograd cost table.
const char* const kTableDivisors[] = {
    "x^2+1", "x", "x+1", "x-1", "x+2", "x-2", "x+1/2", "x-1/2",
    "x+4", "x-4", "x+1/4", "x-1/4", "x^2+2", "x^2+1/2",
};

}  // namespace

DivisorSet table3_divisors(std::size_t n) {
    if (n < 2 || n > 9)
        throw std::invalid_argument("table3_divisors: n in 2..9");
    // n=2 takes the first two entries; each following n appends two more
    // (the final two rows append one degree-2 polynomial each).
    static const std::size_t counts[] = {2, 4, 6, 8, 10, 12, 13, 14};
    DivisorSet set;
    for (std::size_t i = 0; i < counts[n - 2]; ++i)
        set.divisors.push_back(parse_polynomial(kTableDivisors[i]));
    return set;
}

DivisorSet default_divisors(std::size_t degree_sum) {
    if (degree_sum == 0) throw std::invalid_argument("default_divisors: degree_sum >= 1");
    DivisorSet set;
    std::size_t acc = 0;
    for (const char* d : kTableDivisors) {
        if (acc == degree_sum) return set;
        auto p = parse_polynomial(d);
        if (acc + p.degree() > degree_sum) break;
        acc += p.degree();
        set.divisors.push_back(std::move(p));
    }
    if (acc == degree_sum) return set;
    // fall back to distinct linear factors x, x-1, x+1, x-2, ...
    set.divisors.clear();
    set.divisors.push_back(parse_polynomial("x"));
    long long k = 1;
    int s = -1;
    while (set.divisors.size() < degree_sum) {
        std::vector<Rational> c{Rational(-s * k), Rational(1)};
        set.divisors.push_back(Polynomial<Rational>(std::move(c)));
        if (s > 0) ++k;
        s = -s;
    }
    return set;
}

namespace {

BilinearAlgorithm<Rational> default_sub_alg(std::size_t deg) {
    if (deg == 1) {
        Matrix<Rational> one(1, 1, {Rational(1)});
        return make_algorithm(one, one, one, ConvVariant::linear(1, 1), "trivial");
    }
    return toom_cook(deg, deg, default_nodes(2 * deg - 1));
}

}  // namespace

BilinearAlgorithm<Rational> winograd(
    std::size_t r, std::size_t n, const DivisorSet& divisors,
    const std::map<std::size_t, BilinearAlgorithm<Rational>>& sub_algs) {
    const std::size_t target = n + r - 1;
    if (divisors.degree_sum() != target)
        throw std::domain_error("winograd: divisor degrees must sum to n+r-1");
    divisors.check_coprime();

    const Polynomial<Rational> M = divisors.product();
    const std::size_t degM = M.degree();

    std::vector<Matrix<Rational>> a_blocks, b_blocks, c_blocks;
    std::size_t rank = 0;
    for (const auto& m : divisors.divisors) {
        const std::size_t dm = m.degree();
        auto it = sub_algs.find(dm);
        BilinearAlgorithm<Rational> sub =
            it != sub_algs.end() ? it->second : default_sub_alg(dm);
        if (sub.variant.kind != ConvVariant::Kind::linear ||
            sub.variant.r != dm || sub.variant.n != dm)
            throw std::domain_error("winograd: sub-algorithm must be linear of size deg(m)");
        rank += sub.rank();

        // encodings: reduce each input mod m, then apply the small encode
        Matrix<Rational> xa = mod_operator(m, r - 1);  // deg(m) x r
        Matrix<Rational> xb = mod_operator(m, n - 1);
        a_blocks.push_back(matmul(xa.transpose(), sub.A));
        b_blocks.push_back(matmul(xb.transpose(), sub.B));

        // decode: CRT recombination e = M_i N_i mod M applied as a Toeplitz
        // product, sandwiched by remainder operators sized to the operands
        auto [Mi, rem] = poly_divmod(M, m);
        if (!rem.is_zero()) throw std::domain_error("winograd: divisor does not divide M");
        auto [Ni, ni] = bezout_solve(Mi, m);
        Polynomial<Rational> e = poly_divmod(poly_mul(Mi, Ni), M).second;
        Matrix<Rational> te = toeplitz_of(e.padded(degM), dm);  // (degM+dm-1) x dm
        Matrix<Rational> xm = mod_operator(m, 2 * dm - 2);      // dm x (2dm-1)
        Matrix<Rational> xM = mod_operator(M, degM + dm - 2);   // degM x (degM+dm-1)
        c_blocks.push_back(matmul(xM, matmul(te, matmul(xm, sub.C))));
    }

    Matrix<Rational> A(r, rank), B(n, rank), C(degM, rank);
    std::size_t col = 0;
    for (std::size_t k = 0; k < divisors.divisors.size(); ++k) {
        const std::size_t w = a_blocks[k].cols();
        for (std::size_t j = 0; j < w; ++j) {
            for (std::size_t i = 0; i < r; ++i) A(i, col + j) = a_blocks[k](i, j);
            for (std::size_t i = 0; i < n; ++i) B(i, col + j) = b_blocks[k](i, j);
            for (std::size_t i = 0; i < degM; ++i) C(i, col + j) = c_blocks[k](i, j);
        }
        col += w;
    }

    std::string prov = "winograd divisors";
    for (const auto& m : divisors.divisors) {
        prov += " [";
        for (std::size_t i = 0; i < m.coeffs().size(); ++i) {
            if (i) prov += ",";
            prov += m.coeff(i).str();
        }
        prov += "]";
    }
    return make_algorithm(std::move(A), std::move(B), std::move(C),
                          ConvVariant::linear(r, n), std::move(prov));
}

BilinearAlgorithm<Complex> dft_cyclic_alg(std::size_t n) {
    Matrix<Complex> d = dft_matrix(n);
    Matrix<Complex> dt = d.transpose();
    // D^-1 = (1/n) D*
    Matrix<Complex> dinv(n, n);
    const double scale = 1.0 / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) dinv(i, j) = std::conj(d(i, j)) * scale;
    Matrix<Complex> dt2 = dt;
    return make_algorithm(std::move(dt), std::move(dt2), std::move(dinv),
                          ConvVariant::cyclic(n), "dft cyclic n=" + std::to_string(n));
}

BilinearAlgorithm<Complex> dft_linear_alg(std::size_t r, std::size_t n) {
    const std::size_t R = n + r - 1;
    BilinearAlgorithm<Complex> cyc = dft_cyclic_alg(R);
    Matrix<Complex> a(r, R), b(n, R);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < R; ++j) a(i, j) = cyc.A(i, j);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < R; ++j) b(i, j) = cyc.B(i, j);
    return make_algorithm(std::move(a), std::move(b), cyc.C,
                          ConvVariant::linear(r, n),
                          "dft linear r=" + std::to_string(r) + " n=" + std::to_string(n));
}

BilinearAlgorithm<double> dct_linear_alg(std::size_t n) {
    if (n < 1) throw std::invalid_argument("dct_linear_alg: n >= 1");
    const std::size_t pre = n / 2 + 1;
    const std::size_t post = (3 * n) / 2 + 2;
    const std::size_t len = pre + n + post;  // N+1
    const std::size_t N = len - 1;
    Matrix<double> dct = dct1_matrix(N);

    // encode on the embedded window: A(t,i) = dct(i, pre+t)
    Matrix<double> a(n, len);
    for (std::size_t t = 0; t < n; ++t)
        for (std::size_t i = 0; i < len; ++i) a(t, i) = dct(i, pre + t);

    // full decode before extraction: 2 * (2/N) * C
    const double scale = 4.0 / static_cast<double>(N);
    const std::size_t out = 2 * n - 1;

    // calibrate the extraction offset against the direct oracle once
    std::vector<double> pf(n), pg(n);
    for (std::size_t i = 0; i < n; ++i) {
        pf[i] = 1.0 + static_cast<double>(i);
        pg[i] = 2.0 + 0.5 * static_cast<double>(n - i);
    }
    std::vector<double> want = direct_conv(pf, pg, ConvVariant::linear(n, n));
    std::vector<double> ef(len, 0.0), eg(len, 0.0);
    for (std::size_t i = 0; i < n; ++i) { ef[pre + i] = pf[i]; eg[pre + i] = pg[i]; }
    std::vector<double> u = matvec(dct, ef), v = matvec(dct, eg);
    for (std::size_t i = 0; i < len; ++i) u[i] *= v[i];
    std::vector<double> full = matvec(dct, u);
    for (auto& x : full) x *= scale;

    std::optional<std::size_t> offset;
    for (std::size_t s = 0; s + out <= len; ++s) {
        double worst = 0.0;
        for (std::size_t k = 0; k < out; ++k)
            worst = std::max(worst, std::abs(full[s + k] - want[k]));
        if (worst < 1e-8) { offset = s; break; }
    }
    if (!offset)
        throw std::domain_error(
            "dct_linear_alg: extraction calibration failed, no output window "
            "matches the direct oracle within 1e-8 (n=" + std::to_string(n) + ")");

    Matrix<double> c(out, len);
    for (std::size_t k = 0; k < out; ++k)
        for (std::size_t j = 0; j < len; ++j) c(k, j) = scale * dct(*offset + k, j);

    Matrix<double> b = a;
    return make_algorithm(std::move(a), std::move(b), std::move(c),
                          ConvVariant::linear(n, n),
                          "dct1 linear n=" + std::to_string(n) +
                              " offset=" + std::to_string(*offset));
}

BilinearAlgorithm<Rational> karatsuba_alg() {
    auto q = [](long long v) { return Rational(v); };
    Matrix<Rational> a(2, 3, {q(1), q(1), q(0), q(0), q(-1), q(1)});
    Matrix<Rational> c(3, 3, {q(1), q(0), q(0), q(1), q(-1), q(1), q(0), q(0), q(1)});
    return make_algorithm(a, a, std::move(c), ConvVariant::linear(2, 2), "karatsuba");
}

BilinearAlgorithm<Rational> sparse3_alg() {
    auto q = [](long long v) { return Rational(v); };
    // published with a sign typo in the second encode; the symmetric form is
    // the one that satisfies the tensor identity
    Matrix<Rational> a(3, 6, {q(1), q(0), q(0), q(1), q(1), q(0),
                              q(0), q(1), q(0), q(1), q(0), q(1),
                              q(0), q(0), q(1), q(0), q(1), q(1)});
    Matrix<Rational> c(5, 6, {q(1), q(0),  q(0),  q(0), q(0), q(0),
                              q(-1), q(-1), q(0), q(1), q(0), q(0),
                              q(-1), q(1), q(-1), q(0), q(1), q(0),
                              q(0), q(-1), q(-1), q(0), q(0), q(1),
                              q(0), q(0),  q(1),  q(0), q(0), q(0)});
    return make_algorithm(a, a, std::move(c), ConvVariant::linear(3, 3), "sparse3");
}

BilinearAlgorithm<Rational> direct_alg(std::size_t r, std::size_t n) {
    const std::size_t R = r * n;
    Matrix<Rational> a(r, R), b(n, R), c(n + r - 1, R);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t l = i * n + j;
            a(i, l) = Rational(1);
            b(j, l) = Rational(1);
            c(i + j, l) = Rational(1);
        }
    return make_algorithm(std::move(a), std::move(b), std::move(c),
                          ConvVariant::linear(r, n),
                          "direct r=" + std::to_string(r) + " n=" + std::to_string(n));
}

}  // namespace bilconv

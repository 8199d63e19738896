#pragma once

#include <cassert>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bilconv/scalar.hpp"

namespace bilconv {

/// Polynomial with ascending-degree coefficients. The zero polynomial is the
/// empty coefficient list; degree() must not be asked of it.
template <typename T>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

    bool is_zero() const { return coeffs_.empty(); }
    std::size_t degree() const {
        assert(!is_zero() && "degree of the zero polynomial");
        return coeffs_.size() - 1;
    }

    const std::vector<T>& coeffs() const { return coeffs_; }
    T coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : T(0); }

    /// Coefficients padded with structural zeros up to length n.
    std::vector<T> padded(std::size_t n) const {
        std::vector<T> out(coeffs_);
        out.resize(std::max(n, out.size()), T(0));
        return out;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }

private:
    void normalize() {
        while (!coeffs_.empty() && scalar_is_zero(coeffs_.back())) coeffs_.pop_back();
    }
    std::vector<T> coeffs_;
};

template <typename T>
Polynomial<T> poly_mul(const Polynomial<T>& p, const Polynomial<T>& q) {
    if (p.is_zero() || q.is_zero()) return Polynomial<T>{};
    std::vector<T> out(p.degree() + q.degree() + 1, T(0));
    for (std::size_t i = 0; i <= p.degree(); ++i)
        for (std::size_t j = 0; j <= q.degree(); ++j) out[i + j] += p.coeff(i) * q.coeff(j);
    return Polynomial<T>(std::move(out));
}

/// Long division: p = q*m + rho with deg rho < deg m. Rational domain only.
inline std::pair<Polynomial<Rational>, Polynomial<Rational>> poly_divmod(
    const Polynomial<Rational>& p, const Polynomial<Rational>& m) {
    if (m.is_zero()) throw std::domain_error("polynomial division by zero");
    if (p.is_zero()) return {Polynomial<Rational>{}, Polynomial<Rational>{}};
    const std::size_t dm = m.degree();
    if (p.degree() < dm) return {Polynomial<Rational>{}, p};
    std::vector<Rational> rem = p.coeffs();
    std::vector<Rational> quo(p.degree() - dm + 1, Rational(0));
    const Rational lead = m.coeff(dm);
    for (std::size_t k = quo.size(); k-- > 0;) {
        Rational c = rem[k + dm] / lead;
        quo[k] = c;
        if (c.is_zero()) continue;
        for (std::size_t j = 0; j <= dm; ++j) rem[k + j] -= c * m.coeff(j);
    }
    return {Polynomial<Rational>(std::move(quo)), Polynomial<Rational>(std::move(rem))};
}

}  // namespace bilconv

#pragma once

#include <complex>
#include <string>
#include <type_traits>

#include "bilconv/rational.hpp"

namespace bilconv {

using Complex = std::complex<double>;

// The three scalar domains. A matrix/polynomial is homogeneous in one of them;
// rational -> double conversion is one-way (double -> exact is never provided).

template <typename T>
inline constexpr bool is_rational_v = std::is_same_v<T, Rational>;
template <typename T>
inline constexpr bool is_complex_v = std::is_same_v<T, Complex>;

template <typename T>
bool scalar_is_zero(const T& x) {
    if constexpr (is_rational_v<T>) return x.is_zero();
    else return x == T(0);
}

/// Magnitude usable for pivoting and residual checks (exact compare for rationals).
inline Rational scalar_mag(const Rational& x) { return abs(x); }
inline double scalar_mag(double x) { return std::abs(x); }
inline double scalar_mag(const Complex& x) { return std::abs(x); }

inline double to_double(const Rational& x) { return x.to_double(); }
inline double to_double(double x) { return x; }

inline const char* domain_name(const Rational&) { return "rational"; }
inline const char* domain_name(double) { return "real"; }
inline const char* domain_name(const Complex&) { return "complex"; }

template <typename T>
const char* domain_name_of() { return domain_name(T{}); }

}  // namespace bilconv

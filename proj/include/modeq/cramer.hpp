#pragma once

// Coefficients of the Stormer-Verlet modified equation by Cramer's rule.
//
// Sampling a smooth curve at t +- j h, j = 1..k, gives the linear system
//   x(t-jh) - 2x(t) + x(t+jh) = sum_m j^(2m) * 2 h^(2m) x^(2m)(t) / (2m)!
// with the k x k matrix V_k(j, m) = j^(2m). Solving for h^2 x''(t) and keeping
// only the h^(2k) content of the numerator isolates the h^(2k-2) coefficient of
// the modified equation.
//
// Sign convention: the h^(2k) content of the first numerator column is zero
// except for (-1)^k x(t) in row k. Expanding along that column contributes the
// cofactor sign (-1)^(k+1), so the numerator is -det(inner minor) x(t) for
// every k. numerator_leading_minor returns that signed factor.

#include "modeq/chebyshev.hpp"
#include "modeq/matrix.hpp"
#include "modeq/rational.hpp"

namespace modeq {

namespace detail {

inline BigInt ipow(long long base, unsigned e) {
    BigInt r = 1;
    for (unsigned i = 0; i < e; ++i) r *= base;
    return r;
}

/// prod_{1 <= i < j <= n} (j^2 - i^2)
inline BigInt square_difference_product(unsigned n) {
    BigInt r = 1;
    for (unsigned j = 2; j <= n; ++j)
        for (unsigned i = 1; i < j; ++i) r *= static_cast<long long>(j) * j - static_cast<long long>(i) * i;
    return r;
}

} // namespace detail

/// V_k with entry (i, m) = i^(2m), i, m = 1..k.
inline ExactMatrix vandermonde_matrix(unsigned k) {
    if (k == 0) throw DomainError("vandermonde_matrix needs k >= 1");
    ExactMatrix v(k, k);
    for (unsigned i = 1; i <= k; ++i)
        for (unsigned m = 1; m <= k; ++m) v(i - 1, m - 1) = detail::ipow(i, 2 * m);
    return v;
}

/// Closed form of det V_k: (k!)^2 prod_{i<j} (j^2 - i^2).
inline Rational vandermonde_denominator(unsigned k) {
    if (k == 0) throw DomainError("vandermonde_denominator needs k >= 1");
    BigInt f = factorial(k);
    return Rational(f * f * detail::square_difference_product(k));
}

/// Numerator matrix of Cramer's rule with its first column replaced by the
/// h^(2k) coefficient of x(t-jh) - 2x(t) + x(t+jh) = (2 T_j(1 - h^2/2) - 2) x(t),
/// read off the Chebyshev polynomials.
inline ExactMatrix numerator_matrix(unsigned k) {
    ExactMatrix n = vandermonde_matrix(k);
    for (unsigned j = 1; j <= k; ++j) {
        Polynomial column = stencil_sum_polynomial(j) - Polynomial::constant(2);
        n(j - 1, 0) = column.coeff(2 * k);
    }
    return n;
}

/// h^(2k) content of the numerator determinant per unit x(t):
/// -(k-1)!^4 prod_{1<=i<j<=k-1} (j^2 - i^2).
inline Rational numerator_leading_minor(unsigned k) {
    if (k == 0) throw DomainError("numerator_leading_minor needs k >= 1");
    BigInt f = factorial(k - 1);
    return Rational(-(f * f * f * f) * detail::square_difference_product(k - 1));
}

/// The h^(2k-2) coefficient of the modified equation, as the Cramer quotient.
inline Rational coefficient_via_cramer(unsigned k) {
    return numerator_leading_minor(k) / vandermonde_denominator(k);
}

/// -(k-1)!^2 / (k (2k-1)!), the simplified form of the quotient.
inline Rational cramer_simplified(unsigned k) {
    if (k == 0) throw DomainError("cramer_simplified needs k >= 1");
    BigInt f = factorial(k - 1);
    return Rational(-(f * f), BigInt(k) * factorial(2 * k - 1));
}

} // namespace modeq

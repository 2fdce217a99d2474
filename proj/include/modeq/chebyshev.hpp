#pragma once

// Chebyshev polynomials of the first kind and exact checks on solutions of
// x_{j+1} - 2 x_j + x_{j-1} = -h^2 x_j.

#include "modeq/polynomial.hpp"
#include "modeq/rational.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace modeq {

/// T_k via T_0 = 1, T_1 = y, T_{k+1} = 2 y T_k - T_{k-1}.
inline Polynomial chebyshev_poly(unsigned k) {
    Polynomial prev{1};
    if (k == 0) return prev;
    Polynomial cur{0, 1};
    const Polynomial two_y{0, 2};
    for (unsigned i = 1; i < k; ++i) {
        Polynomial next = two_y * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// 2 T_k(1 - h^2/2) as a polynomial in h.
inline Polynomial stencil_sum_polynomial(unsigned k) {
    return chebyshev_poly(k).compose(Polynomial{1, 0, Rational(-1, 2)}) * Rational(2);
}

/// Exact sequence x_0, x_1, ... of the Stormer-Verlet recurrence at step h.
struct DiscreteSolution {
    Rational h;
    std::vector<Rational> values;

    std::size_t size() const { return values.size(); }
    const Rational& operator[](std::size_t j) const { return values[j]; }
};

/// x_0, x_1 and `steps` further values of x_{j+1} = (2 - h^2) x_j - x_{j-1}.
inline DiscreteSolution solve_recurrence(const Rational& h, const Rational& x0, const Rational& x1, std::size_t steps) {
    if (steps == 0) throw DomainError("solve_recurrence needs at least one step");
    const Rational diag = Rational(2) - h * h;
    DiscreteSolution sol{h, {x0, x1}};
    sol.values.reserve(steps + 2);
    for (std::size_t j = 1; j <= steps; ++j) sol.values.push_back(diag * sol.values[j] - sol.values[j - 1]);
    return sol;
}

/// x_{j-k} + x_{j+k} == 2 T_k(1 - h^2/2) x_j at every j where both sides exist.
inline bool stencil_sum_identity_check(const DiscreteSolution& sol, unsigned k) {
    if (k == 0) throw DomainError("stencil_sum_identity_check needs k >= 1");
    if (sol.size() < 2 * static_cast<std::size_t>(k) + 1)
        throw DomainError("sequence too short for the requested offset");
    const Rational factor = stencil_sum_polynomial(k)(sol.h);
    for (std::size_t j = k; j + k < sol.size(); ++j) {
        if (sol[j - k] + sol[j + k] != factor * sol[j]) return false;
    }
    return true;
}

/// The h^(2k) coefficient of 2 T_k(1 - h^2/2) is (-1)^k and the degree is 2k.
inline bool leading_term_check(unsigned k) {
    if (k == 0) throw DomainError("leading_term_check needs k >= 1");
    Polynomial p = stencil_sum_polynomial(k);
    return p.degree() == 2 * static_cast<long>(k) && p.leading() == Rational(k % 2 == 0 ? 1 : -1);
}

/// x_{j+period} == x_j over indices 0..span for both basis solutions.
inline bool periodicity_check(const Rational& h, std::size_t period, std::size_t span) {
    if (period == 0) throw DomainError("period must be positive");
    if (span < 2 * period) throw DomainError("span must cover at least two periods");
    for (auto [x0, x1] : {std::pair{Rational(1), Rational(0)}, std::pair{Rational(0), Rational(1)}}) {
        DiscreteSolution sol = solve_recurrence(h, x0, x1, span - 1);
        for (std::size_t j = 0; j + period < sol.size(); ++j)
            if (sol[j + period] != sol[j]) return false;
    }
    return true;
}

} // namespace modeq

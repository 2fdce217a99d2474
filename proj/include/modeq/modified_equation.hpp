#pragma once

// Modified equations of linear difference schemes.
//
// For a linear scheme the modified equation is x' = S(h) x (first order) or
// x'' = S(h) x (second order), so every derivative of x is a power of S times
// x (or times x' for odd derivatives of a second-order equation). Substituting
// the Taylor expansion of x(t + s h) into the stencil turns the defining
// condition into a scalar power series identity in h, solved order by order.

#include "modeq/polynomial.hpp"
#include "modeq/rational.hpp"
#include "modeq/series.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace modeq {

enum class SchemeOrder { first, second };

/// sum_s a_s(h) x_{j+s} = 0, with each a_s a polynomial in h.
class Stencil {
public:
    Stencil(std::map<int, Polynomial> terms, SchemeOrder scheme_order)
        : terms_(std::move(terms)), order_(scheme_order) {
        if (terms_.empty()) throw DomainError("stencil needs at least one term");
        if (order_ == SchemeOrder::first) {
            for (const auto& [offset, _] : terms_)
                if (offset != 0 && offset != 1) throw DomainError("first-order stencils use offsets 0 and 1 only");
        }
    }

    /// x_{j+1} - x_j + h x_j = 0, explicit Euler for x' = -x.
    static Stencil euler() {
        return Stencil({{1, Polynomial{1}}, {0, Polynomial{-1, 1}}}, SchemeOrder::first);
    }

    /// x_{j+1} - 2 x_j + x_{j-1} + h^2 x_j = 0, Stormer-Verlet for x'' = -x.
    static Stencil stormer_verlet() {
        return Stencil({{-1, Polynomial{1}}, {0, Polynomial{-2, 0, 1}}, {1, Polynomial{1}}}, SchemeOrder::second);
    }

    const std::map<int, Polynomial>& terms() const { return terms_; }
    SchemeOrder scheme_order() const { return order_; }

    bool symmetric() const {
        for (const auto& [offset, coeff] : terms_) {
            auto mirror = terms_.find(-offset);
            if (mirror == terms_.end() ? !coeff.is_zero() : !(mirror->second == coeff)) return false;
        }
        return true;
    }

private:
    std::map<int, Polynomial> terms_;
    SchemeOrder order_;
};

struct ModifiedEquationSeries {
    PowerSeries multiplier;
    SchemeOrder scheme_order;
};

namespace detail {

using TaylorWeight = std::function<Rational(int offset, std::size_t power)>;

/// x(t + s h) = sum_m weight(s, m) (h^v S)^m x(t) (+ terms the stencil cancels).
inline Rational first_order_weight(int s, std::size_t m) {
    Rational w(1);
    for (std::size_t i = 1; i <= m; ++i) w *= Rational(s) / Rational(static_cast<long long>(i));
    return w;
}

inline Rational second_order_weight(int s, std::size_t m) {
    Rational w(1);
    const Rational s2(static_cast<long long>(s) * s);
    for (std::size_t i = 1; i <= m; ++i)
        w *= s2 / Rational(static_cast<long long>((2 * i - 1) * (2 * i)));
    return w;
}

/// Solves sum_s a_s(h) sum_m weight(s,m) U^m = 0 for U = h^v S, one
/// coefficient of S per column of the residual. The unknown c_j enters
/// column j+v linearly through the m = 1 term with factor sum_s a_s(0) w(s,1);
/// every other contribution to that column involves only c_0..c_{j-1}.
inline std::vector<Rational> solve_multiplier(const Stencil& stencil, std::size_t v, const TaylorWeight& weight,
                                              std::size_t order) {
    const std::size_t top = order + v;
    const std::size_t max_power = top / v;

    // pow[m][n] = [h^n] U^m
    std::vector<std::vector<Rational>> pow(max_power + 1, std::vector<Rational>(top + 1));
    pow[0][0] = 1;

    // Per offset: polynomial coefficients and the Taylor weights.
    struct Term {
        std::vector<Rational> a;
        std::vector<Rational> w;
    };
    std::vector<Term> terms;
    for (const auto& [s, poly] : stencil.terms()) {
        Term t;
        for (std::size_t i = 0; i <= top; ++i) t.a.push_back(poly.coeff(i));
        for (std::size_t m = 0; m <= max_power; ++m) t.w.push_back(weight(s, m));
        terms.push_back(std::move(t));
    }

    auto residual_column = [&](std::size_t n) {
        Rational r;
        for (const auto& t : terms) {
            for (std::size_t i = 0; i <= n; ++i) {
                if (t.a[i].is_zero()) continue;
                Rational inner;
                for (std::size_t m = 0; m * v <= n - i; ++m) {
                    if (pow[m][n - i].is_zero()) continue;
                    inner += t.w[m] * pow[m][n - i];
                }
                r += t.a[i] * inner;
            }
        }
        return r;
    };

    for (std::size_t n = 0; n < v; ++n) {
        if (!residual_column(n).is_zero())
            throw DomainError("inconsistent scheme: no modified equation at leading order");
    }

    Rational factor;
    for (const auto& t : terms) factor += t.a[0] * t.w[1];
    if (factor.is_zero()) throw DomainError("degenerate scheme: leading coefficient cannot be solved for");
    const Rational inv_factor = factor.reciprocal();

    std::vector<Rational> c(order + 1);
    for (std::size_t n = v; n <= top; ++n) {
        for (std::size_t m = 2; m * v <= n; ++m) {
            Rational acc;
            for (std::size_t i = v; i + (m - 1) * v <= n; ++i) {
                if (pow[1][i].is_zero() || pow[m - 1][n - i].is_zero()) continue;
                acc += pow[1][i] * pow[m - 1][n - i];
            }
            pow[m][n] = std::move(acc);
        }
        // pow[1][n] is still zero here, so the column holds everything but c_{n-v}.
        c[n - v] = -residual_column(n) * inv_factor;
        pow[1][n] = c[n - v];
    }
    return c;
}

} // namespace detail

/// Modified equation x' = S(h) x of a first-order linear scheme, through h^order.
inline ModifiedEquationSeries derive_first_order(const Stencil& scheme, std::size_t order) {
    if (scheme.scheme_order() != SchemeOrder::first) throw DomainError("derive_first_order needs a first-order scheme");
    auto c = detail::solve_multiplier(scheme, 1, detail::first_order_weight, order);
    PowerSeries s(std::move(c));
    s.infer_parity();
    return {std::move(s), SchemeOrder::first};
}

/// Modified equation x'' = S(h) x of a symmetric second-order linear scheme,
/// through h^order (order even).
inline ModifiedEquationSeries derive_second_order_symmetric(const Stencil& scheme, std::size_t order) {
    if (scheme.scheme_order() != SchemeOrder::second)
        throw DomainError("derive_second_order_symmetric needs a second-order scheme");
    if (!scheme.symmetric())
        throw DomainError("asymmetric second-order stencil: odd-derivative terms are not supported");
    if (order % 2 != 0) throw DomainError("second-order symmetric derivation needs an even order");
    auto c = detail::solve_multiplier(scheme, 2, detail::second_order_weight, order);
    PowerSeries s(std::move(c));
    s.infer_parity();
    return {std::move(s), SchemeOrder::second};
}

/// The stencil applied to a solution of x' = S x or x'' = S x, divided by x(t),
/// as a series in h. Built from plain series algebra, independently of the
/// column solver above. Known through h^(S.order() + v).
inline PowerSeries stencil_residual(const Stencil& scheme, const PowerSeries& multiplier) {
    const bool first = scheme.scheme_order() == SchemeOrder::first;
    const std::size_t v = first ? 1 : 2;
    const std::size_t top = multiplier.order() + v;

    std::vector<Rational> shifted(top + 1);
    for (std::size_t i = 0; i <= multiplier.order(); ++i) shifted[i + v] = multiplier[i];
    const PowerSeries u(std::move(shifted));

    PowerSeries total(top);
    for (const auto& [s, poly] : scheme.terms()) {
        PowerSeries taylor(top);
        PowerSeries power = PowerSeries::constant(1, top);
        for (std::size_t m = 0; m * v <= top; ++m) {
            Rational w = first ? detail::first_order_weight(s, m) : detail::second_order_weight(s, m);
            taylor = ps_add(taylor, ps_scale(power, w));
            power = ps_mul(power, u);
        }
        std::vector<Rational> a(top + 1);
        for (std::size_t i = 0; i <= top; ++i) a[i] = poly.coeff(i);
        total = ps_add(total, ps_mul(PowerSeries(std::move(a)), taylor));
    }
    return total;
}

/// -2 (k-1)!^2 / (2k)!, the h^(2k-2) coefficient of the Stormer-Verlet multiplier.
inline Rational verlet_closed_coefficient(unsigned k) {
    if (k == 0) throw DomainError("verlet_closed_coefficient needs k >= 1");
    BigInt f = factorial(k - 1);
    return Rational(-2 * f * f, factorial(2 * k));
}

/// Stormer-Verlet multiplier assembled from verlet_closed_coefficient.
inline PowerSeries closed_form_multiplier(std::size_t order) {
    std::vector<Rational> c(order + 1);
    for (unsigned k = 1; 2 * k - 2 <= order; ++k) c[2 * k - 2] = verlet_closed_coefficient(k);
    return PowerSeries(std::move(c), Parity::even);
}

/// arcsin(h/2) through h^order, by reverting the sine series.
inline PowerSeries arcsin_half_series(std::size_t order) {
    PowerSeries arcsin = ps_revert(sine_series(order));
    return ps_compose(arcsin, PowerSeries::monomial(Rational(1, 2), 1, order));
}

/// -(2/h arcsin(h/2))^2 through h^order.
inline PowerSeries arcsine_multiplier(std::size_t order) {
    PowerSeries a = arcsin_half_series(order + 2);
    return ps_scale(ps_shift_divide(ps_mul(a, a), 2), -4);
}

/// (arcsin(h/2))^2 = 1/2 sum_k (k-1)!^2/(2k)! h^(2k), through h^order.
inline PowerSeries arcsin_sq_expansion(std::size_t order) {
    std::vector<Rational> c(order + 1);
    for (unsigned k = 1; 2 * k <= order; ++k) {
        BigInt f = factorial(k - 1);
        c[2 * k] = Rational(f * f, 2 * factorial(2 * k));
    }
    return PowerSeries(std::move(c), Parity::even);
}

} // namespace modeq

#pragma once

// Truncated formal power series with exact rational coefficients.
//
// A series of truncation order N knows the coefficients of x^0..x^N; anything
// beyond is unknown, not zero. Every operation returns a truncation order that
// is sound for its inputs.

#include "modeq/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace modeq {

enum class Parity { any, even, odd };

class PowerSeries {
public:
    /// Zero series known through x^order.
    explicit PowerSeries(std::size_t order = 0, Parity parity = Parity::any)
        : coeffs_(order + 1), parity_(parity) {}

    /// Takes the coefficients as given; truncation order is size - 1.
    explicit PowerSeries(std::vector<Rational> coeffs, Parity parity = Parity::any)
        : coeffs_(std::move(coeffs)), parity_(parity) {
        if (coeffs_.empty()) throw DomainError("a power series needs at least one coefficient");
        check_parity();
    }

    PowerSeries(std::initializer_list<Rational> coeffs, Parity parity = Parity::any)
        : PowerSeries(std::vector<Rational>(coeffs), parity) {}

    /// The series x, known through x^order.
    static PowerSeries identity(std::size_t order) {
        PowerSeries s(order, Parity::odd);
        if (order >= 1) s.coeffs_[1] = 1;
        return s;
    }

    static PowerSeries constant(const Rational& c, std::size_t order) {
        PowerSeries s(order, Parity::even);
        s.coeffs_[0] = c;
        return s;
    }

    /// The monomial c * x^m, known through x^order.
    static PowerSeries monomial(const Rational& c, std::size_t m, std::size_t order) {
        PowerSeries s(order, m % 2 == 0 ? Parity::even : Parity::odd);
        if (m <= order) s.coeffs_[m] = c;
        return s;
    }

    std::size_t order() const { return coeffs_.size() - 1; }
    Parity parity() const { return parity_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    /// Coefficient of x^n; n must not exceed the truncation order.
    const Rational& operator[](std::size_t n) const {
        if (n > order()) throw DomainError("coefficient beyond truncation order requested");
        return coeffs_[n];
    }

    /// Index of the first nonzero known coefficient; order()+1 if none.
    std::size_t valuation() const {
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (!coeffs_[i].is_zero()) return i;
        return coeffs_.size();
    }

    PowerSeries truncated(std::size_t order) const {
        if (order > this->order()) throw DomainError("cannot extend a truncated series");
        return PowerSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order) + 1), parity_);
    }

    /// Sets the parity flag from the actual coefficients.
    PowerSeries& infer_parity() {
        bool odd_zero = true, even_zero = true;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i].is_zero()) continue;
            (i % 2 == 0 ? even_zero : odd_zero) = false;
        }
        parity_ = odd_zero ? Parity::even : (even_zero ? Parity::odd : Parity::any);
        return *this;
    }

    friend bool operator==(const PowerSeries& a, const PowerSeries& b) {
        return a.coeffs_ == b.coeffs_;
    }

private:
    friend PowerSeries ps_add(const PowerSeries&, const PowerSeries&);
    friend PowerSeries ps_scale(const PowerSeries&, const Rational&);
    friend PowerSeries ps_mul(const PowerSeries&, const PowerSeries&);

    void check_parity() const {
        if (parity_ == Parity::any) return;
        std::size_t first = parity_ == Parity::even ? 1 : 0;
        for (std::size_t i = first; i < coeffs_.size(); i += 2)
            if (!coeffs_[i].is_zero()) throw DomainError("coefficients contradict parity flag");
    }

    std::vector<Rational> coeffs_;
    Parity parity_;
};

namespace detail {

inline Parity parity_sum(Parity a, Parity b) { return a == b ? a : Parity::any; }

inline Parity parity_product(Parity a, Parity b) {
    if (a == Parity::any || b == Parity::any) return Parity::any;
    return a == b ? Parity::even : Parity::odd;
}

/// Parity of outer(inner): an even inner makes everything even; an odd inner
/// preserves the parity of the outer series.
inline Parity parity_compose(Parity outer, Parity inner) {
    if (inner == Parity::even) return Parity::even;
    if (inner == Parity::odd) return outer;
    return Parity::any;
}

} // namespace detail

inline PowerSeries ps_add(const PowerSeries& a, const PowerSeries& b) {
    std::size_t n = std::min(a.order(), b.order());
    PowerSeries r(n, detail::parity_sum(a.parity(), b.parity()));
    for (std::size_t i = 0; i <= n; ++i) r.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
    return r;
}

inline PowerSeries ps_scale(const PowerSeries& a, const Rational& c) {
    PowerSeries r = a;
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

inline PowerSeries ps_sub(const PowerSeries& a, const PowerSeries& b) {
    return ps_add(a, ps_scale(b, -1));
}

/// Cauchy product, truncated at the smaller truncation order.
inline PowerSeries ps_mul(const PowerSeries& a, const PowerSeries& b) {
    std::size_t n = std::min(a.order(), b.order());
    PowerSeries r(n, detail::parity_product(a.parity(), b.parity()));
    for (std::size_t i = 0; i <= n; ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; i + j <= n; ++j) {
            if (b.coeffs_[j].is_zero()) continue;
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return r;
}

/// Repeated squaring is not worth it at these orders.
inline PowerSeries ps_pow(const PowerSeries& a, unsigned e) {
    PowerSeries r = PowerSeries::constant(1, a.order());
    for (unsigned i = 0; i < e; ++i) r = ps_mul(r, a);
    return r;
}

/// outer(inner). The inner series must have zero constant term. The result is
/// truncated at the outer order, lowered further if the inner series is not
/// known far enough for that order to be sound.
inline PowerSeries ps_compose(const PowerSeries& outer, const PowerSeries& inner) {
    if (!inner[0].is_zero())
        throw DomainError("composition needs an inner series with zero constant term");

    std::size_t n = outer.order();
    // An error at x^(m+1) in the inner series enters through outer'(inner),
    // whose valuation is (d-1)*v with d the lowest nonconstant outer degree.
    std::size_t d = 0;
    for (std::size_t i = 1; i <= outer.order(); ++i) {
        if (!outer[i].is_zero()) {
            d = i;
            break;
        }
    }
    if (d != 0) {
        std::size_t v = std::min(inner.valuation(), inner.order() + 1);
        n = std::min(n, inner.order() + (d - 1) * v);
    }

    // Horner evaluation on series known through x^n; inner is padded so the
    // products below stay at order n.
    std::vector<Rational> padded(n + 1);
    for (std::size_t i = 0; i <= std::min(n, inner.order()); ++i) padded[i] = inner[i];
    PowerSeries in(std::move(padded));

    PowerSeries acc = PowerSeries::constant(outer[outer.order()], n);
    for (std::size_t i = outer.order(); i-- > 0;) {
        acc = ps_mul(acc, in);
        acc = ps_add(acc, PowerSeries::constant(outer[i], n));
    }
    Parity p = detail::parity_compose(outer.parity(), inner.parity());
    if (p == Parity::any) return std::move(acc.infer_parity());
    return PowerSeries(acc.coeffs(), p);
}

/// Compositional inverse r with s(r(x)) = x through the truncation order of s.
/// Solves for one coefficient at a time: the x^n coefficient of s(r) is
/// s1*r_n plus terms involving only r_1..r_{n-1}.
inline PowerSeries ps_revert(const PowerSeries& s) {
    if (s.order() < 1) throw DomainError("reversion needs a series known through x^1");
    if (!s[0].is_zero()) throw DomainError("reversion needs zero constant term");
    if (s[1].is_zero()) throw DomainError("reversion needs nonzero linear coefficient");

    const std::size_t n = s.order();
    const Rational inv_s1 = s[1].reciprocal();

    std::vector<Rational> r(n + 1);
    r[1] = inv_s1;

    // powers[k][j] = [x^j] r(x)^k, filled column by column.
    std::vector<std::vector<Rational>> powers(n + 1, std::vector<Rational>(n + 1));
    powers[1][1] = r[1];
    for (std::size_t k = 2; k <= n; ++k) powers[k][k] = powers[k - 1][k - 1] * r[1];

    for (std::size_t col = 2; col <= n; ++col) {
        // r^k at degree col for k >= 2 only touches r_1..r_{col-1}.
        for (std::size_t k = 2; k < col; ++k) {
            Rational acc;
            for (std::size_t i = 1; i + (k - 1) <= col; ++i) {
                if (r[i].is_zero() || powers[k - 1][col - i].is_zero()) continue;
                acc += r[i] * powers[k - 1][col - i];
            }
            powers[k][col] = std::move(acc);
        }
        Rational known;
        for (std::size_t k = 2; k <= col; ++k) {
            if (s[k].is_zero() || powers[k][col].is_zero()) continue;
            known += s[k] * powers[k][col];
        }
        r[col] = -known * inv_s1;
        powers[1][col] = r[col];
    }

    // The inverse of an odd series is odd.
    return PowerSeries(std::move(r), s.parity() == Parity::odd ? Parity::odd : Parity::any);
}

/// Multiplicative inverse; needs a nonzero constant term.
inline PowerSeries ps_inverse(const PowerSeries& s) {
    if (s[0].is_zero()) throw DomainError("multiplicative inverse needs nonzero constant term");
    const std::size_t n = s.order();
    const Rational inv0 = s[0].reciprocal();
    std::vector<Rational> b(n + 1);
    b[0] = inv0;
    for (std::size_t k = 1; k <= n; ++k) {
        Rational acc;
        for (std::size_t i = 1; i <= k; ++i) {
            if (s[i].is_zero()) continue;
            acc += s[i] * b[k - i];
        }
        b[k] = -acc * inv0;
    }
    return PowerSeries(std::move(b), s.parity() == Parity::even ? Parity::even : Parity::any);
}

/// Division by x^m. The x^0..x^(m-1) coefficients must be known and zero.
inline PowerSeries ps_shift_divide(const PowerSeries& s, std::size_t m) {
    if (m == 0) throw DomainError("shift must be positive");
    if (s.order() < m) throw DomainError("series not known far enough to divide by x^m");
    for (std::size_t i = 0; i < m; ++i)
        if (!s[i].is_zero()) throw DomainError("nonzero coefficient below the shift");
    std::vector<Rational> c(s.coeffs().begin() + static_cast<std::ptrdiff_t>(m), s.coeffs().end());
    Parity p = s.parity();
    if (m % 2 == 1 && p != Parity::any) p = p == Parity::even ? Parity::odd : Parity::even;
    return PowerSeries(std::move(c), p);
}

/// exp(u) for u with zero constant term, via e_n = (1/n) sum_k k u_k e_{n-k}.
inline PowerSeries ps_exp(const PowerSeries& u) {
    if (!u[0].is_zero()) throw DomainError("series exponential needs zero constant term");
    const std::size_t n = u.order();
    std::vector<Rational> e(n + 1);
    e[0] = 1;
    for (std::size_t m = 1; m <= n; ++m) {
        Rational acc;
        for (std::size_t k = 1; k <= m; ++k) {
            if (u[k].is_zero()) continue;
            acc += Rational(static_cast<long long>(k)) * u[k] * e[m - k];
        }
        e[m] = acc / Rational(static_cast<long long>(m));
    }
    return PowerSeries(std::move(e), u.parity() == Parity::even ? Parity::even : Parity::any);
}

/// sin(x) through x^order.
inline PowerSeries sine_series(std::size_t order) {
    std::vector<Rational> c(order + 1);
    BigInt fact = 1;
    for (std::size_t i = 1; i <= order; ++i) {
        fact *= static_cast<unsigned>(i);
        if (i % 2 == 1) c[i] = Rational(BigInt((i / 2) % 2 == 0 ? 1 : -1), fact);
    }
    return PowerSeries(std::move(c), Parity::odd);
}

} // namespace modeq

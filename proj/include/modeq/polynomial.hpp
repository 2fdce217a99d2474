#pragma once

#include "modeq/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

namespace modeq {

/// Dense polynomial with exact coefficients, index n holding the y^n term.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<Rational> coeffs) : Polynomial(std::vector<Rational>(coeffs)) {}

    static Polynomial constant(const Rational& c) { return Polynomial({c}); }
    static Polynomial monomial(const Rational& c, std::size_t degree) {
        std::vector<Rational> v(degree + 1);
        v[degree] = c;
        return Polynomial(std::move(v));
    }

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Rational coeff(std::size_t n) const { return n < coeffs_.size() ? coeffs_[n] : Rational(); }
    Rational leading() const { return coeffs_.empty() ? Rational() : coeffs_.back(); }

    Rational operator()(const Rational& y) const {
        Rational acc;
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * y + coeffs_[i];
        return acc;
    }

    /// this(inner(y)).
    Polynomial compose(const Polynomial& inner) const {
        Polynomial acc;
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * inner + constant(coeffs_[i]);
        return acc;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
        return Polynomial(std::move(c));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + b * Rational(-1); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Polynomial(std::move(c));
    }
    friend Polynomial operator*(const Polynomial& a, const Rational& s) {
        std::vector<Rational> c = a.coeffs_;
        for (auto& x : c) x *= s;
        return Polynomial(std::move(c));
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

} // namespace modeq

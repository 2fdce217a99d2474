#pragma once

// Exact rational arithmetic on top of boost::multiprecision::cpp_int.
// Values are normalized on construction: gcd(|num|, den) = 1, den > 0,
// zero is 0/1. Structural equality is therefore value equality.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <compare>
#include <concepts>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace modeq {

using BigInt = boost::multiprecision::cpp_int;

/// Raised for every violated precondition in the library.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class DivisionByZero : public DomainError {
public:
    DivisionByZero() : DomainError("division by zero") {}
};

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    template <std::integral I>
    Rational(I n) : num_(n), den_(1) {}                 // NOLINT(implicit)
    Rational(BigInt n) : num_(std::move(n)), den_(1) {} // NOLINT(implicit)

    Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_ == 0) throw DivisionByZero();
        normalize();
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ < 0 ? -1 : (num_ > 0 ? 1 : 0); }

    Rational operator-() const { return from_normalized(-num_, den_); }

    Rational& operator+=(const Rational& o) {
        if (den_ == o.den_) {
            num_ += o.num_;
        } else {
            num_ = num_ * o.den_ + o.num_ * den_;
            den_ *= o.den_;
        }
        normalize();
        return *this;
    }
    Rational& operator-=(const Rational& o) { return *this += -o; }
    Rational& operator*=(const Rational& o) {
        num_ *= o.num_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.num_ == 0) throw DivisionByZero();
        num_ *= o.den_;
        den_ *= o.num_;
        normalize();
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        BigInt lhs = a.num_ * b.den_;
        BigInt rhs = b.num_ * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    Rational reciprocal() const {
        if (num_ == 0) throw DivisionByZero();
        return num_ < 0 ? from_normalized(-den_, -num_) : from_normalized(den_, num_);
    }

    Rational abs() const { return num_ < 0 ? -*this : *this; }

    /// Canonical "num/den" text, e.g. "-1/12", "0/1", "3/1".
    std::string str() const { return num_.str() + "/" + den_.str(); }

    double to_double() const {
        // Scale so the integer quotient carries ~60 significant bits.
        if (num_ == 0) return 0.0;
        using boost::multiprecision::msb;
        BigInt an = num_ < 0 ? BigInt(-num_) : num_;
        long shift = static_cast<long>(msb(den_)) - static_cast<long>(msb(an)) + 64;
        BigInt q = shift >= 0 ? BigInt((an << shift) / den_) : BigInt((an >> -shift) / den_);
        double v = std::ldexp(q.convert_to<double>(), static_cast<int>(-shift));
        return num_ < 0 ? -v : v;
    }

    /// Parses "p/q", "p" or "-p/q". Throws DomainError on malformed input.
    static Rational parse(std::string_view text);

private:
    static Rational from_normalized(BigInt n, BigInt d) {
        Rational r;
        r.num_ = std::move(n);
        r.den_ = std::move(d);
        return r;
    }

    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        BigInt g = boost::multiprecision::gcd(num_, den_);
        if (g != 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    BigInt num_;
    BigInt den_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

namespace detail {

inline BigInt parse_integer(std::string_view s) {
    if (s.empty()) throw DomainError("empty integer literal");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw DomainError("malformed integer literal: " + std::string(s));
    for (std::size_t j = i; j < s.size(); ++j) {
        if (s[j] < '0' || s[j] > '9') throw DomainError("malformed integer literal: " + std::string(s));
    }
    BigInt v(std::string(s.substr(i)));
    return s[0] == '-' ? BigInt(-v) : v;
}

} // namespace detail

inline Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(detail::parse_integer(text));
    BigInt n = detail::parse_integer(text.substr(0, slash));
    std::string_view dtext = text.substr(slash + 1);
    if (!dtext.empty() && (dtext[0] == '-' || dtext[0] == '+'))
        throw DomainError("sign not allowed in denominator: " + std::string(text));
    BigInt d = detail::parse_integer(dtext);
    if (d == 0) throw DivisionByZero();
    return Rational(std::move(n), std::move(d));
}

enum class ArithOp { add, sub, mul, div };

/// Non-throwing arithmetic entry point: std::nullopt signals division by zero.
inline std::optional<Rational> rat_arith(const Rational& a, const Rational& b, ArithOp op) {
    switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div:
        if (b.is_zero()) return std::nullopt;
        return a / b;
    }
    return std::nullopt;
}

inline BigInt factorial(unsigned n) {
    BigInt r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

/// k * (k+1) * ... * (k+l); l = 0 gives k.
inline BigInt rising_product(unsigned k, unsigned l) {
    if (k == 0) throw DomainError("rising_product requires k >= 1");
    BigInt r = k;
    for (unsigned i = 1; i <= l; ++i) r *= (k + i);
    return r;
}

inline BigInt pow10(unsigned e) {
    BigInt r = 1;
    for (unsigned i = 0; i < e; ++i) r *= 10;
    return r;
}

/// Decimal rendering with `digits` significant digits, round-half-even.
/// Plain positional notation, e.g. "1.50000", "0.00123400", "-12.3400".
inline std::string to_decimal(const Rational& value, unsigned digits) {
    if (digits == 0) throw DomainError("to_decimal requires at least one digit");
    if (value.is_zero()) return digits == 1 ? "0" : "0." + std::string(digits - 1, '0');

    BigInt an = value.num() < 0 ? BigInt(-value.num()) : value.num();
    const BigInt& den = value.den();

    // exponent e with 10^e <= |v| < 10^(e+1)
    long e = static_cast<long>(an.str().size()) - static_cast<long>(den.str().size());
    auto at_least = [&](long p) { // |v| >= 10^p
        return p >= 0 ? an >= den * pow10(static_cast<unsigned>(p))
                      : an * pow10(static_cast<unsigned>(-p)) >= den;
    };
    while (!at_least(e)) --e;
    while (at_least(e + 1)) ++e;

    auto round_scaled = [&](long shift) { // round(|v| * 10^shift), half-even
        BigInt n = an, d = den;
        if (shift >= 0) n *= pow10(static_cast<unsigned>(shift));
        else d *= pow10(static_cast<unsigned>(-shift));
        BigInt q = n / d;
        BigInt r2 = 2 * (n % d);
        if (r2 > d || (r2 == d && q % 2 == 1)) ++q;
        return q;
    };

    long shift = static_cast<long>(digits) - 1 - e;
    BigInt q = round_scaled(shift);
    if (q >= pow10(digits)) { // rounding carried into a new digit
        ++e;
        shift = static_cast<long>(digits) - 1 - e;
        q = round_scaled(shift);
    }
    std::string ds = q.str();

    std::string out;
    if (value.sign() < 0) out += '-';
    if (e >= 0) {
        auto int_len = static_cast<std::size_t>(e + 1);
        if (ds.size() <= int_len) {
            out += ds + std::string(int_len - ds.size(), '0');
        } else {
            out += ds.substr(0, int_len) + "." + ds.substr(int_len);
        }
    } else {
        out += "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + ds;
    }
    return out;
}

} // namespace modeq

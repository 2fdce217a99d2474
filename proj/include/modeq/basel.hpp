#pragma once

// Partial sums of sum 1/k^2 and of the faster series sum (k-1)!^2/(2k)!,
// whose triple has the same limit pi^2/6.

#include "modeq/rational.hpp"

#include <string>

namespace modeq {

/// Digits carried by SeriesTally::decimal.
inline constexpr unsigned tally_digits = 40;

/// pi to 50 significant digits (standard tabulated value).
inline constexpr const char* pi_digits = "3.1415926535897932384626433832795028841971693993751";

/// Rational read of a decimal literal such as pi_digits.
inline Rational parse_decimal(std::string_view text) {
    auto dot = text.find('.');
    if (dot == std::string_view::npos) return Rational::parse(text);
    std::string digits = std::string(text.substr(0, dot)) + std::string(text.substr(dot + 1));
    return Rational(detail::parse_integer(digits), pow10(static_cast<unsigned>(text.size() - dot - 1)));
}

/// pi^2/6 from the embedded pi; accurate to about 1e-49.
inline Rational pi_squared_over_six() {
    Rational pi = parse_decimal(pi_digits);
    return pi * pi / Rational(6);
}

struct SeriesTally {
    unsigned terms_used = 0;
    Rational exact_sum;
    std::string decimal;
};

inline SeriesTally make_tally(unsigned terms, Rational sum) {
    std::string d = to_decimal(sum, tally_digits);
    return {terms, std::move(sum), std::move(d)};
}

/// Exact sum_{k=1..n} 1/k^2.
inline Rational basel_sum(unsigned n) {
    if (n == 0) throw DomainError("partial sums need at least one term");
    Rational s;
    for (unsigned k = 1; k <= n; ++k) s += Rational(BigInt(1), BigInt(k) * k);
    return s;
}

inline SeriesTally basel_partial_sum(unsigned n) { return make_tally(n, basel_sum(n)); }

/// (k-1)!^2 / (2k)!
inline Rational central_term(unsigned k) {
    if (k == 0) throw DomainError("central_term needs k >= 1");
    BigInt f = factorial(k - 1);
    return Rational(f * f, factorial(2 * k));
}

/// Exact sum_{k=1..n} (k-1)!^2/(2k)!; the terms shrink by more than 4x each.
inline Rational central_sum(unsigned n) {
    if (n == 0) throw DomainError("partial sums need at least one term");
    Rational s;
    Rational term = central_term(1);
    for (unsigned k = 1; k <= n; ++k) {
        s += term;
        // term(k+1)/term(k) = k^2 / ((2k+1)(2k+2))
        term *= Rational(BigInt(k) * k, BigInt(2 * k + 1) * (2 * k + 2));
    }
    return s;
}

inline SeriesTally central_partial_sum(unsigned n) { return make_tally(n, central_sum(n)); }

/// r_{k,l} = l! / (k^2 (k+1) ... (k+l)).
inline Rational telescoping_remainder(unsigned k, unsigned l) {
    if (k == 0 || l == 0) throw DomainError("remainder needs k, l >= 1");
    return Rational(factorial(l), BigInt(k) * rising_product(k, l));
}

/// 1/k^2 == sum_{l=1..k} (l-1)! / (k (k+1) ... (k+l)) + r_{k,k}.
inline bool telescoping_identity_check(unsigned k) {
    if (k == 0) throw DomainError("telescoping_identity_check needs k >= 1");
    Rational rhs = telescoping_remainder(k, k);
    for (unsigned l = 1; l <= k; ++l) rhs += Rational(factorial(l - 1), rising_product(k, l));
    return rhs == Rational(BigInt(1), BigInt(k) * k);
}

/// 3 * central_sum(n) - basel_sum(n^2). Both sums approach pi^2/6; pairing n
/// central terms with n^2 Basel terms keeps the difference informative.
inline Rational factor_three_partial_check(unsigned n) {
    return Rational(3) * central_sum(n) - basel_sum(n * n);
}

/// Decimal value of 3 * central_sum(n).
inline std::string pi_squared_over_six_estimate(unsigned n) {
    return to_decimal(Rational(3) * central_sum(n), tally_digits);
}

} // namespace modeq

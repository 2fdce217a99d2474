#pragma once

#include "modeq/rational.hpp"

#include <random>

namespace modeq::testing {

inline Rational R(long long p, long long q = 1) { return Rational(BigInt(p), BigInt(q)); }

/// Rationals with numerator in [-lim, lim] and denominator in [1, lim].
class RationalGen {
public:
    explicit RationalGen(unsigned seed, long long lim = 50) : rng_(seed), num_(-lim, lim), den_(1, lim) {}
    Rational operator()() { return R(num_(rng_), den_(rng_)); }
    Rational nonzero() {
        for (;;) {
            Rational r = (*this)();
            if (!r.is_zero()) return r;
        }
    }

private:
    std::mt19937 rng_;
    std::uniform_int_distribution<long long> num_, den_;
};

} // namespace modeq::testing

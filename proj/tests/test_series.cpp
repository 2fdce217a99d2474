#include "modeq/series.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace modeq;
using modeq::testing::R;

namespace {

PowerSeries random_series(modeq::testing::RationalGen& gen, std::size_t order) {
    std::vector<Rational> c;
    for (std::size_t i = 0; i <= order; ++i) c.push_back(gen());
    return PowerSeries(std::move(c));
}

} // namespace

TEST(PowerSeries, Invariants) {
    PowerSeries s(5);
    EXPECT_EQ(s.order(), 5u);
    EXPECT_EQ(s.coeffs().size(), 6u);
    EXPECT_THROW(PowerSeries({R(1), R(1)}, Parity::even), DomainError);
    EXPECT_THROW(PowerSeries({R(1), R(0)}, Parity::odd), DomainError);
    EXPECT_NO_THROW(PowerSeries({R(1), R(0), R(3)}, Parity::even));
    EXPECT_THROW(s[6], DomainError);
}

TEST(PowerSeries, Add) {
    EXPECT_EQ(ps_add(PowerSeries{R(1), R(1)}, PowerSeries{R(1), R(-1)}), (PowerSeries{R(2), R(0)}));
    PowerSeries s{R(3), R(-1, 2), R(7)};
    EXPECT_EQ(ps_add(s, PowerSeries(2)), s);
    PowerSeries a{R(-1), R(0), R(-1, 12), R(0), R(0)};
    PowerSeries b{R(0), R(0), R(0), R(0), R(-1, 90)};
    EXPECT_EQ(ps_add(a, b), (PowerSeries{R(-1), R(0), R(-1, 12), R(0), R(-1, 90)}));
    // truncation order is the minimum
    EXPECT_EQ(ps_add(PowerSeries(3), PowerSeries(5)).order(), 3u);
}

TEST(PowerSeries, Mul) {
    EXPECT_EQ(ps_mul(PowerSeries{R(1), R(1), R(0)}, PowerSeries{R(1), R(1), R(0)}), (PowerSeries{R(1), R(2), R(1)}));
    PowerSeries s{R(2), R(-3), R(1, 5)};
    EXPECT_EQ(ps_mul(s, PowerSeries::constant(1, 2)), s);
    // (h + h^3/6)^2 through h^4 = h^2 + h^4/3
    PowerSeries a{R(0), R(1), R(0), R(1, 6), R(0)};
    EXPECT_EQ(ps_mul(a, a), (PowerSeries{R(0), R(0), R(1), R(0), R(1, 3)}));
}

TEST(PowerSeries, MulIsCommutativeAndAssociative) {
    modeq::testing::RationalGen gen(11, 20);
    for (int trial = 0; trial < 30; ++trial) {
        PowerSeries a = random_series(gen, 6), b = random_series(gen, 6), c = random_series(gen, 6);
        EXPECT_EQ(ps_mul(a, b), ps_mul(b, a));
        EXPECT_EQ(ps_mul(ps_mul(a, b), c), ps_mul(a, ps_mul(b, c)));
    }
}

TEST(PowerSeries, Compose) {
    // x^2 o (h + h^2) through h^3 = h^2 + 2h^3
    PowerSeries outer{R(0), R(0), R(1), R(0)};
    PowerSeries inner{R(0), R(1), R(1), R(0)};
    EXPECT_EQ(ps_compose(outer, inner), (PowerSeries{R(0), R(0), R(1), R(2)}));

    PowerSeries s{R(1), R(2), R(-3), R(1, 7)};
    EXPECT_EQ(ps_compose(s, PowerSeries::identity(3)), s);
    PowerSeries t{R(0), R(2), R(-3), R(1, 7)};
    EXPECT_EQ(ps_compose(PowerSeries::identity(3), t), t);

    EXPECT_THROW(ps_compose(s, PowerSeries{R(1), R(1)}), DomainError);
}

TEST(PowerSeries, ComposeTruncationIsSound) {
    // inner only known through h^1: outer with a linear term cannot be known past h^1
    PowerSeries outer{R(0), R(1), R(1), R(1)};
    PowerSeries inner{R(0), R(1)};
    EXPECT_EQ(ps_compose(outer, inner).order(), 1u);
    // an outer starting at x^2 gains one order of slack
    PowerSeries sq{R(0), R(0), R(1), R(0)};
    EXPECT_EQ(ps_compose(sq, PowerSeries{R(0), R(1), R(5)}).order(), 3u);
}

TEST(PowerSeries, ComposeMatchesExplicitPowers) {
    // Oracle: sum_k outer_k * inner^k with repeated multiplication.
    modeq::testing::RationalGen gen(5, 9);
    for (int trial = 0; trial < 20; ++trial) {
        PowerSeries outer = random_series(gen, 6);
        std::vector<Rational> ic;
        for (int i = 0; i <= 6; ++i) ic.push_back(i == 0 ? R(0) : gen());
        PowerSeries inner(std::move(ic));
        PowerSeries expect(6), power = PowerSeries::constant(1, 6);
        for (std::size_t k = 0; k <= 6; ++k) {
            expect = ps_add(expect, ps_scale(power, outer[k]));
            power = ps_mul(power, inner);
        }
        EXPECT_EQ(ps_compose(outer, inner), expect);
    }
}

TEST(PowerSeries, Revert) {
    EXPECT_EQ(ps_revert(PowerSeries::identity(5)), PowerSeries::identity(5));
    EXPECT_EQ(ps_revert(PowerSeries{R(0), R(2)}), (PowerSeries{R(0), R(1, 2)}));
    PowerSeries arcsin = ps_revert(sine_series(5));
    EXPECT_EQ(arcsin, (PowerSeries{R(0), R(1), R(0), R(1, 6), R(0), R(3, 40)}));
    EXPECT_EQ(arcsin.parity(), Parity::odd);
    // oracle: composing back gives the identity
    EXPECT_EQ(ps_compose(sine_series(5), arcsin), PowerSeries::identity(5));

    EXPECT_THROW(ps_revert(PowerSeries{R(1), R(1)}), DomainError);
    EXPECT_THROW(ps_revert(PowerSeries{R(0), R(0), R(1)}), DomainError);
    EXPECT_THROW(ps_revert(PowerSeries{R(0)}), DomainError);
}

TEST(PowerSeries, RevertComposesToIdentity) {
    modeq::testing::RationalGen gen(3, 12);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<Rational> c{R(0), gen.nonzero()};
        for (int i = 2; i <= 9; ++i) c.push_back(gen());
        PowerSeries s(std::move(c));
        PowerSeries r = ps_revert(s);
        EXPECT_EQ(ps_compose(s, r), PowerSeries::identity(9));
        EXPECT_EQ(ps_compose(r, s), PowerSeries::identity(9));
    }
}

TEST(PowerSeries, Inverse) {
    EXPECT_EQ(ps_inverse(PowerSeries::constant(1, 3)), PowerSeries::constant(1, 3));
    EXPECT_EQ(ps_inverse(PowerSeries{R(1), R(-1), R(0), R(0)}), (PowerSeries{R(1), R(1), R(1), R(1)}));
    EXPECT_EQ(ps_inverse(PowerSeries{R(2), R(1)}), (PowerSeries{R(1, 2), R(-1, 4)}));
    EXPECT_THROW(ps_inverse(PowerSeries{R(0), R(1)}), DomainError);

    modeq::testing::RationalGen gen(9, 15);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<Rational> c{gen.nonzero()};
        for (int i = 1; i <= 8; ++i) c.push_back(gen());
        PowerSeries s(std::move(c));
        EXPECT_EQ(ps_mul(s, ps_inverse(s)), PowerSeries::constant(1, 8));
    }
}

TEST(PowerSeries, ShiftDivide) {
    EXPECT_EQ(ps_shift_divide(PowerSeries{R(0), R(0), R(1), R(0), R(1)}, 2), (PowerSeries{R(1), R(0), R(1)}));
    EXPECT_EQ(ps_shift_divide(PowerSeries{R(0), R(0), R(0), R(1)}, 3), (PowerSeries{R(1)}));
    EXPECT_EQ(ps_shift_divide(PowerSeries{R(0), R(0), R(1), R(0), R(-1, 12)}, 2), (PowerSeries{R(1), R(0), R(-1, 12)}));
    EXPECT_THROW(ps_shift_divide(PowerSeries{R(0), R(1), R(1)}, 2), DomainError);
    EXPECT_THROW(ps_shift_divide(PowerSeries{R(0)}, 2), DomainError);
    EXPECT_EQ(ps_shift_divide(PowerSeries{R(0), R(0), R(1), R(0)}, 1).parity(), Parity::any);
}

TEST(PowerSeries, ParityPropagation) {
    PowerSeries even{R(1), R(0), R(-1, 2), R(0), R(1, 24)};
    PowerSeries even_b{R(3), R(0), R(2), R(0), R(5)};
    even = PowerSeries(even.coeffs(), Parity::even);
    even_b = PowerSeries(even_b.coeffs(), Parity::even);
    PowerSeries prod = ps_mul(even, even_b);
    EXPECT_EQ(prod.parity(), Parity::even);
    for (std::size_t i = 1; i <= prod.order(); i += 2) EXPECT_TRUE(prod[i].is_zero());

    PowerSeries composed = ps_compose(even, sine_series(4));
    EXPECT_EQ(composed.parity(), Parity::even);
    for (std::size_t i = 1; i <= composed.order(); i += 2) EXPECT_TRUE(composed[i].is_zero());

    EXPECT_EQ(ps_mul(sine_series(5), sine_series(5)).parity(), Parity::even);
    EXPECT_EQ(ps_mul(sine_series(5), even.truncated(4)).parity(), Parity::odd);
}

TEST(PowerSeries, Exp) {
    // exp(x) = sum x^n/n!
    PowerSeries e = ps_exp(PowerSeries::identity(6));
    for (unsigned n = 0; n <= 6; ++n) EXPECT_EQ(e[n], Rational(BigInt(1), factorial(n)));
    EXPECT_THROW(ps_exp(PowerSeries{R(1)}), DomainError);
}

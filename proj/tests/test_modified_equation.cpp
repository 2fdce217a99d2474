#include "modeq/modified_equation.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace modeq;
using modeq::testing::R;

namespace {

// Independent oracle: exp of a series as sum u^n/n! by repeated multiplication.
PowerSeries naive_exp(const PowerSeries& u) {
    PowerSeries total(u.order()), power = PowerSeries::constant(1, u.order());
    BigInt fact = 1;
    for (unsigned n = 0; n <= u.order(); ++n) {
        if (n > 0) fact *= n;
        total = ps_add(total, ps_scale(power, Rational(BigInt(1), fact)));
        power = ps_mul(power, u);
    }
    return total;
}

PowerSeries times_h(const PowerSeries& s) {
    std::vector<Rational> c{R(0)};
    c.insert(c.end(), s.coeffs().begin(), s.coeffs().end());
    return PowerSeries(std::move(c));
}

} // namespace

TEST(Stencil, Construction) {
    EXPECT_TRUE(Stencil::stormer_verlet().symmetric());
    EXPECT_FALSE(Stencil::euler().symmetric());
    EXPECT_THROW(Stencil({{2, Polynomial{1}}}, SchemeOrder::first), DomainError);
    EXPECT_THROW(Stencil({}, SchemeOrder::second), DomainError);
    Stencil lopsided({{-1, Polynomial{1}}, {0, Polynomial{-2}}, {1, Polynomial{1, 1}}}, SchemeOrder::second);
    EXPECT_FALSE(lopsided.symmetric());
}

TEST(DeriveFirstOrder, EulerWorkedExample) {
    EXPECT_EQ(derive_first_order(Stencil::euler(), 0).multiplier, (PowerSeries{R(-1)}));
    EXPECT_EQ(derive_first_order(Stencil::euler(), 2).multiplier, (PowerSeries{R(-1), R(-1, 2), R(-1, 3)}));
}

TEST(DeriveFirstOrder, EulerIsLogOneMinusH) {
    PowerSeries s = derive_first_order(Stencil::euler(), 10).multiplier;
    for (unsigned k = 0; k <= 10; ++k) EXPECT_EQ(s[k], R(-1, k + 1)) << "k=" << k;
    // exp(h S) = 1 - h
    PowerSeries e = naive_exp(times_h(s));
    PowerSeries one_minus_h(11);
    one_minus_h = ps_add(PowerSeries::constant(1, 11), PowerSeries::monomial(-1, 1, 11));
    EXPECT_EQ(e, one_minus_h);
}

TEST(DeriveFirstOrder, ResidualVanishesThroughOrderPlusOne) {
    for (std::size_t order : {0u, 1u, 4u, 9u}) {
        PowerSeries s = derive_first_order(Stencil::euler(), order).multiplier;
        PowerSeries r = stencil_residual(Stencil::euler(), s);
        ASSERT_EQ(r.order(), order + 1);
        for (std::size_t i = 0; i <= r.order(); ++i) EXPECT_TRUE(r[i].is_zero()) << "order " << order << " i " << i;
    }
}

TEST(DeriveFirstOrder, Errors) {
    EXPECT_THROW(derive_first_order(Stencil::stormer_verlet(), 2), DomainError);
    // a_1 = 1, a_0 = -2: no h^0 cancellation
    Stencil inconsistent({{1, Polynomial{1}}, {0, Polynomial{-2}}}, SchemeOrder::first);
    EXPECT_THROW(derive_first_order(inconsistent, 2), DomainError);
    // a_1 = 0 at h = 0: unknown coefficient has zero factor
    Stencil degenerate({{1, Polynomial{0, 1}}, {0, Polynomial{0, -1}}}, SchemeOrder::first);
    EXPECT_THROW(derive_first_order(degenerate, 2), DomainError);
}

TEST(DeriveSecondOrder, VerletWorkedExample) {
    EXPECT_EQ(derive_second_order_symmetric(Stencil::stormer_verlet(), 0).multiplier, (PowerSeries{R(-1)}));
    EXPECT_EQ(derive_second_order_symmetric(Stencil::stormer_verlet(), 4).multiplier,
              (PowerSeries{R(-1), R(0), R(-1, 12), R(0), R(-1, 90)}));
}

TEST(DeriveSecondOrder, MatchesClosedFormCoefficient) {
    PowerSeries s = derive_second_order_symmetric(Stencil::stormer_verlet(), 38).multiplier;
    EXPECT_EQ(s.parity(), Parity::even);
    for (unsigned k = 1; k <= 20; ++k) {
        BigInt f = factorial(k - 1);
        EXPECT_EQ(s[2 * k - 2], Rational(-2 * f * f, factorial(2 * k))) << "k=" << k;
    }
    for (std::size_t i = 1; i <= s.order(); i += 2) EXPECT_TRUE(s[i].is_zero());
}

TEST(DeriveSecondOrder, HigherOrderRunsTruncateToLowerOnes) {
    PowerSeries high = derive_second_order_symmetric(Stencil::stormer_verlet(), 24).multiplier;
    for (std::size_t order = 0; order <= 24; order += 2)
        EXPECT_EQ(derive_second_order_symmetric(Stencil::stormer_verlet(), order).multiplier, high.truncated(order));
    PowerSeries e_high = derive_first_order(Stencil::euler(), 15).multiplier;
    for (std::size_t order = 0; order <= 15; ++order)
        EXPECT_EQ(derive_first_order(Stencil::euler(), order).multiplier, e_high.truncated(order));
}

TEST(DeriveSecondOrder, ResidualVanishes) {
    for (std::size_t order : {0u, 2u, 6u, 12u}) {
        PowerSeries s = derive_second_order_symmetric(Stencil::stormer_verlet(), order).multiplier;
        PowerSeries r = stencil_residual(Stencil::stormer_verlet(), s);
        ASSERT_EQ(r.order(), order + 2);
        for (std::size_t i = 0; i <= r.order(); ++i) EXPECT_TRUE(r[i].is_zero());
    }
}

TEST(DeriveSecondOrder, WiderSymmetricStencil) {
    // Fourth-order central difference for x'' = -x:
    // (-x_{j+2} + 16 x_{j+1} - 30 x_j + 16 x_{j-1} - x_{j-2}) / (12 h^2) = -x_j
    Stencil wide({{-2, Polynomial{R(-1)}},
                  {-1, Polynomial{16}},
                  {0, Polynomial{-30, 0, 12}},
                  {1, Polynomial{16}},
                  {2, Polynomial{R(-1)}}},
                 SchemeOrder::second);
    PowerSeries s = derive_second_order_symmetric(wide, 8).multiplier;
    EXPECT_EQ(s[0], R(-1));
    EXPECT_EQ(s[2], R(0)); // fourth-order accurate: no h^2 error
    PowerSeries r = stencil_residual(wide, s);
    for (std::size_t i = 0; i <= r.order(); ++i) EXPECT_TRUE(r[i].is_zero());
}

TEST(DeriveSecondOrder, Errors) {
    Stencil lopsided({{-1, Polynomial{1}}, {0, Polynomial{-2}}, {1, Polynomial{1, 1}}}, SchemeOrder::second);
    EXPECT_THROW(derive_second_order_symmetric(lopsided, 2), DomainError);
    EXPECT_THROW(derive_second_order_symmetric(Stencil::euler(), 2), DomainError);
    EXPECT_THROW(derive_second_order_symmetric(Stencil::stormer_verlet(), 3), DomainError);
    Stencil inconsistent({{-1, Polynomial{1}}, {0, Polynomial{-1}}, {1, Polynomial{1}}}, SchemeOrder::second);
    EXPECT_THROW(derive_second_order_symmetric(inconsistent, 2), DomainError);
}

TEST(VerletClosedCoefficient, Values) {
    EXPECT_EQ(verlet_closed_coefficient(1), R(-1));
    EXPECT_EQ(verlet_closed_coefficient(2), R(-1, 12));
    EXPECT_EQ(verlet_closed_coefficient(3), R(-1, 90));
    EXPECT_THROW(verlet_closed_coefficient(0), DomainError);
}

TEST(ArcsineMultiplier, Values) {
    EXPECT_EQ(arcsine_multiplier(0), (PowerSeries{R(-1)}));
    EXPECT_EQ(arcsine_multiplier(4), (PowerSeries{R(-1), R(0), R(-1, 12), R(0), R(-1, 90)}));
    PowerSeries a = arcsine_multiplier(40);
    EXPECT_EQ(a.order(), 40u);
    EXPECT_EQ(a.parity(), Parity::even);
    for (unsigned k = 1; k <= 21; ++k) EXPECT_EQ(a[2 * k - 2], verlet_closed_coefficient(k)) << "k=" << k;
}

TEST(ArcsinSquared, Values) {
    PowerSeries e = arcsin_sq_expansion(40);
    EXPECT_EQ(e[2], R(1, 4));
    EXPECT_EQ(e[4], R(1, 48));
    EXPECT_TRUE(e[0].is_zero());
    PowerSeries a = arcsin_half_series(40);
    EXPECT_EQ(ps_mul(a, a), e);
}

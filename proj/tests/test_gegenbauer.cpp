#include "oracles/gram_schmidt.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace testing_support;

TEST(Gegenbauer, MatchesGramSchmidtOracle)
{
    for (int d = 2; d <= 6; ++d) {
        const auto ref = oracle::gram_schmidt(d, 10);
        for (int n = 0; n <= 10; ++n) {
            const auto p = gegenbauer(d, n);
            ASSERT_EQ(p.degree(), n);
            for (int i = 0; i <= n; ++i) EXPECT_EQ(p[i], ref[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)]) << d << " " << n;
        }
    }
}

TEST(Gegenbauer, FrozenLowDegreeValues)
{
    // Legendre for d = 3, Chebyshev for d = 2.
    EXPECT_EQ(gegenbauer(3, 2), (RationalPolynomial{q("-1/2"), 0, q("3/2")}));
    EXPECT_EQ(gegenbauer(3, 3), (RationalPolynomial{0, q("-3/2"), 0, q("5/2")}));
    EXPECT_EQ(gegenbauer(2, 4), (RationalPolynomial{1, 0, -8, 0, 8}));
    EXPECT_EQ(gegenbauer(4, 2), (RationalPolynomial{q("-1/3"), 0, q("4/3")}));
}

TEST(Gegenbauer, NormalizedParityAndBounded)
{
    for (int d = 2; d <= 7; ++d) {
        for (int n = 0; n <= 12; ++n) {
            const auto p = gegenbauer(d, n);
            EXPECT_EQ(evaluate(p, Rational(1)), Rational(1));
            EXPECT_EQ(evaluate(p, Rational(-1)), Rational(n % 2 ? -1 : 1));
            for (int i = n % 2 ? 0 : 1; i <= n; i += 2) EXPECT_EQ(sgn(p[i]), 0);
            for (int k = -20; k <= 20; ++k) EXPECT_LE(abs(evaluate(p, ratio(k, 20))), Rational(1));
        }
    }
}

TEST(Gegenbauer, ExactOrthogonality)
{
    for (int d = 2; d <= 6; ++d) {
        for (int m = 0; m <= 8; ++m) {
            for (int n = m + 1; n <= 8; ++n) {
                EXPECT_EQ(weighted_inner_product(d, gegenbauer(d, m), gegenbauer(d, n)), Rational(0)) << d << m << n;
            }
            EXPECT_GT(weighted_inner_product(d, gegenbauer(d, m), gegenbauer(d, m)), 0);
        }
    }
}

TEST(Gegenbauer, HarmonicDimensions)
{
    for (int n = 1; n <= 20; ++n) {
        EXPECT_EQ(harmonic_dimension(3, n), 2 * n + 1);
        EXPECT_EQ(harmonic_dimension(2, n), 2);
        EXPECT_EQ(harmonic_dimension(4, n), (n + 1) * (n + 1));
    }
    EXPECT_EQ(harmonic_dimension(5, 2), 14);
    EXPECT_EQ(harmonic_dimension(6, 0), 1);
    EXPECT_THROW(gegenbauer(1, 2), InputError);
}

TEST(Gegenbauer, SphereArea)
{
    EXPECT_NEAR(sphere_area(2), 2 * M_PI, 1e-12);
    EXPECT_NEAR(sphere_area(3), 4 * M_PI, 1e-12);
    EXPECT_NEAR(sphere_area(4), 2 * M_PI * M_PI, 1e-12);
}

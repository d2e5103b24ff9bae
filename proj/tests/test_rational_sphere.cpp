#include "support.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace testing_support;

TEST(RationalSphere, HeightOneIsSignedBasis)
{
    const auto pts = enumerate_points(3, 6);
    std::set<RationalPoint> seen(pts.begin(), pts.end());
    EXPECT_EQ(seen.size(), 6u);
    for (const auto& p : pts) {
        EXPECT_EQ(point_height(p), 1);
        EXPECT_TRUE(is_unit(p));
    }
}

TEST(RationalSphere, EnumerationIsSortedUniqueAndUnit)
{
    for (int d = 2; d <= 5; ++d) {
        const auto pts = enumerate_points(d, 400);
        std::set<RationalPoint> seen;
        Integer last = 0;
        for (const auto& p : pts) {
            ASSERT_TRUE(is_unit(p));
            EXPECT_TRUE(seen.insert(p).second);
            EXPECT_GE(point_height(p), last);
            last = point_height(p);
        }
    }
}

TEST(RationalSphere, CircleHeightFiveContainsPythagoreanPoints)
{
    const auto pts = enumerate_points(2, 40);
    const RationalPoint target{q("3/5"), q("4/5")};
    EXPECT_NE(std::find(pts.begin(), pts.end(), target), pts.end());
}

TEST(RationalSphere, ShuffledOrderKeepsTheSameSet)
{
    for (int d = 2; d <= 4; ++d) {
        PointEnumerator a(d);
        PointEnumerator b(d, 99);
        std::set<RationalPoint> sa;
        std::set<RationalPoint> sb;
        // Compare whole height classes: 300 points from each then trim to shared heights.
        std::vector<RationalPoint> va;
        std::vector<RationalPoint> vb;
        for (int i = 0; i < 300; ++i) {
            va.push_back(a.next());
            vb.push_back(b.next());
        }
        const Integer h = std::min(point_height(va.back()), point_height(vb.back()));
        for (const auto& p : va) {
            if (point_height(p) < h) sa.insert(p);
        }
        for (const auto& p : vb) {
            if (point_height(p) < h) sb.insert(p);
        }
        EXPECT_EQ(sa, sb);
    }
}

TEST(RationalSphere, ApproximatePointWithinTolerance)
{
    std::mt19937_64 rng(5);
    for (int d = 2; d <= 5; ++d) {
        for (int k = 0; k < 10; ++k) {
            auto x = random_sphere_point(static_cast<std::size_t>(d), rng);
            for (double eps : {1e-2, 1e-6}) {
                const auto p = approximate_point(d, x, eps);
                ASSERT_TRUE(is_unit(p));
                double dist = 0.0;
                for (int i = 0; i < d; ++i) dist += std::pow(p[static_cast<std::size_t>(i)].get_d() - x[static_cast<std::size_t>(i)], 2);
                EXPECT_LE(std::sqrt(dist), eps);
            }
        }
    }
}

TEST(RationalSphere, CayleyRotationsAreExactRotations)
{
    std::mt19937_64 rng(11);
    for (int d = 2; d <= 5; ++d) {
        for (int k = 0; k < 5; ++k) {
            const auto g = random_cayley_rotation(d, rng);
            EXPECT_EQ(g * g.transpose(), Matrix<Rational>::identity(static_cast<std::size_t>(d)));
            EXPECT_EQ(determinant(g), Rational(1));
        }
    }
    EXPECT_THROW(cayley_rotation(rmat({{0, 1}, {2, 0}})), InputError);
}

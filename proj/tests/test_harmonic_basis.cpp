#include "support.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>

using namespace testing_support;

TEST(HarmonicBasis, SizeAndPositiveDeterminant)
{
    for (int d = 2; d <= 4; ++d) {
        for (int n = 0; n <= 5; ++n) {
            const auto b = build_zonal_basis(d, n);
            EXPECT_EQ(static_cast<std::int64_t>(b.points.size()), harmonic_dimension(d, n));
            EXPECT_GT(b.gram_det, 0);
            EXPECT_EQ(determinant(b.gram), b.gram_det);
            EXPECT_TRUE(basis_consistent(b));
        }
    }
}

TEST(HarmonicBasis, FrozenGramDeterminants)
{
    EXPECT_EQ(build_zonal_basis(3, 2).gram_det, q("256/20503125"));
    EXPECT_EQ(build_zonal_basis(4, 1).gram_det, q("1/256"));
    EXPECT_EQ(build_zonal_basis(2, 1).gram_det, q("1/4"));
}

TEST(HarmonicBasis, GramIsNormalizedZonalProduct)
{
    const auto b = build_zonal_basis(3, 3);
    const auto p = gegenbauer(3, 3);
    for (std::size_t i = 0; i < b.points.size(); ++i) {
        EXPECT_EQ(b.gram(i, i), q("1/7"));
        for (std::size_t j = 0; j < b.points.size(); ++j) {
            EXPECT_EQ(b.gram(i, j), evaluate(p, rational_dot(b.points[i], b.points[j])) / 7);
        }
    }
}

TEST(HarmonicBasis, DeterminantTraceIsPositive)
{
    const auto b = build_zonal_basis(3, 4);
    ASSERT_EQ(b.determinant_trace.size(), b.points.size());
    for (const auto& x : b.determinant_trace) EXPECT_GT(x, 0);
    EXPECT_EQ(b.determinant_trace.back(), b.gram_det);
}

TEST(HarmonicBasis, AlternativeOrderGivesAnotherBasis)
{
    BasisOptions o;
    o.order_seed = 17;
    const auto b = build_zonal_basis(3, 3, o);
    EXPECT_EQ(b.points.size(), 7u);
    EXPECT_GT(b.gram_det, 0);
    EXPECT_TRUE(basis_consistent(b));
}

TEST(HarmonicBasis, CacheReturnsSharedInstanceAndPersists)
{
    const auto dir = std::filesystem::temp_directory_path() / "spherediv_basis_cache_test";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    ::setenv("SPHEREDIV_CACHE_DIR", dir.c_str(), 1);
    BasisOptions o;
    o.order_seed = 4242;
    const auto a = cached_zonal_basis(3, 2, o);
    const auto b = cached_zonal_basis(3, 2, o);
    EXPECT_EQ(a.get(), b.get());
    EXPECT_TRUE(std::filesystem::exists(dir / basis_cache_filename(3, 2, 4242)));
    ::unsetenv("SPHEREDIV_CACHE_DIR");
    std::filesystem::remove_all(dir);
}

TEST(HarmonicBasis, JsonRoundTrip)
{
    const auto b = build_zonal_basis(3, 2);
    const auto back = zonal_basis_from_json(nlohmann::json::parse(spherediv::to_json(b).dump()));
    EXPECT_EQ(back.points, b.points);
    EXPECT_EQ(back.gram_det, b.gram_det);
    EXPECT_TRUE(basis_consistent(back));
}

TEST(HarmonicBasis, FunkHeckeQuadrature)
{
    std::mt19937_64 rng(3);
    for (int n = 0; n <= 4; ++n) {
        for (int k = 0; k < 5; ++k) {
            const auto u = random_sphere_point(3, rng);
            const auto v = random_sphere_point(3, rng);
            const double t = u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
            const double expect = gegenbauer(3, n).evaluate_at<double>(t) / static_cast<double>(harmonic_dimension(3, n));
            EXPECT_NEAR(funk_hecke_quadrature_s2(n, {u[0], u[1], u[2]}, {v[0], v[1], v[2]}), expect, 1e-6);
        }
    }
}

#include "oracles/hull_brute.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace testing_support;

namespace {

template <class T>
FaceLattice lattice_of(const Tuple<T>& gens)
{
    const auto g = enumerate_group(gens, 500);
    EXPECT_TRUE(g.finite);
    return face_lattice(orbit_polytope(g.elements, gens.dim));
}

template <class T>
std::array<long, 3> oracle_counts(const Tuple<T>& gens)
{
    const auto g = enumerate_group(gens, 500);
    const auto poly = orbit_polytope(g.elements, gens.dim);
    std::vector<oracle::P3> pts;
    for (const auto& v : poly.vertices) pts.push_back({to_double(v[0]), to_double(v[1]), to_double(v[2])});
    return oracle::face_counts_3d(pts);
}

Tuple<Rational> tetrahedral()
{
    return {3, {rmat({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}), rmat({{1, 0, 0}, {0, -1, 0}, {0, 0, -1}})}};
}

} // namespace

TEST(Euler, CubeGroup)
{
    const auto lat = lattice_of(cube_tuple());
    EXPECT_EQ(lat.counts, (std::vector<long>{6, 12, 8}));
    EXPECT_EQ(euler_characteristic(lat.counts), 2);
    EXPECT_TRUE(euler_check(lat.counts, 3));
    const auto ob = divisibility_obstruction(lat.counts, 3);
    EXPECT_TRUE(ob.obstructed);
    EXPECT_EQ(ob.witness_dim, 2u);
    EXPECT_FALSE(divisibility_obstruction(lat.counts, 2).obstructed);
}

TEST(Euler, CyclicThreeFoldGroup)
{
    const auto lat = lattice_of(to_floating(z_axis_tuple({q("1/3")})));
    EXPECT_EQ(lat.counts, (std::vector<long>{14, 36, 24}));
    const auto ob = divisibility_obstruction(lat.counts, 3);
    EXPECT_EQ(ob.witness_dim, 0u);
}

TEST(Euler, AgreesWithBruteForceHull)
{
    const auto check = [](const auto& gens) {
        const auto lat = lattice_of(gens);
        const auto ref = oracle_counts(gens);
        EXPECT_EQ(lat.counts, (std::vector<long>{ref[0], ref[1], ref[2]}));
        EXPECT_EQ(euler_characteristic(lat.counts), 2);
    };
    check(cube_tuple());
    check(tetrahedral());
    check(to_floating(z_axis_tuple({q("1/3")})));
    check(to_floating(z_axis_tuple({q("1/5")})));
    check(to_floating(z_axis_tuple({q("1/4"), q("1/2")})));
}

TEST(Euler, InvarianceAndCentroids)
{
    const auto g = enumerate_group(cube_tuple(), 100);
    const auto poly = orbit_polytope(g.elements, 3);
    EXPECT_TRUE(poly.invariance_verified);
    EXPECT_EQ(poly.group_order, 24u);
    const auto lat = face_lattice(poly);
    EXPECT_TRUE(faces_invariant(lat, poly, g.elements));
    EXPECT_TRUE(centroids_distinct(lat, poly));
}

TEST(Euler, FiveDimensionalCrossPolytope)
{
    Tuple<Rational> cycle{5, {rmat({{0, 0, 0, 0, 1}, {1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}})}};
    const auto lat = lattice_of(cycle);
    EXPECT_EQ(lat.counts, (std::vector<long>{10, 40, 80, 80, 32}));
    EXPECT_TRUE(euler_check(lat.counts, 5));
    EXPECT_EQ(divisibility_obstruction(lat.counts, 3).witness_dim, 0u);
}

TEST(Euler, EvenDimensionIsAPreconditionError)
{
    EXPECT_THROW(euler_check({4, 4}, 2), PreconditionError);
}

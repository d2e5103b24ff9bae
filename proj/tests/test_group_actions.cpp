#include "oracles/stacked_kernel.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace testing_support;

namespace {

oracle::QMat to_qmat(const Matrix<Rational>& m)
{
    oracle::QMat out(m.rows(), std::vector<mpq_class>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
    }
    return out;
}

// Rotation fixing the axis q.e_d, for a Cayley rotation q and a block rotation b of R^(d-1).
Matrix<Rational> about_axis(const Matrix<Rational>& q, const Matrix<Rational>& b)
{
    const std::size_t d = q.rows();
    auto g = Matrix<Rational>::identity(d);
    for (std::size_t i = 0; i + 1 < d; ++i) {
        for (std::size_t j = 0; j + 1 < d; ++j) g(i, j) = b(i, j);
    }
    return q * g * q.transpose();
}

} // namespace

TEST(Words, ParseReduceAndPrint)
{
    const auto w = parse_word("g1 g2 g2^-1 g1^-1 g3");
    EXPECT_EQ(w.length(), 5u);
    EXPECT_FALSE(w.reduced());
    EXPECT_EQ(to_string(w.reduce()), "g3");
    EXPECT_EQ(to_string(parse_word("g2^-1 g1")), "g2^-1 g1");
    EXPECT_THROW(parse_word("h1"), InputError);
    EXPECT_THROW(parse_word("g0"), InputError);
    EXPECT_EQ(parse_words("g1, g2 g1").size(), 2u);
}

TEST(Words, ReducedWordCounts)
{
    for (std::size_t r = 1; r <= 3; ++r) {
        std::vector<std::size_t> by_len(5, 0);
        for (const auto& w : reduced_words(r, 4)) {
            EXPECT_TRUE(w.reduced());
            ++by_len[w.length()];
        }
        std::size_t expect = 2 * r;
        for (std::size_t l = 1; l <= 4; ++l) {
            EXPECT_EQ(by_len[l], expect);
            expect *= 2 * r - 1;
        }
    }
}

TEST(Words, EvaluationUsesInverseTranspose)
{
    const auto t = cube_tuple();
    const auto w = evaluate_word(parse_word("g1 g1^-1 g2 g2 g2 g2"), t);
    EXPECT_EQ(w, Matrix<Rational>::identity(3));
}

TEST(FixedPoint, AgreesWithStackedKernelOracle)
{
    std::mt19937_64 rng(77);
    int common = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const int d = 2 + static_cast<int>(rng() % 3);
        const std::size_t k = 1 + rng() % 3;
        const bool shared = rng() % 2 == 0;
        const auto q = random_cayley_rotation(d, rng);
        std::vector<Matrix<Rational>> mats;
        std::vector<oracle::QMat> qm;
        for (std::size_t i = 0; i < k; ++i) {
            const auto g = shared ? about_axis(q, random_cayley_rotation(d - 1, rng)) : random_cayley_rotation(d, rng);
            mats.push_back(g - Matrix<Rational>::identity(static_cast<std::size_t>(d)));
            qm.push_back(to_qmat(mats.back()));
        }
        const auto res = common_fixed_point_test(mats);
        EXPECT_EQ(res.common, oracle::common_kernel(qm)) << trial;
        if (res.common) {
            ++common;
            EXPECT_TRUE(res.witness_verified);
        }
    }
    EXPECT_GT(common, 10);
}

TEST(FixedPoint, CoaxialAndFloating)
{
    const auto z = z_axis_tuple({q("1/5"), q("2/7")});
    const auto id = Matrix<CyclotomicNumber>::identity(3);
    const auto res = common_fixed_point_test(std::vector{z.rotations[0] - id, z.rotations[1] - id});
    EXPECT_TRUE(res.common);
    EXPECT_TRUE(res.witness_verified);
    const auto f = to_floating(cube_tuple());
    const auto fid = Matrix<double>::identity(3);
    EXPECT_FALSE(common_fixed_point_test(std::vector{f.rotations[0] - fid, f.rotations[1] - fid}).common);
    EXPECT_TRUE(common_fixed_point_test(std::vector{f.rotations[0] - fid}).common);
}

TEST(Orbit, SizesOfKnownOrbits)
{
    const auto z = z_axis_tuple({q("1/3"), q("2/3"), Rational(0)});
    using C = CyclotomicNumber;
    EXPECT_EQ(orbit(Vector<C>{C(1), C(0), C(0)}, z, 100).points.size(), 3u);
    EXPECT_EQ(orbit(Vector<C>{C(0), C(0), C(1)}, z, 100).points.size(), 1u);
    const auto cube = cube_tuple();
    const auto o = orbit(Vector<Rational>{q("3/5"), q("4/5"), 0}, cube, 100);
    EXPECT_TRUE(o.finite);
    EXPECT_TRUE(o.closure_verified);
    EXPECT_EQ(o.points.size(), 24u);
    std::mt19937_64 rng(2);
    Tuple<Rational> generic{3, {random_cayley_rotation(3, rng), random_cayley_rotation(3, rng)}};
    const auto inf = orbit(Vector<Rational>{1, 0, 0}, generic, 50);
    EXPECT_FALSE(inf.finite);
    EXPECT_THROW(orbit(Vector<Rational>{1, 1, 0}, cube, 10), InputError);
}

TEST(Orbit, FloatingOrbitDeduplicates)
{
    const auto f = to_floating(z_axis_tuple({q("1/6"), Rational(0)}));
    const auto o = orbit(Vector<double>{1, 0, 0}, f, 100);
    EXPECT_TRUE(o.finite);
    EXPECT_EQ(o.points.size(), 6u);
}

TEST(Orbit, InvariantSplitAndBound)
{
    const auto z = z_axis_tuple({q("1/3"), q("2/3"), Rational(0)});
    using C = CyclotomicNumber;
    const auto o = orbit(Vector<C>{C(1), C(0), C(0)}, z, 100);
    const auto s = invariant_split(o, z);
    EXPECT_TRUE(s.verified);
    EXPECT_EQ(s.span_basis.cols(), 2u);
    EXPECT_EQ(s.complement_basis.cols(), 1u);
    ASSERT_EQ(s.beta.size(), 3u);
    for (const auto& b : s.beta) EXPECT_EQ(b, Matrix<C>::identity(1));
    const auto bound = orbit_size_bound_check(o, s, z, 50, 1);
    EXPECT_TRUE(bound.all_within);
    EXPECT_DOUBLE_EQ(bound.bound, 6.0);
    EXPECT_LE(bound.max_observed, 6u);
}

TEST(Orbit, DivisionOfFiniteOrbits)
{
    const auto z = z_axis_tuple({q("1/3"), q("2/3"), Rational(1)});
    using C = CyclotomicNumber;
    const auto o = orbit(Vector<C>{C(1), C(0), C(0)}, z, 100);
    const auto a = divide_finite_orbit(o, z);
    ASSERT_TRUE(a);
    EXPECT_EQ(a->size(), 1u);
    EXPECT_TRUE(is_orbit_partition(o, z, *a));
    const auto pair = z_axis_tuple({q("1/3"), Rational(0)});
    const auto o2 = orbit(Vector<C>{C(1), C(0), C(0)}, pair, 100);
    EXPECT_EQ(o2.points.size(), 3u);
    EXPECT_FALSE(divide_finite_orbit(o2, pair));
}

TEST(Groups, EnumerateKnownGroups)
{
    const auto g = enumerate_group(cube_tuple(), 100);
    EXPECT_TRUE(g.finite);
    EXPECT_EQ(g.elements.size(), 24u);
    EXPECT_EQ(g.elements.front(), Matrix<Rational>::identity(3));
    EXPECT_EQ(enumerate_group(z_axis_tuple({q("1/3")}), 100).elements.size(), 3u);
    std::mt19937_64 rng(4);
    Tuple<Rational> generic{3, {random_cayley_rotation(3, rng)}};
    EXPECT_FALSE(enumerate_group(generic, 40).finite);
}

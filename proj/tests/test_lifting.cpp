#include "support.hpp"

#include <gtest/gtest.h>

using namespace testing_support;

namespace {

DivisionDescriptor thirds()
{
    return base_division({q("1/3"), q("2/3"), Rational(0)}, ArcSet{{{Rational(0), q("1/3")}}});
}

} // namespace

TEST(Lifting, BaseDivisionMustVerify)
{
    EXPECT_THROW(base_division({q("1/3"), q("2/3"), Rational(0)}, ArcSet{{{Rational(0), q("1/2")}}}), InputError);
    const auto b = thirds();
    EXPECT_EQ(b.dim(), 2u);
    EXPECT_EQ(b.pieces(), 3u);
}

TEST(Lifting, RotationsAddTurnsOnTheNewPlane)
{
    const auto l = lift(lift(thirds(), 3), 3);
    EXPECT_EQ(l.dim(), 6u);
    const auto rot = rotations_of(l);
    ASSERT_EQ(rot.block_turns.size(), 3u);
    EXPECT_EQ(rot.block_turns[0], (std::vector<Rational>{q("1/3"), q("1/3"), q("1/3")}));
    EXPECT_EQ(rot.block_turns[1], (std::vector<Rational>{q("2/3"), q("2/3"), q("2/3")}));
    EXPECT_EQ(rot.block_turns[2], (std::vector<Rational>{0, 0, 0}));
    const auto t = exact_rotations(rot);
    EXPECT_TRUE(validate_tuple(t).valid);
    EXPECT_THROW(lift(thirds(), 2), InputError);
}

TEST(Lifting, MembershipIsUniqueAwayFromBoundaries)
{
    const auto l = lift(thirds(), 3);
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<long> ang(0, 999);
    std::uniform_real_distribution<double> rad(0.01, 1.0);
    for (int k = 0; k < 500; ++k) {
        const double r0 = rad(rng);
        PolarPoint p{{}, {r0, std::sqrt(1 - r0 * r0)}, {ratio(2 * ang(rng) + 1, 2000), ratio(2 * ang(rng) + 1, 2000)}};
        const auto m = membership(l, p, 1e-9);
        EXPECT_EQ(m.multiplicity, 1u);
        ASSERT_TRUE(m.piece);
    }
}

TEST(Lifting, DegenerateLastPlaneFallsBackToTheLowerDivision)
{
    const auto l = lift(thirds(), 3);
    const PolarPoint p{{}, {1.0, 0.0}, {q("1/6"), q("1/2")}};
    EXPECT_EQ(in_piece(l, p), true);
    const PolarPoint r{{}, {1.0, 0.0}, {q("1/2"), q("0")}};
    EXPECT_EQ(in_piece(l, r), false);
}

TEST(Lifting, PartitionReportsAreCleanAndReproducible)
{
    const auto l = lift(thirds(), 3);
    const auto a = verify_partition(l, 20000, 3, 1);
    const auto b = verify_partition(l, 20000, 3, 4);
    EXPECT_EQ(a.violation_count, 0u);
    EXPECT_EQ(a.piece_counts, b.piece_counts);
    EXPECT_EQ(a.retained + a.rejected, a.samples);
    EXPECT_LT(a.max_piece_deviation_se, 5.0);
}

TEST(Lifting, PlaceholderHasNoMembershipRule)
{
    const DivisionDescriptor ph{PlaceholderDivision{3, 2}};
    const auto l = lift(ph, 2);
    EXPECT_EQ(l.dim(), 5u);
    EXPECT_THROW(exact_rotations(rotations_of(l)), PreconditionError);
    const PolarPoint p{{0.0, 0.0, 0.0}, {1.0}, {q("1/8")}};
    EXPECT_EQ(in_piece(l, p), true);
}

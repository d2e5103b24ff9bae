#ifndef SPHEREDIV_LIFTING_HPP
#define SPHEREDIV_LIFTING_HPP

#include "spherediv/circle_division.hpp"
#include "spherediv/rotation_tuple.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace spherediv {

struct DivisionDescriptor;

/// Circle division: the rotations t_i + A partition S^1.
struct BaseDivision {
    std::vector<Rational> turns;
    ArcSet arcs;
};

/// Division of S^(d-1) from a division of S^(d-3): rotation i acts as (alpha_i, beta^(i+1))
/// with beta the 1/r turn, and the generating piece is A x {0} together with every point
/// whose last-plane angle lies in [0, 1/r).
struct LiftedDivision {
    std::shared_ptr<const DivisionDescriptor> lower;
    std::size_t r = 0;
};

/// Stand-in for a lower division without a usable membership rule (e.g. non-measurable).
struct PlaceholderDivision {
    std::size_t dim = 0;
    std::size_t r = 0;
};

struct DivisionDescriptor {
    std::variant<BaseDivision, LiftedDivision, PlaceholderDivision> node;

    std::size_t dim() const;
    std::size_t pieces() const;
};

/// Turns of the 2x2 rotation blocks of each rotation, in coordinate order.
struct LiftedRotationTuple {
    std::size_t dim = 0;
    std::size_t free_dim = 0; ///< leading coordinates acted on by an unspecified placeholder rotation
    std::vector<std::vector<Rational>> block_turns;
};

DivisionDescriptor base_division(std::vector<Rational> turns, ArcSet arcs);
/// Throws InputError unless the lower division verifies and has r pieces.
DivisionDescriptor lift(const DivisionDescriptor& lower, std::size_t r);
LiftedRotationTuple rotations_of(const DivisionDescriptor& desc);
/// Exact block-diagonal rotations; throws PreconditionError for placeholder-based descriptors.
Tuple<CyclotomicNumber> exact_rotations(const LiftedRotationTuple& rot);

/// Point in polar form: optional raw coordinates of a placeholder factor, then per
/// circle block a radius and a rational angle in turns.
struct PolarPoint {
    std::vector<double> free;
    std::vector<double> radii;
    std::vector<Rational> angles;
};

struct Membership {
    std::optional<std::size_t> piece; ///< rotation index i with p in gamma_i.C
    bool null_set = false;             ///< landed in a part without a membership rule
    std::size_t multiplicity = 0;      ///< number of i with gamma_i^{-1} p in C (1 on a valid division)
};

/// Whether p lies in the generating piece C; nullopt on the placeholder's null part.
std::optional<bool> in_piece(const DivisionDescriptor& desc, const PolarPoint& p, double margin = 0.0);

/// gamma_i^{-1} applied to a polar point (angles shift exactly).
PolarPoint apply_inverse(const LiftedRotationTuple& rot, std::size_t i, const PolarPoint& p);

Membership membership(const DivisionDescriptor& desc, const PolarPoint& p, double margin = 0.0);

/// Converts to Cartesian coordinates.
std::vector<double> to_cartesian(const PolarPoint& p);

struct PartitionViolation {
    std::vector<double> point;
    std::vector<std::string> angles;
    std::size_t multiplicity = 0;
};

struct PartitionReport {
    std::size_t samples = 0;
    std::size_t retained = 0;
    std::size_t rejected = 0;
    std::vector<std::size_t> piece_counts;
    std::size_t violation_count = 0;
    std::vector<PartitionViolation> violations; ///< first few only
    double max_piece_deviation_se = 0.0;        ///< largest |fraction - 1/r| in standard errors
    std::uint64_t seed = 0;
};

inline constexpr double kBoundaryMargin = 1e-7;

/// Random polar samples (angles with denominator 10^6 r), rejection near piece boundaries,
/// and the count of rotations whose inverse lands the point in C.
PartitionReport verify_partition(const DivisionDescriptor& desc, std::size_t samples, std::uint64_t seed,
                                 unsigned threads = 1);

} // namespace spherediv

#endif

#pragma once

#include <spherediv/circle_division.hpp>
#include <spherediv/cyclic_tiling.hpp>
#include <spherediv/euler_obstruction.hpp>
#include <spherediv/generic_synthesis.hpp>
#include <spherediv/group_actions.hpp>
#include <spherediv/harmonic_basis.hpp>
#include <spherediv/json_io.hpp>
#include <spherediv/lifting.hpp>
#include <spherediv/obstruction.hpp>
#include <spherediv/rational_sphere.hpp>
#include <spherediv/rotation_tuple.hpp>

#include <random>

namespace testing_support {

using namespace spherediv;

inline Rational q(const char* s) { return parse_rational(s); }

inline Matrix<Rational> rmat(std::initializer_list<std::initializer_list<long>> rows)
{
    std::vector<std::vector<Rational>> v;
    for (const auto& r : rows) {
        std::vector<Rational> row;
        for (long x : r) row.emplace_back(x);
        v.push_back(row);
    }
    return Matrix<Rational>::from_rows(v);
}

// 90 degree turns about z and x; together with the identity they generate the cube group.
inline Tuple<Rational> cube_tuple()
{
    return {3,
            {rmat({{0, -1, 0}, {1, 0, 0}, {0, 0, 1}}), rmat({{1, 0, 0}, {0, 0, -1}, {0, 1, 0}}),
             Matrix<Rational>::identity(3)}};
}

// Rotations about the z axis by the given turns, exact in a cyclotomic field.
inline Tuple<CyclotomicNumber> z_axis_tuple(const std::vector<Rational>& turns)
{
    const auto field = CyclotomicField::get(cyclotomic_order_for(turns));
    Tuple<CyclotomicNumber> t;
    t.dim = 3;
    for (const auto& x : turns) t.rotations.push_back(plane_rotation(3, 0, 1, x, field));
    return t;
}

inline std::vector<Angle> angles_of(const std::vector<Rational>& turns)
{
    std::vector<Angle> out;
    for (const auto& t : turns) out.emplace_back(t);
    return out;
}

} // namespace testing_support

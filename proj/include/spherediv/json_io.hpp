#ifndef SPHEREDIV_JSON_IO_HPP
#define SPHEREDIV_JSON_IO_HPP

#include "spherediv/harmonic_basis.hpp"
#include "spherediv/rotation_tuple.hpp"

#include <json.hpp>

#include <string>

namespace spherediv {

using Json = nlohmann::ordered_json;

// Rationals travel as "p/q" strings; doubles as JSON numbers.

std::string scalar_to_string(const Rational& x);
std::string scalar_to_string(const QuadraticNumber& x);
std::string scalar_to_string(const CyclotomicNumber& x);
std::string scalar_to_string(double x);

Json to_json(const Rational& x);
Json to_json(const QuadraticNumber& x);
Json to_json(const CyclotomicNumber& x);
Json to_json(double x);

template <class T>
Json to_json(const Vector<T>& v)
{
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

template <class T>
Json to_json(const Matrix<T>& m)
{
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

/// Accepts "p/q" strings and integers; `where` names the field in error messages.
Rational rational_from_json(const Json& j, const std::string& where);
double double_from_json(const Json& j, const std::string& where);
RationalPoint point_from_json(const Json& j, const std::string& where);

Json to_json(const ZonalBasis& basis);
ZonalBasis zonal_basis_from_json(const nlohmann::json& j);

/// Tuple files:
///   {"mode": "exact", "dim": d, "rotations": [[["p/q", ...], ...], ...]}
///   {"mode": "floating", ...}          entries numbers or "p/q"
///   {"mode": "quadratic", "radicand": D, ...}   entries ["a", "b"] meaning a + b sqrt(D)
///   {"mode": "turns", "dim": d, "rotations": [[{"plane": [i, j], "turn": "p/q"}, ...], ...]}
///       each rotation a product of coordinate-plane rotations, exact over a cyclotomic field
RotationTuple tuple_from_json(const Json& j);
Json to_json(const RotationTuple& t);

} // namespace spherediv

#endif

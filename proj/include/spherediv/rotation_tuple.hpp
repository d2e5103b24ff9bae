#ifndef SPHEREDIV_ROTATION_TUPLE_HPP
#define SPHEREDIV_ROTATION_TUPLE_HPP

#include "spherediv/matrix.hpp"

#include <cmath>
#include <memory>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

namespace spherediv {

/// r rotations of R^d sharing one scalar representation.
template <class T>
struct Tuple {
    using scalar_type = T;

    std::size_t dim = 0;
    std::vector<Matrix<T>> rotations;

    std::size_t size() const { return rotations.size(); }

    static Tuple identities(std::size_t d, std::size_t r)
    {
        return {d, std::vector<Matrix<T>>(r, Matrix<T>::identity(d))};
    }
};

/// exact: Q; quadratic: Q(sqrt D); cyclotomic: Q(zeta_N); floating: double.
using RotationTuple =
    std::variant<Tuple<Rational>, Tuple<QuadraticNumber>, Tuple<CyclotomicNumber>, Tuple<double>>;

template <class T>
constexpr std::string_view mode_name()
{
    if constexpr (std::is_same_v<T, Rational>) return "exact";
    else if constexpr (std::is_same_v<T, QuadraticNumber>) return "quadratic";
    else if constexpr (std::is_same_v<T, CyclotomicNumber>) return "cyclotomic";
    else return "floating";
}

std::string_view mode_name(const RotationTuple& t);
std::size_t tuple_dimension(const RotationTuple& t);
std::size_t tuple_size(const RotationTuple& t);

struct FloatingTolerances {
    double orthonormality = 1e-10;
    double determinant = 1e-8;
};

struct Violation {
    std::size_t index; ///< position of the offending matrix in the tuple
    std::string kind;  ///< "shape", "orthonormality" or "determinant"
    double residual;
};

struct ValidationReport {
    bool valid = true;
    bool exact = true;
    std::vector<Violation> violations;
};

/// Exact identities for exact modes, residuals against tolerances for floating mode.
template <class T>
ValidationReport validate_tuple(const Tuple<T>& t, const FloatingTolerances& tol = {})
{
    ValidationReport rep;
    rep.exact = is_exact_v<T>;
    for (std::size_t k = 0; k < t.rotations.size(); ++k) {
        const auto& m = t.rotations[k];
        if (m.rows() != t.dim || m.cols() != t.dim) {
            rep.violations.push_back({k, "shape", 0.0});
            continue;
        }
        const auto gram = m * m.transpose();
        const auto id = Matrix<T>::identity(t.dim);
        const T det = determinant(m);
        if constexpr (is_exact_v<T>) {
            if (!(gram == id)) rep.violations.push_back({k, "orthonormality", inf_norm(gram - id)});
            if (!is_zero(det - T(1))) rep.violations.push_back({k, "determinant", std::fabs(to_double(det) - 1.0)});
        } else {
            const double res = inf_norm(gram - id);
            if (!(res <= tol.orthonormality)) rep.violations.push_back({k, "orthonormality", res});
            const double dres = std::fabs(det - 1.0);
            if (!(dres <= tol.determinant)) rep.violations.push_back({k, "determinant", dres});
        }
    }
    rep.valid = rep.violations.empty();
    return rep;
}

ValidationReport validate_tuple(const RotationTuple& t, const FloatingTolerances& tol = {});

template <class T>
Tuple<double> to_floating(const Tuple<T>& t)
{
    Tuple<double> out{t.dim, {}};
    for (const auto& m : t.rotations) out.rotations.push_back(to_double_matrix(m));
    return out;
}

Tuple<double> to_floating(const RotationTuple& t);

/// Smallest order N with 4 | N such that every turn p/q has q | N.
int cyclotomic_order_for(const std::vector<Rational>& turns);

/// Rotation of R^dim by `turn` (fraction of a full turn) in the (i, j) coordinate plane,
/// exact over Q(zeta_N); N must be a multiple of 4 and of the turn's denominator.
Matrix<CyclotomicNumber> plane_rotation(std::size_t dim, std::size_t i, std::size_t j, const Rational& turn,
                                        const std::shared_ptr<const CyclotomicField>& field);

/// Tuple of planar rotations of the circle by the given turns.
Tuple<CyclotomicNumber> circle_tuple(const std::vector<Rational>& turns);

} // namespace spherediv

#endif

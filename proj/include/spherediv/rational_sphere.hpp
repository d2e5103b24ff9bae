#ifndef SPHEREDIV_RATIONAL_SPHERE_HPP
#define SPHEREDIV_RATIONAL_SPHERE_HPP

#include "spherediv/matrix.hpp"
#include "spherediv/rational.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace spherediv {

/// Point of S^(d-1) with rational coordinates; unit norm holds exactly.
using RationalPoint = std::vector<Rational>;

bool is_unit(const RationalPoint& p);

/// Least common denominator of the coordinates; points are enumerated in increasing order of it.
Integer point_height(const RationalPoint& p);

/// Lazily enumerates S^(d-1) ∩ Q^d by increasing height. Within one height class points
/// come in descending lexicographic order of their integer numerators, or shuffled by
/// `shuffle_seed` when it is nonzero (an alternative order for basis-independence checks).
/// Height 1 is exactly the signed basis vectors.
class PointEnumerator {
public:
    explicit PointEnumerator(int dimension, std::uint64_t shuffle_seed = 0);

    const RationalPoint& next();
    std::int64_t current_height() const { return height_; }

private:
    void fill_next_class();

    int dimension_;
    std::uint64_t shuffle_seed_;
    std::int64_t height_ = 0;
    std::vector<RationalPoint> batch_;
    std::size_t cursor_ = 0;
};

/// The first `count` rational unit points in enumeration order. Deterministic.
std::vector<RationalPoint> enumerate_points(int d, std::size_t count, std::uint64_t shuffle_seed = 0);

/// A rational unit point within Euclidean distance eps of target/|target|, found by
/// rounding inverse-stereographic coordinates to denominators 1, 2, 4, ... up to
/// `max_denominator`. Throws BudgetExceeded if the budget runs out first.
RationalPoint approximate_point(int d, const std::vector<double>& target, double eps,
                                std::int64_t max_denominator = std::int64_t{1} << 40);

/// (I - S)(I + S)^(-1) for skew-symmetric S; exactly orthogonal with determinant 1.
template <class T>
Matrix<T> cayley_rotation(const Matrix<T>& skew)
{
    if (!skew.square()) throw InputError("Cayley transform needs a square matrix");
    const std::size_t d = skew.rows();
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            if (!is_zero(skew(i, j) + skew(j, i))) throw InputError("Cayley transform needs a skew-symmetric matrix");
        }
    }
    const auto id = Matrix<T>::identity(d);
    return (id - skew) * inverse(id + skew);
}

/// Skew-symmetric matrix with entries p/q, |p| <= max_numerator, 1 <= q <= max_denominator.
Matrix<Rational> random_skew(int d, std::mt19937_64& rng, int max_numerator = 5, int max_denominator = 7);

Matrix<Rational> random_cayley_rotation(int d, std::mt19937_64& rng);

} // namespace spherediv

#endif

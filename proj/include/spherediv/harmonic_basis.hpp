#ifndef SPHEREDIV_HARMONIC_BASIS_HPP
#define SPHEREDIV_HARMONIC_BASIS_HPP

#include "spherediv/gegenbauer.hpp"
#include "spherediv/matrix.hpp"
#include "spherediv/rational_sphere.hpp"

#include <array>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace spherediv {

/// Bumped whenever the point enumeration order changes; part of the cache key.
inline constexpr int kEnumerationVersion = 1;

/// Rational points v_1..v_N whose zonal harmonics P_n(v_i . x) form a basis of H_n, with
/// the normalized Gram matrix M_ij = P_n(v_i . v_j) / N_n.
struct ZonalBasis {
    int d = 0;
    int n = 0;
    std::uint64_t order_seed = 0;
    std::vector<RationalPoint> points;
    Matrix<Rational> gram;
    Rational gram_det;
    /// Gram determinant after each greedy acceptance (strictly positive, one per point).
    std::vector<Rational> determinant_trace;
};

template <class T>
T point_dot(const RationalPoint& v, const Vector<T>& x)
{
    T s(0);
    for (std::size_t i = 0; i < v.size(); ++i) s += from_rational<T>(v[i]) * x[i];
    return s;
}

Rational rational_dot(const RationalPoint& a, const RationalPoint& b);

/// P_n(v . x), exact.
Rational zonal_evaluate(int d, int n, const RationalPoint& v, const RationalPoint& x);

/// Entries P_n(v_i . v_j) / N_n.
Matrix<Rational> gram_matrix(int d, int n, const std::vector<RationalPoint>& points);

struct BasisOptions {
    std::uint64_t order_seed = 0; ///< 0 = canonical height order
    std::size_t budget_factor = 10; ///< scan at most budget_factor * N_n enumerated points
};

/// Greedy selection: a point is accepted iff the Gram determinant of the accepted points
/// extended by it is nonzero (exact Schur complement of an incremental LDL^T).
/// Throws BudgetExceeded if the scan budget runs out.
ZonalBasis build_zonal_basis(int d, int n, const BasisOptions& options = {});

/// Process-wide cache keyed by (d, n, order seed, enumeration version). Concurrent readers
/// share one construction per key. When SPHEREDIV_CACHE_DIR is set, bases are also read from
/// and written to JSON files in that directory.
std::shared_ptr<const ZonalBasis> cached_zonal_basis(int d, int n, const BasisOptions& options = {});

/// Checks a basis loaded from elsewhere: sizes, exact unit norms, Gram entries, det > 0.
bool basis_consistent(const ZonalBasis& basis);

std::string basis_cache_filename(int d, int n, std::uint64_t order_seed);

/// Quadrature estimate of (1/area) * integral over S^2 of P_n(u.x) P_n(v.x), by a
/// Gauss-Legendre rule in the polar coordinate times a uniform azimuthal rule.
double funk_hecke_quadrature_s2(int n, const std::array<double, 3>& u, const std::array<double, 3>& v,
                                int azimuth_nodes = 128);

} // namespace spherediv

#endif

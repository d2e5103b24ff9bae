#ifndef SPHEREDIV_OBSTRUCTION_HPP
#define SPHEREDIV_OBSTRUCTION_HPP

#include "spherediv/harmonic_basis.hpp"
#include "spherediv/rotation_tuple.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <exception>
#include <random>
#include <string>
#include <thread>
#include <vector>

namespace spherediv {

inline constexpr const char* kTruncationDisclaimer =
    "no non-constant fractional division supported in degrees 1..n_max";

/// Floating determinants at or below this multiple of ||L||_inf^N_n count as singular.
inline constexpr double kFloatingSingularFactor = 1e-8;

enum class DegreeStatus { obstructed, witness_exists };

inline const char* to_string(DegreeStatus s)
{
    return s == DegreeStatus::obstructed ? "obstructed" : "witness_exists";
}

struct DegreeResult {
    int n = 0;
    std::int64_t dimension = 0;
    std::string det;   ///< exact value rendered as a string, or the floating value
    double det_approx = 0.0;
    DegreeStatus status = DegreeStatus::obstructed;
    std::string note;  ///< set for floating verdicts
};

struct ObstructionReport {
    std::string mode;
    std::size_t d = 0;
    std::size_t r = 0;
    int n_max = 0;
    bool exact = true;
    std::vector<DegreeResult> degrees;
    std::string disclaimer = kTruncationDisclaimer;

    bool all_obstructed() const
    {
        return std::all_of(degrees.begin(), degrees.end(),
                           [](const DegreeResult& x) { return x.status == DegreeStatus::obstructed; });
    }
};

struct ObstructionOptions {
    unsigned threads = 1;
    BasisOptions basis;
};

/// Default sweep depth by dimension.
int default_n_max(std::size_t d);

std::string scalar_display(const Rational& x);
std::string scalar_display(const QuadraticNumber& x);
std::string scalar_display(const CyclotomicNumber& x);
std::string scalar_display(double x);

/// sum_i P_n((gamma_i^{-1} v) . x) = sum_i P_n(v . (gamma_i x)).
template <class T>
T g_function(int n, const Tuple<T>& tuple, const RationalPoint& v, const RationalPoint& x)
{
    const auto p = gegenbauer(static_cast<int>(tuple.dim), n);
    Vector<T> xv;
    for (const auto& c : x) xv.push_back(from_rational<T>(c));
    T s(0);
    for (const auto& g : tuple.rotations) s += p.template evaluate_at<T>(point_dot(v, g * xv));
    return s;
}

/// L_ij = (1/N_n) sum_s P_n(v_i . (gamma_s v_j)).
template <class T>
Matrix<T> l_matrix(const Tuple<T>& tuple, const ZonalBasis& basis)
{
    if (static_cast<std::size_t>(basis.d) != tuple.dim) throw InputError("basis and tuple dimensions differ");
    const auto p = gegenbauer(basis.d, basis.n);
    const std::size_t N = basis.points.size();
    const T inv_dim = from_rational<T>(Rational(1, static_cast<long>(N)));
    std::vector<std::vector<Vector<T>>> images(tuple.size());
    for (std::size_t s = 0; s < tuple.size(); ++s) {
        for (const auto& v : basis.points) {
            Vector<T> vt;
            for (const auto& c : v) vt.push_back(from_rational<T>(c));
            images[s].push_back(tuple.rotations[s] * vt);
        }
    }
    Matrix<T> L(N, N);
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) {
            T acc(0);
            for (std::size_t s = 0; s < tuple.size(); ++s) acc += p.template evaluate_at<T>(point_dot(basis.points[i], images[s][j]));
            L(i, j) = acc * inv_dim;
        }
    }
    return L;
}

template <class T>
bool l_singular(const Matrix<T>& L, const T& det)
{
    if constexpr (is_exact_v<T>) {
        return is_zero(det);
    } else {
        const double bound = kFloatingSingularFactor * std::pow(inf_norm(L), static_cast<double>(L.rows()));
        return std::fabs(det) <= bound;
    }
}

template <class T>
DegreeResult certify_degree(const Tuple<T>& tuple, int n, const BasisOptions& basis_options = {})
{
    const auto basis = cached_zonal_basis(static_cast<int>(tuple.dim), n, basis_options);
    const auto L = l_matrix(tuple, *basis);
    const T det = determinant(L);
    DegreeResult res;
    res.n = n;
    res.dimension = static_cast<std::int64_t>(basis->points.size());
    res.det = scalar_display(det);
    res.det_approx = to_double(det);
    res.status = l_singular(L, det) ? DegreeStatus::witness_exists : DegreeStatus::obstructed;
    if constexpr (!is_exact_v<T>) {
        res.note = res.status == DegreeStatus::witness_exists ? "inexact - rerun in exact mode"
                                                              : "floating verdict, not a rigorous certificate";
    }
    return res;
}

/// Degree sweep n = 1..n_max; degrees are distributed over `threads` workers and merged by n.
template <class T>
ObstructionReport certify_degrees(const Tuple<T>& tuple, int n_max, const ObstructionOptions& options = {})
{
    if (n_max < 1) throw InputError("n_max must be at least 1");
    if (tuple.size() == 0) throw InputError("empty rotation tuple");
    if (!validate_tuple(tuple).valid) throw InputError("rotation tuple failed validation");
    ObstructionReport rep;
    rep.mode = std::string(mode_name<T>());
    rep.d = tuple.dim;
    rep.r = tuple.size();
    rep.n_max = n_max;
    rep.exact = is_exact_v<T>;
    rep.degrees.resize(static_cast<std::size_t>(n_max));

    std::atomic<int> next{1};
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(n_max));
    auto worker = [&] {
        for (int n = next++; n <= n_max; n = next++) {
            try {
                rep.degrees[static_cast<std::size_t>(n - 1)] = certify_degree(tuple, n, options.basis);
            } catch (...) {
                errors[static_cast<std::size_t>(n - 1)] = std::current_exception();
            }
        }
    };
    const unsigned workers = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(n_max)));
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned k = 0; k < workers; ++k) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return rep;
}

/// f = 1/r + sum_j c_j P_n(v_j . x), with sum_i gamma_i.f = 1.
template <class T>
struct FractionalWitness {
    int d = 0;
    int n = 0;
    std::size_t r = 0;
    std::vector<RationalPoint> points;
    Vector<T> coefficients;

    /// Degree-n part F_n at a floating point.
    double harmonic_part(const std::vector<double>& x) const
    {
        const auto p = gegenbauer(d, n);
        double s = 0.0;
        for (std::size_t j = 0; j < points.size(); ++j) {
            double t = 0.0;
            for (std::size_t k = 0; k < x.size(); ++k) t += points[j][k].get_d() * x[k];
            s += to_double(coefficients[j]) * p.template evaluate_at<double>(t);
        }
        return s;
    }

    double value(const std::vector<double>& x) const { return 1.0 / static_cast<double>(r) + harmonic_part(x); }
};

/// Kernel vector of L at degree n, scaled so its largest entry (in absolute value) is 1.
/// Throws PreconditionError when the degree is obstructed.
template <class T>
FractionalWitness<T> extract_witness(const Tuple<T>& tuple, int n, const BasisOptions& basis_options = {})
{
    if (n < 1) throw InputError("witness degree must be at least 1");
    const auto basis = cached_zonal_basis(static_cast<int>(tuple.dim), n, basis_options);
    const auto L = l_matrix(tuple, *basis);
    const T det = determinant(L);
    if (!l_singular(L, det)) {
        throw PreconditionError("degree " + std::to_string(n) + " is obstructed (det L = " + scalar_display(det)
                                + "); no witness exists");
    }
    std::vector<Vector<T>> kernel = nullspace(L, 1e-8);
    if (kernel.empty()) throw PreconditionError("numerically singular L has no kernel at tolerance; rerun in exact mode");
    Vector<T> c = kernel.front();
    std::size_t big = 0;
    for (std::size_t j = 1; j < c.size(); ++j) {
        if (std::fabs(to_double(c[j])) > std::fabs(to_double(c[big]))) big = j;
    }
    const T scale = c[big];
    for (auto& x : c) x = x / scale;
    return {basis->d, n, tuple.size(), basis->points, std::move(c)};
}

/// Uniform point of S^(d-1) from a Gaussian draw.
std::vector<double> random_sphere_point(std::size_t d, std::mt19937_64& rng);

/// max over samples of |sum_i f(gamma_i^{-1} x) - 1|.
template <class T, class U>
double witness_residual(const Tuple<U>& tuple, const FractionalWitness<T>& w, std::size_t samples, std::uint64_t seed)
{
    const auto ft = to_floating(tuple);
    std::mt19937_64 rng(seed);
    double worst = 0.0;
    for (std::size_t k = 0; k < samples; ++k) {
        const auto x = random_sphere_point(ft.dim, rng);
        double s = 0.0;
        for (const auto& g : ft.rotations) s += w.value(g.transpose() * x);
        worst = std::max(worst, std::fabs(s - 1.0));
    }
    return worst;
}

} // namespace spherediv

#endif

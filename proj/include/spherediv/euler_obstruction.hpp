#ifndef SPHEREDIV_EULER_OBSTRUCTION_HPP
#define SPHEREDIV_EULER_OBSTRUCTION_HPP

#include "spherediv/group_actions.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <set>
#include <vector>

namespace spherediv {

template <class T>
struct OrbitPolytope {
    std::size_t d = 0;
    std::vector<Vector<T>> vertices;
    std::size_t group_order = 0;
    bool invariance_verified = false;
};

using VertexSet = std::vector<std::size_t>; ///< sorted vertex indices

struct FaceLattice {
    std::size_t d = 0;
    std::vector<std::vector<VertexSet>> faces; ///< faces[i] = i-dimensional faces, sorted
    std::vector<long> counts;
    bool near_degenerate = false; ///< floating support tests came close to the tolerance
};

/// V = G.{+-e_1, ..., +-e_d}.
template <class T>
OrbitPolytope<T> orbit_polytope(const std::vector<Matrix<T>>& group, std::size_t d)
{
    OrbitPolytope<T> p;
    p.d = d;
    p.group_order = group.size();
    PointIndex<T> index;
    for (std::size_t i = 0; i < d; ++i) {
        for (int s : {1, -1}) {
            Vector<T> e(d, T(0));
            e[i] = T(s);
            for (const auto& g : group) {
                auto v = g * e;
                if (!index.find(v)) index.insert(v);
            }
        }
    }
    p.vertices = index.points();
    bool ok = true;
    for (const auto& g : group)
        for (const auto& v : p.vertices) ok = ok && index.find(g * v).has_value();
    p.invariance_verified = ok;
    return p;
}

namespace detail {

template <class T>
int support_sign(const T& x, double tol, bool& close)
{
    if constexpr (is_exact_v<T>) {
        (void)tol;
        (void)close;
        return scalar_sign(x);
    } else {
        const double a = std::fabs(x);
        if (a <= tol) return 0;
        if (a <= 1e3 * tol) close = true;
        return x > 0 ? 1 : -1;
    }
}

template <class T>
std::size_t affine_dimension(const std::vector<Vector<T>>& vs, const VertexSet& set)
{
    if (set.size() <= 1) return 0;
    const std::size_t d = vs[set[0]].size();
    Matrix<T> m(set.size() - 1, d);
    for (std::size_t k = 1; k < set.size(); ++k)
        for (std::size_t j = 0; j < d; ++j) m(k - 1, j) = vs[set[k]][j] - vs[set[0]][j];
    return rank(m, 1e-9);
}

inline VertexSet intersect(const VertexSet& a, const VertexSet& b)
{
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

} // namespace detail

/// Facets from supporting hyperplanes through affinely independent d-subsets; lower faces
/// as intersections of facets, classified by affine dimension.
template <class T>
FaceLattice face_lattice(const OrbitPolytope<T>& poly, double tol = 1e-9)
{
    static_assert(is_ordered_v<T>, "face enumeration needs an ordered scalar field");
    const std::size_t d = poly.d;
    const auto& vs = poly.vertices;
    const std::size_t nv = vs.size();
    FaceLattice lat;
    lat.d = d;
    VertexSet all(nv);
    for (std::size_t i = 0; i < nv; ++i) all[i] = i;
    if (d < 2) throw InputError("face enumeration needs d >= 2");
    if (nv < d + 1 || detail::affine_dimension(vs, all) != d) throw InputError("vertex set is not full-dimensional");

    std::set<VertexSet> facets;
    std::vector<std::size_t> pick(d);
    for (std::size_t i = 0; i < d; ++i) pick[i] = i;
    while (true) {
        bool skip = false;
        // a subset inside a known facet only rediscovers it
        for (const auto& f : facets) {
            if (std::includes(f.begin(), f.end(), pick.begin(), pick.end())) {
                skip = true;
                break;
            }
        }
        if (!skip) {
            Matrix<T> m(d - 1, d);
            for (std::size_t k = 1; k < d; ++k)
                for (std::size_t j = 0; j < d; ++j) m(k - 1, j) = vs[pick[k]][j] - vs[pick[0]][j];
            const auto ker = nullspace(m, 1e-9);
            if (ker.size() == 1) {
                const auto& normal = ker.front();
                const T offset = dot(normal, vs[pick[0]]);
                int pos = 0;
                int neg = 0;
                VertexSet on;
                for (std::size_t v = 0; v < nv; ++v) {
                    const int s = detail::support_sign(T(dot(normal, vs[v]) - offset), tol, lat.near_degenerate);
                    if (s > 0) ++pos;
                    if (s < 0) ++neg;
                    if (s == 0) on.push_back(v);
                }
                if (pos == 0 || neg == 0) facets.insert(on);
            }
        }
        // next d-subset in lexicographic order
        std::size_t i = d;
        while (i > 0 && pick[i - 1] == nv - d + i - 1) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < d; ++j) pick[j] = pick[j - 1] + 1;
    }

    std::set<VertexSet> faces(facets.begin(), facets.end());
    std::vector<VertexSet> frontier(facets.begin(), facets.end());
    while (!frontier.empty()) {
        std::vector<VertexSet> next;
        for (const auto& x : frontier) {
            for (const auto& f : facets) {
                auto y = detail::intersect(x, f);
                if (y.empty() || y == x) continue;
                if (faces.insert(y).second) next.push_back(std::move(y));
            }
        }
        frontier = std::move(next);
    }
    lat.faces.assign(d, {});
    for (const auto& f : faces) {
        const std::size_t dim = detail::affine_dimension(vs, f);
        if (dim < d) lat.faces[dim].push_back(f);
    }
    for (auto& level : lat.faces) {
        std::sort(level.begin(), level.end());
        lat.counts.push_back(static_cast<long>(level.size()));
    }
    return lat;
}

long euler_characteristic(const std::vector<long>& counts);

/// Alternating face count equals 2; throws PreconditionError for even d.
bool euler_check(const std::vector<long>& counts, std::size_t d);

struct DivisibilityObstruction {
    bool obstructed = false;
    std::optional<std::size_t> witness_dim; ///< smallest i with r not dividing |C_i|
};

DivisibilityObstruction divisibility_obstruction(const std::vector<long>& counts, long r);

/// Every group element maps each face to a face of the same dimension.
template <class T>
bool faces_invariant(const FaceLattice& lat, const OrbitPolytope<T>& poly, const std::vector<Matrix<T>>& group)
{
    PointIndex<T> index;
    for (const auto& v : poly.vertices) index.insert(v);
    for (std::size_t dim = 0; dim < lat.faces.size(); ++dim) {
        std::set<VertexSet> level(lat.faces[dim].begin(), lat.faces[dim].end());
        for (const auto& g : group) {
            for (const auto& f : lat.faces[dim]) {
                VertexSet img;
                for (auto v : f) {
                    auto at = index.find(g * poly.vertices[v]);
                    if (!at) return false;
                    img.push_back(*at);
                }
                std::sort(img.begin(), img.end());
                if (!level.count(img)) return false;
            }
        }
    }
    return true;
}

/// No face centroid is zero and no two faces have centroids on the same ray.
template <class T>
bool centroids_distinct(const FaceLattice& lat, const OrbitPolytope<T>& poly)
{
    std::vector<Vector<T>> cs;
    for (const auto& level : lat.faces) {
        for (const auto& f : level) {
            Vector<T> c(poly.d, T(0));
            for (auto v : f)
                for (std::size_t j = 0; j < poly.d; ++j) c[j] += poly.vertices[v][j];
            cs.push_back(std::move(c));
        }
    }
    auto zero = [](const T& x) {
        if constexpr (is_exact_v<T>) return is_zero(x);
        else return std::fabs(x) <= 1e-9;
    };
    for (const auto& c : cs) {
        if (std::all_of(c.begin(), c.end(), zero)) return false;
    }
    for (std::size_t a = 0; a < cs.size(); ++a) {
        for (std::size_t b = a + 1; b < cs.size(); ++b) {
            // same ray iff c_b = lambda c_a with lambda > 0
            std::size_t k = 0;
            while (zero(cs[a][k])) ++k;
            const T lambda = cs[b][k] / cs[a][k];
            bool unused = false;
            if (detail::support_sign(lambda, 1e-12, unused) <= 0) continue;
            bool same = true;
            for (std::size_t j = 0; j < poly.d && same; ++j) same = zero(cs[b][j] - lambda * cs[a][j]);
            if (same) return false;
        }
    }
    return true;
}

} // namespace spherediv

#endif

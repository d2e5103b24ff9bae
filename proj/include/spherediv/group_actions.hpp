#ifndef SPHEREDIV_GROUP_ACTIONS_HPP
#define SPHEREDIV_GROUP_ACTIONS_HPP

#include "spherediv/rotation_tuple.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace spherediv {

struct Letter {
    std::size_t generator = 0; ///< 0-based
    int exponent = 1;          ///< +1 or -1
    friend bool operator==(const Letter&, const Letter&) = default;
};

struct GroupWord {
    std::vector<Letter> letters;

    bool reduced() const;
    /// Free cancellation of adjacent x x^-1 pairs.
    GroupWord reduce() const;
    std::size_t length() const { return letters.size(); }
    friend bool operator==(const GroupWord&, const GroupWord&) = default;
};

/// Parses "g1 g2 g1^-1" (1-based generator names; "e" or "" is the empty word).
GroupWord parse_word(std::string_view text);
std::string to_string(const GroupWord& w);
/// Comma-separated list of words.
std::vector<GroupWord> parse_words(std::string_view text);

/// All reduced words of length 1..max_length over r generators, shortest first.
std::vector<GroupWord> reduced_words(std::size_t r, std::size_t max_length);

/// Product of generators in order; inverse letters use the transpose.
template <class T>
Matrix<T> evaluate_word(const GroupWord& w, const Tuple<T>& tuple)
{
    auto m = Matrix<T>::identity(tuple.dim);
    for (const auto& l : w.letters) {
        if (l.generator >= tuple.size()) throw InputError("word uses generator g" + std::to_string(l.generator + 1));
        m = m * (l.exponent > 0 ? tuple.rotations[l.generator] : tuple.rotations[l.generator].transpose());
    }
    return m;
}

inline constexpr double kFloatingDedupTolerance = 1e-8;

/// Exact-key or grid-hashed lookup of vectors (or flattened matrices).
template <class T>
class PointIndex {
public:
    std::optional<std::size_t> find(const Vector<T>& v) const
    {
        if constexpr (is_exact_v<T>) {
            auto it = exact_.find(key(v));
            if (it == exact_.end()) return std::nullopt;
            return it->second;
        } else {
            auto it = grid_.find(cell_key(cell(v, 0.0)));
            if (it == grid_.end()) return std::nullopt;
            for (std::size_t idx : it->second) {
                if (distance(points_[idx], v) <= kFloatingDedupTolerance) return idx;
            }
            return std::nullopt;
        }
    }

    std::size_t insert(const Vector<T>& v)
    {
        const std::size_t idx = points_.size();
        points_.push_back(v);
        if constexpr (is_exact_v<T>) {
            exact_.emplace(key(v), idx);
        } else {
            // register under every cell the tolerance box touches, so lookups probe one cell
            const auto lo = cell(v, -kFloatingDedupTolerance);
            const auto hi = cell(v, kFloatingDedupTolerance);
            std::vector<long> c = lo;
            while (true) {
                grid_[cell_key(c)].push_back(idx);
                std::size_t i = 0;
                while (i < c.size() && c[i] == hi[i]) {
                    c[i] = lo[i];
                    ++i;
                }
                if (i == c.size()) break;
                ++c[i];
            }
        }
        return idx;
    }

    const std::vector<Vector<T>>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }

private:
    static std::string key(const Vector<T>& v)
    {
        std::string s;
        for (const auto& x : v) {
            s += scalar_key(x);
            s += ';';
        }
        return s;
    }
    static std::vector<long> cell(const Vector<T>& v, double offset)
    {
        std::vector<long> c;
        for (const auto& x : v) c.push_back(static_cast<long>(std::floor((to_double(x) + offset) / (4 * kFloatingDedupTolerance))));
        return c;
    }
    static std::string cell_key(const std::vector<long>& c)
    {
        std::string s;
        for (long x : c) s += std::to_string(x) + ';';
        return s;
    }
    static double distance(const Vector<T>& a, const Vector<T>& b)
    {
        double m = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::fabs(to_double(a[i]) - to_double(b[i])));
        return m;
    }

    std::vector<Vector<T>> points_;
    std::unordered_map<std::string, std::size_t> exact_;
    std::unordered_map<std::string, std::vector<std::size_t>> grid_;
};

template <class T>
struct FixedPointResult {
    bool common = false;
    T det;                              ///< det(sum A_i^T A_i)
    std::optional<Vector<T>> witness;
    bool witness_verified = false;
};

/// The matrices share a nonzero kernel vector iff det(sum A_i^T A_i) vanishes.
template <class T>
FixedPointResult<T> common_fixed_point_test(const std::vector<Matrix<T>>& matrices)
{
    if (matrices.empty()) throw InputError("common_fixed_point_test needs at least one matrix");
    const std::size_t d = matrices.front().cols();
    Matrix<T> m(d, d);
    for (const auto& a : matrices) {
        if (a.cols() != d) throw InputError("matrices must share a column count");
        m += a.transpose() * a;
    }
    FixedPointResult<T> res;
    if constexpr (is_exact_v<T>) {
        res.det = determinant(m);
        res.common = is_zero(res.det);
    } else {
        // Scale-free test: near-identity words give tiny but well-conditioned sums.
        const double scale = inf_norm(m);
        if (scale == 0.0) {
            res.det = 0.0;
            res.common = true;
        } else {
            m = m * (1.0 / scale);
            res.det = determinant(m);
            res.common = std::fabs(res.det) <= 1e-10;
        }
    }
    if (!res.common) return res;
    auto kernel = nullspace(m, 1e-8);
    if (kernel.empty()) return res;
    res.witness = kernel.front();
    bool ok = true;
    for (const auto& a : matrices) {
        const auto ax = a * *res.witness;
        for (const auto& x : ax) {
            if constexpr (is_exact_v<T>) {
                ok = ok && is_zero(x);
            } else {
                ok = ok && std::fabs(x) <= 1e-7 * std::max(1.0, inf_norm(a));
            }
        }
    }
    res.witness_verified = ok;
    return res;
}

template <class T>
struct OrbitReport {
    Vector<T> start;
    std::vector<Vector<T>> points; ///< BFS discovery order
    bool finite = false;
    std::size_t cap = 0;
    bool closure_verified = false;
};

template <class T>
bool is_on_sphere(const Vector<T>& z)
{
    const T n2 = dot(z, z);
    if constexpr (is_exact_v<T>) {
        return is_zero(n2 - T(1));
    } else {
        return std::fabs(n2 - 1.0) <= 1e-9;
    }
}

/// Breadth-first closure of z under the generators and their inverses, up to `cap` points.
template <class T>
OrbitReport<T> orbit(const Vector<T>& z, const Tuple<T>& tuple, std::size_t cap)
{
    if (z.size() != tuple.dim) throw InputError("orbit start point has the wrong dimension");
    if (!is_on_sphere(z)) throw InputError("orbit start point is not on the unit sphere");
    std::vector<Matrix<T>> moves;
    for (const auto& g : tuple.rotations) {
        moves.push_back(g);
        moves.push_back(g.transpose());
    }
    OrbitReport<T> rep;
    rep.start = z;
    rep.cap = cap;
    PointIndex<T> index;
    index.insert(z);
    bool overflow = false;
    for (std::size_t head = 0; head < index.size() && !overflow; ++head) {
        const Vector<T> cur = index.points()[head];
        for (const auto& g : moves) {
            const auto y = g * cur;
            if (index.find(y)) continue;
            if (index.size() >= cap) {
                overflow = true;
                break;
            }
            index.insert(y);
        }
    }
    rep.points = index.points();
    rep.finite = !overflow;
    if (rep.finite) {
        bool closed = true;
        for (const auto& p : rep.points)
            for (const auto& g : moves) closed = closed && index.find(g * p).has_value();
        rep.closure_verified = closed;
    }
    return rep;
}

template <class T>
struct InvariantSplit {
    Matrix<T> span_basis;       ///< d x m, columns span L_z
    Matrix<T> complement_basis; ///< d x (d - m), columns span the orthogonal complement
    std::vector<Matrix<T>> alpha; ///< generator blocks on L_z
    std::vector<Matrix<T>> beta;  ///< generator blocks on the complement
    bool verified = false;
};

namespace detail {

template <class T>
Matrix<T> columns(const std::vector<Vector<T>>& cols, std::size_t d)
{
    Matrix<T> m(d, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < d; ++i) m(i, j) = cols[j][i];
    return m;
}

// Coordinates X with B X = G B, when the column space of B is G-invariant.
template <class T>
std::optional<Matrix<T>> restrict_to(const Matrix<T>& g, const Matrix<T>& b)
{
    if (b.cols() == 0) return Matrix<T>(0, 0);
    const auto bt = b.transpose();
    const auto x = inverse(bt * b) * (bt * (g * b));
    const auto diff = b * x - g * b;
    if constexpr (is_exact_v<T>) {
        if (!(diff == Matrix<T>(diff.rows(), diff.cols()))) return std::nullopt;
    } else {
        if (inf_norm(diff) > 1e-8) return std::nullopt;
    }
    return x;
}

} // namespace detail

/// L_z = span of the orbit and its orthogonal complement, with each generator's blocks.
/// Throws PreconditionError for infinite orbits and std::runtime_error if invariance fails.
template <class T>
InvariantSplit<T> invariant_split(const OrbitReport<T>& report, const Tuple<T>& tuple)
{
    if (!report.finite) throw PreconditionError("invariant_split needs a finite orbit");
    const std::size_t d = tuple.dim;
    Matrix<T> rows(report.points.size(), d);
    for (std::size_t i = 0; i < report.points.size(); ++i)
        for (std::size_t j = 0; j < d; ++j) rows(i, j) = report.points[i][j];
    const auto ech = rref(rows, 1e-9);
    std::vector<Vector<T>> span;
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
        Vector<T> v(d);
        for (std::size_t j = 0; j < d; ++j) v[j] = ech.reduced(r, j);
        span.push_back(std::move(v));
    }
    const auto comp = ech.pivots.empty() ? std::vector<Vector<T>>{} : nullspace(ech.reduced, 1e-9);
    InvariantSplit<T> out;
    out.span_basis = detail::columns(span, d);
    out.complement_basis = detail::columns(comp, d);
    for (const auto& g : tuple.rotations) {
        auto a = detail::restrict_to(g, out.span_basis);
        auto b = detail::restrict_to(g, out.complement_basis);
        if (!a || !b) throw std::runtime_error("orbit span is not invariant under the generators");
        out.alpha.push_back(std::move(*a));
        out.beta.push_back(std::move(*b));
    }
    out.verified = true;
    return out;
}

struct OrbitBoundReport {
    std::size_t base_orbit_size = 0;
    double bound = 0.0; ///< n!
    std::size_t samples = 0;
    std::size_t max_observed = 0;
    bool all_within = true;
};

/// Samples x in L_z on the sphere and checks |orbit(x)| <= n! for the base orbit size n.
template <class T>
OrbitBoundReport orbit_size_bound_check(const OrbitReport<T>& report, const InvariantSplit<T>& split,
                                        const Tuple<T>& tuple, std::size_t samples, std::uint64_t seed)
{
    OrbitBoundReport out;
    out.base_orbit_size = report.points.size();
    out.samples = samples;
    double fact = 1.0;
    for (std::size_t k = 2; k <= out.base_orbit_size; ++k) fact *= static_cast<double>(k);
    out.bound = fact;
    const std::size_t cap = fact > 1e6 ? std::size_t{1000001} : static_cast<std::size_t>(fact) + 1;
    const auto ft = to_floating(tuple);
    const auto basis = to_double_matrix(split.span_basis);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g(0.0, 1.0);
    for (std::size_t s = 0; s < samples; ++s) {
        Vector<double> c(basis.cols());
        for (auto& x : c) x = g(rng);
        auto x = basis * c;
        double norm = std::sqrt(dot(x, x));
        if (norm < 1e-12) continue;
        for (auto& v : x) v /= norm;
        const auto o = orbit(x, ft, cap);
        out.max_observed = std::max(out.max_observed, o.points.size());
        if (!o.finite || static_cast<double>(o.points.size()) > fact) out.all_within = false;
    }
    return out;
}

/// Lexicographically least (in BFS order) A inside the orbit whose translates g_i.A partition it.
template <class T>
std::optional<std::vector<std::size_t>> divide_finite_orbit(const OrbitReport<T>& report, const Tuple<T>& tuple)
{
    if (!report.finite) throw PreconditionError("divide_finite_orbit needs a finite orbit");
    PointIndex<T> index;
    for (const auto& p : report.points) index.insert(p);
    const std::size_t n = report.points.size();
    const std::size_t r = tuple.size();
    // image[i][y] = index of g_i y
    std::vector<std::vector<std::size_t>> image(r, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t y = 0; y < n; ++y) {
            auto at = index.find(tuple.rotations[i] * report.points[y]);
            if (!at) throw std::runtime_error("orbit is not closed under the generators");
            image[i][y] = *at;
        }
    }
    if (n % r != 0) return std::nullopt;
    std::vector<char> covered(n, 0);
    std::vector<char> chosen(n, 0);
    // covering x by generator i needs y = g_i^{-1} x
    std::vector<std::vector<std::size_t>> preimage(r, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t y = 0; y < n; ++y) preimage[i][image[i][y]] = y;

    std::function<bool(std::size_t)> extend = [&](std::size_t from) -> bool {
        std::size_t u = from;
        while (u < n && covered[u]) ++u;
        if (u == n) return true;
        std::vector<std::size_t> cand;
        for (std::size_t i = 0; i < r; ++i) cand.push_back(preimage[i][u]);
        std::sort(cand.begin(), cand.end());
        cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
        for (std::size_t y : cand) {
            if (chosen[y]) continue;
            std::vector<std::size_t> targets;
            for (std::size_t i = 0; i < r; ++i) targets.push_back(image[i][y]);
            std::sort(targets.begin(), targets.end());
            bool ok = std::adjacent_find(targets.begin(), targets.end()) == targets.end();
            for (auto t : targets) ok = ok && !covered[t];
            if (!ok) continue;
            for (auto t : targets) covered[t] = 1;
            chosen[y] = 1;
            if (extend(u + 1)) return true;
            for (auto t : targets) covered[t] = 0;
            chosen[y] = 0;
        }
        return false;
    };
    if (!extend(0)) return std::nullopt;
    std::vector<std::size_t> a;
    for (std::size_t y = 0; y < n; ++y)
        if (chosen[y]) a.push_back(y);
    return a;
}

/// True iff the translates g_i.A (indices into the orbit) partition the orbit.
template <class T>
bool is_orbit_partition(const OrbitReport<T>& report, const Tuple<T>& tuple, const std::vector<std::size_t>& a)
{
    PointIndex<T> index;
    for (const auto& p : report.points) index.insert(p);
    std::vector<int> count(report.points.size(), 0);
    for (const auto& g : tuple.rotations) {
        for (auto y : a) {
            auto at = index.find(g * report.points.at(y));
            if (!at) return false;
            ++count[*at];
        }
    }
    return std::all_of(count.begin(), count.end(), [](int c) { return c == 1; });
}

template <class T>
struct GroupEnumeration {
    std::vector<Matrix<T>> elements; ///< identity first, then BFS order
    bool finite = false;
    std::size_t cap = 0;
};

/// Closure of the generators under multiplication, up to `cap` elements.
template <class T>
GroupEnumeration<T> enumerate_group(const Tuple<T>& tuple, std::size_t cap)
{
    GroupEnumeration<T> out;
    out.cap = cap;
    PointIndex<T> index;
    std::vector<Matrix<T>> elems;
    auto flat = [](const Matrix<T>& m) { return m.data(); };
    const auto id = Matrix<T>::identity(tuple.dim);
    index.insert(flat(id));
    elems.push_back(id);
    bool overflow = false;
    for (std::size_t head = 0; head < elems.size() && !overflow; ++head) {
        for (const auto& g : tuple.rotations) {
            auto m = elems[head] * g;
            if (index.find(flat(m))) continue;
            if (elems.size() >= cap) {
                overflow = true;
                break;
            }
            index.insert(flat(m));
            elems.push_back(std::move(m));
        }
    }
    out.elements = std::move(elems);
    out.finite = !overflow;
    return out;
}

} // namespace spherediv

#endif

#include "spherediv/harmonic_basis.hpp"

#include "spherediv/json_io.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <numbers>
#include <tuple>

namespace spherediv {

Rational rational_dot(const RationalPoint& a, const RationalPoint& b)
{
    if (a.size() != b.size()) throw InputError("point dimension mismatch");
    Rational s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rational zonal_evaluate(int d, int n, const RationalPoint& v, const RationalPoint& x)
{
    if (v.size() != static_cast<std::size_t>(d) || x.size() != static_cast<std::size_t>(d)) {
        throw InputError("zonal_evaluate: points must have dimension d");
    }
    return evaluate(gegenbauer(d, n), rational_dot(v, x));
}

Matrix<Rational> gram_matrix(int d, int n, const std::vector<RationalPoint>& points)
{
    const auto p = gegenbauer(d, n);
    const Rational inv_dim(1, harmonic_dimension(d, n));
    Matrix<Rational> m(points.size(), points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].size() != static_cast<std::size_t>(d)) throw InputError("gram_matrix: point dimension mismatch");
        for (std::size_t j = i; j < points.size(); ++j) {
            const Rational e = evaluate(p, rational_dot(points[i], points[j])) * inv_dim;
            m(i, j) = e;
            m(j, i) = e;
        }
    }
    return m;
}

ZonalBasis build_zonal_basis(int d, int n, const BasisOptions& options)
{
    if (d < 2 || n < 0) throw InputError("build_zonal_basis needs d >= 2 and n >= 0");
    const auto target = static_cast<std::size_t>(harmonic_dimension(d, n));
    const auto p = gegenbauer(d, n);
    const Rational inv_dim(1, static_cast<long>(target));
    const std::size_t budget = options.budget_factor * target;

    ZonalBasis basis;
    basis.d = d;
    basis.n = n;
    basis.order_seed = options.order_seed;

    // M = L D L^T over the accepted points; rows_[k] holds row k of unit-lower L
    std::vector<std::vector<Rational>> lower;
    std::vector<Rational> diag;
    Rational det(1);

    PointEnumerator points(d, options.order_seed);
    for (std::size_t scanned = 0; basis.points.size() < target; ++scanned) {
        if (scanned >= budget) {
            throw BudgetExceeded("zonal basis for d=" + std::to_string(d) + ", n=" + std::to_string(n) + " found only "
                                 + std::to_string(basis.points.size()) + " of " + std::to_string(target)
                                 + " points among the first " + std::to_string(budget) + " candidates");
        }
        const RationalPoint& x = points.next();
        const std::size_t k = basis.points.size();
        std::vector<Rational> b(k);
        for (std::size_t i = 0; i < k; ++i) b[i] = evaluate(p, rational_dot(basis.points[i], x)) * inv_dim;
        // forward substitution L y = b
        std::vector<Rational> y(k);
        for (std::size_t i = 0; i < k; ++i) {
            Rational s = b[i];
            for (std::size_t j = 0; j < i; ++j) s -= lower[i][j] * y[j];
            y[i] = s;
        }
        Rational schur = inv_dim; // P_n(1) / N_n
        std::vector<Rational> row(k);
        for (std::size_t i = 0; i < k; ++i) {
            row[i] = y[i] / diag[i];
            schur -= y[i] * row[i];
        }
        if (sgn(schur) == 0) continue;
        det *= schur;
        lower.push_back(std::move(row));
        diag.push_back(schur);
        basis.points.push_back(x);
        basis.determinant_trace.push_back(det);
    }
    basis.gram = gram_matrix(d, n, basis.points);
    basis.gram_det = det;
    return basis;
}

bool basis_consistent(const ZonalBasis& basis)
{
    if (basis.d < 2 || basis.n < 0) return false;
    const auto target = static_cast<std::size_t>(harmonic_dimension(basis.d, basis.n));
    if (basis.points.size() != target) return false;
    for (const auto& v : basis.points) {
        if (v.size() != static_cast<std::size_t>(basis.d) || !is_unit(v)) return false;
    }
    if (!(gram_matrix(basis.d, basis.n, basis.points) == basis.gram)) return false;
    const Rational det = determinant(basis.gram);
    return sgn(det) > 0 && det == basis.gram_det;
}

std::string basis_cache_filename(int d, int n, std::uint64_t order_seed)
{
    return "basis-v" + std::to_string(kEnumerationVersion) + "-d" + std::to_string(d) + "-n" + std::to_string(n) + "-s"
           + std::to_string(order_seed) + ".json";
}

namespace {

struct CacheEntry {
    std::once_flag once;
    std::shared_ptr<const ZonalBasis> value;
};

std::optional<ZonalBasis> load_from_disk(const std::filesystem::path& file)
{
    std::ifstream in(file);
    if (!in) return std::nullopt;
    try {
        auto basis = zonal_basis_from_json(nlohmann::json::parse(in));
        if (!basis_consistent(basis)) return std::nullopt;
        return basis;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

void store_to_disk(const std::filesystem::path& file, const ZonalBasis& basis)
{
    std::error_code ec;
    std::filesystem::create_directories(file.parent_path(), ec);
    const auto tmp = file.string() + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) return;
        out << to_json(basis).dump(1) << '\n';
    }
    std::filesystem::rename(tmp, file, ec);
}

} // namespace

std::shared_ptr<const ZonalBasis> cached_zonal_basis(int d, int n, const BasisOptions& options)
{
    using Key = std::tuple<int, int, std::uint64_t, std::size_t, int>;
    static std::mutex mutex;
    static std::map<Key, std::shared_ptr<CacheEntry>> entries;

    std::shared_ptr<CacheEntry> entry;
    {
        std::lock_guard lock(mutex);
        auto& slot = entries[Key{d, n, options.order_seed, options.budget_factor, kEnumerationVersion}];
        if (!slot) slot = std::make_shared<CacheEntry>();
        entry = slot;
    }
    std::call_once(entry->once, [&] {
        const char* dir = std::getenv("SPHEREDIV_CACHE_DIR");
        std::optional<std::filesystem::path> file;
        if (dir != nullptr && *dir != '\0') {
            file = std::filesystem::path(dir) / basis_cache_filename(d, n, options.order_seed);
            if (auto loaded = load_from_disk(*file)) {
                entry->value = std::make_shared<const ZonalBasis>(std::move(*loaded));
                return;
            }
        }
        auto built = build_zonal_basis(d, n, options);
        if (file) store_to_disk(*file, built);
        entry->value = std::make_shared<const ZonalBasis>(std::move(built));
    });
    return entry->value;
}

double funk_hecke_quadrature_s2(int n, const std::array<double, 3>& u, const std::array<double, 3>& v, int azimuth_nodes)
{
    using Rule = boost::math::quadrature::gauss<double, 64>;
    const auto p = gegenbauer(3, n);
    auto pn = [&](double t) { return p.evaluate_at<double>(t); };
    const double two_pi = 2.0 * std::numbers::pi;
    auto integrand = [&](double z) {
        const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
        double s = 0.0;
        for (int k = 0; k < azimuth_nodes; ++k) {
            const double phi = two_pi * k / azimuth_nodes;
            const std::array<double, 3> x{rho * std::cos(phi), rho * std::sin(phi), z};
            const double ux = u[0] * x[0] + u[1] * x[1] + u[2] * x[2];
            const double vx = v[0] * x[0] + v[1] * x[1] + v[2] * x[2];
            s += pn(ux) * pn(vx);
        }
        return s * two_pi / azimuth_nodes;
    };
    return Rule::integrate(integrand, -1.0, 1.0) / (4.0 * std::numbers::pi);
}

} // namespace spherediv

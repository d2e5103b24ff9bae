#include "spherediv/json_io.hpp"

#include <cmath>

namespace spherediv {

std::string scalar_to_string(const Rational& x) { return x.get_str(); }

std::string scalar_to_string(const QuadraticNumber& x)
{
    if (sgn(x.irrational_part()) == 0) return x.rational_part().get_str();
    return x.rational_part().get_str() + " + " + x.irrational_part().get_str() + "*sqrt("
           + std::to_string(x.radicand()) + ")";
}

std::string scalar_to_string(const CyclotomicNumber& x)
{
    if (!x.field()) return x.coefficients()[0].get_str();
    std::string s;
    const auto& c = x.coefficients();
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (sgn(c[k]) == 0) continue;
        if (!s.empty()) s += " + ";
        s += c[k].get_str();
        if (k > 0) s += "*z^" + std::to_string(k);
    }
    if (s.empty()) return "0";
    return s + " (z = zeta_" + std::to_string(x.field()->order()) + ")";
}

std::string scalar_to_string(double x) { return scalar_key(x); }

Json to_json(const Rational& x) { return x.get_str(); }
Json to_json(const QuadraticNumber& x) { return scalar_to_string(x); }
Json to_json(const CyclotomicNumber& x) { return scalar_to_string(x); }
Json to_json(double x) { return x; }

Rational rational_from_json(const Json& j, const std::string& where)
{
    try {
        if (j.is_string()) return parse_rational(j.get<std::string>());
        if (j.is_number_integer()) return Rational(j.get<long>());
    } catch (const InputError& e) {
        throw InputError(where + ": " + e.what());
    }
    throw InputError(where + ": expected a \"p/q\" string or an integer");
}

double double_from_json(const Json& j, const std::string& where)
{
    if (j.is_number()) return j.get<double>();
    return rational_from_json(j, where).get_d();
}

RationalPoint point_from_json(const Json& j, const std::string& where)
{
    if (!j.is_array()) throw InputError(where + ": expected an array of coordinates");
    RationalPoint p;
    for (std::size_t i = 0; i < j.size(); ++i) p.push_back(rational_from_json(j[i], where + "/" + std::to_string(i)));
    return p;
}

Json to_json(const ZonalBasis& basis)
{
    Json j;
    j["d"] = basis.d;
    j["n"] = basis.n;
    j["order_seed"] = basis.order_seed;
    Json pts = Json::array();
    for (const auto& p : basis.points) pts.push_back(to_json(p));
    j["points"] = std::move(pts);
    j["gram"] = to_json(basis.gram);
    j["gram_det"] = to_json(basis.gram_det);
    return j;
}

ZonalBasis zonal_basis_from_json(const nlohmann::json& raw)
{
    const Json j = Json::parse(raw.dump());
    ZonalBasis b;
    b.d = j.at("d").get<int>();
    b.n = j.at("n").get<int>();
    b.order_seed = j.at("order_seed").get<std::uint64_t>();
    const auto& pts = j.at("points");
    for (std::size_t i = 0; i < pts.size(); ++i) b.points.push_back(point_from_json(pts[i], "/points/" + std::to_string(i)));
    const auto& g = j.at("gram");
    b.gram = Matrix<Rational>(g.size(), g.size());
    for (std::size_t r = 0; r < g.size(); ++r) {
        if (g[r].size() != g.size()) throw InputError("/gram: not square");
        for (std::size_t c = 0; c < g.size(); ++c) b.gram(r, c) = rational_from_json(g[r][c], "/gram");
    }
    b.gram_det = rational_from_json(j.at("gram_det"), "/gram_det");
    return b;
}

namespace {

const Json& field(const Json& j, const char* name)
{
    if (!j.is_object() || !j.contains(name)) throw InputError(std::string("/") + name + ": missing field");
    return j.at(name);
}

template <class T, class Entry>
Tuple<T> read_matrices(const Json& j, std::size_t dim, Entry&& entry)
{
    const auto& rots = field(j, "rotations");
    if (!rots.is_array() || rots.empty()) throw InputError("/rotations: expected a non-empty array");
    Tuple<T> t{dim, {}};
    for (std::size_t k = 0; k < rots.size(); ++k) {
        const std::string at = "/rotations/" + std::to_string(k);
        const auto& m = rots[k];
        if (!m.is_array() || m.size() != dim) throw InputError(at + ": expected " + std::to_string(dim) + " rows");
        Matrix<T> mat(dim, dim);
        for (std::size_t r = 0; r < dim; ++r) {
            if (!m[r].is_array() || m[r].size() != dim) {
                throw InputError(at + "/" + std::to_string(r) + ": expected " + std::to_string(dim) + " entries");
            }
            for (std::size_t c = 0; c < dim; ++c) {
                mat(r, c) = entry(m[r][c], at + "/" + std::to_string(r) + "/" + std::to_string(c));
            }
        }
        t.rotations.push_back(std::move(mat));
    }
    return t;
}

} // namespace

RotationTuple tuple_from_json(const Json& j)
{
    const auto& mode_j = field(j, "mode");
    const auto& dim_j = field(j, "dim");
    if (!mode_j.is_string()) throw InputError("/mode: expected a string");
    if (!dim_j.is_number_integer() || dim_j.get<long>() < 1) throw InputError("/dim: expected a positive integer");
    const std::string mode = mode_j.get<std::string>();
    const auto dim = dim_j.get<std::size_t>();

    if (mode == "exact") {
        return read_matrices<Rational>(j, dim, [](const Json& e, const std::string& at) { return rational_from_json(e, at); });
    }
    if (mode == "floating") {
        return read_matrices<double>(j, dim, [](const Json& e, const std::string& at) { return double_from_json(e, at); });
    }
    if (mode == "quadratic") {
        const auto& rad = field(j, "radicand");
        if (!rad.is_number_integer() || !is_squarefree_radicand(rad.get<std::int64_t>())) {
            throw InputError("/radicand: expected a squarefree integer > 1");
        }
        const auto D = rad.get<std::int64_t>();
        return read_matrices<QuadraticNumber>(j, dim, [D](const Json& e, const std::string& at) {
            if (e.is_array() && e.size() == 2) {
                return QuadraticNumber(rational_from_json(e[0], at + "/0"), rational_from_json(e[1], at + "/1"), D);
            }
            return QuadraticNumber(rational_from_json(e, at));
        });
    }
    if (mode == "turns") {
        const auto& rots = field(j, "rotations");
        if (!rots.is_array() || rots.empty()) throw InputError("/rotations: expected a non-empty array");
        std::vector<Rational> all_turns;
        struct Factor {
            std::size_t i, jdx;
            Rational turn;
        };
        std::vector<std::vector<Factor>> factors;
        for (std::size_t k = 0; k < rots.size(); ++k) {
            const std::string at = "/rotations/" + std::to_string(k);
            if (!rots[k].is_array()) throw InputError(at + ": expected a list of plane rotations");
            std::vector<Factor> fs;
            for (std::size_t f = 0; f < rots[k].size(); ++f) {
                const std::string fat = at + "/" + std::to_string(f);
                const auto& e = rots[k][f];
                if (!e.is_object() || !e.contains("plane") || !e.contains("turn")) {
                    throw InputError(fat + ": expected {\"plane\": [i, j], \"turn\": \"p/q\"}");
                }
                const auto& pl = e.at("plane");
                if (!pl.is_array() || pl.size() != 2 || !pl[0].is_number_integer() || !pl[1].is_number_integer()) {
                    throw InputError(fat + "/plane: expected two coordinate indices");
                }
                const auto a = pl[0].get<long>();
                const auto b = pl[1].get<long>();
                if (a < 0 || b < 0 || a == b || static_cast<std::size_t>(a) >= dim || static_cast<std::size_t>(b) >= dim) {
                    throw InputError(fat + "/plane: indices must be distinct and below dim");
                }
                fs.push_back({static_cast<std::size_t>(a), static_cast<std::size_t>(b),
                              frac(rational_from_json(e.at("turn"), fat + "/turn"))});
                all_turns.push_back(fs.back().turn);
            }
            factors.push_back(std::move(fs));
        }
        const auto fld = CyclotomicField::get(cyclotomic_order_for(all_turns));
        Tuple<CyclotomicNumber> t{dim, {}};
        for (const auto& fs : factors) {
            auto m = Matrix<CyclotomicNumber>::identity(dim);
            for (const auto& f : fs) m = plane_rotation(dim, f.i, f.jdx, f.turn, fld) * m;
            t.rotations.push_back(std::move(m));
        }
        return t;
    }
    throw InputError("/mode: expected one of exact, floating, quadratic, turns");
}

Json to_json(const RotationTuple& t)
{
    return std::visit(
        [](const auto& tup) {
            using T = typename std::decay_t<decltype(tup)>::scalar_type;
            Json j;
            j["mode"] = std::string(mode_name<T>());
            j["dim"] = tup.dim;
            Json rots = Json::array();
            for (const auto& m : tup.rotations) rots.push_back(to_json(m));
            j["rotations"] = std::move(rots);
            return j;
        },
        t);
}

} // namespace spherediv

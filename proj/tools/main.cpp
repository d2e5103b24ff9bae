#include "report_json.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

using namespace spherediv;
using spherediv::cli::witness_json;

namespace {

constexpr const char* kVersion = "1.0.0";

struct Global {
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    std::string output;
};

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw InputError(path + ": cannot open");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(path + ": malformed JSON (" + std::string(e.what()) + ")");
    }
}

std::vector<long> parse_longs(const std::string& text)
{
    std::vector<long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stol(item, &used));
            while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
            if (used != item.size()) throw InputError("bad integer: " + item);
        } catch (const std::logic_error&) {
            throw InputError("bad integer: " + item);
        }
    }
    return out;
}

RationalPoint parse_point(const std::string& text)
{
    RationalPoint p;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::string t;
        for (char c : item) {
            if (!std::isspace(static_cast<unsigned char>(c))) t += c;
        }
        p.push_back(parse_rational(t));
    }
    return p;
}

template <class T>
Vector<T> point_as(const RationalPoint& p)
{
    Vector<T> v;
    for (const auto& c : p) v.push_back(from_rational<T>(c));
    return v;
}

RotationTuple load_tuple(const std::string& path)
{
    auto t = tuple_from_json(read_json_file(path));
    const auto rep = validate_tuple(t);
    if (!rep.valid) {
        const auto& v = rep.violations.front();
        throw InputError("/rotations/" + std::to_string(v.index) + ": not a rotation (" + v.kind + " residual "
                         + scalar_key(v.residual) + ")");
    }
    return t;
}

template <class T>
Json matrices_json(const std::vector<Matrix<T>>& ms)
{
    Json a = Json::array();
    for (const auto& m : ms) a.push_back(spherediv::to_json(m));
    return a;
}

// ---- subcommands ----

struct GegenbauerCmd {
    int dim = 3;
    int degree = 0;
    Json run() const
    {
        if (dim < 2 || degree < 0) throw InputError("--dim must be >= 2 and --degree >= 0");
        const auto p = gegenbauer(dim, degree);
        Json j;
        j["d"] = dim;
        j["n"] = degree;
        Json cs = Json::array();
        for (const auto& c : p.coefficients()) cs.push_back(c.get_str());
        j["coefficients"] = std::move(cs);
        j["harmonic_dimension"] = harmonic_dimension(dim, degree);
        return j;
    }
};

struct PointsCmd {
    int dim = 3;
    std::size_t count = 10;
    std::uint64_t seed = 0;
    Json run() const
    {
        if (dim < 1) throw InputError("--dim must be positive");
        Json pts = Json::array();
        for (const auto& p : enumerate_points(dim, count, seed)) {
            pts.push_back({{"point", spherediv::to_json(p)}, {"height", point_height(p).get_str()}});
        }
        return {{"d", dim}, {"order_seed", seed}, {"points", pts}};
    }
};

struct BasisCmd {
    int dim = 3;
    int degree = 1;
    std::uint64_t seed = 0;
    Json run() const
    {
        if (dim < 2 || degree < 0) throw InputError("--dim must be >= 2 and --degree >= 0");
        BasisOptions opts;
        opts.order_seed = seed;
        return spherediv::to_json(*cached_zonal_basis(dim, degree, opts));
    }
};

struct ObstructCmd {
    std::size_t dim = 0;
    std::string tuple_path;
    int n_max = 0;
    bool exact = false;
    bool floating = false;
    int witness = 0;
    std::size_t samples = 1000;
    std::uint64_t seed = 0;

    Json run(const Global& g) const
    {
        auto tuple = load_tuple(tuple_path);
        if (tuple_dimension(tuple) != dim) {
            throw InputError("/dim: tuple has dimension " + std::to_string(tuple_dimension(tuple)) + ", --dim is "
                             + std::to_string(dim));
        }
        if (exact && floating) throw InputError("--exact and --floating are exclusive");
        if (exact && mode_name(tuple) == "floating") throw InputError("/mode: --exact needs an exact tuple");
        if (floating) tuple = to_floating(tuple);
        const int nmax = n_max > 0 ? n_max : default_n_max(dim);
        return std::visit(
            [&](const auto& t) {
                ObstructionOptions opts;
                opts.threads = g.threads;
                Json j;
                j["report"] = cli::to_json(certify_degrees(t, nmax, opts));
                if (witness > 0) {
                    const auto w = extract_witness(t, witness);
                    Json wj = witness_json(w);
                    wj["validation"] = {{"samples", samples}, {"seed", seed}, {"max_residual", witness_residual(t, w, samples, seed)}};
                    j["witness"] = std::move(wj);
                }
                return j;
            },
            tuple);
    }
};

struct CircleCmd {
    std::string angles;
    std::string arcs_path;
    std::uint64_t budget = kDefaultTilingBudget;

    Json classify_run() const
    {
        const auto tuple = parse_angles(angles);
        Json j;
        Json as = Json::array();
        for (const auto& a : tuple) as.push_back(to_string(a));
        j["angles"] = std::move(as);
        j["classification"] = cli::to_json(classify(tuple, budget));
        return j;
    }

    Json verify_run() const
    {
        const auto tuple = parse_angles(angles);
        const auto arcs = cli::arcset_from_json(read_json_file(arcs_path));
        return {{"valid", verify_arcset(tuple, arcs)}};
    }
};

struct TileCmd {
    long modulus = 1;
    std::string shifts;
    std::uint64_t budget = kDefaultTilingBudget;
    Json run() const
    {
        const TileInstance inst{modulus, parse_longs(shifts)};
        Json j = cli::to_json(solve(inst, budget));
        if (j["solution"].is_array()) j["valid"] = is_tiling(inst, j["solution"].get<std::vector<long>>());
        return j;
    }
};

struct OrbitCmd {
    std::string tuple_path;
    std::string point;
    std::size_t cap = 10000;
    bool split = false;
    bool divide = false;
    std::size_t samples = 0;
    std::uint64_t seed = 0;

    Json run() const
    {
        const auto tuple = load_tuple(tuple_path);
        const auto z = parse_point(point);
        return std::visit(
            [&](const auto& t) {
                using T = typename std::decay_t<decltype(t)>::scalar_type;
                const auto rep = orbit(point_as<T>(z), t, cap);
                Json j;
                j["mode"] = std::string(mode_name<T>());
                j["cap"] = cap;
                j["finite"] = rep.finite;
                j["size"] = rep.points.size();
                j["closure_verified"] = rep.closure_verified;
                Json pts = Json::array();
                for (const auto& p : rep.points) pts.push_back(spherediv::to_json(p));
                j["points"] = std::move(pts);
                if ((split || samples > 0) && rep.finite) {
                    const auto s = invariant_split(rep, t);
                    j["split"] = {{"span_dimension", s.span_basis.cols()},
                                  {"span_basis", spherediv::to_json(s.span_basis)},
                                  {"complement_basis", spherediv::to_json(s.complement_basis)},
                                  {"alpha", matrices_json(s.alpha)},
                                  {"beta", matrices_json(s.beta)}};
                    if (samples > 0) {
                        const auto b = orbit_size_bound_check(rep, s, t, samples, seed);
                        j["orbit_bound"] = {{"base_orbit_size", b.base_orbit_size}, {"bound", b.bound},
                                            {"samples", b.samples},                 {"seed", seed},
                                            {"max_observed", b.max_observed},       {"all_within", b.all_within}};
                    }
                }
                if (divide && rep.finite) {
                    const auto a = divide_finite_orbit(rep, t);
                    j["division"] = a ? Json(*a) : Json(nullptr);
                }
                return j;
            },
            tuple);
    }
};

struct FixedPointCmd {
    std::string words;
    std::string tuple_path;
    Json run() const
    {
        const auto tuple = load_tuple(tuple_path);
        const auto ws = parse_words(words);
        return std::visit(
            [&](const auto& t) {
                using T = typename std::decay_t<decltype(t)>::scalar_type;
                std::vector<Matrix<T>> ms;
                Json names = Json::array();
                for (const auto& w : ws) {
                    ms.push_back(evaluate_word(w.reduce(), t) - Matrix<T>::identity(t.dim));
                    names.push_back(to_string(w.reduce()));
                }
                const auto res = common_fixed_point_test(ms);
                Json j;
                j["mode"] = std::string(mode_name<T>());
                j["words"] = std::move(names);
                j["det"] = scalar_display(res.det);
                j["common_fixed_point"] = res.common;
                j["witness"] = res.witness ? spherediv::to_json(*res.witness) : Json(nullptr);
                j["witness_verified"] = res.witness_verified;
                return j;
            },
            tuple);
    }
};

template <class T>
Json euler_report(const Tuple<T>& t, long r, std::size_t cap)
{
    const auto group = enumerate_group(t, cap);
    Json j;
    j["mode"] = std::string(mode_name<T>());
    j["group_finite"] = group.finite;
    j["group_order"] = group.finite ? Json(group.elements.size()) : Json(nullptr);
    if (!group.finite) {
        j["note"] = "group closure exceeded the cap";
        return j;
    }
    const auto poly = orbit_polytope(group.elements, t.dim);
    const auto lat = face_lattice(poly);
    j["vertex_count"] = poly.vertices.size();
    j["face_counts"] = lat.counts;
    j["chi"] = euler_characteristic(lat.counts);
    if (t.dim % 2 == 1) {
        j["euler_check"] = euler_check(lat.counts, t.dim);
    } else {
        j["euler_check"] = nullptr;
    }
    const auto ob = divisibility_obstruction(lat.counts, r);
    j["r"] = r;
    j["obstructed"] = ob.obstructed;
    j["witness_dim"] = ob.witness_dim ? Json(*ob.witness_dim) : Json(nullptr);
    if (lat.near_degenerate) j["near_degenerate"] = true;
    return j;
}

struct EulerCmd {
    std::string generators;
    long r = 3;
    std::size_t cap = 500;
    Json run() const
    {
        const auto tuple = load_tuple(generators);
        return std::visit(
            [&](const auto& t) -> Json {
                using T = typename std::decay_t<decltype(t)>::scalar_type;
                if constexpr (is_ordered_v<T>) {
                    return euler_report(t, r, cap);
                } else {
                    return euler_report(to_floating(t), r, cap);
                }
            },
            tuple);
    }
};

struct LiftCmd {
    std::string base_angles;
    std::size_t target_dim = 4;
    Json run() const
    {
        const auto angles = parse_angles(base_angles);
        std::vector<Rational> turns;
        for (const auto& a : angles) {
            if (!a.is_rational()) throw InputError("--base-angles: lifting needs rational angles");
            turns.push_back(a.turn);
        }
        if (target_dim < 2 || target_dim % 2 != 0) throw InputError("--target-dim must be even and at least 2");
        const auto cls = classify(angles);
        if (cls.verdict != Verdict::constructive) {
            throw InputError("--base-angles: the circle tuple has no arc division (verdict " + std::string(to_string(cls.verdict)) + ")");
        }
        auto desc = base_division(turns, *cls.arcs);
        while (desc.dim() < target_dim) desc = lift(desc, turns.size());
        return {{"descriptor", cli::to_json(desc)}, {"rotations", cli::to_json(rotations_of(desc))}};
    }
};

struct VerifyPartitionCmd {
    std::string desc_path;
    std::size_t samples = 100000;
    std::uint64_t seed = 0;
    Json run(const Global& g) const
    {
        Json j = read_json_file(desc_path);
        const Json& body = j.contains("result") ? j["result"] : j;
        const Json& d = body.contains("descriptor") ? body["descriptor"] : body;
        const auto desc = cli::descriptor_from_json(d);
        return cli::to_json(verify_partition(desc, samples, seed, g.threads));
    }
};

struct SynthCmd {
    std::size_t dim = 3;
    std::size_t r = 2;
    std::uint64_t seed = 0;
    std::string upper_path;
    std::size_t word_cap = 6;
    int n_max = 6;
    Json run(const Global& g) const
    {
        UpperEntries upper;
        if (!upper_path.empty()) {
            upper = cli::upper_from_json(read_json_file(upper_path));
        } else {
            if (dim < 2 || r < 1) throw InputError("--dim must be >= 2 and --r >= 1");
            std::mt19937_64 rng(seed);
            upper = random_upper_entries(dim, r, rng);
        }
        const auto res = complete_rows(upper);
        Json j;
        Json sched = Json::array();
        for (const auto& b : epsilon_schedule(upper.d)) sched.push_back(b.get_str());
        j["epsilon_schedule"] = std::move(sched);
        j["delta"] = synthesis_delta(upper.d).get_str();
        j["completion"] = cli::to_json(res);
        j["diagnostics"] = cli::to_json(genericity_diagnostics(res.tuple, word_cap, n_max, g.threads));
        return j;
    }
};

int emit(const Global& g, const std::string& command, const Json& config, const Json& result)
{
    Json out;
    out["tool"] = "spherediv";
    out["version"] = kVersion;
    out["command"] = command;
    out["config"] = config;
    out["result"] = result;
    const std::string text = out.dump(2) + "\n";
    if (g.output.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(g.output);
        if (!f) throw InputError(g.output + ": cannot write");
        f << text;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact and certified computations on divisions of spheres by rotations."};
    app.require_subcommand(1);
    app.fallthrough();
    Global g;
    app.add_option("--threads", g.threads, "Worker threads (default: logical cores)")->check(CLI::PositiveNumber);
    app.add_option("-o,--output", g.output, "Write the JSON report to this file instead of stdout");

    std::function<int()> action;

    GegenbauerCmd geg;
    auto* c_geg = app.add_subcommand("gegenbauer",
        "Gegenbauer polynomial P_n for S^(d-1), normalized to P_n(1) = 1 and orthogonal for the weight "
        "(1 - t^2)^((d-3)/2); also the dimension N_n of degree-n spherical harmonics.");
    c_geg->add_option("--dim", geg.dim, "Ambient dimension d")->required();
    c_geg->add_option("--degree", geg.degree, "Degree n")->required();
    c_geg->callback([&] { action = [&] { return emit(g, "gegenbauer", {{"dim", geg.dim}, {"degree", geg.degree}}, geg.run()); }; });

    PointsCmd pts;
    auto* c_pts = app.add_subcommand("points",
        "Rational points of S^(d-1) in increasing order of their common denominator; these points are dense, "
        "which is what makes a rational zonal basis possible.");
    c_pts->add_option("--dim", pts.dim, "Ambient dimension d")->required();
    c_pts->add_option("--count", pts.count, "Number of points");
    c_pts->add_option("--seed", pts.seed, "Shuffle seed within each height class (0 = canonical order)");
    c_pts->callback([&] {
        action = [&] { return emit(g, "points", {{"dim", pts.dim}, {"count", pts.count}, {"seed", pts.seed}}, pts.run()); };
    });

    BasisCmd bas;
    auto* c_bas = app.add_subcommand("basis",
        "Rational points v_1..v_N whose zonal harmonics P_n(v_i . x) form a basis of the degree-n harmonics, "
        "with the exact Gram matrix P_n(v_i . v_j) / N_n (nonsingular).");
    c_bas->add_option("--dim", bas.dim, "Ambient dimension d")->required();
    c_bas->add_option("--degree", bas.degree, "Degree n")->required();
    c_bas->add_option("--seed", bas.seed, "Point order seed (0 = canonical order)");
    c_bas->callback([&] {
        action = [&] { return emit(g, "basis", {{"dim", bas.dim}, {"degree", bas.degree}, {"seed", bas.seed}}, bas.run()); };
    });

    ObstructCmd obs;
    auto* c_obs = app.add_subcommand("obstruct",
        "Degree-by-degree obstruction to fractional divisions: if det L_n != 0 then every f with "
        "sum_i gamma_i.f = 1 has zero degree-n harmonic component. Exact tuples give rigorous certificates "
        "for degrees 1..n_max only. --witness n extracts f = 1/r + F_n with sum_i gamma_i.F_n = 0 when det L_n = 0.");
    c_obs->add_option("--dim", obs.dim, "Ambient dimension d")->required();
    c_obs->add_option("--tuple", obs.tuple_path, "Rotation tuple JSON file")->required();
    c_obs->add_option("--nmax", obs.n_max, "Highest degree (default 8 for d <= 3, 5 for d = 4, 3 otherwise)");
    c_obs->add_flag("--exact", obs.exact, "Require an exact tuple");
    c_obs->add_flag("--floating", obs.floating, "Evaluate in floating point");
    c_obs->add_option("--witness", obs.witness, "Extract a witness at this degree");
    c_obs->add_option("--samples", obs.samples, "Witness validation sample count");
    c_obs->add_option("--seed", obs.seed, "Witness validation seed");
    c_obs->callback([&] {
        action = [&] {
            Json cfg{{"dim", obs.dim}, {"tuple", obs.tuple_path}, {"nmax", obs.n_max}, {"exact", obs.exact},
                     {"floating", obs.floating}, {"witness", obs.witness}, {"samples", obs.samples}, {"seed", obs.seed}};
            return emit(g, "obstruct", cfg, obs.run(g));
        };
    });

    CircleCmd circ;
    auto* c_circ = app.add_subcommand("circle", "Divisions of the circle by rotations given in turns.");
    c_circ->require_subcommand(1);
    auto* c_cls = c_circ->add_subcommand("classify",
        "Classifies a tuple of circle rotations: constructive (explicit arc division), fractional_only "
        "(sum_i cos n t_i = sum_i sin n t_i = 0 for some n, but no division), not_fractional, or "
        "heuristic_unknown. Complete for r <= 4; rational tuples with r >= 5 use the finite cyclic reduction.");
    c_cls->add_option("--angles", circ.angles, "Comma-separated angles in turns, e.g. \"1/3,2/3,0\" or \"tau,tau+1/2,1/2,0\"")->required();
    c_cls->add_option("--budget", circ.budget, "Tiling search node budget");
    c_cls->callback([&] {
        action = [&] { return emit(g, "circle classify", {{"angles", circ.angles}, {"budget", circ.budget}}, circ.classify_run()); };
    });
    auto* c_ver = c_circ->add_subcommand("verify",
        "Exact check that the rotated copies t_i + A of an arc set partition the circle.");
    c_ver->add_option("--angles", circ.angles, "Comma-separated rational angles in turns")->required();
    c_ver->add_option("--arcs", circ.arcs_path, "Arc set JSON file: [[\"start\", \"end\"], ...] in turns")->required();
    c_ver->callback([&] {
        action = [&] { return emit(g, "circle verify", {{"angles", circ.angles}, {"arcs", circ.arcs_path}}, circ.verify_run()); };
    });

    TileCmd tile;
    auto* c_tile = app.add_subcommand("tile",
        "Decides whether Z_N is k-divisible: a set A whose translates k_i + A partition Z_N. For shifts "
        "(k, k+m, m, 0) over Z_4m this holds for every even m and, for odd m, iff k = 2 (mod 4).");
    c_tile->add_option("--modulus", tile.modulus, "N")->required();
    c_tile->add_option("--shifts", tile.shifts, "Comma-separated shifts")->required();
    c_tile->add_option("--budget", tile.budget, "Search node budget");
    c_tile->callback([&] {
        action = [&] {
            return emit(g, "tile", {{"modulus", tile.modulus}, {"shifts", tile.shifts}, {"budget", tile.budget}}, tile.run());
        };
    });

    OrbitCmd orb;
    auto* c_orb = app.add_subcommand("orbit",
        "Orbit of a point under the group generated by a rotation tuple. A finite orbit spans an invariant "
        "subspace whose points all have orbits of size at most n! (n the base orbit size), and each finite "
        "orbit can be divided when its translates admit an exact cover.");
    c_orb->add_option("--tuple", orb.tuple_path, "Rotation tuple JSON file")->required();
    c_orb->add_option("--point", orb.point, "Start point, e.g. \"1,0,0\"")->required();
    c_orb->add_option("--cap", orb.cap, "Maximum orbit size");
    c_orb->add_flag("--split", orb.split, "Report the invariant splitting of a finite orbit");
    c_orb->add_flag("--divide", orb.divide, "Search for a division of a finite orbit");
    c_orb->add_option("--bound-samples", orb.samples, "Sample points of the orbit span and check the n! bound");
    c_orb->add_option("--seed", orb.seed, "Sampling seed");
    c_orb->callback([&] {
        action = [&] {
            Json cfg{{"tuple", orb.tuple_path}, {"point", orb.point}, {"cap", orb.cap}, {"split", orb.split},
                     {"divide", orb.divide}, {"bound_samples", orb.samples}, {"seed", orb.seed}};
            return emit(g, "orbit", cfg, orb.run());
        };
    });

    FixedPointCmd fp;
    auto* c_fp = app.add_subcommand("fixed-point-test",
        "Matrices A_i = w_i - I share a nonzero kernel vector iff det(sum_i A_i^T A_i) = 0; reports the "
        "determinant and a verified common fixed vector.");
    c_fp->add_option("--words", fp.words, "Comma-separated words, e.g. \"g1 g2 g1^-1, g2\"")->required();
    c_fp->add_option("--tuple", fp.tuple_path, "Rotation tuple JSON file")->required();
    c_fp->callback([&] {
        action = [&] { return emit(g, "fixed-point-test", {{"words", fp.words}, {"tuple", fp.tuple_path}}, fp.run()); };
    });

    EulerCmd eul;
    auto* c_eul = app.add_subcommand("euler-check",
        "For a finite rotation group in odd dimension d, the polytope spanned by the orbit of +-e_i has "
        "face counts with alternating sum 2, so some count is not divisible by r >= 3 and the sphere is "
        "not divisible by any r-tuple generating the group.");
    c_eul->add_option("--generators", eul.generators, "Rotation tuple JSON file with the group generators")->required();
    c_eul->add_option("--r", eul.r, "Number of pieces r");
    c_eul->add_option("--cap", eul.cap, "Maximum group order");
    c_eul->callback([&] {
        action = [&] { return emit(g, "euler-check", {{"generators", eul.generators}, {"r", eul.r}, {"cap", eul.cap}}, eul.run()); };
    });

    LiftCmd lf;
    auto* c_lf = app.add_subcommand("lift",
        "Lifts an r-division of S^(d-3) to S^(d-1): rotation i acts as the lower rotation on the first d-2 "
        "coordinates and as i/r of a turn on the last two; the piece adds all points whose last-plane angle "
        "lies in [0, 1/r).");
    c_lf->add_option("--base-angles", lf.base_angles, "Circle tuple in turns with an arc division")->required();
    c_lf->add_option("--target-dim", lf.target_dim, "Target dimension (even)");
    c_lf->callback([&] {
        action = [&] { return emit(g, "lift", {{"base_angles", lf.base_angles}, {"target_dim", lf.target_dim}}, lf.run()); };
    });

    VerifyPartitionCmd vp;
    auto* c_vp = app.add_subcommand("verify-partition",
        "Monte Carlo check that the rotated copies gamma_i.C of a division's piece cover each sampled point "
        "exactly once, with exact angle arithmetic in the deciding coordinate plane.");
    c_vp->add_option("--desc", vp.desc_path, "Descriptor JSON (output of lift)")->required();
    c_vp->add_option("--samples", vp.samples, "Sample count");
    c_vp->add_option("--seed", vp.seed, "Sampling seed");
    c_vp->callback([&] {
        action = [&] { return emit(g, "verify-partition", {{"desc", vp.desc_path}, {"samples", vp.samples}, {"seed", vp.seed}}, vp.run(g)); };
    });

    SynthCmd sy;
    auto* c_sy = app.add_subcommand("synth-generic",
        "Completes small entries above the diagonal to special orthogonal matrices near the identity, row "
        "by row, then reports evidence for genericity: no short word is the identity, short non-commuting "
        "words share no fixed axis (odd d), and the obstruction sweep.");
    c_sy->add_option("--dim", sy.dim, "Dimension d");
    c_sy->add_option("--r", sy.r, "Number of rotations");
    c_sy->add_option("--seed", sy.seed, "Seed for the upper entries");
    c_sy->add_option("--upper", sy.upper_path, "JSON {\"dim\": d, \"blocks\": [[...], ...]} with the upper entries");
    c_sy->add_option("--word-cap", sy.word_cap, "Longest reduced word checked");
    c_sy->add_option("--nmax", sy.n_max, "Highest obstruction degree");
    c_sy->callback([&] {
        action = [&] {
            Json cfg{{"dim", sy.dim}, {"r", sy.r}, {"seed", sy.seed}, {"upper", sy.upper_path}, {"word_cap", sy.word_cap}, {"nmax", sy.n_max}};
            return emit(g, "synth-generic", cfg, sy.run(g));
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    try {
        return action();
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition violated: " << e.what() << '\n';
        return 2;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}

// One PASS/FAIL line per acceptance criterion; exit status 1 if any criterion fails.

#include "oracles/gram_schmidt.hpp"
#include "oracles/hull_brute.hpp"
#include "oracles/stacked_kernel.hpp"
#include "support.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace testing_support;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what)
    {
        if (!ok && pass) detail = what;
        pass = pass && ok;
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double x)
{
    std::ostringstream s;
    s.precision(3);
    s << x;
    return s.str();
}

// 1
Outcome gegenbauer_correctness()
{
    Outcome o;
    const auto t0 = Clock::now();
    for (int d = 2; d <= 6; ++d) {
        const auto ref = oracle::gram_schmidt(d, 10);
        std::vector<RationalPolynomial> ps;
        for (int n = 0; n <= 10; ++n) {
            ps.push_back(gegenbauer(d, n));
            const auto& c = ps.back().coefficients();
            o.require(c == ref[static_cast<std::size_t>(n)], "coefficients differ at d=" + std::to_string(d) + " n=" + std::to_string(n));
        }
        for (int m = 0; m <= 10; ++m) {
            for (int n = m + 1; n <= 10; ++n) {
                o.require(sgn(weighted_inner_product(d, ps[static_cast<std::size_t>(m)], ps[static_cast<std::size_t>(n)])) == 0,
                          "not orthogonal at d=" + std::to_string(d));
            }
        }
    }
    const double dt = seconds_since(t0);
    o.require(dt < 5.0, "runtime " + fmt(dt) + " s");
    if (o.pass) o.detail = "d=2..6, n<=10 exact match and orthogonality, " + fmt(dt) + " s";
    return o;
}

// 2
Outcome dimensions_and_bases()
{
    Outcome o;
    const auto t0 = Clock::now();
    for (int n = 1; n <= 30; ++n) {
        o.require(harmonic_dimension(3, n) == 2 * n + 1, "N_n(3) wrong");
        o.require(harmonic_dimension(2, n) == 2, "N_n(2) wrong");
    }
    for (int d = 2; d <= 4; ++d) {
        for (int n = 0; n <= 5; ++n) {
            const auto b = build_zonal_basis(d, n);
            o.require(static_cast<std::int64_t>(b.points.size()) == harmonic_dimension(d, n), "basis size");
            o.require(b.gram_det > 0 && determinant(b.gram) == b.gram_det, "gram determinant");
        }
    }
    const double dt = seconds_since(t0);
    o.require(dt < 60.0, "runtime " + fmt(dt) + " s");
    if (o.pass) o.detail = "d<=4, n<=5 bases with positive exact Gram determinant, " + fmt(dt) + " s";
    return o;
}

// 3
Outcome funk_hecke()
{
    Outcome o;
    const auto t0 = Clock::now();
    std::mt19937_64 rng(2024);
    double worst = 0.0;
    for (int n = 0; n <= 4; ++n) {
        const auto p = gegenbauer(3, n);
        for (int k = 0; k < 20; ++k) {
            const auto u = random_sphere_point(3, rng);
            const auto v = random_sphere_point(3, rng);
            const double t = u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
            const double expect = p.evaluate_at<double>(t) / static_cast<double>(harmonic_dimension(3, n));
            worst = std::max(worst, std::fabs(funk_hecke_quadrature_s2(n, {u[0], u[1], u[2]}, {v[0], v[1], v[2]}) - expect));
        }
    }
    const double dt = seconds_since(t0);
    o.require(worst <= 1e-6, "error " + fmt(worst));
    o.require(dt < 30.0, "runtime " + fmt(dt) + " s");
    if (o.pass) o.detail = "max error " + fmt(worst) + " over 20 pairs per degree n<=4 (tol 1e-6)";
    return o;
}

// 4
Outcome identity_law()
{
    Outcome o;
    int cases = 0;
    for (std::size_t d = 2; d <= 3; ++d) {
        for (std::size_t r = 1; r <= 4; ++r) {
            const auto t = Tuple<Rational>::identities(d, r);
            for (int n = 1; n <= 6; ++n) {
                const auto b = cached_zonal_basis(static_cast<int>(d), n);
                Rational expect = b->gram_det;
                for (std::size_t i = 0; i < b->points.size(); ++i) expect *= static_cast<long>(r);
                const Rational got = determinant(l_matrix(t, *b));
                o.require(got == expect && sgn(got) != 0, "d=" + std::to_string(d) + " r=" + std::to_string(r) + " n=" + std::to_string(n));
                ++cases;
            }
        }
    }
    if (o.pass) o.detail = std::to_string(cases) + " identity tuples, det L = r^N det M exactly and nonzero";
    return o;
}

std::vector<std::vector<Rational>> random_turn_tuples(std::size_t count, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<std::vector<Rational>> out;
    while (out.size() < count) {
        const long r = 2 + static_cast<long>(rng() % 3);
        const long qd = 1 + static_cast<long>(rng() % 12);
        std::vector<Rational> t;
        for (long i = 0; i < r; ++i) t.push_back(ratio(static_cast<long>(rng() % static_cast<unsigned long>(qd)), qd));
        out.push_back(t);
    }
    return out;
}

// Degrees n where the moment sums vanish, asked of the circle module via the scaled tuple n*t.
std::set<int> necessary_degrees(const std::vector<Rational>& turns, int n_max)
{
    std::set<int> out;
    for (int n = 1; n <= n_max; ++n) {
        std::vector<Angle> scaled;
        for (const auto& t : turns) scaled.emplace_back(t * n);
        if (fractional_test(scaled) == 1) out.insert(n);
    }
    return out;
}

// 5
Outcome circle_cross_validation()
{
    Outcome o;
    int nonempty = 0;
    for (const auto& turns : random_turn_tuples(20, 55)) {
        const auto rep = certify_degrees(circle_tuple(turns), 8);
        std::set<int> singular;
        for (const auto& d : rep.degrees) {
            if (d.status == DegreeStatus::witness_exists) singular.insert(d.n);
        }
        const auto expect = necessary_degrees(turns, 8);
        if (!expect.empty()) ++nonempty;
        std::string desc;
        for (const auto& t : turns) desc += to_string(t) + " ";
        o.require(singular == expect, "mismatch for tuple " + desc);
    }
    if (o.pass) o.detail = "20 tuples agree exactly (" + std::to_string(nonempty) + " with vanishing degrees)";
    return o;
}

// 6
Outcome witness_validity()
{
    Outcome o;
    double worst = 0.0;
    int witnesses = 0;
    const auto check = [&](const auto& tuple, int n_max) {
        for (int n = 1; n <= n_max; ++n) {
            if (certify_degree(tuple, n).status != DegreeStatus::witness_exists) continue;
            const auto w = extract_witness(tuple, n);
            worst = std::max(worst, witness_residual(tuple, w, 1000, static_cast<std::uint64_t>(n)));
            ++witnesses;
        }
    };
    for (const auto& turns : random_turn_tuples(20, 55)) check(circle_tuple(turns), 8);
    for (const char* t : {"1/2,0", "1/3,2/3,0", "1/4,3/4,1/2,0", "1/6,1/2,5/6", "1/5,2/5,3/5,4/5,0"}) {
        std::vector<Rational> turns;
        for (const auto& a : parse_angles(t)) turns.push_back(a.turn);
        check(circle_tuple(turns), 8);
    }
    check(z_axis_tuple({q("1/3"), q("2/3"), Rational(0)}), 4);
    check(z_axis_tuple({q("1/4"), q("3/4")}), 4);
    o.require(worst <= 1e-9, "residual " + fmt(worst));

    // Half-turn witness: degree-one part is a multiple of cos t.
    const auto half = circle_tuple({q("1/2"), Rational(0)});
    const auto w = extract_witness(half, 1);
    const double lambda = w.harmonic_part({1.0, 0.0});
    std::mt19937_64 rng(1);
    double shape = 0.0;
    for (int k = 0; k < 1000; ++k) {
        const auto x = random_sphere_point(2, rng);
        shape = std::max(shape, std::fabs(w.harmonic_part(x) - lambda * x[0]));
    }
    o.require(std::fabs(lambda) > 0.1 && shape <= 1e-12, "half-turn witness is not a multiple of cos t");
    o.require(witnesses > 20, "too few witnesses exercised");
    if (o.pass) {
        o.detail = std::to_string(witnesses) + " witnesses, max residual " + fmt(worst) + " (tol 1e-9); half-turn F_1 = "
                   + fmt(lambda) + " cos t";
    }
    return o;
}

std::vector<Rational> farey(long max_den)
{
    std::set<Rational> s;
    for (long qd = 1; qd <= max_den; ++qd) {
        for (long p = 0; p < qd; ++p) s.insert(ratio(p, qd));
    }
    return {s.begin(), s.end()};
}

// 7
Outcome circle_suite()
{
    Outcome o;
    const auto t0 = Clock::now();
    std::size_t tuples = 0;
    std::size_t constructive = 0;
    const Rational shift = q("1/5");
    const auto record = [&](const std::vector<Rational>& turns) {
        const auto angles = angles_of(turns);
        const auto c = classify(angles);
        ++tuples;
        if (c.verdict == Verdict::constructive) {
            ++constructive;
            o.require(c.arcs && verify_arcset(angles, *c.arcs), "arcs fail verification");
        }
        std::vector<Rational> moved;
        for (const auto& t : turns) moved.push_back(t + shift);
        const auto cm = classify(angles_of(moved));
        o.require(cm.verdict == c.verdict, "verdict changes under a common rotation");
        if (cm.verdict == Verdict::constructive) o.require(verify_arcset(angles_of(moved), *cm.arcs), "shifted arcs fail");
        return c;
    };
    const auto fr = farey(12);
    // r = 2: constructive iff the difference has even order.
    for (const auto& a : fr) {
        const auto c = record({a, Rational(0)});
        const long order = a.get_den().get_si();
        o.require((c.verdict == Verdict::constructive) == (sgn(a) != 0 && order % 2 == 0), "r=2 even-order law");
    }
    for (const auto& a : fr) {
        for (const auto& b : fr) record({a, b, Rational(0)});
    }
    for (long qd = 1; qd <= 12; ++qd) {
        for (long a = 0; a < qd; ++a) {
            for (long b = 0; b < qd; ++b) {
                for (long c = 0; c < qd; ++c) record({ratio(a, qd), ratio(b, qd), ratio(c, qd), Rational(0)});
            }
        }
    }
    // Normalized r = 4 family (k, k+m, m, 0) over Z_4m.
    int family = 0;
    for (long m = 1; m <= 8; ++m) {
        for (long k = 0; k < 4 * m; ++k) {
            if (std::gcd(k, m) != 1) continue;
            const bool law = m % 2 == 0 || k % 4 == 2;
            const bool searched = solve(normalized_r4_instance(m, k)).solution.has_value();
            o.require(closed_form_r4(m, k) == law, "closed form disagrees with the law at m=" + std::to_string(m));
            o.require(searched == law, "search disagrees with the law at m=" + std::to_string(m) + " k=" + std::to_string(k));
            const auto c = classify(angles_of({ratio(k, 4 * m), ratio(k + m, 4 * m), ratio(m, 4 * m), Rational(0)}));
            o.require((c.verdict == Verdict::constructive) == law, "classify disagrees at m=" + std::to_string(m));
            ++family;
        }
    }
    const double dt = seconds_since(t0);
    o.require(dt < 60.0, "runtime " + fmt(dt) + " s");
    if (o.pass) {
        o.detail = std::to_string(tuples) + " tuples (" + std::to_string(constructive) + " constructive, all verified), "
                   + std::to_string(family) + " normalized r=4 cases, " + fmt(dt) + " s";
    }
    return o;
}

// 8
Outcome tiling_spots()
{
    Outcome o;
    o.require(solve({4, {2, 3, 1, 0}}).solution == std::vector<long>{0}, "solve(4,(2,3,1,0))");
    o.require(solve({12, {2, 5, 3, 0}}).solution == std::vector<long>{0, 4, 8}, "solve(12,(2,5,3,0))");
    o.require(!solve({4, {1, 2, 1, 0}}).solution, "solve(4,(1,2,1,0))");
    const auto a = odd_m_construction(3, 2);
    o.require(std::set<long>(a.begin(), a.end()) == std::set<long>{0, 4, 8}, "construction(3,2)");
    o.require(is_tiling(normalized_r4_instance(3, 2), a), "construction(3,2) validity");
    if (o.pass) o.detail = "all four spot values reproduced";
    return o;
}

template <class T>
std::vector<long> counts_of(const Tuple<T>& gens)
{
    const auto g = enumerate_group(gens, 1000);
    return face_lattice(orbit_polytope(g.elements, gens.dim)).counts;
}

// 9
Outcome euler_suite()
{
    Outcome o;
    const auto cube = counts_of(cube_tuple());
    o.require(cube == std::vector<long>{6, 12, 8}, "cube counts");
    o.require(divisibility_obstruction(cube, 3).witness_dim == 2u, "cube obstruction index");
    const auto cyc = counts_of(to_floating(z_axis_tuple({q("1/3")})));
    o.require(cyc == std::vector<long>{14, 36, 24}, "cyclic counts");
    o.require(divisibility_obstruction(cyc, 3).witness_dim == 0u, "cyclic obstruction index");

    std::vector<std::vector<long>> lattices{cube, cyc};
    lattices.push_back(counts_of(Tuple<Rational>{3, {rmat({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}), rmat({{1, 0, 0}, {0, -1, 0}, {0, 0, -1}})}}));
    lattices.push_back(counts_of(to_floating(z_axis_tuple({q("1/5")}))));
    lattices.push_back(counts_of(to_floating(z_axis_tuple({q("1/4"), q("1/2")}))));
    lattices.push_back(counts_of(Tuple<Rational>{5, {rmat({{0, 0, 0, 0, 1}, {1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}})}}));
    for (const auto& c : lattices) o.require(euler_check(c, c.size()), "chi != 2 on an odd-dimensional lattice");
    if (o.pass) o.detail = "cube (6,12,8) fires at i=2, cyclic-3 (14,36,24) fires at i=0, chi=2 on " + std::to_string(lattices.size()) + " lattices";
    return o;
}

oracle::QMat to_qmat(const Matrix<Rational>& m)
{
    oracle::QMat out(m.rows(), std::vector<mpq_class>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
    }
    return out;
}

// 10
Outcome fixed_points()
{
    Outcome o;
    std::mt19937_64 rng(10);
    int common = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t d = 2 + rng() % 3;
        const std::size_t k = 1 + rng() % 3;
        const bool shared = rng() % 2 == 0;
        const auto axis = random_cayley_rotation(static_cast<int>(d), rng);
        std::vector<Matrix<Rational>> mats;
        std::vector<oracle::QMat> qm;
        for (std::size_t i = 0; i < k; ++i) {
            Matrix<Rational> g;
            if (shared) {
                const auto b = random_cayley_rotation(static_cast<int>(d) - 1, rng);
                g = Matrix<Rational>::identity(d);
                for (std::size_t x = 0; x + 1 < d; ++x) {
                    for (std::size_t y = 0; y + 1 < d; ++y) g(x, y) = b(x, y);
                }
                g = axis * g * axis.transpose();
            } else {
                g = random_cayley_rotation(static_cast<int>(d), rng);
            }
            mats.push_back(g - Matrix<Rational>::identity(d));
            qm.push_back(to_qmat(mats.back()));
        }
        const auto res = common_fixed_point_test(mats);
        o.require(res.common == oracle::common_kernel(qm), "disagreement on instance " + std::to_string(trial));
        if (res.common) {
            ++common;
            o.require(res.witness_verified, "unverified witness on instance " + std::to_string(trial));
        }
    }
    const auto z = z_axis_tuple({q("1/5"), q("3/7")});
    const auto id = Matrix<CyclotomicNumber>::identity(3);
    const auto coaxial = common_fixed_point_test(std::vector{z.rotations[0] - id, z.rotations[1] - id});
    o.require(coaxial.common && coaxial.witness_verified, "coaxial rotations");
    if (o.pass) o.detail = "100 instances agree with the stacked-kernel oracle (" + std::to_string(common) + " with a common axis); coaxial witness verified";
    return o;
}

template <class T>
bool brute_division_exists(const OrbitReport<T>& rep, const Tuple<T>& tuple)
{
    const std::size_t n = rep.points.size();
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<std::size_t> a;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask >> i & 1u) a.push_back(i);
        }
        if (is_orbit_partition(rep, tuple, a)) return true;
    }
    return false;
}

// 11
Outcome finite_orbits()
{
    Outcome o;
    using C = CyclotomicNumber;
    const Vector<C> e1{C(1), C(0), C(0)};
    const auto triple = z_axis_tuple({q("1/3"), q("2/3"), Rational(1)});
    const auto rep = orbit(e1, triple, 100);
    const auto a = divide_finite_orbit(rep, triple);
    o.require(rep.points.size() == 3, "orbit size");
    o.require(a && a->size() == 1 && is_orbit_partition(rep, triple, *a), "no singleton division");
    o.require(brute_division_exists(rep, triple), "brute force disagrees (r=3)");
    for (const char* t : {"1/3", "2/3"}) {
        const auto pair = z_axis_tuple({q(t), Rational(0)});
        const auto rp = orbit(e1, pair, 100);
        o.require(rp.points.size() % 2 == 1, "orbit not odd");
        o.require(!divide_finite_orbit(rp, pair), "r=2 odd orbit divided");
        o.require(!brute_division_exists(rp, pair), "brute force disagrees (r=2)");
    }
    const auto five = z_axis_tuple({q("1/5"), q("2/5"), q("3/5"), q("4/5"), Rational(0)});
    const auto r5 = orbit(e1, five, 100);
    const auto a5 = divide_finite_orbit(r5, five);
    o.require(a5.has_value() == brute_division_exists(r5, five) && (!a5 || is_orbit_partition(r5, five, *a5)), "r=5 orbit");
    if (o.pass) o.detail = "singleton for the order-3 triple, none for r=2 over 3-point orbits, all checked against exhaustive subsets";
    return o;
}

// 12
Outcome lifting_suite()
{
    Outcome o;
    const auto t0 = Clock::now();
    const auto base = base_division({q("1/3"), q("2/3"), Rational(0)}, ArcSet{{{Rational(0), q("1/3")}}});
    const auto s3 = lift(base, 3);
    const auto s5 = lift(s3, 3);
    double worst_se = 0.0;
    for (const auto* desc : {&s3, &s5}) {
        for (std::uint64_t seed = 0; seed <= 2; ++seed) {
            const auto rep = verify_partition(*desc, 100000, seed, 4);
            o.require(rep.violation_count == 0, "violations at dim " + std::to_string(desc->dim()));
            o.require(rep.samples == 100000, "sample count");
            o.require(rep.max_piece_deviation_se <= 5.0, "piece measure off by " + fmt(rep.max_piece_deviation_se) + " SE");
            worst_se = std::max(worst_se, rep.max_piece_deviation_se);
        }
    }
    const double dt = seconds_since(t0);
    o.require(dt < 60.0, "runtime " + fmt(dt) + " s");
    if (o.pass) o.detail = "S^3 and S^5, seeds 0-2, 1e5 samples: 0 violations, worst deviation " + fmt(worst_se) + " SE, " + fmt(dt) + " s";
    return o;
}

// 13
Outcome synthesis_suite()
{
    Outcome o;
    std::mt19937_64 rng(13);
    double orth = 0.0;
    double det = 0.0;
    std::size_t failures = 0;
    for (int k = 0; k < 1000; ++k) {
        const std::size_t d = 2 + static_cast<std::size_t>(k % 3);
        const std::size_t r = 1 + rng() % 4;
        try {
            const auto res = complete_rows(random_upper_entries(d, r, rng));
            orth = std::max(orth, res.max_orthonormality_residual);
            det = std::max(det, res.max_det_residual);
            if (!(res.max_distance_from_identity < synthesis_delta(d).get_d())) ++failures;
        } catch (const std::exception&) {
            ++failures;
        }
    }
    o.require(failures == 0, std::to_string(failures) + " failed completions");
    o.require(orth <= 1e-12, "orthonormality residual " + fmt(orth));
    o.require(det <= 1e-10, "determinant residual " + fmt(det));
    for (std::size_t d = 2; d <= 4; ++d) {
        const auto res = complete_rows(UpperEntries{d, {std::vector<double>(d * (d - 1) / 2, 0.0)}});
        o.require(res.tuple.rotations[0] == Matrix<double>::identity(d), "zero entries did not give the identity");
    }
    if (o.pass) o.detail = "1000 draws, max orthonormality " + fmt(orth) + ", max |det-1| " + fmt(det) + ", all within 1/(2^d d!)";
    return o;
}

std::string capture(const std::string& cmd)
{
    std::string out;
    FILE* pipe = ::popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!pipe) return "<popen failed>";
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    const int st = ::pclose(pipe);
    if (!WIFEXITED(st) || WEXITSTATUS(st) != 0) out += "<exit " + std::to_string(WEXITSTATUS(st)) + ">";
    return out;
}

// 14
Outcome determinism(const std::string& cli)
{
    Outcome o;
    if (cli.empty()) {
        o.require(false, "no CLI path given");
        return o;
    }
    const auto dir = std::filesystem::temp_directory_path() / "spherediv_acceptance";
    std::filesystem::create_directories(dir);
    const auto tuple = dir / "cube.json";
    std::ofstream(tuple) << R"({"mode":"exact","dim":3,"rotations":[[["0","-1","0"],["1","0","0"],["0","0","1"]],)"
                         << R"([["1","0","0"],["0","0","-1"],["0","1","0"]],[["1","0","0"],["0","1","0"],["0","0","1"]]]})";
    const auto lifted = dir / "lift.json";
    capture(cli + " lift --base-angles 1/3,2/3,0 --target-dim 4 -o " + lifted.string());
    const std::vector<std::string> commands{
        "synth-generic --dim 3 --r 2 --seed 7 --word-cap 4 --nmax 3",
        "verify-partition --desc " + lifted.string() + " --samples 20000 --seed 1",
        "obstruct --dim 3 --tuple " + tuple.string() + " --nmax 4 --witness 2 --samples 200 --seed 3",
        "points --dim 3 --count 30 --seed 5",
        "basis --dim 3 --degree 3 --seed 9",
        "orbit --tuple " + tuple.string() + " --point 3/5,4/5,0 --split --divide --bound-samples 20 --seed 4",
        "circle classify --angles 1/12,4/12,3/12,0",
        "euler-check --generators " + tuple.string() + " --r 3",
    };
    for (const auto& c : commands) {
        const auto a = capture(cli + " " + c);
        const auto b = capture(cli + " " + c);
        o.require(a == b && a.size() > 50 && a.find("<exit") == std::string::npos, "outputs differ: " + c);
    }
    std::filesystem::remove_all(dir);
    if (o.pass) o.detail = std::to_string(commands.size()) + " commands produce byte-identical JSON on repeat runs";
    return o;
}

} // namespace

int main(int argc, char** argv)
{
    const std::string cli = argc > 1 ? argv[1] : "";
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"gegenbauer correctness", gegenbauer_correctness},
        {"harmonic dimensions and zonal bases", dimensions_and_bases},
        {"Funk-Hecke quadrature", funk_hecke},
        {"identity tuple determinant law", identity_law},
        {"circle cross-validation of obstruction degrees", circle_cross_validation},
        {"fractional witness validity", witness_validity},
        {"circle classification suite r<=4", circle_suite},
        {"tiling spot values", tiling_spots},
        {"Euler characteristic suite", euler_suite},
        {"common fixed point test", fixed_points},
        {"finite orbit division", finite_orbits},
        {"lifted partition verification", lifting_suite},
        {"near-identity synthesis", synthesis_suite},
        {"CLI determinism", [&] { return determinism(cli); }},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        if (!o.pass) ++failed;
        std::cout << (o.pass ? "PASS" : "FAIL") << " [" << (i + 1) << "] " << criteria[i].first << ": " << o.detail << std::endl;
    }
    return failed == 0 ? 0 : 1;
}

#include "spherediv/lifting.hpp"

#include "spherediv/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <random>
#include <thread>

namespace spherediv {

std::size_t DivisionDescriptor::dim() const
{
    if (std::holds_alternative<BaseDivision>(node)) return 2;
    if (const auto* l = std::get_if<LiftedDivision>(&node)) return l->lower->dim() + 2;
    return std::get<PlaceholderDivision>(node).dim;
}

std::size_t DivisionDescriptor::pieces() const
{
    if (const auto* b = std::get_if<BaseDivision>(&node)) return b->turns.size();
    if (const auto* l = std::get_if<LiftedDivision>(&node)) return l->r;
    return std::get<PlaceholderDivision>(node).r;
}

namespace {

bool verified(const DivisionDescriptor& d)
{
    if (const auto* b = std::get_if<BaseDivision>(&d.node)) {
        std::vector<Angle> angles(b->turns.begin(), b->turns.end());
        return b->turns.size() >= 2 && verify_arcset(angles, b->arcs);
    }
    if (const auto* l = std::get_if<LiftedDivision>(&d.node)) return l->lower && l->r == l->lower->pieces() && verified(*l->lower);
    return true; // a placeholder stands for an assumed division

}

bool in_arcs(const ArcSet& arcs, const Rational& t)
{
    return std::any_of(arcs.arcs.begin(), arcs.arcs.end(), [&](const Arc& a) { return a.start <= t && t < a.end; });
}

// Distance in turns from t to the nearest of the given boundary points, on the circle.
double circle_distance(const Rational& t, const std::vector<Rational>& marks)
{
    double best = 1.0;
    for (const auto& m : marks) {
        const double x = to_double(frac(t - m));
        best = std::min({best, x, 1.0 - x});
    }
    return best;
}

std::size_t circle_blocks(const DivisionDescriptor& d)
{
    if (std::holds_alternative<BaseDivision>(d.node)) return 1;
    if (const auto* l = std::get_if<LiftedDivision>(&d.node)) return circle_blocks(*l->lower) + 1;
    return 0;
}

// Angles at which the decision for the outermost relevant level changes.
std::vector<Rational> boundaries(const DivisionDescriptor& d)
{
    std::vector<Rational> marks;
    if (const auto* b = std::get_if<BaseDivision>(&d.node)) {
        for (const auto& t : b->turns) {
            for (const auto& a : b->arcs.arcs) {
                marks.push_back(frac(a.start + t));
                marks.push_back(frac(a.end + t));
            }
        }
    } else if (const auto* l = std::get_if<LiftedDivision>(&d.node)) {
        for (std::size_t k = 0; k < l->r; ++k) marks.push_back(ratio(static_cast<long>(k), static_cast<long>(l->r)));
    }
    return marks;
}

std::uint64_t splitmix(std::uint64_t x)
{
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

} // namespace

DivisionDescriptor base_division(std::vector<Rational> turns, ArcSet arcs)
{
    for (auto& t : turns) t = frac(t);
    DivisionDescriptor d{BaseDivision{std::move(turns), std::move(arcs)}};
    if (!verified(d)) throw InputError("arc set does not divide the circle under the given turns");
    return d;
}

DivisionDescriptor lift(const DivisionDescriptor& lower, std::size_t r)
{
    if (r < 2) throw InputError("lifting needs r >= 2");
    if (lower.pieces() != r) {
        throw InputError("lower division has " + std::to_string(lower.pieces()) + " pieces, expected r = " + std::to_string(r));
    }
    if (!verified(lower)) throw InputError("lower division does not verify as a partition");
    return {LiftedDivision{std::make_shared<const DivisionDescriptor>(lower), r}};
}

LiftedRotationTuple rotations_of(const DivisionDescriptor& desc)
{
    LiftedRotationTuple out;
    out.dim = desc.dim();
    if (const auto* b = std::get_if<BaseDivision>(&desc.node)) {
        for (const auto& t : b->turns) out.block_turns.push_back({t});
        return out;
    }
    if (const auto* p = std::get_if<PlaceholderDivision>(&desc.node)) {
        out.free_dim = p->dim;
        out.block_turns.assign(p->r, {});
        return out;
    }
    const auto& l = std::get<LiftedDivision>(desc.node);
    out = rotations_of(*l.lower);
    out.dim = desc.dim();
    for (std::size_t i = 0; i < l.r; ++i) {
        out.block_turns[i].push_back(frac(ratio(static_cast<long>(i + 1), static_cast<long>(l.r))));
    }
    return out;
}

Tuple<CyclotomicNumber> exact_rotations(const LiftedRotationTuple& rot)
{
    if (rot.free_dim != 0) throw PreconditionError("placeholder rotations are unspecified");
    std::vector<Rational> all;
    for (const auto& bt : rot.block_turns) all.insert(all.end(), bt.begin(), bt.end());
    const auto field = CyclotomicField::get(cyclotomic_order_for(all));
    Tuple<CyclotomicNumber> t{rot.dim, {}};
    for (const auto& bt : rot.block_turns) {
        auto m = Matrix<CyclotomicNumber>::identity(rot.dim);
        for (std::size_t b = 0; b < bt.size(); ++b) m = m * plane_rotation(rot.dim, 2 * b, 2 * b + 1, bt[b], field);
        t.rotations.push_back(std::move(m));
    }
    return t;
}

std::optional<bool> in_piece(const DivisionDescriptor& desc, const PolarPoint& p, double margin)
{
    if (const auto* b = std::get_if<BaseDivision>(&desc.node)) {
        if (p.angles.size() != 1) throw InputError("point does not match the descriptor's dimension");
        return in_arcs(b->arcs, frac(p.angles[0]));
    }
    if (std::holds_alternative<PlaceholderDivision>(desc.node)) return std::nullopt;
    const auto& l = std::get<LiftedDivision>(desc.node);
    if (p.angles.empty() || p.radii.size() != p.angles.size()) throw InputError("point does not match the descriptor's dimension");
    if (p.radii.back() > margin) {
        const Rational t = frac(p.angles.back());
        return t < Rational(1, static_cast<long>(l.r));
    }
    PolarPoint q = p;
    q.radii.pop_back();
    q.angles.pop_back();
    return in_piece(*l.lower, q, margin);
}

PolarPoint apply_inverse(const LiftedRotationTuple& rot, std::size_t i, const PolarPoint& p)
{
    const auto& bt = rot.block_turns.at(i);
    if (bt.size() != p.angles.size()) throw InputError("point does not match the rotation blocks");
    PolarPoint q = p;
    for (std::size_t b = 0; b < bt.size(); ++b) q.angles[b] = frac(q.angles[b] - bt[b]);
    return q;
}

Membership membership(const DivisionDescriptor& desc, const PolarPoint& p, double margin)
{
    const auto rot = rotations_of(desc);
    Membership m;
    for (std::size_t i = 0; i < rot.block_turns.size(); ++i) {
        const auto in = in_piece(desc, apply_inverse(rot, i, p), margin);
        if (!in) {
            m.null_set = true;
            continue;
        }
        if (*in) {
            ++m.multiplicity;
            if (!m.piece) m.piece = i;
        }
    }
    if (m.null_set) m.piece.reset();
    return m;
}

std::vector<double> to_cartesian(const PolarPoint& p)
{
    std::vector<double> x = p.free;
    for (std::size_t b = 0; b < p.angles.size(); ++b) {
        const double a = 2.0 * std::numbers::pi * to_double(p.angles[b]);
        x.push_back(p.radii[b] * std::cos(a));
        x.push_back(p.radii[b] * std::sin(a));
    }
    return x;
}

PartitionReport verify_partition(const DivisionDescriptor& desc, std::size_t samples, std::uint64_t seed, unsigned threads)
{
    const auto rot = rotations_of(desc);
    const std::size_t r = desc.pieces();
    const std::size_t blocks = circle_blocks(desc);
    const std::size_t free_dim = rot.free_dim;
    const auto marks = boundaries(desc);
    const long denom = 1'000'000L * static_cast<long>(r);

    constexpr std::size_t chunk = 10'000;
    const std::size_t chunks = (samples + chunk - 1) / chunk;
    std::vector<PartitionReport> partial(chunks);
    std::atomic<std::size_t> next{0};

    auto work = [&] {
        for (std::size_t c = next++; c < chunks; c = next++) {
            PartitionReport& rep = partial[c];
            rep.piece_counts.assign(r, 0);
            std::mt19937_64 rng(splitmix(seed ^ splitmix(c)));
            std::normal_distribution<double> gauss(0.0, 1.0);
            std::uniform_int_distribution<long> angle(0, denom - 1);
            const std::size_t count = std::min(chunk, samples - c * chunk);
            for (std::size_t s = 0; s < count; ++s) {
                PolarPoint p;
                double norm2 = 0.0;
                for (std::size_t k = 0; k < free_dim; ++k) {
                    p.free.push_back(gauss(rng));
                    norm2 += p.free.back() * p.free.back();
                }
                for (std::size_t b = 0; b < blocks; ++b) {
                    const double u = gauss(rng);
                    const double v = gauss(rng);
                    p.radii.push_back(std::hypot(u, v));
                    norm2 += u * u + v * v;
                    p.angles.emplace_back(angle(rng), denom);
                    p.angles.back().canonicalize();
                }
                const double norm = std::sqrt(norm2);
                for (auto& x : p.free) x /= norm;
                for (auto& x : p.radii) x /= norm;
                if (blocks == 1 && free_dim == 0) p.radii[0] = 1.0;

                const bool thin = !p.radii.empty() && p.radii.back() < kBoundaryMargin;
                const bool edge = !p.angles.empty() && circle_distance(p.angles.back(), marks) < kBoundaryMargin;
                if (blocks == 0 || thin || edge) {
                    ++rep.rejected;
                    continue;
                }
                ++rep.retained;
                const auto m = membership(desc, p);
                if (m.multiplicity == 1 && m.piece && !m.null_set) {
                    ++rep.piece_counts[*m.piece];
                } else {
                    ++rep.violation_count;
                    if (rep.violations.size() < 10) {
                        PartitionViolation v{to_cartesian(p), {}, m.multiplicity};
                        for (const auto& a : p.angles) v.angles.push_back(a.get_str());
                        rep.violations.push_back(std::move(v));
                    }
                }
            }
        }
    };
    const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(chunks, 1))));
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned k = 0; k < workers; ++k) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    PartitionReport out;
    out.samples = samples;
    out.seed = seed;
    out.piece_counts.assign(r, 0);
    for (const auto& rep : partial) {
        out.retained += rep.retained;
        out.rejected += rep.rejected;
        out.violation_count += rep.violation_count;
        for (std::size_t i = 0; i < r; ++i) out.piece_counts[i] += rep.piece_counts[i];
        for (const auto& v : rep.violations) {
            if (out.violations.size() < 10) out.violations.push_back(v);
        }
    }
    if (out.retained > 0) {
        const double p = 1.0 / static_cast<double>(r);
        const double se = std::sqrt(p * (1.0 - p) / static_cast<double>(out.retained));
        for (auto c : out.piece_counts) {
            const double frac_i = static_cast<double>(c) / static_cast<double>(out.retained);
            out.max_piece_deviation_se = std::max(out.max_piece_deviation_se, std::fabs(frac_i - p) / se);
        }
    }
    return out;
}

} // namespace spherediv

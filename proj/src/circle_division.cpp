#include "spherediv/circle_division.hpp"

#include "spherediv/cyclotomic.hpp"
#include "spherediv/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <cctype>
#include <numeric>

namespace spherediv {

namespace {

void add_formal(std::map<std::string, Rational>& f, const std::string& name, const Rational& c)
{
    auto& slot = f[name];
    slot += c;
    if (sgn(slot) == 0) f.erase(name);
}

bool valid_name(const std::string& s)
{
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    return std::all_of(s.begin(), s.end(), [](char ch) { return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'; });
}

long lcm_denominators(const std::vector<Rational>& xs)
{
    long q = 1;
    for (const auto& x : xs) {
        const Integer& den = x.get_den();
        if (!den.fits_slong_p()) throw InputError("turn denominator too large");
        q = std::lcm(q, den.get_si());
        if (q > 1'000'000) throw InputError("common turn denominator exceeds 10^6");
    }
    return q;
}

long to_cell(const Rational& x, long q)
{
    const Rational c = x * q;
    return c.get_num().get_si() / c.get_den().get_si();
}

ArcSet normalize(std::vector<Arc> arcs)
{
    std::sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) { return a.start < b.start; });
    ArcSet out;
    for (const auto& a : arcs) {
        if (!(a.start < a.end)) continue;
        if (!out.arcs.empty() && out.arcs.back().end == a.start) {
            out.arcs.back().end = a.end;
        } else {
            out.arcs.push_back(a);
        }
    }
    return out;
}

// Arcs of a translated by delta, split at the wrap point.
std::vector<Arc> shifted(const ArcSet& arcs, const Rational& delta)
{
    std::vector<Arc> out;
    for (const auto& a : arcs.arcs) {
        const Rational s = frac(a.start + delta);
        const Rational e = s + (a.end - a.start);
        if (e <= 1) {
            out.push_back({s, e});
        } else {
            out.push_back({s, Rational(1)});
            out.push_back({Rational(0), e - 1});
        }
    }
    return out;
}

ArcSet place_for(const ArcSet& translated, const Angle& last, std::vector<std::string>* notes)
{
    if (!last.is_rational()) {
        if (notes) notes->push_back("arcs are given for the tuple translated so that the last angle is 0");
        return translated;
    }
    return normalize(shifted(translated, -last.turn));
}

bool group_cancels(const std::vector<Rational>& turns, long q, long n, const std::shared_ptr<const CyclotomicField>& field)
{
    std::vector<Rational> poly(static_cast<std::size_t>(q), Rational(0));
    double re = 0.0;
    double im = 0.0;
    for (const auto& t : turns) {
        const long e = (n % q) * to_cell(t, q) % q;
        poly[static_cast<std::size_t>(e)] += 1;
        const double a = 2.0 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(q);
        re += std::cos(a);
        im += std::sin(a);
    }
    // Rounding error is far below this, so a larger modulus proves the sum is nonzero.
    if (std::hypot(re, im) > 1e-9) return false;
    const auto red = field->reduce(std::move(poly));
    return std::all_of(red.begin(), red.end(), [](const Rational& c) { return sgn(c) == 0; });
}

} // namespace

Angle operator+(const Angle& a, const Angle& b)
{
    Angle r(a.turn + b.turn);
    r.formal = a.formal;
    for (const auto& [k, v] : b.formal) add_formal(r.formal, k, v);
    return r;
}

Angle operator-(const Angle& a, const Angle& b)
{
    Angle r(a.turn - b.turn);
    r.formal = a.formal;
    for (const auto& [k, v] : b.formal) add_formal(r.formal, k, -v);
    return r;
}

Angle parse_angle(std::string_view text)
{
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    }
    if (s.empty()) throw InputError("empty angle");
    Angle out;
    Rational turn(0);
    std::size_t pos = 0;
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (pos != 0) {
            throw InputError("malformed angle: " + std::string(text));
        }
        std::size_t end = pos;
        while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
        const std::string term = s.substr(pos, end - pos);
        if (term.empty()) throw InputError("malformed angle: " + std::string(text));
        const auto star = term.find('*');
        if (star != std::string::npos) {
            const std::string name = term.substr(star + 1);
            if (!valid_name(name)) throw InputError("bad generator name in angle: " + std::string(text));
            add_formal(out.formal, name, parse_rational(term.substr(0, star)) * sign);
        } else if (std::isalpha(static_cast<unsigned char>(term[0]))) {
            if (!valid_name(term)) throw InputError("bad generator name in angle: " + std::string(text));
            add_formal(out.formal, term, Rational(sign));
        } else {
            turn += parse_rational(term) * sign;
        }
        pos = end;
    }
    out.turn = frac(turn);
    return out;
}

std::string to_string(const Angle& a)
{
    std::string s = a.turn.get_str();
    for (const auto& [name, c] : a.formal) {
        s += sgn(c) < 0 ? " - " : " + ";
        const Rational mag = abs(c);
        if (mag != 1) s += mag.get_str() + "*";
        s += name;
    }
    return s;
}

std::vector<Angle> parse_angles(std::string_view text)
{
    std::vector<Angle> out;
    std::size_t pos = 0;
    while (true) {
        const auto comma = text.find(',', pos);
        out.push_back(parse_angle(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos)));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

ArcSet arcs_from_cells(const std::vector<long>& cells, long n)
{
    std::vector<Arc> arcs;
    for (long c : cells) arcs.push_back({ratio(c, n), ratio(c + 1, n)});
    return normalize(std::move(arcs));
}

const char* to_string(Verdict v)
{
    switch (v) {
    case Verdict::constructive: return "constructive";
    case Verdict::fractional_only: return "fractional_only";
    case Verdict::not_fractional: return "not_fractional";
    case Verdict::heuristic_unknown: return "heuristic_unknown";
    }
    return "unknown";
}

std::optional<int> fractional_test(const std::vector<Angle>& tuple)
{
    if (tuple.size() < 2) throw InputError("a circle tuple needs at least two angles");
    std::map<std::map<std::string, Rational>, std::vector<Rational>> groups;
    std::vector<Rational> all;
    for (const auto& a : tuple) {
        groups[a.formal].push_back(a.turn);
        all.push_back(a.turn);
    }
    for (const auto& [formal, turns] : groups) {
        if (turns.size() < 2) return std::nullopt;
    }
    const long q = lcm_denominators(all);
    const auto field = CyclotomicField::get(static_cast<int>(q));
    for (long n = 1; n <= q; ++n) {
        bool ok = true;
        for (const auto& [formal, turns] : groups) {
            if (!group_cancels(turns, q, n, field)) {
                ok = false;
                break;
            }
        }
        if (ok) return static_cast<int>(n);
    }
    return std::nullopt;
}

std::vector<Rational> translated_turns(const std::vector<Angle>& tuple)
{
    std::vector<Rational> out;
    for (const auto& a : tuple) {
        const Angle diff = a - tuple.back();
        if (!diff.is_rational()) throw PreconditionError("angle differences are not rational");
        out.push_back(diff.turn);
    }
    return out;
}

std::optional<ArcSet> divide_r2(const Angle& t1, const Angle& t2)
{
    const Angle delta = t1 - t2;
    if (!delta.is_rational()) return std::nullopt;
    const long order = delta.turn.get_den().get_si();
    if (order % 2 != 0) return std::nullopt;
    std::vector<long> cells;
    for (long c = 0; c < order; c += 2) cells.push_back(c);
    return place_for(arcs_from_cells(cells, order), t2, nullptr);
}

std::optional<ArcSet> divide_r3(const Angle& t1, const Angle& t2, const Angle& t3)
{
    const Angle a = t1 - t3;
    const Angle b = t2 - t3;
    if (!a.is_rational() || !b.is_rational()) return std::nullopt;
    const long q = lcm_denominators({a.turn, b.turn});
    const Rational third(1, 3);
    const Rational two_thirds(2, 3);
    for (long n = 1; n <= q; ++n) {
        const Rational x = frac(a.turn * n);
        const Rational y = frac(b.turn * n);
        if (!((x == third && y == two_thirds) || (x == two_thirds && y == third))) continue;
        std::vector<long> cells;
        for (long j = 0; j < n; ++j) cells.push_back(3 * j);
        const ArcSet arcs = arcs_from_cells(cells, 3 * n);
        if (!verify_arcset({Angle(a.turn), Angle(b.turn), Angle(Rational(0))}, arcs)) return std::nullopt;
        return place_for(arcs, t3, nullptr);
    }
    return std::nullopt;
}

namespace {

// Finite cyclic reduction shared by r = 4 and r >= 5 rational tuples.
void reduce_and_tile(const std::vector<Angle>& tuple, CircleClassification& out, std::uint64_t node_budget)
{
    const auto turns = translated_turns(tuple);
    const long q = lcm_denominators(turns);
    out.group_order = q;
    out.residues.clear();
    for (const auto& t : turns) out.residues.push_back(to_cell(t, q));
    const TileResult tr = solve({q, out.residues}, node_budget);
    out.tile = tr.solution;
    if (tr.solution) {
        out.verdict = Verdict::constructive;
        out.arcs = place_for(arcs_from_cells(*tr.solution, q), tuple.back(), &out.notes);
    } else {
        out.verdict = out.n ? Verdict::fractional_only : Verdict::not_fractional;
    }
}

} // namespace

CircleClassification divide_r4(const std::vector<Angle>& tuple, std::uint64_t node_budget)
{
    if (tuple.size() != 4) throw InputError("divide_r4 needs four angles");
    CircleClassification out;
    out.n = fractional_test(tuple);
    if (!out.n) {
        out.verdict = Verdict::not_fractional;
        return out;
    }
    try {
        (void)translated_turns(tuple);
    } catch (const PreconditionError&) {
        out.verdict = Verdict::fractional_only;
        out.notes.push_back("the antipodal pairs carry distinct formal parts, so no finite arc division exists");
        return out;
    }
    reduce_and_tile(tuple, out, node_budget);
    if (*out.group_order % 4 == 0) {
        out.normalized_r4 = normalize_r4({*out.group_order, out.residues});
        out.normalization_failed = !out.normalized_r4.has_value();
        if (out.normalized_r4) {
            const auto [m, k] = *out.normalized_r4;
            if (closed_form_r4(m, k) != out.tile.has_value()) {
                out.notes.push_back("closed-form criterion disagrees with the tiling search");
            }
        }
    }
    return out;
}

CircleClassification classify(const std::vector<Angle>& tuple, std::uint64_t node_budget)
{
    const std::size_t r = tuple.size();
    if (r < 2) throw InputError("a circle tuple needs at least two angles");
    if (r == 4) return divide_r4(tuple, node_budget);
    CircleClassification out;
    out.n = fractional_test(tuple);
    if (r == 2 || r == 3) {
        out.arcs = r == 2 ? divide_r2(tuple[0], tuple[1]) : divide_r3(tuple[0], tuple[1], tuple[2]);
        out.verdict = out.arcs ? Verdict::constructive : Verdict::not_fractional;
        if (out.arcs.has_value() != out.n.has_value()) out.notes.push_back("construction and moment test disagree");
        if (out.verdict == Verdict::constructive) {
            const auto turns = translated_turns(tuple);
            out.group_order = lcm_denominators(turns);
            for (const auto& t : turns) out.residues.push_back(to_cell(t, *out.group_order));
        }
        return out;
    }
    out.extension = true;
    out.notes.push_back("extension beyond r = 4: finite cyclic reduction");
    bool rational = true;
    try {
        (void)translated_turns(tuple);
    } catch (const PreconditionError&) {
        rational = false;
    }
    if (!rational) {
        out.verdict = Verdict::heuristic_unknown;
        out.notes.push_back("formal angle differences: no complete decision procedure for r >= 5");
        return out;
    }
    reduce_and_tile(tuple, out, node_budget);
    return out;
}

bool verify_arcset(const std::vector<Angle>& tuple, const ArcSet& arcs)
{
    for (const auto& a : tuple) {
        if (!a.is_rational()) throw InputError("exact arc verification needs rational angles");
    }
    for (std::size_t i = 0; i < arcs.arcs.size(); ++i) {
        const auto& a = arcs.arcs[i];
        if (a.start < 0 || a.end > 1 || !(a.start < a.end)) return false;
        if (i > 0 && arcs.arcs[i - 1].end > a.start) return false;
    }
    std::vector<Arc> pieces;
    for (const auto& t : tuple) {
        auto s = shifted(arcs, t.turn);
        pieces.insert(pieces.end(), s.begin(), s.end());
    }
    std::sort(pieces.begin(), pieces.end(), [](const Arc& a, const Arc& b) { return a.start < b.start; });
    Rational cursor(0);
    for (const auto& p : pieces) {
        if (p.start != cursor) return false;
        cursor = p.end;
    }
    return cursor == 1;
}

} // namespace spherediv

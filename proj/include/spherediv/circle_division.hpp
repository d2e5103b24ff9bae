#ifndef SPHEREDIV_CIRCLE_DIVISION_HPP
#define SPHEREDIV_CIRCLE_DIVISION_HPP

#include "spherediv/cyclic_tiling.hpp"
#include "spherediv/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace spherediv {

/// Angle in turns: a rational part in [0, 1) plus a formal combination of named
/// generators standing for algebraically independent reals.
struct Angle {
    Rational turn;
    std::map<std::string, Rational> formal; ///< no zero coefficients

    Angle() = default;
    Angle(const Rational& t) : turn(frac(t)) {} // NOLINT(google-explicit-constructor)

    bool is_rational() const { return formal.empty(); }

    friend Angle operator+(const Angle& a, const Angle& b);
    friend Angle operator-(const Angle& a, const Angle& b);
    friend bool operator==(const Angle& a, const Angle& b) { return a.turn == b.turn && a.formal == b.formal; }
};

/// Parses "p/q", "tau", "p/q + a*tau1 - tau2" and similar sums.
Angle parse_angle(std::string_view text);
std::string to_string(const Angle& a);
/// Comma-separated list of angles.
std::vector<Angle> parse_angles(std::string_view text);

struct Arc {
    Rational start;
    Rational end;
    friend bool operator==(const Arc&, const Arc&) = default;
};

/// Sorted, disjoint half-open arcs [start, end) inside [0, 1).
struct ArcSet {
    std::vector<Arc> arcs;
    friend bool operator==(const ArcSet&, const ArcSet&) = default;
};

/// Union of the cells [a/N, (a+1)/N), adjacent cells merged.
ArcSet arcs_from_cells(const std::vector<long>& cells, long n);

enum class Verdict { constructive, fractional_only, not_fractional, heuristic_unknown };
const char* to_string(Verdict v);

struct CircleClassification {
    Verdict verdict = Verdict::not_fractional;
    std::optional<ArcSet> arcs;
    std::optional<int> n;               ///< smallest degree with vanishing moment sums
    std::optional<long> group_order;    ///< order of the cyclic group generated by the differences
    std::vector<long> residues;         ///< shifts in Z_{group_order} after translating the last angle to 0
    std::optional<std::vector<long>> tile;
    std::optional<std::pair<long, long>> normalized_r4; ///< (m, k)
    bool normalization_failed = false;
    bool extension = false;             ///< decided by the finite-group reduction beyond r = 4
    std::vector<std::string> notes;
};

/// Smallest n >= 1 with sum_i cos(n t_i) = sum_i sin(n t_i) = 0, or nullopt. Exact: angles are
/// grouped by formal part and each group must cancel on its own; rational parts are
/// tested as vanishing sums of roots of unity over n in [1, q].
std::optional<int> fractional_test(const std::vector<Angle>& tuple);

/// r = 2: arcs iff t1 - t2 has even finite order 2n; n cells of length 1/(2n).
std::optional<ArcSet> divide_r2(const Angle& t1, const Angle& t2);
/// r = 3: arcs {j/n} + [0, 1/(3n)) when (n t1, n t2) = (1/3, 2/3) up to swap after translating t3 to 0.
std::optional<ArcSet> divide_r3(const Angle& t1, const Angle& t2, const Angle& t3);
CircleClassification divide_r4(const std::vector<Angle>& tuple, std::uint64_t node_budget = kDefaultTilingBudget);

CircleClassification classify(const std::vector<Angle>& tuple, std::uint64_t node_budget = kDefaultTilingBudget);

/// Exact check that the rotated copies t_i + A partition [0, 1). Throws InputError for formal angles.
bool verify_arcset(const std::vector<Angle>& tuple, const ArcSet& arcs);

/// Rational turns of t_i - t_r; throws PreconditionError if a difference is not rational.
std::vector<Rational> translated_turns(const std::vector<Angle>& tuple);

} // namespace spherediv

#endif

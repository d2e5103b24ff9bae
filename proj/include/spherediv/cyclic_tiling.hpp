#ifndef SPHEREDIV_CYCLIC_TILING_HPP
#define SPHEREDIV_CYCLIC_TILING_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace spherediv {

/// Shifts k_1..k_r acting on Z_N; a solution is A with the translates k_i + A partitioning Z_N.
struct TileInstance {
    long modulus = 1;
    std::vector<long> shifts;
};

struct TileResult {
    std::optional<std::vector<long>> solution; ///< sorted
    std::uint64_t nodes = 0;
};

inline constexpr std::uint64_t kDefaultTilingBudget = 10'000'000;

/// Complete backtracking search branching on the smallest uncovered residue; the returned
/// set is the lexicographically least solution. Throws BudgetExceeded past `node_budget`.
TileResult solve(const TileInstance& instance, std::uint64_t node_budget = kDefaultTilingBudget);

/// Exact check that the translates k_i + A cover each residue exactly once.
bool is_tiling(const TileInstance& instance, const std::vector<long>& a);

/// Shifts (k, k+m, m, 0) over Z_{4m}.
TileInstance normalized_r4_instance(long m, long k);

/// Divisibility of Z_{4m} by (k, k+m, m, 0): always for even m, iff k = 2 (mod 4) for odd m.
/// Throws PreconditionError unless gcd(k, m) = 1.
bool closed_form_r4(long m, long k);

/// A = {-2ik : 0 <= i <= (m-1)/2} u {-(2i+1)k + 2m : 0 <= i <= (m-3)/2} for odd m, k = 2 (mod 4).
std::vector<long> odd_m_construction(long m, long k);

/// A = S u (2m + S), S = {2ik : 0 <= i < m/2}, for even m.
std::vector<long> even_m_construction(long m, long k);

/// Brings an r = 4 instance over Z_N to the form (k, k+m, m, 0) with N = 4m and gcd(k, m) = 1
/// using reorderings and negation. Among admissible forms, the least k in [0, N) is returned.
/// nullopt when no symmetry image has that shape.
std::optional<std::pair<long, long>> normalize_r4(const TileInstance& instance);

} // namespace spherediv

#endif

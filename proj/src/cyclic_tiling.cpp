#include "spherediv/cyclic_tiling.hpp"

#include "spherediv/errors.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

namespace spherediv {

namespace {

long mod(long a, long n) { return ((a % n) + n) % n; }

class Search {
public:
    Search(long n, std::vector<long> shifts, std::uint64_t budget)
        : n_(n), shifts_(std::move(shifts)), budget_(budget), covered_(static_cast<std::size_t>(n), 0)
    {
    }

    bool run() { return extend(0); }

    std::vector<long> chosen;
    std::uint64_t nodes = 0;

private:
    bool extend(long from)
    {
        long u = from;
        while (u < n_ && covered_[static_cast<std::size_t>(u)]) ++u;
        if (u == n_) return true;
        std::vector<long> cand;
        for (long k : shifts_) cand.push_back(mod(u - k, n_));
        std::sort(cand.begin(), cand.end());
        cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
        for (long a : cand) {
            if (++nodes > budget_) throw BudgetExceeded("tiling search exceeded " + std::to_string(budget_) + " nodes");
            if (!place(a, 1)) continue;
            chosen.push_back(a);
            if (extend(u + 1)) return true;
            chosen.pop_back();
            place(a, 0);
        }
        return false;
    }

    // Marks (or clears) the translates of a; marking fails without side effects on overlap.
    bool place(long a, char value)
    {
        if (value) {
            for (std::size_t i = 0; i < shifts_.size(); ++i) {
                const long c = mod(a + shifts_[i], n_);
                if (covered_[static_cast<std::size_t>(c)]) {
                    for (std::size_t j = 0; j < i; ++j) covered_[static_cast<std::size_t>(mod(a + shifts_[j], n_))] = 0;
                    return false;
                }
                covered_[static_cast<std::size_t>(c)] = 1;
            }
            return true;
        }
        for (long k : shifts_) covered_[static_cast<std::size_t>(mod(a + k, n_))] = 0;
        return true;
    }

    long n_;
    std::vector<long> shifts_;
    std::uint64_t budget_;
    std::vector<char> covered_;
};

void require_coprime(long m, long k)
{
    if (m < 1) throw PreconditionError("m must be positive");
    if (std::gcd(mod(k, 4 * m), m) != 1) {
        throw PreconditionError("gcd(k, m) must be 1 (k=" + std::to_string(k) + ", m=" + std::to_string(m) + ")");
    }
}

} // namespace

TileResult solve(const TileInstance& instance, std::uint64_t node_budget)
{
    const long n = instance.modulus;
    if (n < 1) throw InputError("modulus must be positive");
    if (instance.shifts.empty()) throw InputError("at least one shift is required");
    const auto r = static_cast<long>(instance.shifts.size());
    TileResult res;
    if (n % r != 0) return res;
    std::vector<long> shifts;
    for (long k : instance.shifts) shifts.push_back(mod(k, n));
    Search s(n, shifts, node_budget);
    const bool ok = s.run();
    res.nodes = s.nodes;
    if (ok) {
        std::sort(s.chosen.begin(), s.chosen.end());
        res.solution = std::move(s.chosen);
    }
    return res;
}

bool is_tiling(const TileInstance& instance, const std::vector<long>& a)
{
    const long n = instance.modulus;
    if (n < 1) return false;
    std::vector<int> count(static_cast<std::size_t>(n), 0);
    for (long k : instance.shifts)
        for (long x : a) ++count[static_cast<std::size_t>(mod(x + k, n))];
    return std::all_of(count.begin(), count.end(), [](int c) { return c == 1; });
}

TileInstance normalized_r4_instance(long m, long k)
{
    const long n = 4 * m;
    return {n, {mod(k, n), mod(k + m, n), mod(m, n), 0}};
}

bool closed_form_r4(long m, long k)
{
    require_coprime(m, k);
    if (m % 2 == 0) return true;
    return mod(k, 4) == 2;
}

std::vector<long> odd_m_construction(long m, long k)
{
    require_coprime(m, k);
    if (m % 2 == 0) throw PreconditionError("this construction needs odd m");
    if (mod(k, 4) != 2) throw PreconditionError("this construction needs k = 2 (mod 4)");
    const long n = 4 * m;
    std::vector<long> a;
    for (long i = 0; i <= (m - 1) / 2; ++i) a.push_back(mod(-2 * i * k, n));
    for (long i = 0; i <= (m - 3) / 2; ++i) a.push_back(mod(-(2 * i + 1) * k + 2 * m, n));
    std::sort(a.begin(), a.end());
    return a;
}

std::vector<long> even_m_construction(long m, long k)
{
    require_coprime(m, k);
    if (m % 2 != 0) throw PreconditionError("even-m construction needs even m");
    const long n = 4 * m;
    std::vector<long> a;
    for (long i = 0; i < m / 2; ++i) {
        a.push_back(mod(2 * i * k, n));
        a.push_back(mod(2 * i * k + 2 * m, n));
    }
    std::sort(a.begin(), a.end());
    return a;
}

std::optional<std::pair<long, long>> normalize_r4(const TileInstance& instance)
{
    const long n = instance.modulus;
    if (instance.shifts.size() != 4 || n < 4 || n % 4 != 0) return std::nullopt;
    const long m = n / 4;
    std::array<long, 4> s{};
    for (std::size_t i = 0; i < 4; ++i) s[i] = mod(instance.shifts[i], n);
    std::array<int, 4> perm{0, 1, 2, 3};
    std::optional<long> best;
    do {
        for (long sign : {1L, -1L}) {
            std::array<long, 4> t{};
            for (std::size_t i = 0; i < 4; ++i) t[i] = mod(sign * (s[perm[i]] - s[perm[3]]), n);
            if (t[2] != m || t[1] != mod(t[0] + m, n)) continue;
            if (std::gcd(t[0], m) != 1) continue;
            if (!best || t[0] < *best) best = t[0];
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (!best) return std::nullopt;
    return std::pair{m, *best};
}

} // namespace spherediv

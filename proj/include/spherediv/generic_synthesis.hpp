#ifndef SPHEREDIV_GENERIC_SYNTHESIS_HPP
#define SPHEREDIV_GENERIC_SYNTHESIS_HPP

#include "spherediv/group_actions.hpp"
#include "spherediv/obstruction.hpp"

#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace spherediv {

/// Entries strictly above the diagonal for each of r matrices, row by row.
struct UpperEntries {
    std::size_t d = 0;
    std::vector<std::vector<double>> blocks; ///< each of size d(d-1)/2
};

/// delta = 1/(2^d d!).
Rational synthesis_delta(std::size_t d);

/// Bound on the upper entries of rows 1..d-1: row m gets delta / (4d)^(d-m).
std::vector<Rational> epsilon_schedule(std::size_t d);

/// Uniform draw inside the schedule bounds (scaled by `fraction`).
UpperEntries random_upper_entries(std::size_t d, std::size_t r, std::mt19937_64& rng, double fraction = 1.0);

struct RootChoice {
    std::size_t matrix = 0;
    std::size_t row = 0; ///< 1-based
    double chosen = 0.0;
    double other = 0.0;
};

struct CompletionResult {
    Tuple<double> tuple;
    std::vector<std::vector<double>> row_residuals; ///< per matrix, max |<row_m, row_i> - [i = m]| over i <= m
    std::vector<RootChoice> roots;
    double max_orthonormality_residual = 0.0;
    double max_det_residual = 0.0;
    double max_distance_from_identity = 0.0;
};

/// Fills each matrix row by row: the diagonal entry is the root near 1 of the quadratic
/// obtained from the unit-norm condition after solving the orthogonality system
/// M x = f for the entries left of the diagonal. Throws PreconditionError naming the
/// matrix and row when M is singular, no real root lies near 1, or the result strays
/// beyond 1/(2^d d!) from the identity.
CompletionResult complete_rows(const UpperEntries& upper);

struct WordCheck {
    std::string word;
    double margin = 0.0; ///< ||w - I||_inf
};

struct PairCheck {
    std::string first;
    std::string second;
    bool common_fixed_point = false;
    double det = 0.0;
};

struct GenericityReport {
    std::string mode;
    std::size_t word_length_cap = 0;
    std::size_t words_checked = 0;
    bool words_pass = true;
    std::optional<WordCheck> first_failure;
    double min_word_margin = 0.0;
    bool pairs_applicable = false;
    std::size_t pairs_checked = 0;
    bool pairs_pass = true;
    std::vector<PairCheck> pair_failures;
    ObstructionReport obstruction;
    bool generic_candidate = false;
    std::vector<std::string> notes;
};

namespace detail {

template <class T>
bool is_identity(const Matrix<T>& m)
{
    const auto id = Matrix<T>::identity(m.rows());
    if constexpr (is_exact_v<T>) {
        return m == id;
    } else {
        return inf_norm(m - id) <= 1e-10;
    }
}

} // namespace detail

/// Necessary-style evidence for genericity: (a) no short reduced word evaluates to the
/// identity, (b) for odd d, short non-commuting word pairs share no fixed axis,
/// (c) the obstruction sweep up to n_max.
template <class T>
GenericityReport genericity_diagnostics(const Tuple<T>& tuple, std::size_t word_length_cap = 6, int n_max = 6,
                                        unsigned threads = 1, std::size_t pair_word_length = 2)
{
    GenericityReport rep;
    rep.mode = std::string(mode_name<T>());
    rep.word_length_cap = word_length_cap;
    const std::size_t d = tuple.dim;
    const auto id = Matrix<T>::identity(d);

    // words by extending prefixes, so each product costs one multiplication
    struct Node {
        GroupWord word;
        Matrix<T> value;
    };
    std::vector<Node> layer{{GroupWord{}, id}};
    std::vector<Node> short_words;
    rep.min_word_margin = std::numeric_limits<double>::infinity();
    for (std::size_t len = 1; len <= word_length_cap; ++len) {
        std::vector<Node> next;
        for (const auto& node : layer) {
            for (std::size_t g = 0; g < tuple.size(); ++g) {
                for (int e : {1, -1}) {
                    const auto& w = node.word.letters;
                    if (!w.empty() && w.back().generator == g && w.back().exponent == -e) continue;
                    Node child{node.word, node.value * (e > 0 ? tuple.rotations[g] : tuple.rotations[g].transpose())};
                    child.word.letters.push_back({g, e});
                    ++rep.words_checked;
                    const double margin = inf_norm(child.value - id);
                    rep.min_word_margin = std::min(rep.min_word_margin, margin);
                    if (detail::is_identity(child.value) && rep.words_pass) {
                        rep.words_pass = false;
                        rep.first_failure = WordCheck{to_string(child.word), margin};
                    }
                    if (len <= pair_word_length) short_words.push_back(child);
                    next.push_back(std::move(child));
                }
            }
        }
        layer = std::move(next);
    }

    rep.pairs_applicable = d % 2 == 1;
    if (rep.pairs_applicable) {
        for (std::size_t a = 0; a < short_words.size(); ++a) {
            for (std::size_t b = a + 1; b < short_words.size(); ++b) {
                const auto& x = short_words[a].value;
                const auto& y = short_words[b].value;
                const auto comm = x * y - y * x;
                const bool commute = is_exact_v<T> ? comm == Matrix<T>(d, d) : inf_norm(comm) <= 1e-6 * inf_norm(x - id) * inf_norm(y - id);
                if (commute) continue;
                ++rep.pairs_checked;
                const auto res = common_fixed_point_test(std::vector<Matrix<T>>{x - id, y - id});
                if (res.common) {
                    rep.pairs_pass = false;
                    if (rep.pair_failures.size() < 10) {
                        rep.pair_failures.push_back({to_string(short_words[a].word), to_string(short_words[b].word), true,
                                                     to_double(res.det)});
                    }
                }
            }
        }
    } else {
        rep.notes.push_back("pairwise fixed-point test applies to odd d only");
        if (d == 2) rep.notes.push_back("SO(2) is abelian, so commutator words are trivial and no free subgroup exists");
    }

    ObstructionOptions opts;
    opts.threads = threads;
    rep.obstruction = certify_degrees(tuple, n_max, opts);

    const bool all = rep.words_pass && rep.pairs_pass && rep.obstruction.all_obstructed();
    rep.generic_candidate = !is_exact_v<T> && all;
    if constexpr (is_exact_v<T>) {
        rep.notes.push_back("exact entries satisfy rational polynomial relations, so this tuple is never generic; "
                            "checks only probe freeness and local commutativity");
    }
    rep.notes.push_back("these checks are necessary conditions only; genericity cannot be certified from finite data");
    return rep;
}

} // namespace spherediv

#endif

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "sgf/factorization.hpp"
#include "sgf/presentation.hpp"

namespace sgf {

/**
 * Membership test. Runs the same bounded search as factorizations() but stops
 * at the first witness. The zero element is always a member (empty sum).
 */
bool contains(const SemigroupPresentation& sgp, const Element& alpha);

/**
 * Complete factorization set of alpha over the presentation's generators,
 * ascending lexicographic. Empty set when alpha is not in the semigroup.
 *
 * Search: depth-first over exponent prefixes. At each level the exponent of
 * one generator is bounded by the componentwise budget min_j floor(rem_j /
 * g_j) over the generator's positive free coordinates (bounded because the
 * semigroup is reduced); the last level is solved by division instead of
 * iteration. Torsion constraints are checked at the leaves: solving the free
 * projection first and filtering is exact, torsion adds no new free mass.
 */
FactorizationSet factorizations(const SemigroupPresentation& sgp,
                                const Element& alpha);

/**
 * Number of factorizations of every n in [0, upto] for a numerical
 * presentation, as one table. Coefficient recurrence of the product of the
 * geometric series 1/(1 - x^{n_i}): one pass per generator, O(r * upto)
 * additions. Throws NotNumericalError unless is_numerical().
 */
std::vector<Int> denumerant_table(const SemigroupPresentation& sgp,
                                  std::int64_t upto);

namespace detail {

// Coordinates are converted once to machine integers. Every intermediate
// value during the search stays within [0, max target coordinate], so a
// single up-front range check makes 64-bit arithmetic safe.
constexpr std::int64_t kCoordinateLimit = std::int64_t{1} << 62;

struct EnumProblem {
  std::size_t rank = 0;                       // number of usable generators
  std::size_t dim = 0;                        // free rank
  std::vector<std::vector<std::int64_t>> gen_free;   // [rank][dim]
  std::vector<std::vector<std::int64_t>> gen_tors;   // [rank][t]
  std::vector<std::int64_t> orders;                  // torsion orders
  std::vector<std::int64_t> target_free;             // [dim]
  std::vector<std::int64_t> target_tors;             // reduced residues
  // support[i][j]: some generator with index >= i has a positive j-th
  // free coordinate. Lets the search abandon budgets nobody can spend.
  std::vector<std::vector<char>> suffix_support;
};

// Builds the machine-integer problem for a subset of generators (all of them
// when subset is empty). Throws AmbientMismatchError on shape mismatch and
// std::overflow_error when a coordinate exceeds kCoordinateLimit.
EnumProblem make_problem(const SemigroupPresentation& sgp, const Element& alpha,
                         const std::vector<std::size_t>& subset = {});

// Runs the bounded search; visit receives each solution (exponents over the
// problem's generator order) and returns false to stop early. Returns false
// iff the visitor stopped the search.
bool enumerate(const EnumProblem& p,
               const std::function<bool(const std::vector<std::int64_t>&)>& visit);

// All vectors b in N^rank with weight sum(b) <= cap, ascending by weight and
// lexicographic within a weight. Visitor returns false to stop.
void for_each_weight_capped(
    std::size_t rank, std::int64_t cap,
    const std::function<bool(const std::vector<std::int64_t>&, std::int64_t)>&
        visit);

}  // namespace detail

}  // namespace sgf

#pragma once

#include <cstdint>
#include <vector>

#include "sgf/factorization.hpp"
#include "sgf/invariants.hpp"
#include "sgf/presentation.hpp"

namespace sgf {
namespace oracles {

// Deliberately naive reference implementations, coded without the production
// search paths so the two routes can disagree when one is wrong. Use in tests
// only; nothing here scales.

/**
 * Full box sweep: fix per-generator bounds once from the target, walk the
 * entire odometer, keep exact matches. No budget pruning, no early descent
 * cuts. Ascending lexicographic by construction.
 */
FactorizationSet naive_factorizations(const SemigroupPresentation& sgp,
                                      const Element& alpha);

/** Cell count of the box naive_factorizations would sweep for alpha. */
Int naive_box_volume(const SemigroupPresentation& sgp, const Element& alpha);

/**
 * Catenary degree by the chain definition: the least N whose
 * distance-at-most-N graph on Z(alpha) is connected, found by trying
 * N = 0, 1, 2, ... with a fresh traversal each time.
 */
std::int64_t catenary_oracle(const SemigroupPresentation& sgp,
                             const Element& alpha);

/**
 * Omega by bullet search: enumerate all b in N^r with weight at most cap,
 * call b a bullet when sum b_i g_i - alpha stays in the semigroup, keep the
 * componentwise-minimal bullets, report the largest weight among them.
 * exact mirrors omega_bounded: true only when the whole weight-cap shell
 * consists of bullets. Membership uses a local early-exit box sweep, not the
 * production search.
 */
OmegaResult bullet_oracle(const SemigroupPresentation& sgp,
                          const Element& alpha, std::int64_t cap);

}  // namespace oracles
}  // namespace sgf

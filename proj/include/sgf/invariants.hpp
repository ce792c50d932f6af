#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sgf/enumerate.hpp"
#include "sgf/factorization.hpp"
#include "sgf/presentation.hpp"

namespace sgf {

/**
 * Sorted distinct factorization lengths of alpha. Throws NotInSemigroupError
 * when alpha has no factorization.
 */
std::vector<std::int64_t> length_set(const SemigroupPresentation& sgp,
                                     const Element& alpha);

std::vector<std::int64_t> length_set_of(const FactorizationSet& zs);

/** Successive differences of the length set; empty for singleton sets. */
std::vector<std::int64_t> delta_of_element(const SemigroupPresentation& sgp,
                                           const Element& alpha);

std::vector<std::int64_t> delta_of_lengths(
    const std::vector<std::int64_t>& lengths);

std::int64_t max_length(const SemigroupPresentation& sgp, const Element& alpha);
std::int64_t min_length(const SemigroupPresentation& sgp, const Element& alpha);

/**
 * Apery set of a nonempty subset T of the generators (given by 0-based
 * indices): members alpha with alpha - t outside the semigroup for every t
 * in T. Candidates are filtered below min(T) * max-generator; the bound is
 * checked by counting Ap({min T}), which must have exactly min(T) elements,
 * and grown if the count falls short. Numerical presentations only.
 */
std::vector<std::int64_t> apery_set(const SemigroupPresentation& sgp,
                                    const std::vector<std::size_t>& subset);

/**
 * Maximum factorization length of alpha over the generator subset (0-based
 * indices), or empty when alpha is not in the subsemigroup the subset
 * generates. Numerical presentations use a longest-path table; general
 * ambients enumerate the restricted problem.
 */
std::optional<std::int64_t> max_length_restricted(
    const SemigroupPresentation& sgp, const std::vector<std::size_t>& subset,
    const Element& alpha);

struct OmegaResult {
  std::int64_t value = 0;
  bool exact = true;
};

/**
 * Omega-primality of a nonzero member of a numerical semigroup, via the
 * Apery route: the maximum of max_length_restricted(T, alpha + beta) over
 * nonempty generator subsets T and beta in apery_set(T), skipping pairs
 * where alpha + beta misses the subsemigroup. Always exact.
 */
OmegaResult omega(const SemigroupPresentation& sgp, const Element& alpha);

/**
 * Direct omega search for any ambient: enumerate b in N^r with weight at
 * most cap, keep the b that are minimal among those with sum b_i g_i - alpha
 * in the semigroup, report the largest weight found. exact is true only when
 * every weight-cap vector already dominates (then minimal vectors beyond the
 * cap cannot exist); otherwise the value is a lower bound.
 */
OmegaResult omega_bounded(const SemigroupPresentation& sgp,
                          const Element& alpha, std::int64_t cap);

/**
 * Distance between two factorizations: remove the common part (componentwise
 * minimum), take the larger of the two remaining lengths. Translation
 * invariant; zero iff equal.
 */
std::int64_t factorization_distance(const Factorization& a,
                                    const Factorization& b);

/**
 * Catenary degree of alpha: the least N such that any two factorizations are
 * joined by a chain with consecutive distances at most N. Equivalently the
 * bottleneck of connecting Z(alpha): sort pairwise distances ascending and
 * union components until one remains; the last edge used is the answer.
 * Zero when |Z(alpha)| <= 1. Throws NotInSemigroupError on non-members.
 */
std::int64_t catenary_degree(const SemigroupPresentation& sgp,
                             const Element& alpha);

std::int64_t catenary_of_set(const FactorizationSet& zs);

enum class CertificateStatus { Verified, HorizonTooSmall };

/**
 * Certificate for the semigroup-wide delta set of a numerical semigroup.
 * period is lcm(n_1, n_r), the divisor bound the eventual period obeys.
 * Verified means the per-element map n -> (membership, delta set) repeats
 * across [start, start + period) and [start + period, start + 2*period),
 * everything computed inside the scan horizon; start is the least such
 * onset (or the caller's start_hint when one was supplied).
 */
struct DeltaCertificate {
  std::int64_t period = 0;
  std::int64_t start = 0;
  std::int64_t window_begin = 0;  // [window_begin, window_end) was compared
  std::int64_t window_end = 0;
  CertificateStatus status = CertificateStatus::HorizonTooSmall;
};

struct DeltaSetResult {
  std::vector<std::int64_t> delta;  // sorted union
  DeltaCertificate certificate;
};

/**
 * Union of the element delta sets of a numerical semigroup with the
 * periodicity certificate above. When Verified, the union over
 * n <= start + period already equals the full union and is what is
 * returned; otherwise the union covers the whole scanned range.
 */
DeltaSetResult delta_of_semigroup(const SemigroupPresentation& sgp,
                                  std::int64_t horizon,
                                  std::optional<std::int64_t> start_hint = {});

/** Box-scan union of element delta sets for general ambients, no certificate. */
std::vector<std::int64_t> delta_union_over_box(const SemigroupPresentation& sgp,
                                               const Element& lo,
                                               const Element& hi);

struct ScanSelection {
  bool z_count = false;
  bool lengths = false;
  bool delta = false;
  bool max_len = false;
  bool min_len = false;
  bool omega = false;
  bool catenary = false;
  // Cap for the direct omega search on non-numerical presentations; ignored
  // for numerical ones, which use the exact route.
  std::int64_t omega_cap = 12;
};

struct ScanRecord {
  Element element;
  std::optional<Int> z_count;
  std::optional<std::vector<std::int64_t>> lengths;
  std::optional<std::vector<std::int64_t>> delta;
  std::optional<std::int64_t> max_len;
  std::optional<std::int64_t> min_len;
  std::optional<std::int64_t> omega;
  std::optional<bool> omega_exact;
  std::optional<std::int64_t> catenary;
};

struct ScanTable {
  std::vector<ScanRecord> records;  // ascending element order
};

/**
 * Per-element invariants over an inclusive range of a numerical semigroup.
 * Elements outside the semigroup are omitted. Work fans out across threads;
 * records land in ascending element order regardless.
 */
ScanTable scan_range(const SemigroupPresentation& sgp, std::int64_t from,
                     std::int64_t to, const ScanSelection& sel);

/** Same over an inclusive coordinate box, ascending lexicographic order. */
ScanTable scan_box(const SemigroupPresentation& sgp, const Element& lo,
                   const Element& hi, const ScanSelection& sel);

}  // namespace sgf

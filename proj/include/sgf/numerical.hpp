#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sgf/presentation.hpp"

namespace sgf {

/**
 * Boolean membership table for a numerical semigroup (or any subset of its
 * generators), n in [0, limit]. One forward pass per generator.
 */
class MembershipTable {
public:
  MembershipTable(const std::vector<std::int64_t>& gens, std::int64_t limit);

  bool contains(std::int64_t n) const {
    return n >= 0 && n <= limit_ && in_[static_cast<std::size_t>(n)];
  }
  std::int64_t limit() const { return limit_; }

private:
  std::int64_t limit_;
  std::vector<char> in_;
};

/**
 * Largest n outside the semigroup (the classical conductor question).
 * Computed with a growing membership table: once min-generator many
 * consecutive members appear, nothing larger can be a gap. Returns -1 for
 * <1> style semigroups containing every n.
 */
std::int64_t frobenius_number(const std::vector<std::int64_t>& gens);

/**
 * Length sets L(n) for every n in [0, horizon] at once, one bitset per n
 * (bit l set iff some factorization of n has length l). Recurrence: L(n) is
 * the union over generators of L(n - n_i) shifted up by one, seeded with
 * L(0) = {0}. Empty bitset exactly on non-members.
 */
class LengthSetTable {
public:
  LengthSetTable(const std::vector<std::int64_t>& gens, std::int64_t horizon);

  bool member(std::int64_t n) const;
  std::vector<std::int64_t> lengths(std::int64_t n) const;     // sorted
  std::vector<std::int64_t> delta(std::int64_t n) const;       // successive gaps
  std::int64_t horizon() const { return horizon_; }

private:
  std::int64_t horizon_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;  // row n at [n * words_, (n+1) * words_)
  const std::uint64_t* row(std::int64_t n) const {
    return bits_.data() + static_cast<std::size_t>(n) * words_;
  }
};

/**
 * Maximum factorization length of n over a subset of the generators, by a
 * longest-path table over [0, n]. Empty optional when n is not in the
 * subsemigroup generated by the subset.
 */
std::optional<std::int64_t> max_length_table_lookup(
    const std::vector<std::int64_t>& subset_gens, std::int64_t n);

}  // namespace sgf

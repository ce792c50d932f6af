#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "sgf/element.hpp"

namespace sgf {

/**
 * One expression of an element as a nonnegative combination of the
 * generators: exponents a with sum_i a_i * g_i = element. Length is the
 * exponent sum, cached because every invariant reads it.
 */
struct Factorization {
  std::vector<std::int64_t> exponents;
  std::int64_t length = 0;

  Factorization() = default;
  explicit Factorization(std::vector<std::int64_t> e)
      : exponents(std::move(e)),
        length(std::accumulate(exponents.begin(), exponents.end(),
                               std::int64_t{0})) {}

  bool operator==(const Factorization& o) const {
    return exponents == o.exponents;
  }
  bool operator<(const Factorization& o) const {  // ascending lex
    return exponents < o.exponents;
  }
};

/**
 * The complete set Z(element), canonically ordered ascending-lexicographic on
 * the exponent vectors. Empty exactly when the element is not in the
 * semigroup.
 */
struct FactorizationSet {
  Element element;
  std::vector<Factorization> factorizations;

  std::size_t count() const { return factorizations.size(); }
  bool empty() const { return factorizations.empty(); }
};

}  // namespace sgf

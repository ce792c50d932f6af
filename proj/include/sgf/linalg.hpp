#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sgf/numbers.hpp"

namespace sgf {

// Small dense exact linear algebra over the rationals. Everything here is
// fraction-free in spirit but plain mpq in practice; matrices stay tiny
// (interpolation systems, cone coordinate changes, rank checks).

using RatMatrix = std::vector<std::vector<Rat>>;

enum class SolveStatus { Unique, Inconsistent, Underdetermined };

struct SolveResult {
  SolveStatus status = SolveStatus::Inconsistent;
  std::vector<Rat> solution;  // meaningful only when Unique
};

/** Gaussian elimination on [A | b]; A is rows x cols, b has rows entries. */
SolveResult solve_exact(const RatMatrix& a, const std::vector<Rat>& b);

std::size_t matrix_rank(const RatMatrix& a);

/** Inverse of a square matrix, empty when singular. */
std::optional<RatMatrix> matrix_inverse(const RatMatrix& a);

}  // namespace sgf

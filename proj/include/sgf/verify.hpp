#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sgf {
namespace verify {

struct CaseResult {
  std::string name;
  bool pass = false;
  std::string detail;     // first failure, or a one-line summary when passing
  double seconds = 0.0;
};

/**
 * Built-in reproduction suite: recomputes the reference invariants of the
 * benchmark semigroups (<6,9,20>, <17,33,53,71>, two plane affine families)
 * and the randomized cross-checks, comparing against frozen expected values.
 * Prints one PASS/FAIL line per case to `out` as it goes and returns all
 * results. Everything is deterministic, seeds included.
 */
std::vector<CaseResult> run_suite(std::ostream& out);

bool all_passed(const std::vector<CaseResult>& results);

}  // namespace verify
}  // namespace sgf

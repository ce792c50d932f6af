#include "sgf/presentation.hpp"

#include <numeric>

#include "sgf/enumerate.hpp"

namespace sgf {

std::string violation_name(Violation::Kind k) {
  switch (k) {
    case Violation::Kind::NotReduced: return "NotReduced";
    case Violation::Kind::BadTorsionResidue: return "BadTorsionResidue";
    case Violation::Kind::NumericalGcdNotOne: return "NumericalGcdNotOne";
    case Violation::Kind::NotMinimal: return "NotMinimal";
  }
  return "?";
}

ValidationReport validate(const SemigroupPresentation& sgp) {
  ValidationReport report;
  bool reduced = true;

  for (std::size_t i = 0; i < sgp.size(); ++i) {
    const Element& g = sgp.generators[i];
    if (!g.has_nonzero_free()) {
      report.violations.push_back({Violation::Kind::NotReduced, i + 1});
      reduced = false;
    }
    for (std::size_t j = 0; j < g.torsion.size(); ++j) {
      auto m = sgp.ambient.torsion_orders[j];
      if (g.torsion[j] < 0 || g.torsion[j] >= m) {
        report.violations.push_back({Violation::Kind::BadTorsionResidue, i + 1});
        break;
      }
    }
  }

  if (sgp.ambient.free_rank == 1 && sgp.torsion_free() && sgp.free_gcd() != 1)
    report.violations.push_back({Violation::Kind::NumericalGcdNotOne, 0});

  // Minimality: no generator may lie in what the others generate. Needs a
  // reduced presentation, otherwise the membership search has no bounds.
  // Only the first offender is reported.
  if (reduced && sgp.size() > 1) {
    for (std::size_t i = 0; i < sgp.size(); ++i) {
      std::vector<std::size_t> others;
      others.reserve(sgp.size() - 1);
      for (std::size_t j = 0; j < sgp.size(); ++j)
        if (j != i) others.push_back(j);
      auto problem = detail::make_problem(sgp, sgp.generators[i], others);
      bool member = false;
      detail::enumerate(problem, [&](const std::vector<std::int64_t>&) {
        member = true;
        return false;
      });
      if (member) {
        report.violations.push_back({Violation::Kind::NotMinimal, i + 1});
        break;
      }
    }
  }
  return report;
}

}  // namespace sgf

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sgf/element.hpp"
#include "sgf/numbers.hpp"

namespace sgf {

/**
 * A finitely generated subsemigroup of the ambient, given by an ordered
 * generating set. Operations assume the set is minimal and the semigroup
 * reduced; validate() checks both. Instances are value types and are not
 * mutated after construction.
 */
struct SemigroupPresentation {
  AmbientSpec ambient;
  std::vector<Element> generators;

  SemigroupPresentation() = default;
  SemigroupPresentation(AmbientSpec a, std::vector<Element> gens)
      : ambient(std::move(a)), generators(std::move(gens)) {
    if (generators.empty())
      throw std::invalid_argument("presentation needs at least one generator");
    for (const auto& g : generators)
      require_same_ambient(ambient, g, "presentation");
  }

  // <n_1, ..., n_r> in N; callers must pass a strictly increasing list.
  static SemigroupPresentation numerical(
      const std::vector<std::int64_t>& gens) {
    std::vector<Element> es;
    es.reserve(gens.size());
    std::int64_t prev = 0;
    for (auto n : gens) {
      if (n <= prev)
        throw std::invalid_argument(
            "numerical generators must be positive and strictly increasing");
      prev = n;
      es.push_back(Element::scalar(Int(n)));
    }
    return SemigroupPresentation(AmbientSpec(1, {}), std::move(es));
  }

  std::size_t size() const { return generators.size(); }

  bool torsion_free() const { return ambient.torsion_orders.empty(); }

  Int free_gcd() const {
    Int g = 0;
    for (const auto& e : generators)
      for (const auto& c : e.free) g = int_gcd(g, c);
    return g;
  }

  // Numerical means dimension one, no torsion, gcd of generators 1.
  // d = 1 with gcd != 1 is still handled, just as an affine semigroup in N^1.
  bool is_numerical() const {
    return ambient.free_rank == 1 && torsion_free() && free_gcd() == 1;
  }

  // Generator values for the numerical case, as machine integers.
  std::vector<std::int64_t> numerical_generators() const {
    std::vector<std::int64_t> v;
    v.reserve(generators.size());
    for (const auto& e : generators) v.push_back(to_int64(e.free[0]));
    return v;
  }
};

struct Violation {
  enum class Kind { NotReduced, BadTorsionResidue, NumericalGcdNotOne, NotMinimal };
  Kind kind;
  // 1-based generator index for NotReduced / BadTorsionResidue / NotMinimal,
  // 0 for whole-presentation findings.
  std::size_t generator = 0;

  bool operator==(const Violation& o) const {
    return kind == o.kind && generator == o.generator;
  }
};

std::string violation_name(Violation::Kind k);

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }

  // NumericalGcdNotOne is always a warning (the presentation is used as an
  // affine semigroup in N^1). NotMinimal downgrades to a warning in permissive
  // mode; reducedness and residue-range findings are always errors.
  bool has_errors(bool permissive) const {
    for (const auto& v : violations) {
      switch (v.kind) {
        case Violation::Kind::NotReduced:
        case Violation::Kind::BadTorsionResidue:
          return true;
        case Violation::Kind::NotMinimal:
          if (!permissive) return true;
          break;
        case Violation::Kind::NumericalGcdNotOne:
          break;
      }
    }
    return false;
  }
};

// Checks reducedness, torsion residue ranges, the numerical gcd convention,
// and minimality of the generating set. Minimality reports only the first
// offending generator and is skipped entirely when the presentation is not
// reduced (membership search would not terminate).
ValidationReport validate(const SemigroupPresentation& sgp);

}  // namespace sgf

#pragma once

#include <cassert>
#include <cstdint>
#include <string>
#include <vector>

#include "sgf/errors.hpp"
#include "sgf/numbers.hpp"

namespace sgf {

/**
 * Ambient monoid N^d x Z/d_1 x ... x Z/d_t. Every semigroup presentation and
 * every element lives in one of these; mixing ambients is a hard error.
 */
struct AmbientSpec {
  std::size_t free_rank = 1;                 // d >= 1
  std::vector<std::int64_t> torsion_orders;  // each >= 2

  AmbientSpec() = default;
  AmbientSpec(std::size_t d, std::vector<std::int64_t> orders)
      : free_rank(d), torsion_orders(std::move(orders)) {
    if (free_rank == 0)
      throw std::invalid_argument("ambient free rank must be at least 1");
    for (auto o : torsion_orders)
      if (o < 2) throw std::invalid_argument("torsion order must be at least 2");
  }

  std::size_t torsion_rank() const { return torsion_orders.size(); }

  bool operator==(const AmbientSpec& o) const {
    return free_rank == o.free_rank && torsion_orders == o.torsion_orders;
  }
  bool operator!=(const AmbientSpec& o) const { return !(*this == o); }
};

/**
 * One element of an ambient monoid: nonnegative free coordinates plus torsion
 * residues. Construction does not reduce residues; validate() reports residues
 * outside [0, order) as BadTorsionResidue. All arithmetic reduces on the fly.
 */
struct Element {
  std::vector<Int> free;
  std::vector<std::int64_t> torsion;

  Element() = default;
  explicit Element(std::vector<Int> f, std::vector<std::int64_t> t = {})
      : free(std::move(f)), torsion(std::move(t)) {}

  // Numerical shorthand: a single free coordinate.
  static Element scalar(const Int& n) { return Element({n}); }

  bool matches(const AmbientSpec& a) const {
    return free.size() == a.free_rank && torsion.size() == a.torsion_rank();
  }

  bool is_zero() const {
    for (const auto& c : free)
      if (c != 0) return false;
    for (auto t : torsion)
      if (t != 0) return false;
    return true;
  }

  bool has_nonzero_free() const {
    for (const auto& c : free)
      if (c != 0) return true;
    return false;
  }

  bool operator==(const Element& o) const {
    return free == o.free && torsion == o.torsion;
  }
  bool operator!=(const Element& o) const { return !(*this == o); }
  bool operator<(const Element& o) const {  // lex, free then torsion
    if (free != o.free) return free < o.free;
    return torsion < o.torsion;
  }
};

inline void require_same_ambient(const AmbientSpec& a, const Element& e,
                                 const char* what) {
  if (!e.matches(a))
    throw AmbientMismatchError(std::string(what) +
                               ": element shape does not match the ambient");
}

inline Element element_add(const AmbientSpec& a, const Element& x,
                           const Element& y) {
  require_same_ambient(a, x, "element_add");
  require_same_ambient(a, y, "element_add");
  Element r = x;
  for (std::size_t j = 0; j < r.free.size(); ++j) r.free[j] += y.free[j];
  for (std::size_t j = 0; j < r.torsion.size(); ++j) {
    auto m = a.torsion_orders[j];
    r.torsion[j] = (((r.torsion[j] + y.torsion[j]) % m) + m) % m;
  }
  return r;
}

inline Element element_scale(const AmbientSpec& a, const Int& k,
                             const Element& x) {
  require_same_ambient(a, x, "element_scale");
  assert(k >= 0);
  Element r = x;
  for (auto& c : r.free) c *= k;
  for (std::size_t j = 0; j < r.torsion.size(); ++j) {
    auto m = a.torsion_orders[j];
    Int t = (Int(x.torsion[j]) * k) % m;
    r.torsion[j] = to_int64((t + m) % m);
  }
  return r;
}

// Canonical text form: "60" (single free coordinate), "2,3" (affine),
// "2,3|1,0" (free part, then torsion residues after the bar).
inline std::string element_text(const Element& e) {
  std::string s;
  for (std::size_t j = 0; j < e.free.size(); ++j) {
    if (j) s += ',';
    s += int_str(e.free[j]);
  }
  if (!e.torsion.empty()) {
    s += '|';
    for (std::size_t j = 0; j < e.torsion.size(); ++j) {
      if (j) s += ',';
      s += std::to_string(e.torsion[j]);
    }
  }
  return s;
}

}  // namespace sgf

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "sgf/element.hpp"
#include "sgf/numbers.hpp"
#include "sgf/presentation.hpp"

namespace sgf {

/**
 * Quasipolynomial of one variable: degree k, period pi, exact rational
 * coefficient table a_i(c) for residue classes c mod pi. Value at n is
 * sum_i a_i(n mod pi) * n^i. Trailing identically-zero coefficient rows are
 * trimmed at construction, so the top row is nonzero somewhere unless the
 * whole function is zero (kept as degree 0).
 */
class QuasiPolynomial {
public:
  QuasiPolynomial() : period_(1), coeffs_(1, std::vector<Rat>(1, Rat(0))) {}
  // coeffs[i][c] = a_i on class c; rows ascending in i.
  QuasiPolynomial(std::int64_t period, std::vector<std::vector<Rat>> coeffs);

  std::int64_t period() const { return period_; }
  std::int64_t degree() const {
    return static_cast<std::int64_t>(coeffs_.size()) - 1;
  }
  const std::vector<std::vector<Rat>>& coeffs() const { return coeffs_; }
  const Rat& coeff(std::size_t i, std::int64_t n) const {
    return coeffs_[i][static_cast<std::size_t>(n % period_)];
  }

  Rat eval(std::int64_t n) const;

  /** Least cycle length of row i: the smallest divisor l of the period with
      a_i(c) == a_i(c + l) for every class. */
  std::int64_t row_min_cycle(std::size_t i) const;

  bool operator==(const QuasiPolynomial& o) const {
    return period_ == o.period_ && coeffs_ == o.coeffs_;
  }

private:
  std::int64_t period_;
  std::vector<std::vector<Rat>> coeffs_;
};

using SampleMap = std::map<std::int64_t, Rat>;

/**
 * Exact fit with fixed degree and period, counting only samples at n >= from.
 * Each residue class interpolates its lowest degree+1 samples and must verify
 * exactly against every remaining one; any mismatch yields an empty optional.
 * Throws InsufficientSamplesError when a class has fewer than degree+2
 * samples. Never a least-squares step: agreement is exact or absent.
 */
std::optional<QuasiPolynomial> fit_fixed(const SampleMap& samples,
                                         std::int64_t degree,
                                         std::int64_t period,
                                         std::int64_t from);

struct FitReport {
  QuasiPolynomial qp;
  std::int64_t onset = 0;        // least N with qp matching all samples >= N
  std::int64_t exact_match_count = 0;
  std::vector<std::int64_t> residual_positions;  // mismatching samples < onset
  std::vector<std::int64_t> row_min_cycles;      // per coefficient row
};

/**
 * Searches degrees 0..degree_bound (ascending) and periods over the divisors
 * of period_bound (ascending) for the first pair admitting an eventual exact
 * fit. The candidate for a pair interpolates the top degree+1 samples of each
 * residue class; it is accepted when every class keeps at least degree+2
 * samples at or past the onset, so each class is confirmed by at least one
 * sample the interpolation did not use. Reported onset is the least N such
 * that the quasipolynomial matches every sample at n >= N. Throws
 * NoFitWithinBoundsError when nothing fits.
 */
FitReport fit_search(const SampleMap& samples, std::int64_t degree_bound,
                     std::int64_t period_bound);

/**
 * Translated affine cone: base + N-combinations of the given generators,
 * whose free parts must be linearly independent over the rationals.
 */
struct TranslatedCone {
  Element base;
  std::vector<Element> generators;

  TranslatedCone(const AmbientSpec& ambient, Element b, std::vector<Element> gens);
};

/**
 * Coordinates of alpha in the cone: c in N^s with base + sum c_j gen_j =
 * alpha, or empty when no such c exists. The free part determines c by an
 * exact linear solve (independence makes it unique); the torsion part is
 * then verified.
 */
std::optional<std::vector<Int>> cone_coordinates(const AmbientSpec& ambient,
                                                 const TranslatedCone& cone,
                                                 const Element& alpha);

/** Sparse multivariate polynomial over the rationals, exponent-vector keyed. */
class MultiPoly {
public:
  using Monomial = std::vector<std::int64_t>;

  MultiPoly() = default;
  explicit MultiPoly(std::size_t vars) : vars_(vars) {}

  std::size_t vars() const { return vars_; }
  const std::map<Monomial, Rat>& terms() const { return terms_; }

  void add_term(const Monomial& m, const Rat& c);
  Rat eval(const std::vector<Rat>& point) const;
  Rat coefficient(const Monomial& m) const;

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly scaled(const Rat& c) const;

  static MultiPoly constant(std::size_t vars, const Rat& c);
  static MultiPoly variable(std::size_t vars, std::size_t idx);

  bool operator==(const MultiPoly& o) const {
    return vars_ == o.vars_ && terms_ == o.terms_;
  }

private:
  std::size_t vars_ = 0;
  std::map<Monomial, Rat> terms_;  // nonzero coefficients only
};

struct ConePolynomial {
  TranslatedCone cone;
  MultiPoly poly;                       // in cone coordinates
  std::optional<MultiPoly> ambient_form;  // in ambient coordinates, when the
                                          // cone generators span the free part
};

using ElementInvariant = std::function<Rat(const Element&)>;

/**
 * Exact polynomial fit of an invariant on the cone's coordinate grid
 * [0, grid]^s: total degree at most degree_bound, interpolated from the grid
 * and verified against every grid point. Empty optional when no polynomial
 * of that degree matches; InsufficientSamplesError when the grid cannot
 * even determine one (needs grid >= degree_bound and twice as many points
 * as coefficients). When the cone generators form a basis of the free part,
 * the ambient form is attached by inverting the coordinate change.
 */
std::optional<ConePolynomial> cone_fit(const SemigroupPresentation& sgp,
                                       const TranslatedCone& cone,
                                       const ElementInvariant& invariant,
                                       std::int64_t degree_bound,
                                       std::int64_t grid);

/**
 * Fit of k -> invariant(k * alpha) for k in [0, samples_upto] with
 * fit_search bounds as given. Sample count defaults to enough for the
 * two-period tail rule when samples_upto is 0.
 */
FitReport ray_fit(const SemigroupPresentation& sgp, const Element& alpha,
                  const ElementInvariant& invariant, std::int64_t degree_bound,
                  std::int64_t period_bound, std::int64_t samples_upto = 0);

/**
 * Rank over the rationals of all factorization exponent vectors of
 * k * alpha, k in [0, k_upto], accumulated into one matrix. For members of a
 * numerical semigroup this reaches the full generator count; in general it
 * bounds the growth degree of the factorization counting function along the
 * ray (degree = rank - 1).
 */
std::size_t ray_rank(const SemigroupPresentation& sgp, const Element& alpha,
                     std::int64_t k_upto);

}  // namespace sgf

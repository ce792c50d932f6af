#include "sgf/quasipoly.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "sgf/enumerate.hpp"
#include "sgf/errors.hpp"
#include "sgf/linalg.hpp"

namespace sgf {

namespace {

std::vector<std::int64_t> divisors_ascending(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

// Solves the Vandermonde system through points (n, v): unique since the n are
// distinct. Returns coefficients a_0..a_degree.
std::vector<Rat> interpolate_line(const std::vector<std::int64_t>& ns,
                                  const std::vector<Rat>& vs,
                                  std::int64_t degree) {
  const std::size_t k = static_cast<std::size_t>(degree) + 1;
  assert(ns.size() == k && vs.size() == k);
  RatMatrix a(k, std::vector<Rat>(k));
  for (std::size_t row = 0; row < k; ++row) {
    Int p = 1;
    for (std::size_t col = 0; col < k; ++col) {
      a[row][col] = Rat(p);
      p *= ns[row];
    }
  }
  auto sol = solve_exact(a, vs);
  assert(sol.status == SolveStatus::Unique);
  return sol.solution;
}

struct ClassSamples {
  std::vector<std::int64_t> ns;  // ascending
  std::vector<Rat> vs;
};

std::vector<ClassSamples> split_by_class(const SampleMap& samples,
                                         std::int64_t period,
                                         std::int64_t from) {
  std::vector<ClassSamples> by_class(static_cast<std::size_t>(period));
  for (const auto& [n, v] : samples) {
    if (n < from) continue;
    if (n < 0) throw std::invalid_argument("negative sample position");
    auto& cls = by_class[static_cast<std::size_t>(n % period)];
    cls.ns.push_back(n);
    cls.vs.push_back(v);
  }
  return by_class;
}

QuasiPolynomial assemble(std::int64_t period,
                         const std::vector<std::vector<Rat>>& per_class,
                         std::int64_t degree) {
  std::vector<std::vector<Rat>> coeffs(
      static_cast<std::size_t>(degree) + 1,
      std::vector<Rat>(static_cast<std::size_t>(period)));
  for (std::size_t c = 0; c < per_class.size(); ++c)
    for (std::size_t i = 0; i <= static_cast<std::size_t>(degree); ++i)
      coeffs[i][c] = per_class[c][i];
  return QuasiPolynomial(period, std::move(coeffs));
}

}  // namespace

QuasiPolynomial::QuasiPolynomial(std::int64_t period,
                                 std::vector<std::vector<Rat>> coeffs)
    : period_(period), coeffs_(std::move(coeffs)) {
  if (period_ < 1) throw std::invalid_argument("period below 1");
  if (coeffs_.empty()) coeffs_.emplace_back(static_cast<std::size_t>(period_));
  for (auto& row : coeffs_)
    if (row.size() != static_cast<std::size_t>(period_))
      throw std::invalid_argument("coefficient row size is not the period");
  while (coeffs_.size() > 1) {
    const auto& top = coeffs_.back();
    if (std::any_of(top.begin(), top.end(),
                    [](const Rat& r) { return r != 0; }))
      break;
    coeffs_.pop_back();
  }
}

Rat QuasiPolynomial::eval(std::int64_t n) const {
  if (n < 0) throw std::invalid_argument("evaluation at a negative point");
  const std::size_t cls = static_cast<std::size_t>(n % period_);
  Rat acc(0);
  Int p = 1;
  for (const auto& row : coeffs_) {
    acc += row[cls] * Rat(p);
    p *= n;
  }
  return acc;
}

std::int64_t QuasiPolynomial::row_min_cycle(std::size_t i) const {
  const auto& row = coeffs_.at(i);
  for (std::int64_t l = 1; l <= period_; ++l) {
    if (period_ % l != 0) continue;
    bool ok = true;
    for (std::int64_t c = 0; c < period_ && ok; ++c)
      ok = row[static_cast<std::size_t>(c)] ==
           row[static_cast<std::size_t>((c + l) % period_)];
    if (ok) return l;
  }
  return period_;
}

std::optional<QuasiPolynomial> fit_fixed(const SampleMap& samples,
                                         std::int64_t degree,
                                         std::int64_t period,
                                         std::int64_t from) {
  if (degree < 0) throw std::invalid_argument("negative degree");
  if (period < 1) throw std::invalid_argument("period below 1");
  auto by_class = split_by_class(samples, period, from);
  const std::size_t need = static_cast<std::size_t>(degree) + 2;
  for (const auto& cls : by_class)
    if (cls.ns.size() < need)
      throw InsufficientSamplesError(
          "a residue class has fewer than degree + 2 samples");

  std::vector<std::vector<Rat>> per_class;
  per_class.reserve(by_class.size());
  for (const auto& cls : by_class) {
    const std::size_t k = static_cast<std::size_t>(degree) + 1;
    std::vector<std::int64_t> ns(cls.ns.begin(), cls.ns.begin() + k);
    std::vector<Rat> vs(cls.vs.begin(), cls.vs.begin() + k);
    auto a = interpolate_line(ns, vs, degree);
    for (std::size_t s = k; s < cls.ns.size(); ++s) {
      Rat val(0);
      Int p = 1;
      for (const auto& coeff : a) {
        val += coeff * Rat(p);
        p *= cls.ns[s];
      }
      if (val != cls.vs[s]) return std::nullopt;
    }
    per_class.push_back(std::move(a));
  }
  return assemble(period, per_class, degree);
}

FitReport fit_search(const SampleMap& samples, std::int64_t degree_bound,
                     std::int64_t period_bound) {
  if (degree_bound < 0) throw std::invalid_argument("negative degree bound");
  if (period_bound < 1) throw std::invalid_argument("period bound below 1");
  if (samples.empty()) throw InsufficientSamplesError("no samples");
  const std::int64_t max_key = samples.rbegin()->first;

  for (std::int64_t degree = 0; degree <= degree_bound; ++degree) {
    for (std::int64_t period : divisors_ascending(period_bound)) {
      if (max_key + 1 < 2 * period) continue;
      auto by_class = split_by_class(samples, period, 0);
      const std::size_t k = static_cast<std::size_t>(degree) + 1;
      bool enough = true;
      for (const auto& cls : by_class)
        if (cls.ns.size() < k + 1) {
          enough = false;
          break;
        }
      if (!enough) continue;

      // Candidate from the top samples of each class: eventual behavior,
      // undisturbed by early irregular values.
      std::vector<std::vector<Rat>> per_class;
      for (const auto& cls : by_class) {
        std::vector<std::int64_t> ns(cls.ns.end() - k, cls.ns.end());
        std::vector<Rat> vs(cls.vs.end() - k, cls.vs.end());
        per_class.push_back(interpolate_line(ns, vs, degree));
      }
      QuasiPolynomial qp = assemble(period, per_class, degree);

      std::vector<std::int64_t> mismatches;
      for (const auto& [n, v] : samples)
        if (qp.eval(n) != v) mismatches.push_back(n);
      std::int64_t onset = mismatches.empty() ? 0 : mismatches.back() + 1;

      // Acceptance: every class needs degree + 2 samples at or past the
      // onset. degree + 1 of them pin the candidate down, so each class is
      // vouched for by at least one independent exact match; a candidate
      // that merely reproduces its own interpolation points never passes.
      bool verified = true;
      for (const auto& cls : by_class) {
        auto it = std::lower_bound(cls.ns.begin(), cls.ns.end(), onset);
        if (static_cast<std::size_t>(cls.ns.end() - it) < k + 1) {
          verified = false;
          break;
        }
      }
      if (!verified) continue;

      FitReport report;
      report.qp = qp;
      report.onset = onset;
      report.exact_match_count =
          static_cast<std::int64_t>(samples.size() - mismatches.size());
      report.residual_positions = std::move(mismatches);
      for (std::int64_t i = 0; i <= qp.degree(); ++i)
        report.row_min_cycles.push_back(
            qp.row_min_cycle(static_cast<std::size_t>(i)));
      return report;
    }
  }
  throw NoFitWithinBoundsError("no quasipolynomial within the given bounds");
}

TranslatedCone::TranslatedCone(const AmbientSpec& ambient, Element b,
                               std::vector<Element> gens)
    : base(std::move(b)), generators(std::move(gens)) {
  require_same_ambient(ambient, base, "cone base");
  for (const auto& g : generators) require_same_ambient(ambient, g, "cone ray");
  if (generators.empty())
    throw DimensionMismatchError("cone without generators");
  RatMatrix m;
  for (const auto& g : generators) {
    std::vector<Rat> row;
    for (const auto& v : g.free) row.push_back(Rat(v));
    m.push_back(std::move(row));
  }
  if (matrix_rank(m) != generators.size())
    throw DimensionMismatchError("cone generators not linearly independent");
}

std::optional<std::vector<Int>> cone_coordinates(const AmbientSpec& ambient,
                                                 const TranslatedCone& cone,
                                                 const Element& alpha) {
  require_same_ambient(ambient, alpha, "cone coordinates");
  const std::size_t d = ambient.free_rank;
  const std::size_t s = cone.generators.size();

  RatMatrix a(d, std::vector<Rat>(s));
  std::vector<Rat> rhs(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < s; ++j)
      a[i][j] = Rat(cone.generators[j].free[i]);
    rhs[i] = Rat(alpha.free[i] - cone.base.free[i]);
  }
  auto sol = solve_exact(a, rhs);
  if (sol.status != SolveStatus::Unique) return std::nullopt;

  std::vector<Int> coords;
  coords.reserve(s);
  for (const auto& c : sol.solution) {
    if (rat_den(c) != 1 || rat_num(c) < 0) return std::nullopt;
    coords.push_back(rat_num(c));
  }

  const auto& orders = ambient.torsion_orders;
  for (std::size_t j = 0; j < orders.size(); ++j) {
    Int acc(cone.base.torsion[j]);
    for (std::size_t i = 0; i < s; ++i)
      acc += coords[i] * cone.generators[i].torsion[j];
    if ((acc - alpha.torsion[j]) % orders[j] != 0) return std::nullopt;
  }
  return coords;
}

void MultiPoly::add_term(const Monomial& m, const Rat& c) {
  if (m.size() != vars_) throw DimensionMismatchError("monomial arity");
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rat MultiPoly::eval(const std::vector<Rat>& point) const {
  if (point.size() != vars_) throw DimensionMismatchError("evaluation arity");
  Rat acc(0);
  for (const auto& [m, c] : terms_) {
    Rat term = c;
    for (std::size_t i = 0; i < vars_; ++i)
      for (std::int64_t e = 0; e < m[i]; ++e) term *= point[i];
    acc += term;
  }
  return acc;
}

Rat MultiPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  if (vars_ != o.vars_) throw DimensionMismatchError("adding mixed arities");
  MultiPoly out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, c);
  return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  if (vars_ != o.vars_) throw DimensionMismatchError("multiplying mixed arities");
  MultiPoly out(vars_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m(vars_);
      for (std::size_t i = 0; i < vars_; ++i) m[i] = ma[i] + mb[i];
      out.add_term(m, ca * cb);
    }
  return out;
}

MultiPoly MultiPoly::scaled(const Rat& c) const {
  MultiPoly out(vars_);
  for (const auto& [m, v] : terms_) out.add_term(m, v * c);
  return out;
}

MultiPoly MultiPoly::constant(std::size_t vars, const Rat& c) {
  MultiPoly out(vars);
  out.add_term(Monomial(vars, 0), c);
  return out;
}

MultiPoly MultiPoly::variable(std::size_t vars, std::size_t idx) {
  MultiPoly out(vars);
  Monomial m(vars, 0);
  m.at(idx) = 1;
  out.add_term(m, Rat(1));
  return out;
}

namespace {

void monomials_upto(std::size_t vars, std::int64_t degree,
                    MultiPoly::Monomial& cur, std::size_t pos,
                    std::vector<MultiPoly::Monomial>& out) {
  if (pos == vars) {
    out.push_back(cur);
    return;
  }
  for (std::int64_t e = 0; e <= degree; ++e) {
    cur[pos] = e;
    monomials_upto(vars, degree - e, cur, pos + 1, out);
  }
  cur[pos] = 0;
}

Int binomial(std::int64_t n, std::int64_t k) {
  Int out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

MultiPoly compose(const MultiPoly& p, const std::vector<MultiPoly>& subs,
                  std::size_t out_vars) {
  MultiPoly acc(out_vars);
  for (const auto& [m, c] : p.terms()) {
    MultiPoly term = MultiPoly::constant(out_vars, c);
    for (std::size_t i = 0; i < subs.size(); ++i)
      for (std::int64_t e = 0; e < m[i]; ++e) term = term * subs[i];
    acc = acc + term;
  }
  return acc;
}

}  // namespace

std::optional<ConePolynomial> cone_fit(const SemigroupPresentation& sgp,
                                       const TranslatedCone& cone,
                                       const ElementInvariant& invariant,
                                       std::int64_t degree_bound,
                                       std::int64_t grid) {
  if (degree_bound < 0) throw std::invalid_argument("negative degree bound");
  const std::size_t s = cone.generators.size();

  std::vector<MultiPoly::Monomial> monomials;
  MultiPoly::Monomial scratch(s, 0);
  monomials_upto(s, degree_bound, scratch, 0, monomials);
  Int points = int_pow(Int(grid) + 1, s);
  if (grid < degree_bound ||
      points < 2 * binomial(degree_bound + static_cast<std::int64_t>(s),
                            static_cast<std::int64_t>(s)))
    throw InsufficientSamplesError("grid too small for the degree bound");

  // One overdetermined exact system: rows are grid points, columns monomials.
  // grid >= degree makes the column rank full, so the outcome is either a
  // unique polynomial verified on the whole grid or a contradiction.
  RatMatrix a;
  std::vector<Rat> rhs;
  std::vector<std::int64_t> c(s, 0);
  for (;;) {
    Element point = cone.base;
    for (std::size_t j = 0; j < s; ++j)
      point = element_add(sgp.ambient, point,
                          element_scale(sgp.ambient, Int(c[j]),
                                        cone.generators[j]));
    rhs.push_back(invariant(point));
    std::vector<Rat> row;
    row.reserve(monomials.size());
    for (const auto& m : monomials) {
      Int v = 1;
      for (std::size_t j = 0; j < s; ++j) v *= int_pow(Int(c[j]), m[j]);
      row.push_back(Rat(v));
    }
    a.push_back(std::move(row));

    std::size_t j = s;
    bool done = false;
    while (!done) {
      if (j == 0) {
        done = true;
        break;
      }
      --j;
      if (++c[j] <= grid) break;
      c[j] = 0;
    }
    if (done) break;
  }

  auto sol = solve_exact(a, rhs);
  if (sol.status == SolveStatus::Inconsistent) return std::nullopt;
  if (sol.status != SolveStatus::Unique)
    throw std::logic_error("grid rank fell short");

  ConePolynomial out{cone, MultiPoly(s), std::nullopt};
  for (std::size_t i = 0; i < monomials.size(); ++i)
    out.poly.add_term(monomials[i], sol.solution[i]);

  const std::size_t d = sgp.ambient.free_rank;
  if (s == d) {
    RatMatrix m(d, std::vector<Rat>(d));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        m[i][j] = Rat(cone.generators[j].free[i]);
    auto inv = matrix_inverse(m);
    assert(inv);  // independence was checked at cone construction
    // c_j = sum_i inv[j][i] (x_i - base_i), substituted into the polynomial.
    std::vector<MultiPoly> subs;
    for (std::size_t j = 0; j < d; ++j) {
      MultiPoly lin(d);
      for (std::size_t i = 0; i < d; ++i) {
        lin = lin + MultiPoly::variable(d, i).scaled((*inv)[j][i]);
        lin = lin + MultiPoly::constant(
                        d, (*inv)[j][i] * Rat(-cone.base.free[i]));
      }
      subs.push_back(lin);
    }
    out.ambient_form = compose(out.poly, subs, d);
  }
  return out;
}

FitReport ray_fit(const SemigroupPresentation& sgp, const Element& alpha,
                  const ElementInvariant& invariant, std::int64_t degree_bound,
                  std::int64_t period_bound, std::int64_t samples_upto) {
  if (!contains(sgp, alpha))
    throw NotInSemigroupError("ray through a non-member: " +
                              element_text(alpha));
  std::int64_t upto = samples_upto > 0
                          ? samples_upto
                          : (degree_bound + 4) * period_bound;
  SampleMap samples;
  for (std::int64_t k = 0; k <= upto; ++k)
    samples[k] = invariant(element_scale(sgp.ambient, Int(k), alpha));
  return fit_search(samples, degree_bound, period_bound);
}

std::size_t ray_rank(const SemigroupPresentation& sgp, const Element& alpha,
                     std::int64_t k_upto) {
  if (!contains(sgp, alpha))
    throw NotInSemigroupError("ray through a non-member: " +
                              element_text(alpha));
  const std::size_t arity = sgp.generators.size();
  // reduced echelon basis of the exponent vectors seen so far; the rank is
  // capped by the arity, so the scan stops once the basis saturates
  RatMatrix basis;
  std::vector<std::size_t> pivots;
  for (std::int64_t k = 0; k <= k_upto && basis.size() < arity; ++k) {
    auto zs = factorizations(sgp, element_scale(sgp.ambient, Int(k), alpha));
    for (const auto& f : zs.factorizations) {
      std::vector<Rat> row;
      row.reserve(f.exponents.size());
      for (auto e : f.exponents) row.push_back(Rat(Int(e)));
      for (std::size_t i = 0; i < basis.size(); ++i)
        if (row[pivots[i]] != 0) {
          Rat factor = row[pivots[i]];
          for (std::size_t j = 0; j < row.size(); ++j)
            row[j] -= factor * basis[i][j];
        }
      std::size_t p = 0;
      while (p < row.size() && row[p] == 0) ++p;
      if (p == row.size()) continue;
      Rat lead = row[p];
      for (auto& x : row) x /= lead;
      for (std::size_t i = 0; i < basis.size(); ++i)
        if (basis[i][p] != 0) {
          Rat factor = basis[i][p];
          for (std::size_t j = 0; j < row.size(); ++j)
            basis[i][j] -= factor * row[j];
        }
      pivots.push_back(p);
      basis.push_back(std::move(row));
      if (basis.size() == arity) break;
    }
  }
  return basis.size();
}

}  // namespace sgf

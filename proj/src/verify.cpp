#include "sgf/verify.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "sgf/enumerate.hpp"
#include "sgf/invariants.hpp"
#include "sgf/numerical.hpp"
#include "sgf/oracles.hpp"
#include "sgf/quasipoly.hpp"

namespace sgf {
namespace verify {

namespace {

// Records the first failed expectation; later ones are skipped so the detail
// line names the earliest broken fact.
struct Check {
  bool ok = true;
  std::string detail;

  void that(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::string join_i64(const std::vector<std::int64_t>& vs) {
  std::string s = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(vs[i]);
  }
  return s + "}";
}

SemigroupPresentation sg_6_9_20() {
  return SemigroupPresentation::numerical({6, 9, 20});
}

Rat count_rat(std::size_t n) {
  return Rat(Int(static_cast<unsigned long>(n)));
}

// --- 1: factorization counting function of <6,9,20> ------------------------

void case_counting_quasipolynomial(Check& c) {
  auto sgp = sg_6_9_20();
  auto table = denumerant_table(sgp, 720);

  SampleMap samples;
  for (std::int64_t n = 0; n <= 720; ++n)
    samples[n] = Rat(table[static_cast<std::size_t>(n)]);

  auto report = fit_search(samples, 2, 180);
  c.that(report.qp.degree() == 2,
         "degree " + std::to_string(report.qp.degree()) + ", wanted 2");
  c.that(report.qp.period() == 180,
         "period " + std::to_string(report.qp.period()) + ", wanted 180");
  c.that(report.onset == 0,
         "onset " + std::to_string(report.onset) + ", wanted 0");
  c.that(report.residual_positions.empty(), "expected no residuals");
  if (!c.ok) return;

  for (std::int64_t cls = 0; cls < 180; ++cls)
    c.that(report.qp.coeff(2, cls) == make_rat(1, 2160),
           "leading coefficient off in class " + std::to_string(cls));
  c.that(report.row_min_cycles.size() == 3, "expected three coefficient rows");
  if (!c.ok) return;
  c.that(report.row_min_cycles[0] == 180,
         "constant row cycle " + std::to_string(report.row_min_cycles[0]) +
             ", wanted 180");
  c.that(report.row_min_cycles[1] == 6,
         "linear row cycle " + std::to_string(report.row_min_cycles[1]) +
             ", wanted 6");
  c.that(report.row_min_cycles[2] == 1, "leading row should be constant");

  // Second route: the enumeration counts must agree with the table, and the
  // table must vanish exactly on the omitted gaps.
  ScanSelection sel;
  sel.z_count = true;
  auto scan = scan_range(sgp, 0, 720, sel);
  std::size_t at = 0;
  for (std::int64_t n = 0; n <= 720; ++n) {
    const Int& want = table[static_cast<std::size_t>(n)];
    if (at < scan.records.size() &&
        scan.records[at].element.free[0] == n) {
      c.that(*scan.records[at].z_count == want,
             "count mismatch at n = " + std::to_string(n));
      ++at;
    } else {
      c.that(want == 0, "table nonzero at omitted n = " + std::to_string(n));
    }
    if (!c.ok) return;
  }
  c.that(at == scan.records.size(), "scan carries extra records");
}

// --- 2: length-set size of <6,9,20> ----------------------------------------

SampleMap length_count_samples(Check& c, std::int64_t upto) {
  auto sgp = sg_6_9_20();
  ScanSelection sel;
  sel.lengths = true;
  auto scan = scan_range(sgp, 0, upto, sel);

  // Dual route: the shift-or table must see the same sets.
  LengthSetTable table(sgp.numerical_generators(), upto);
  std::size_t at = 0;
  SampleMap samples;
  for (std::int64_t n = 0; n <= upto; ++n) {
    bool scanned = at < scan.records.size() &&
                   scan.records[at].element.free[0] == n;
    c.that(scanned == table.member(n),
           "membership disagreement at n = " + std::to_string(n));
    if (!c.ok) return samples;
    if (!scanned) continue;
    c.that(*scan.records[at].lengths == table.lengths(n),
           "length sets disagree at n = " + std::to_string(n));
    if (!c.ok) return samples;
    samples[n] = count_rat(scan.records[at].lengths->size());
    ++at;
  }
  return samples;
}

void case_length_count_line(Check& c) {
  auto samples = length_count_samples(c, 520);
  if (!c.ok) return;

  auto report = fit_search(samples, 1, 60);
  c.that(report.qp.degree() == 1,
         "degree " + std::to_string(report.qp.degree()) + ", wanted 1");
  c.that(60 % report.qp.period() == 0,
         "period " + std::to_string(report.qp.period()) +
             " does not divide 60");
  c.that(report.onset == 92,
         "onset " + std::to_string(report.onset) + ", wanted 92");
  if (!c.ok) return;
  for (std::int64_t cls = 0; cls < report.qp.period(); ++cls)
    c.that(report.qp.coeff(1, cls) == make_rat(7, 60),
           "slope off in class " + std::to_string(cls));
  c.that(std::find(report.residual_positions.begin(),
                   report.residual_positions.end(),
                   91) != report.residual_positions.end(),
         "91 should be a residual");

  c.that(!fit_fixed(samples, 1, 60, 91).has_value(),
         "a fit from 91 should not exist");
  c.that(fit_fixed(samples, 1, 60, 92).has_value(),
         "the fit from 92 should exist");
}

// --- 3: length-count slope from the delta-set minimum ----------------------

void case_length_count_slope_formula(Check& c) {
  auto sgp = sg_6_9_20();
  auto ds = delta_of_semigroup(sgp, 500);
  c.that(!ds.delta.empty(), "empty semigroup delta set");
  if (!c.ok) return;
  std::int64_t g = ds.delta.front();
  c.that(g == 1, "min delta " + std::to_string(g) + ", wanted 1");

  Rat predicted = make_rat(Int(20 - 6), Int(g) * 6 * 20);
  c.that(predicted == make_rat(7, 60), "predicted slope should reduce to 7/60");

  auto samples = length_count_samples(c, 520);
  if (!c.ok) return;
  auto report = fit_search(samples, 1, 60);
  for (std::int64_t cls = 0; cls < report.qp.period(); ++cls)
    c.that(report.qp.coeff(1, cls) == predicted,
           "fitted slope differs from the formula in class " +
               std::to_string(cls));
}

// --- 4: element delta sets of <6,9,20> settle into period 20 ---------------

void case_delta_periodicity(Check& c) {
  auto sgp = sg_6_9_20();
  auto ds = delta_of_semigroup(sgp, 500);
  c.that(ds.certificate.status == CertificateStatus::Verified,
         "expected a verified certificate");
  c.that(ds.certificate.period == 60,
         "certificate period " + std::to_string(ds.certificate.period) +
             ", wanted 60");
  c.that(ds.certificate.start == 92,
         "certificate start " + std::to_string(ds.certificate.start) +
             ", wanted 92");
  c.that(ds.delta == std::vector<std::int64_t>({1, 2, 3, 4}),
         "union " + join_i64(ds.delta) + ", wanted {1,2,3,4}");
  if (!c.ok) return;

  LengthSetTable table(sgp.numerical_generators(), 500);
  auto has = [&](std::int64_t j, std::int64_t n) {
    auto d = table.delta(n);
    return std::find(d.begin(), d.end(), j) != d.end();
  };

  std::int64_t last_without_1 = -1;
  for (std::int64_t n = 0; n <= 500; ++n)
    if (!has(1, n)) last_without_1 = n;
  c.that(last_without_1 == 61,
         "1 should appear from 62 on, last failure at " +
             std::to_string(last_without_1));

  const std::int64_t onsets[3][2] = {{2, 92}, {3, 74}, {4, 56}};
  for (const auto& [j, onset] : onsets) {
    for (std::int64_t n = onset; n + 20 <= 500 && c.ok; ++n)
      c.that(has(j, n) == has(j, n + 20),
             "indicator of " + std::to_string(j) + " breaks at n = " +
                 std::to_string(n));
    c.that(has(j, onset - 1) != has(j, onset + 19),
           "onset of " + std::to_string(j) + " is not sharp at " +
               std::to_string(onset));
    if (!c.ok) return;
  }

  for (std::int64_t n = 92; n + 20 <= 500 && c.ok; ++n)
    c.that(table.delta(n) == table.delta(n + 20),
           "delta sets differ between " + std::to_string(n) + " and " +
               std::to_string(n + 20));
  c.that(table.delta(91) != table.delta(111),
         "91 should still break the period");
}

// --- 5: sparse generators, long transient ----------------------------------

void case_delta_sparse_generators(Check& c) {
  auto sgp = SemigroupPresentation::numerical({17, 33, 53, 71});
  auto ds = delta_of_semigroup(sgp, 2000);
  c.that(ds.delta == std::vector<std::int64_t>({2, 4, 6}),
         "union " + join_i64(ds.delta) + ", wanted {2,4,6}");
  c.that(ds.certificate.status == CertificateStatus::HorizonTooSmall,
         "two periods of lcm(17,71) cannot fit below 2000");

  LengthSetTable table(sgp.numerical_generators(), 2000);
  std::vector<std::int64_t> with6;
  for (std::int64_t n = 0; n <= 2000; ++n) {
    auto d = table.delta(n);
    if (std::find(d.begin(), d.end(), 6) != d.end()) with6.push_back(n);
  }
  c.that(with6 == std::vector<std::int64_t>({266, 283, 300}),
         "gap 6 appears at " + join_i64(with6) + ", wanted {266,283,300}");
}

// --- 6: affine box union ----------------------------------------------------

void case_delta_union_affine_box(Check& c) {
  SemigroupPresentation sgp;
  sgp.ambient = AmbientSpec(2, {});
  for (auto [x, y] : {std::pair<int, int>{1, 1},
                      {1, 5},
                      {2, 5},
                      {3, 5},
                      {5, 1},
                      {5, 2},
                      {5, 3}})
    sgp.generators.push_back(Element({Int(x), Int(y)}));

  auto uni = delta_union_over_box(sgp, Element({Int(0), Int(0)}),
                                  Element({Int(40), Int(40)}));
  c.that(uni == std::vector<std::int64_t>({1, 2, 4}),
         "union " + join_i64(uni) + ", wanted {1,2,4}");
  c.that(std::find(uni.begin(), uni.end(), 3) == uni.end(),
         "3 must not appear");
}

// --- 7: cone polynomials on <(2,1),(1,1),(1,2)> ----------------------------

void case_cone_polynomials(Check& c) {
  SemigroupPresentation sgp;
  sgp.ambient = AmbientSpec(2, {});
  for (auto [x, y] :
       {std::pair<int, int>{2, 1}, {1, 1}, {1, 2}})
    sgp.generators.push_back(Element({Int(x), Int(y)}));

  ElementInvariant zcount = [&](const Element& e) {
    return count_rat(factorizations(sgp, e).count());
  };

  const Element low({Int(2), Int(1)});
  const Element high({Int(1), Int(2)});
  const Element diag({Int(3), Int(3)});

  std::optional<ConePolynomial> first;
  for (int b = 0; b <= 2; ++b) {
    for (int side = 0; side < 2; ++side) {
      const Element& edge = side == 0 ? low : high;
      TranslatedCone cone(sgp.ambient, Element({Int(b), Int(b)}),
                          {edge, diag});
      auto fit = cone_fit(sgp, cone, zcount, 1, 6);
      c.that(fit.has_value(), "no degree-1 fit on the cone with base (" +
                                  std::to_string(b) + "," + std::to_string(b) +
                                  ")");
      if (!c.ok) return;
      if (b == 0 && side == 0) first = *fit;
    }
  }

  c.that(first.has_value() && first->ambient_form.has_value(),
         "full-rank cone should carry an ambient form");
  if (!c.ok) return;

  // In cone coordinates the count is c2 + 1; in ambient coordinates
  // -x/3 + 2y/3 + 1.
  c.that(first->poly.coefficient({0, 1}) == 1 &&
             first->poly.coefficient({0, 0}) == 1 &&
             first->poly.terms().size() == 2,
         "cone-coordinate form should be c2 + 1");
  const MultiPoly& amb = *first->ambient_form;
  c.that(amb.coefficient({1, 0}) == make_rat(-1, 3),
         "ambient x coefficient should be -1/3");
  c.that(amb.coefficient({0, 1}) == make_rat(2, 3),
         "ambient y coefficient should be 2/3");
  c.that(amb.coefficient({0, 0}) == 1, "ambient constant should be 1");
  c.that(amb.terms().size() == 3, "ambient form should have three terms");
}

// --- 8: extremal lengths, range fits and ray fits --------------------------

void case_extremal_length_rays(Check& c) {
  auto sgp = sg_6_9_20();
  ScanSelection sel;
  sel.max_len = true;
  sel.min_len = true;
  auto scan = scan_range(sgp, 0, 520, sel);

  SampleMap ms, mn;
  for (const auto& rec : scan.records) {
    std::int64_t n = to_int64(rec.element.free[0]);
    ms[n] = Rat(Int(*rec.max_len));
    mn[n] = Rat(Int(*rec.min_len));
  }

  auto fit_max = fit_search(ms, 1, 6);
  c.that(fit_max.qp.degree() == 1, "max length should grow linearly");
  c.that(6 % fit_max.qp.period() == 0,
         "max-length period " + std::to_string(fit_max.qp.period()) +
             " does not divide 6");
  for (std::int64_t cls = 0; cls < fit_max.qp.period() && c.ok; ++cls)
    c.that(fit_max.qp.coeff(1, cls) == make_rat(1, 6),
           "max-length slope off in class " + std::to_string(cls));

  auto fit_min = fit_search(mn, 1, 20);
  c.that(fit_min.qp.degree() == 1, "min length should grow linearly");
  c.that(20 % fit_min.qp.period() == 0,
         "min-length period " + std::to_string(fit_min.qp.period()) +
             " does not divide 20");
  for (std::int64_t cls = 0; cls < fit_min.qp.period() && c.ok; ++cls)
    c.that(fit_min.qp.coeff(1, cls) == make_rat(1, 20),
           "min-length slope off in class " + std::to_string(cls));
  if (!c.ok) return;

  ElementInvariant maxlen = [&](const Element& e) {
    return Rat(Int(max_length(sgp, e)));
  };
  ElementInvariant minlen = [&](const Element& e) {
    return Rat(Int(min_length(sgp, e)));
  };

  auto ray_max = ray_fit(sgp, Element::scalar(6), maxlen, 1, 6);
  c.that(ray_max.qp.degree() == 1, "ray through 6 should be linear");
  if (!c.ok) return;
  for (std::int64_t cls = 0; cls < ray_max.qp.period() && c.ok; ++cls)
    c.that(ray_max.qp.coeff(1, cls) == fit_max.qp.coeff(1, 0) * Rat(6),
           "ray slope should be the range slope times the step");

  auto ray_min = ray_fit(sgp, Element::scalar(20), minlen, 1, 20);
  c.that(ray_min.qp.degree() == 1, "ray through 20 should be linear");
  if (!c.ok) return;
  for (std::int64_t cls = 0; cls < ray_min.qp.period() && c.ok; ++cls)
    c.that(ray_min.qp.coeff(1, cls) == fit_min.qp.coeff(1, 0) * Rat(20),
           "ray slope should be the range slope times the step");
}

// --- 9: omega against the bullet oracle, then its linear growth ------------

void case_omega_linear_growth(Check& c) {
  auto sgp = sg_6_9_20();
  auto gens = sgp.numerical_generators();
  std::int64_t frob = frobenius_number(gens);
  c.that(frob == 43, "Frobenius number " + std::to_string(frob) +
                         ", wanted 43");
  if (!c.ok) return;

  MembershipTable members(gens, 200);
  for (std::int64_t n = 1; n <= 200 && c.ok; ++n) {
    if (!members.contains(n)) continue;
    auto exact = omega(sgp, Element::scalar(n));
    std::int64_t cap = (n + frob + 20) / 6 + 1;
    auto oracle = oracles::bullet_oracle(sgp, Element::scalar(n), cap);
    c.that(oracle.exact, "oracle cap failed to close at n = " +
                             std::to_string(n));
    c.that(oracle.value == exact.value,
           "omega disagreement at n = " + std::to_string(n) + ": " +
               std::to_string(exact.value) + " vs oracle " +
               std::to_string(oracle.value));
    auto direct = omega_bounded(sgp, Element::scalar(n), cap);
    c.that(direct.exact && direct.value == exact.value,
           "direct search disagreement at n = " + std::to_string(n));
  }
  if (!c.ok) return;

  ScanSelection sel;
  sel.omega = true;
  auto scan = scan_range(sgp, 0, 400, sel);
  SampleMap samples;
  for (const auto& rec : scan.records) {
    c.that(rec.omega_exact.value_or(false), "scan omega should be exact");
    samples[to_int64(rec.element.free[0])] = Rat(Int(*rec.omega));
  }
  if (!c.ok) return;

  auto report = fit_search(samples, 1, 6);
  c.that(report.qp.degree() == 1, "omega should grow linearly");
  c.that(report.qp.period() == 6,
         "omega period " + std::to_string(report.qp.period()) + ", wanted 6");
  if (!c.ok) return;
  for (std::int64_t cls = 0; cls < 6; ++cls)
    c.that(report.qp.coeff(1, cls) == make_rat(1, 6),
           "omega slope off in class " + std::to_string(cls));
}

// --- 10: catenary degree against the chain oracle, then its period ---------

void case_catenary_period(Check& c) {
  auto sgp = sg_6_9_20();
  MembershipTable members(sgp.numerical_generators(), 150);
  for (std::int64_t n = 1; n <= 150 && c.ok; ++n) {
    if (!members.contains(n)) continue;
    std::int64_t mine = catenary_degree(sgp, Element::scalar(n));
    std::int64_t ref = oracles::catenary_oracle(sgp, Element::scalar(n));
    c.that(mine == ref, "catenary disagreement at n = " + std::to_string(n) +
                            ": " + std::to_string(mine) + " vs oracle " +
                            std::to_string(ref));
  }
  if (!c.ok) return;

  ScanSelection sel;
  sel.catenary = true;
  auto scan = scan_range(sgp, 0, 540, sel);
  std::map<std::int64_t, std::int64_t> cat;
  for (const auto& rec : scan.records)
    cat[to_int64(rec.element.free[0])] = *rec.catenary;

  std::int64_t last_bad = -1;
  for (std::int64_t n = 0; n + 180 <= 540; ++n) {
    bool a = cat.count(n) > 0;
    bool b = cat.count(n + 180) > 0;
    if (a != b || (a && cat[n] != cat[n + 180])) last_bad = n;
  }
  std::int64_t onset = last_bad + 1;
  c.that(onset + 180 <= 360,
         "catenary period 180 not verified for a full period; onset " +
             std::to_string(onset));
}

// --- 11: randomized cross-checks -------------------------------------------

struct RandomSg {
  SemigroupPresentation sgp;
  std::vector<std::int64_t> gens;
  std::int64_t frob = 0;
};

std::optional<RandomSg> draw_semigroup(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> rank_d(2, 4);
  std::uniform_int_distribution<std::int64_t> val_d(2, 30);
  int r = rank_d(rng);
  std::set<std::int64_t> vals;
  for (int i = 0; i < r; ++i) vals.insert(val_d(rng));

  // Keep only generators no earlier ones already produce: sieve of sums.
  std::vector<std::int64_t> kept;
  std::vector<char> made(31, 0);
  made[0] = 1;
  for (std::int64_t v : vals) {
    if (made[static_cast<std::size_t>(v)]) continue;
    kept.push_back(v);
    for (std::int64_t n = v; n <= 30; ++n)
      if (made[static_cast<std::size_t>(n - v)])
        made[static_cast<std::size_t>(n)] = 1;
  }

  std::int64_t g = 0;
  for (auto v : kept) g = std::gcd(g, v);
  if (kept.size() < 2 || g != 1) return std::nullopt;

  RandomSg out;
  out.gens = kept;
  out.sgp = SemigroupPresentation::numerical(kept);
  out.frob = frobenius_number(kept);
  return out;
}

void case_randomized_cross_checks(Check& c) {
  std::mt19937_64 rng(0xC0FFEE);
  std::set<std::vector<std::int64_t>> seen;
  std::int64_t factor_checks = 0, omega_checks = 0;

  while (seen.size() < 50 && c.ok) {
    auto drawn = draw_semigroup(rng);
    if (!drawn || !seen.insert(drawn->gens).second) continue;
    const auto& sgp = drawn->sgp;
    const auto& gens = drawn->gens;
    const std::string tag = " on " + join_i64(gens);

    MembershipTable members(gens, 300);
    auto random_member = [&](std::int64_t hi) {
      std::uniform_int_distribution<std::int64_t> d(1, hi);
      for (;;) {
        std::int64_t n = d(rng);
        if (members.contains(n)) return n;
      }
    };

    // Factorization sets: production search vs the box sweep.
    std::uniform_int_distribution<std::int64_t> el_d(0, 300);
    for (int k = 0; k < 5 && c.ok; ++k) {
      std::int64_t n = el_d(rng);
      while (n > 0 &&
             oracles::naive_box_volume(sgp, Element::scalar(n)) > 50000)
        n /= 2;
      auto mine = factorizations(sgp, Element::scalar(n));
      auto ref = oracles::naive_factorizations(sgp, Element::scalar(n));
      c.that(mine.factorizations == ref.factorizations,
             "factorization sets differ at n = " + std::to_string(n) + tag);
      ++factor_checks;

      // The denumerant table is a third, independent count.
      if (c.ok && n <= 200) {
        auto table = denumerant_table(sgp, n);
        c.that(table[static_cast<std::size_t>(n)] ==
                   Int(static_cast<unsigned long>(mine.count())),
               "table count differs at n = " + std::to_string(n) + tag);
      }
    }

    // Catenary bottleneck vs chain oracle.
    for (int k = 0; k < 3 && c.ok; ++k) {
      std::int64_t n = random_member(200);
      while (n > 0 &&
             oracles::naive_box_volume(sgp, Element::scalar(n)) > 50000)
        n /= 2;
      if (!members.contains(n)) continue;
      c.that(catenary_degree(sgp, Element::scalar(n)) ==
                 oracles::catenary_oracle(sgp, Element::scalar(n)),
             "catenary differs at n = " + std::to_string(n) + tag);
    }

    // Omega three ways, where the shell closes cheaply.
    for (int k = 0; k < 2 && c.ok; ++k) {
      std::int64_t n = random_member(80);
      std::int64_t cap = (n + drawn->frob + gens.back()) / gens.front() + 1;
      Int cells = int_pow(Int(cap) + 1, gens.size());
      if (cells > 300000) continue;
      auto exact = omega(sgp, Element::scalar(n));
      auto oracle = oracles::bullet_oracle(sgp, Element::scalar(n), cap);
      auto direct = omega_bounded(sgp, Element::scalar(n), cap);
      c.that(oracle.exact && oracle.value == exact.value,
             "omega oracle differs at n = " + std::to_string(n) + tag);
      c.that(direct.exact && direct.value == exact.value,
             "omega direct search differs at n = " + std::to_string(n) + tag);
      ++omega_checks;
    }

    // Extremal lengths: superadditive max, subadditive min, and the delta
    // gaps of the table route telescoping to their difference.
    for (int k = 0; k < 3 && c.ok; ++k) {
      std::int64_t a = random_member(150), b = random_member(150);
      auto sa = Element::scalar(a), sb = Element::scalar(b);
      auto sab = Element::scalar(a + b);
      c.that(max_length(sgp, sab) >= max_length(sgp, sa) + max_length(sgp, sb),
             "max length not superadditive at " + std::to_string(a) + "+" +
                 std::to_string(b) + tag);
      c.that(min_length(sgp, sab) <= min_length(sgp, sa) + min_length(sgp, sb),
             "min length not subadditive at " + std::to_string(a) + "+" +
                 std::to_string(b) + tag);

      LengthSetTable table(gens, a);
      c.that(table.delta(a) == delta_of_element(sgp, sa),
             "delta routes disagree at " + std::to_string(a) + tag);
      std::int64_t spread = max_length(sgp, sa) - min_length(sgp, sa);
      std::int64_t full_sum = 0;
      {
        auto ls = table.lengths(a);
        for (std::size_t i = 1; i < ls.size(); ++i)
          full_sum += ls[i] - ls[i - 1];
      }
      c.that(full_sum == spread,
             "gaps do not telescope at " + std::to_string(a) + tag);
    }

    // Apery sets of single generators.
    for (std::size_t i = 0; i < gens.size() && c.ok; ++i) {
      auto ap = apery_set(sgp, {i});
      c.that(static_cast<std::int64_t>(ap.size()) == gens[i],
             "apery size of generator " + std::to_string(gens[i]) +
                 " is " + std::to_string(ap.size()) + tag);
      c.that(!ap.empty() && ap.front() == 0, "apery set should start at 0" +
                                                 tag);
    }

    // Translation pushes factorizations forward injectively.
    if (c.ok) {
      std::int64_t a = random_member(150), b = random_member(150);
      auto za = factorizations(sgp, Element::scalar(a));
      auto zb = factorizations(sgp, Element::scalar(b));
      auto zab = factorizations(sgp, Element::scalar(a + b));
      c.that(zab.count() >= za.count(),
             "translation by " + std::to_string(b) + " loses factorizations" +
                 tag);
      const auto& shift = zb.factorizations.front();
      for (const auto& f : za.factorizations) {
        Factorization moved = f;
        for (std::size_t i = 0; i < moved.exponents.size(); ++i)
          moved.exponents[i] += shift.exponents[i];
        moved.length += shift.length;
        c.that(std::binary_search(zab.factorizations.begin(),
                                  zab.factorizations.end(), moved),
               "shifted factorization missing at " + std::to_string(a + b) +
                   tag);
        if (!c.ok) break;
      }
    }
  }

  c.that(factor_checks >= 100, "too few factorization comparisons ran: " +
                                   std::to_string(factor_checks));
  c.that(omega_checks >= 10,
         "too few omega comparisons ran: " + std::to_string(omega_checks));
}

}  // namespace

std::vector<CaseResult> run_suite(std::ostream& out) {
  struct Entry {
    const char* name;
    void (*fn)(Check&);
  };
  const Entry entries[] = {
      {"counting-function-quasipolynomial", case_counting_quasipolynomial},
      {"length-count-eventual-line", case_length_count_line},
      {"length-count-slope-formula", case_length_count_slope_formula},
      {"delta-set-certified-onset", case_delta_periodicity},
      {"delta-set-sparse-generators", case_delta_sparse_generators},
      {"delta-union-affine-box", case_delta_union_affine_box},
      {"cone-polynomials-affine", case_cone_polynomials},
      {"extremal-length-rays", case_extremal_length_rays},
      {"omega-linear-growth", case_omega_linear_growth},
      {"catenary-eventual-period", case_catenary_period},
      {"randomized-cross-checks", case_randomized_cross_checks},
  };

  std::vector<CaseResult> results;
  for (const auto& e : entries) {
    Check check;
    auto t0 = std::chrono::steady_clock::now();
    try {
      e.fn(check);
    } catch (const std::exception& ex) {
      check.that(false, std::string("unexpected exception: ") + ex.what());
    }
    auto t1 = std::chrono::steady_clock::now();
    double secs = std::chrono::duration<double>(t1 - t0).count();

    CaseResult r;
    r.name = e.name;
    r.pass = check.ok;
    r.detail = check.detail;
    r.seconds = secs;
    results.push_back(r);

    out << (r.pass ? "PASS" : "FAIL") << "  " << r.name << "  ("
        << std::fixed << std::setprecision(1) << secs << "s)";
    if (!r.pass) out << "  " << r.detail;
    out << '\n';
  }
  return results;
}

bool all_passed(const std::vector<CaseResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace verify
}  // namespace sgf

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "sgf/enumerate.hpp"
#include "sgf/errors.hpp"
#include "sgf/invariants.hpp"
#include "sgf/numerical.hpp"
#include "sgf/presentation.hpp"

using namespace sgf;

namespace {

Element el(std::int64_t n) { return Element::scalar(Int(n)); }

SemigroupPresentation mcnugget() {
  return SemigroupPresentation::numerical({6, 9, 20});
}

SemigroupPresentation plane_cone() {
  AmbientSpec amb(2, {});
  return SemigroupPresentation(amb, {Element({Int(2), Int(1)}),
                                     Element({Int(1), Int(1)}),
                                     Element({Int(1), Int(2)})});
}

}  // namespace

TEST_CASE("length and delta sets of elements") {
  auto sgp = mcnugget();
  CHECK(length_set(sgp, el(60)) == std::vector<std::int64_t>{3, 7, 8, 9, 10});
  CHECK(length_set(sgp, el(0)) == std::vector<std::int64_t>{0});
  CHECK(length_set(sgp, el(29)) == std::vector<std::int64_t>{2});
  CHECK_THROWS_AS(length_set(sgp, el(7)), NotInSemigroupError);

  CHECK(delta_of_element(sgp, el(60)) == std::vector<std::int64_t>{1, 4});
  CHECK(delta_of_element(sgp, el(29)).empty());
  CHECK(delta_of_lengths({3, 7, 8}) == std::vector<std::int64_t>{1, 4});
  CHECK(delta_of_lengths({5}).empty());

  CHECK(max_length(sgp, el(60)) == 10);
  CHECK(min_length(sgp, el(60)) == 3);
  CHECK(max_length(sgp, el(0)) == 0);
}

TEST_CASE("apery sets") {
  auto sgp = mcnugget();
  CHECK(apery_set(sgp, {0}) ==
        std::vector<std::int64_t>{0, 9, 20, 29, 40, 49});
  // every nonzero member loses some generator, so the full subset leaves {0}
  CHECK(apery_set(sgp, {0, 1, 2}) == std::vector<std::int64_t>{0});

  auto ap9 = apery_set(sgp, {1});
  CHECK(ap9.size() == 9);
  CHECK(ap9.front() == 0);
  for (auto a : ap9) {
    CHECK(contains(sgp, el(a)));
    if (a >= 9) CHECK(!contains(sgp, el(a - 9)));
  }

  CHECK_THROWS_AS(apery_set(sgp, {}), EmptySubsetError);
  CHECK_THROWS_AS(apery_set(plane_cone(), {0}), NotNumericalError);
}

TEST_CASE("restricted max length") {
  auto sgp = mcnugget();
  CHECK(max_length_restricted(sgp, {1, 2}, el(49)) == 3);
  CHECK(!max_length_restricted(sgp, {1, 2}, el(6)).has_value());
  CHECK(max_length_restricted(sgp, {0, 1, 2}, el(60)) == 10);

  auto cone = plane_cone();
  CHECK(max_length_restricted(cone, {1}, Element({Int(3), Int(3)})) == 3);
  CHECK(!max_length_restricted(cone, {0}, Element({Int(3), Int(3)}))
             .has_value());
}

TEST_CASE("omega on numerical semigroups") {
  auto sgp = mcnugget();
  auto w6 = omega(sgp, el(6));
  CHECK(w6.value == 3);
  CHECK(w6.exact);
  auto w0 = omega(sgp, el(0));
  CHECK(w0.value == 0);
  CHECK(w0.exact);
  CHECK_THROWS_AS(omega(sgp, el(7)), NotInSemigroupError);

  auto tiny = SemigroupPresentation::numerical({2, 3});
  CHECK(omega(tiny, el(2)).value == 2);
  CHECK(omega(tiny, el(3)).value == 3);
  CHECK_THROWS_AS(omega(tiny, el(1)), NotInSemigroupError);
}

TEST_CASE("bounded omega search") {
  auto sgp = mcnugget();
  auto exact = omega_bounded(sgp, el(6), 12);
  CHECK(exact.value == 3);
  CHECK(exact.exact);

  auto truncated = omega_bounded(sgp, el(6), 1);
  CHECK(!truncated.exact);
  CHECK(truncated.value <= 3);

  // boundary ray: (c,0,0) never dominates, so the cap cannot close, but the
  // minimal bullets all show up early and the value is right
  auto cone = plane_cone();
  auto w = omega_bounded(cone, Element({Int(2), Int(2)}), 8);
  CHECK(w.value == 2);
  CHECK(!w.exact);
}

TEST_CASE("factorization distances") {
  Factorization a({3, 0, 0});
  Factorization b({0, 2, 0});
  CHECK(factorization_distance(a, b) == 3);
  CHECK(factorization_distance(a, a) == 0);
  CHECK(factorization_distance(Factorization({5, 1, 0}),
                               Factorization({2, 1, 2})) == 3);
  CHECK_THROWS_AS(factorization_distance(a, Factorization({1, 2})),
                  DimensionMismatchError);
}

TEST_CASE("catenary degrees") {
  auto sgp = mcnugget();
  CHECK(catenary_degree(sgp, el(18)) == 3);
  CHECK(catenary_degree(sgp, el(29)) == 0);
  CHECK(catenary_degree(sgp, el(0)) == 0);
  CHECK_THROWS_AS(catenary_degree(sgp, el(7)), NotInSemigroupError);

  auto z60 = factorizations(sgp, el(60));
  CHECK(catenary_of_set(z60) == catenary_degree(sgp, el(60)));
}

TEST_CASE("semigroup delta set certificate") {
  auto sgp = mcnugget();
  auto res = delta_of_semigroup(sgp, 500);
  CHECK(res.delta == std::vector<std::int64_t>{1, 2, 3, 4});
  CHECK(res.certificate.status == CertificateStatus::Verified);
  CHECK(res.certificate.period == 60);
  CHECK(res.certificate.start == 92);
  CHECK(res.certificate.window_begin == 92);
  CHECK(res.certificate.window_end == 92 + 120);

  // an externally supplied onset is verified, not trusted
  auto hinted = delta_of_semigroup(sgp, 500, 92);
  CHECK(hinted.certificate.status == CertificateStatus::Verified);
  CHECK(hinted.delta == res.delta);
  auto badhint = delta_of_semigroup(sgp, 500, 50);
  CHECK(badhint.certificate.status == CertificateStatus::HorizonTooSmall);

  auto small = delta_of_semigroup(sgp, 130);
  CHECK(small.certificate.status == CertificateStatus::HorizonTooSmall);

  CHECK_THROWS_AS(delta_of_semigroup(sgp, 200, 92), EmptyRangeError);
  CHECK_THROWS_AS(delta_of_semigroup(sgp, -1), EmptyRangeError);
  CHECK_THROWS_AS(delta_of_semigroup(plane_cone(), 100), NotNumericalError);
}

TEST_CASE("delta set of <2,3> stabilizes immediately") {
  auto sgp = SemigroupPresentation::numerical({2, 3});
  auto res = delta_of_semigroup(sgp, 60);
  CHECK(res.delta == std::vector<std::int64_t>{1});
  CHECK(res.certificate.status == CertificateStatus::Verified);
  CHECK(res.certificate.period == 6);
  CHECK(res.certificate.start == 8);
}

TEST_CASE("box delta union matches a hand sweep") {
  auto cone = plane_cone();
  Element lo({Int(0), Int(0)});
  Element hi({Int(8), Int(8)});
  auto got = delta_union_over_box(cone, lo, hi);

  std::vector<char> seen;
  for (std::int64_t x = 0; x <= 8; ++x)
    for (std::int64_t y = 0; y <= 8; ++y) {
      Element e({Int(x), Int(y)});
      if (!contains(cone, e)) continue;
      for (auto g : delta_of_element(cone, e)) {
        if (static_cast<std::size_t>(g) >= seen.size())
          seen.resize(static_cast<std::size_t>(g) + 1, 0);
        seen[static_cast<std::size_t>(g)] = 1;
      }
    }
  std::vector<std::int64_t> want;
  for (std::size_t v = 0; v < seen.size(); ++v)
    if (seen[v]) want.push_back(static_cast<std::int64_t>(v));
  CHECK(got == want);
}

TEST_CASE("range scan contents") {
  auto sgp = mcnugget();
  ScanSelection sel;
  sel.z_count = sel.lengths = sel.delta = true;
  sel.max_len = sel.min_len = sel.omega = sel.catenary = true;
  auto table = scan_range(sgp, 0, 80, sel);

  // non-members are dropped, order is ascending
  for (std::size_t i = 1; i < table.records.size(); ++i)
    CHECK(table.records[i - 1].element < table.records[i].element);
  for (const auto& rec : table.records) {
    CHECK(contains(sgp, rec.element));
    CHECK(rec.omega_exact.value());
  }

  const ScanRecord* r60 = nullptr;
  for (const auto& rec : table.records)
    if (rec.element == el(60)) r60 = &rec;
  REQUIRE(r60 != nullptr);
  CHECK(*r60->z_count == 5);
  CHECK(*r60->lengths == std::vector<std::int64_t>{3, 7, 8, 9, 10});
  CHECK(*r60->delta == std::vector<std::int64_t>{1, 4});
  CHECK(*r60->max_len == 10);
  CHECK(*r60->min_len == 3);
  CHECK(*r60->catenary == catenary_degree(sgp, el(60)));

  bool has7 = false, has29 = false;
  for (const auto& rec : table.records) {
    if (rec.element == el(7)) has7 = true;
    if (rec.element == el(29)) has29 = true;
  }
  CHECK(!has7);
  CHECK(has29);

  CHECK_THROWS_AS(scan_range(sgp, 10, 5, sel), EmptyRangeError);
  CHECK_THROWS_AS(scan_range(plane_cone(), 0, 5, sel), NotNumericalError);
}

TEST_CASE("range scan agrees with the bitset table") {
  auto sgp = mcnugget();
  ScanSelection sel;
  sel.lengths = true;
  auto table = scan_range(sgp, 0, 300, sel);  // wide enough for the thread path

  LengthSetTable bits({6, 9, 20}, 300);
  std::size_t idx = 0;
  for (std::int64_t n = 0; n <= 300; ++n) {
    if (!bits.member(n)) continue;
    REQUIRE(idx < table.records.size());
    CHECK(table.records[idx].element == el(n));
    CHECK(*table.records[idx].lengths == bits.lengths(n));
    ++idx;
  }
  CHECK(idx == table.records.size());
}

TEST_CASE("box scan order and selection") {
  auto cone = plane_cone();
  ScanSelection sel;
  sel.z_count = sel.lengths = true;
  auto table = scan_box(cone, Element({Int(0), Int(0)}),
                        Element({Int(4), Int(4)}), sel);
  for (std::size_t i = 1; i < table.records.size(); ++i)
    CHECK(table.records[i - 1].element < table.records[i].element);
  for (const auto& rec : table.records) {
    REQUIRE(rec.z_count.has_value());
    REQUIRE(rec.lengths.has_value());
    CHECK(!rec.max_len.has_value());
    CHECK(*rec.z_count == Int(static_cast<unsigned long>(
                              factorizations(cone, rec.element).count())));
  }

  CHECK_THROWS_AS(scan_box(cone, Element({Int(2), Int(0)}),
                           Element({Int(0), Int(2)}), sel),
                  EmptyRangeError);
}

TEST_CASE("box scan sweeps torsion residues") {
  AmbientSpec amb(1, {2});
  SemigroupPresentation sgp(
      amb, {Element({Int(2)}, {0}), Element({Int(3)}, {1})});
  ScanSelection sel;
  sel.z_count = true;
  auto table = scan_box(sgp, Element({Int(0)}, {0}), Element({Int(6)}, {0}),
                        sel);
  // members among free 0..6 with both residues: 0|0, 2|0, 3|1, 4|0, 5|1, 6|0
  std::vector<std::string> got;
  for (const auto& rec : table.records) got.push_back(element_text(rec.element));
  CHECK(got == std::vector<std::string>{"0|0", "2|0", "3|1", "4|0", "5|1",
                                        "6|0"});
}

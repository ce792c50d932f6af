#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sgf/enumerate.hpp"
#include "sgf/invariants.hpp"
#include "sgf/oracles.hpp"
#include "sgf/presentation.hpp"

using namespace sgf;

namespace {

Element el(std::int64_t n) { return Element::scalar(Int(n)); }

}  // namespace

TEST_CASE("naive factorizations agree with the search") {
  auto sgp = SemigroupPresentation::numerical({6, 9, 20});
  for (std::int64_t n : {0, 6, 7, 18, 29, 43, 60, 126}) {
    auto fast = factorizations(sgp, el(n));
    auto slow = oracles::naive_factorizations(sgp, el(n));
    CHECK(fast.factorizations == slow.factorizations);
  }

  AmbientSpec amb(1, {2});
  SemigroupPresentation tors(
      amb, {Element({Int(2)}, {0}), Element({Int(3)}, {1})});
  for (std::int64_t n = 0; n <= 12; ++n)
    for (std::int64_t r = 0; r < 2; ++r) {
      Element e({Int(n)}, {r});
      CHECK(factorizations(tors, e).factorizations ==
            oracles::naive_factorizations(tors, e).factorizations);
    }

  AmbientSpec plane(2, {});
  SemigroupPresentation cone(plane, {Element({Int(2), Int(1)}),
                                     Element({Int(1), Int(1)}),
                                     Element({Int(1), Int(2)})});
  for (std::int64_t x = 0; x <= 6; ++x)
    for (std::int64_t y = 0; y <= 6; ++y) {
      Element e({Int(x), Int(y)});
      CHECK(factorizations(cone, e).factorizations ==
            oracles::naive_factorizations(cone, e).factorizations);
    }
}

TEST_CASE("box volume counts the sweep") {
  auto sgp = SemigroupPresentation::numerical({6, 9, 20});
  // caps 60/6, 60/9, 60/20 give an 11 x 7 x 4 box
  CHECK(oracles::naive_box_volume(sgp, el(60)) == 308);
  CHECK(oracles::naive_box_volume(sgp, el(0)) == 1);
}

TEST_CASE("catenary oracle agrees") {
  auto sgp = SemigroupPresentation::numerical({6, 9, 20});
  CHECK(oracles::catenary_oracle(sgp, el(18)) == 3);
  CHECK(oracles::catenary_oracle(sgp, el(29)) == 0);
  for (std::int64_t n = 0; n <= 120; ++n) {
    if (!contains(sgp, el(n))) continue;
    CHECK(oracles::catenary_oracle(sgp, el(n)) == catenary_degree(sgp, el(n)));
  }
}

TEST_CASE("bullet oracle matches both omega routes") {
  auto sgp = SemigroupPresentation::numerical({6, 9, 20});
  for (std::int64_t n : {0, 6, 9, 20, 26, 29, 40, 60}) {
    std::int64_t cap = (n + 43 + 20) / 6 + 1;
    auto slow = oracles::bullet_oracle(sgp, el(n), cap);
    auto fast = omega_bounded(sgp, el(n), cap);
    auto exact = omega(sgp, el(n));
    CHECK(slow.value == exact.value);
    CHECK(fast.value == exact.value);
    CHECK(slow.exact == fast.exact);
    CHECK(slow.exact);
  }

  auto low = oracles::bullet_oracle(sgp, el(6), 1);
  CHECK(!low.exact);
  CHECK(low.value <= 3);

  AmbientSpec plane(2, {});
  SemigroupPresentation cone(plane, {Element({Int(2), Int(1)}),
                                     Element({Int(1), Int(1)}),
                                     Element({Int(1), Int(2)})});
  Element diag({Int(2), Int(2)});
  auto slow = oracles::bullet_oracle(cone, diag, 8);
  auto fast = omega_bounded(cone, diag, 8);
  CHECK(slow.value == 2);
  CHECK(fast.value == 2);
  CHECK(slow.exact == fast.exact);
}

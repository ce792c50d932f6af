#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "sgf/element.hpp"
#include "sgf/enumerate.hpp"
#include "sgf/errors.hpp"
#include "sgf/numbers.hpp"
#include "sgf/numerical.hpp"
#include "sgf/presentation.hpp"

using namespace sgf;

namespace {

std::vector<std::vector<std::int64_t>> exponents_of(const FactorizationSet& zs) {
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& f : zs.factorizations) out.push_back(f.exponents);
  return out;
}

}  // namespace

TEST_CASE("rationals canonicalize") {
  CHECK(make_rat(Int(14), Int(120)) == make_rat(Int(7), Int(60)));
  CHECK(make_rat(Int(3), Int(-6)) == make_rat(Int(-1), Int(2)));
  CHECK(rat_num(make_rat(Int(14), Int(120))) == 7);
  CHECK(rat_den(make_rat(Int(14), Int(120))) == 60);
  CHECK_THROWS_AS(make_rat(Int(1), Int(0)), std::invalid_argument);
}

TEST_CASE("integer helpers") {
  CHECK(int_pow(Int(3), 4) == 81);
  CHECK(int_pow(Int(5), 0) == 1);
  CHECK(int_lcm(Int(6), Int(20)) == 60);
  CHECK(int_gcd(Int(6), Int(20)) == 2);
  CHECK(int_fdiv(Int(-7), Int(2)) == -4);
  CHECK(int_str(Int("123456789012345678901234567890")) ==
        "123456789012345678901234567890");

  Int big = int_pow(Int(2), 70);
  CHECK(fits_int64(Int(42)));
  CHECK(!fits_int64(big));
  CHECK(to_int64(Int(-5)) == -5);
  CHECK_THROWS_AS(to_int64(big), std::overflow_error);
}

TEST_CASE("elements") {
  Element a = Element::scalar(Int(60));
  CHECK(element_text(a) == "60");
  CHECK(!a.is_zero());
  CHECK(Element({Int(0), Int(0)}).is_zero());
  CHECK(Element({Int(0)}, {0}).is_zero());
  CHECK(!Element({Int(0)}, {1}).is_zero());

  Element b({Int(2), Int(3)});
  CHECK(element_text(b) == "2,3");
  Element c({Int(2), Int(3)}, {1, 0});
  CHECK(element_text(c) == "2,3|1,0");

  // lex order: free part first, then torsion
  CHECK(Element({Int(1), Int(9)}) < Element({Int(2), Int(0)}));
  CHECK(Element({Int(1)}, {0}) < Element({Int(1)}, {1}));

  AmbientSpec amb(2, {4});
  Element x({Int(1), Int(2)}, {3});
  Element y({Int(2), Int(2)}, {3});
  Element s = element_add(amb, x, y);
  CHECK(s.free == std::vector<Int>{Int(3), Int(4)});
  CHECK(s.torsion == std::vector<std::int64_t>{2});  // 3 + 3 mod 4

  Element t = element_scale(amb, Int(3), x);
  CHECK(t.free == std::vector<Int>{Int(3), Int(6)});
  CHECK(t.torsion == std::vector<std::int64_t>{1});  // 9 mod 4

  CHECK_THROWS_AS(element_add(amb, x, Element::scalar(Int(1))),
                  AmbientMismatchError);
}

TEST_CASE("ambient validation") {
  CHECK_THROWS_AS(AmbientSpec(0, {}), std::invalid_argument);
  CHECK_THROWS_AS(AmbientSpec(1, {1}), std::invalid_argument);
  CHECK(AmbientSpec(3, {2, 5}).torsion_rank() == 2);
}

TEST_CASE("presentation construction") {
  auto sgp = SemigroupPresentation::numerical({6, 9, 20});
  CHECK(sgp.size() == 3);
  CHECK(sgp.is_numerical());
  CHECK(sgp.numerical_generators() == std::vector<std::int64_t>{6, 9, 20});

  CHECK_THROWS_AS(SemigroupPresentation::numerical({9, 6, 20}),
                  std::invalid_argument);
  CHECK_THROWS_AS(SemigroupPresentation::numerical({0, 3}),
                  std::invalid_argument);
  CHECK_THROWS_AS(SemigroupPresentation(AmbientSpec(1, {}), {}),
                  std::invalid_argument);

  auto even = SemigroupPresentation::numerical({2, 4});
  CHECK(!even.is_numerical());  // gcd 2, affine in N^1
  CHECK(even.free_gcd() == 2);
}

TEST_CASE("validate catches the defect classes") {
  CHECK(validate(SemigroupPresentation::numerical({6, 9, 20})).ok());

  auto nonmin = validate(SemigroupPresentation::numerical({6, 9, 15, 20}));
  REQUIRE(nonmin.violations.size() == 1);
  CHECK(nonmin.violations[0].kind == Violation::Kind::NotMinimal);
  CHECK(nonmin.violations[0].generator == 3);  // 15 = 6 + 9
  CHECK(nonmin.has_errors(false));
  CHECK(!nonmin.has_errors(true));
  CHECK(violation_name(nonmin.violations[0].kind) == "NotMinimal");

  // 4 = 2 + 2, so the redundancy fires alongside the gcd warning
  auto gcd2 = validate(SemigroupPresentation::numerical({2, 4}));
  REQUIRE(gcd2.violations.size() == 2);
  CHECK(gcd2.violations[0].kind == Violation::Kind::NumericalGcdNotOne);
  CHECK(gcd2.violations[1].kind == Violation::Kind::NotMinimal);
  CHECK(gcd2.violations[1].generator == 2);
  CHECK(gcd2.has_errors(false));
  CHECK(!gcd2.has_errors(true));

  AmbientSpec tor(1, {2});
  SemigroupPresentation unred(
      tor, {Element({Int(0)}, {1}), Element({Int(2)}, {0})});
  auto rep = validate(unred);
  REQUIRE(!rep.violations.empty());
  CHECK(rep.violations[0].kind == Violation::Kind::NotReduced);
  CHECK(rep.violations[0].generator == 1);
  CHECK(rep.has_errors(true));

  SemigroupPresentation badres(tor, {Element({Int(2)}, {5})});
  auto rep2 = validate(badres);
  REQUIRE(rep2.violations.size() == 1);
  CHECK(rep2.violations[0].kind == Violation::Kind::BadTorsionResidue);
  CHECK(rep2.has_errors(true));
}

TEST_CASE("membership and factorizations of <6,9,20>") {
  auto sgp = SemigroupPresentation::numerical({6, 9, 20});

  CHECK(contains(sgp, Element::scalar(Int(0))));
  CHECK(contains(sgp, Element::scalar(Int(29))));
  CHECK(!contains(sgp, Element::scalar(Int(7))));
  CHECK(!contains(sgp, Element::scalar(Int(43))));
  CHECK(contains(sgp, Element::scalar(Int(44))));

  auto z0 = factorizations(sgp, Element::scalar(Int(0)));
  CHECK(exponents_of(z0) ==
        std::vector<std::vector<std::int64_t>>{{0, 0, 0}});

  auto z18 = factorizations(sgp, Element::scalar(Int(18)));
  CHECK(exponents_of(z18) ==
        std::vector<std::vector<std::int64_t>>{{0, 2, 0}, {3, 0, 0}});

  auto z29 = factorizations(sgp, Element::scalar(Int(29)));
  CHECK(exponents_of(z29) ==
        std::vector<std::vector<std::int64_t>>{{0, 1, 1}});

  auto z60 = factorizations(sgp, Element::scalar(Int(60)));
  CHECK(exponents_of(z60) == std::vector<std::vector<std::int64_t>>{
                                 {0, 0, 3}, {1, 6, 0}, {4, 4, 0},
                                 {7, 2, 0}, {10, 0, 0}});
  for (const auto& f : z60.factorizations)
    CHECK(f.length == f.exponents[0] + f.exponents[1] + f.exponents[2]);

  CHECK(factorizations(sgp, Element::scalar(Int(7))).empty());
}

TEST_CASE("factorizations with torsion") {
  AmbientSpec amb(1, {2});
  SemigroupPresentation sgp(
      amb, {Element({Int(2)}, {0}), Element({Int(3)}, {1})});

  auto zs = factorizations(sgp, Element({Int(6)}, {0}));
  CHECK(exponents_of(zs) ==
        std::vector<std::vector<std::int64_t>>{{0, 2}, {3, 0}});

  // free part works, torsion residue rules both out
  CHECK(factorizations(sgp, Element({Int(6)}, {1})).empty());
  CHECK(!contains(sgp, Element({Int(6)}, {1})));
  CHECK(contains(sgp, Element({Int(3)}, {1})));
}

TEST_CASE("factorizations in the plane") {
  AmbientSpec amb(2, {});
  SemigroupPresentation sgp(amb, {Element({Int(2), Int(1)}),
                                  Element({Int(1), Int(1)}),
                                  Element({Int(1), Int(2)})});

  auto z22 = factorizations(sgp, Element({Int(2), Int(2)}));
  CHECK(exponents_of(z22) ==
        std::vector<std::vector<std::int64_t>>{{0, 2, 0}});

  auto z33 = factorizations(sgp, Element({Int(3), Int(3)}));
  CHECK(exponents_of(z33) ==
        std::vector<std::vector<std::int64_t>>{{0, 3, 0}, {1, 0, 1}});

  CHECK(!contains(sgp, Element({Int(1), Int(0)})));
  CHECK(contains(sgp, Element({Int(5), Int(3)})));
}

TEST_CASE("denumerant table") {
  auto sgp = SemigroupPresentation::numerical({6, 9, 20});
  auto table = denumerant_table(sgp, 60);
  REQUIRE(table.size() == 61);
  CHECK(table[0] == 1);
  CHECK(table[7] == 0);
  CHECK(table[29] == 1);
  CHECK(table[18] == 2);
  CHECK(table[60] == 5);

  AmbientSpec amb(2, {});
  SemigroupPresentation plane(amb, {Element({Int(1), Int(0)}),
                                    Element({Int(0), Int(1)})});
  CHECK_THROWS_AS(denumerant_table(plane, 10), NotNumericalError);
}

TEST_CASE("frobenius numbers") {
  CHECK(frobenius_number({6, 9, 20}) == 43);
  CHECK(frobenius_number({2, 3}) == 1);
  CHECK(frobenius_number({1}) == -1);

  auto brute = [](const std::vector<std::int64_t>& gens, std::int64_t lim) {
    std::vector<char> in(static_cast<std::size_t>(lim) + 1, 0);
    in[0] = 1;
    for (std::int64_t n = 1; n <= lim; ++n)
      for (auto g : gens)
        if (n >= g && in[static_cast<std::size_t>(n - g)]) {
          in[static_cast<std::size_t>(n)] = 1;
          break;
        }
    std::int64_t f = -1;
    for (std::int64_t n = 0; n <= lim; ++n)
      if (!in[static_cast<std::size_t>(n)]) f = n;
    return f;
  };
  for (const auto& gens : {std::vector<std::int64_t>{3, 5},
                           std::vector<std::int64_t>{4, 7, 9},
                           std::vector<std::int64_t>{5, 11}})
    CHECK(frobenius_number(gens) == brute(gens, 200));
}

TEST_CASE("length set table") {
  LengthSetTable table({6, 9, 20}, 200);
  CHECK(table.member(0));
  CHECK(!table.member(43));
  CHECK(table.member(44));
  CHECK(table.lengths(60) == std::vector<std::int64_t>{3, 7, 8, 9, 10});
  CHECK(table.delta(60) == std::vector<std::int64_t>{1, 4});
  CHECK(table.lengths(0) == std::vector<std::int64_t>{0});
  CHECK(table.lengths(43).empty());
  CHECK(table.delta(29).empty());
}

TEST_CASE("restricted max length lookup") {
  CHECK(max_length_table_lookup({9, 20}, 49) == 3);
  CHECK(!max_length_table_lookup({9, 20}, 6).has_value());
  CHECK(max_length_table_lookup({6, 9, 20}, 60) == 10);
  CHECK(max_length_table_lookup({6}, 0) == 0);
}

TEST_CASE("weight capped enumeration is graded lex") {
  std::vector<std::vector<std::int64_t>> seen;
  std::vector<std::int64_t> weights;
  detail::for_each_weight_capped(
      2, 2, [&](const std::vector<std::int64_t>& b, std::int64_t w) {
        seen.push_back(b);
        weights.push_back(w);
        return true;
      });
  CHECK(seen == std::vector<std::vector<std::int64_t>>{{0, 0},
                                                       {0, 1},
                                                       {1, 0},
                                                       {0, 2},
                                                       {1, 1},
                                                       {2, 0}});
  CHECK(weights == std::vector<std::int64_t>{0, 1, 1, 2, 2, 2});
}

TEST_CASE("coordinate limit guards the machine workspace") {
  auto sgp = SemigroupPresentation::numerical({2, 3});
  Element huge = Element::scalar(int_pow(Int(2), 63));
  CHECK_THROWS_AS(factorizations(sgp, huge), std::overflow_error);
}

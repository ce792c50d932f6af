#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "sgf/enumerate.hpp"
#include "sgf/invariants.hpp"
#include "sgf/io.hpp"
#include "sgf/numerical.hpp"
#include "sgf/oracles.hpp"
#include "sgf/presentation.hpp"

using namespace sgf;

namespace {

Element el(std::int64_t n) { return Element::scalar(Int(n)); }

// Ascending sieve reduction: keep a value only when the kept ones cannot
// already represent it. Ascending order makes the result minimal.
std::vector<std::int64_t> reduce_generators(std::vector<std::int64_t> vals) {
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  std::vector<std::int64_t> kept;
  for (auto v : vals) {
    std::vector<char> in(static_cast<std::size_t>(v) + 1, 0);
    in[0] = 1;
    for (std::int64_t n = 1; n <= v; ++n)
      for (auto g : kept)
        if (n >= g && in[static_cast<std::size_t>(n - g)]) {
          in[static_cast<std::size_t>(n)] = 1;
          break;
        }
    if (!in[static_cast<std::size_t>(v)]) kept.push_back(v);
  }
  return kept;
}

std::vector<std::vector<std::int64_t>> draw_semigroups(std::size_t want) {
  std::mt19937_64 rng(0xFEEDFACEULL);
  std::set<std::vector<std::int64_t>> seen;
  std::vector<std::vector<std::int64_t>> out = {{2, 3}, {6, 9, 20}};
  for (const auto& g : out) seen.insert(g);
  while (out.size() < want) {
    std::size_t r = 2 + rng() % 3;
    std::vector<std::int64_t> vals;
    for (std::size_t i = 0; i < r; ++i)
      vals.push_back(2 + static_cast<std::int64_t>(rng() % 29));
    auto gens = reduce_generators(vals);
    if (gens.size() < 2) continue;
    std::int64_t g = 0;
    for (auto v : gens) g = std::gcd(g, v);
    if (g != 1) continue;
    if (!seen.insert(gens).second) continue;
    out.push_back(gens);
  }
  return out;
}

}  // namespace

TEST_CASE("randomized dual route checks") {
  auto families = draw_semigroups(12);
  std::mt19937_64 rng(0x5EEDBEEFULL);

  for (const auto& gens : families) {
    CAPTURE(gens);
    auto sgp = SemigroupPresentation::numerical(gens);
    REQUIRE(validate(sgp).ok());
    std::int64_t frob = frobenius_number(gens);

    // factorization sets three ways: search, plain sweep, counting table
    auto dtable = denumerant_table(sgp, 250);
    for (int trial = 0; trial < 4; ++trial) {
      std::int64_t n = static_cast<std::int64_t>(rng() % 251);
      while (oracles::naive_box_volume(sgp, el(n)) > 30000) n /= 2;
      auto fast = factorizations(sgp, el(n));
      auto slow = oracles::naive_factorizations(sgp, el(n));
      CHECK(fast.factorizations == slow.factorizations);
      CHECK(Int(static_cast<unsigned long>(fast.count())) ==
            dtable[static_cast<std::size_t>(n)]);
    }

    // length sets against the bitset table
    LengthSetTable bits(gens, 150);
    for (int trial = 0; trial < 5; ++trial) {
      std::int64_t n = static_cast<std::int64_t>(rng() % 151);
      if (!bits.member(n)) continue;
      CHECK(length_set(sgp, el(n)) == bits.lengths(n));
      CHECK(delta_of_element(sgp, el(n)) == bits.delta(n));
      CHECK(max_length(sgp, el(n)) == bits.lengths(n).back());
      CHECK(min_length(sgp, el(n)) == bits.lengths(n).front());
    }

    // catenary two ways
    for (int trial = 0; trial < 2; ++trial) {
      std::int64_t n = static_cast<std::int64_t>(rng() % 121);
      if (!contains(sgp, el(n))) continue;
      if (oracles::naive_box_volume(sgp, el(n)) > 30000) continue;
      CHECK(catenary_degree(sgp, el(n)) == oracles::catenary_oracle(sgp, el(n)));
    }

    // omega three ways, when the shell is small enough to sweep
    {
      std::int64_t n = static_cast<std::int64_t>(rng() % 61);
      while (n > 0 && !contains(sgp, el(n))) --n;
      std::int64_t cap = (n + frob + gens.back()) / gens.front() + 1;
      double shell = std::pow(static_cast<double>(cap + 1),
                              static_cast<double>(gens.size()));
      if (shell <= 150000.0) {
        auto exact = omega(sgp, el(n));
        auto direct = omega_bounded(sgp, el(n), cap);
        auto slow = oracles::bullet_oracle(sgp, el(n), cap);
        CHECK(exact.exact);
        CHECK(direct.value == exact.value);
        CHECK(slow.value == exact.value);
        CHECK(direct.exact == slow.exact);
      }
    }

    // Apery of the least generator: one member per residue class
    auto ap = apery_set(sgp, {0});
    CHECK(ap.size() == static_cast<std::size_t>(gens.front()));
    CHECK(ap.front() == 0);
    std::set<std::int64_t> residues;
    for (auto a : ap) residues.insert(a % gens.front());
    CHECK(residues.size() == ap.size());

    // scan CSV round trip
    ScanSelection sel;
    sel.z_count = sel.lengths = sel.delta = true;
    sel.max_len = sel.min_len = sel.omega = sel.catenary = true;
    auto table = scan_range(sgp, 0, 60, sel);
    std::string csv = io::scan_to_csv(table, sel);
    std::istringstream in(csv);
    auto parsed = io::read_scan_csv(in, sgp.ambient);
    CHECK(io::scan_to_csv(parsed.table, parsed.selection) == csv);
  }
}

TEST_CASE("length extremes are monotone along sums") {
  auto families = draw_semigroups(8);
  std::mt19937_64 rng(0xADD5EEDULL);
  for (const auto& gens : families) {
    CAPTURE(gens);
    auto sgp = SemigroupPresentation::numerical(gens);
    std::vector<std::int64_t> members;
    for (std::int64_t n = 0; n <= 120 && members.size() < 40; ++n)
      if (contains(sgp, el(n))) members.push_back(n);
    for (int trial = 0; trial < 4; ++trial) {
      std::int64_t a = members[rng() % members.size()];
      std::int64_t b = members[rng() % members.size()];
      // superadditive max, subadditive min
      CHECK(max_length(sgp, el(a + b)) >=
            max_length(sgp, el(a)) + max_length(sgp, el(b)));
      CHECK(min_length(sgp, el(a + b)) <=
            min_length(sgp, el(a)) + min_length(sgp, el(b)));
    }
  }
}

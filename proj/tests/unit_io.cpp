#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "sgf/enumerate.hpp"
#include "sgf/errors.hpp"
#include "sgf/invariants.hpp"
#include "sgf/io.hpp"
#include "sgf/quasipoly.hpp"

using namespace sgf;
namespace fs = std::filesystem;

namespace {

Rat q(long num, long den = 1) { return make_rat(num, den); }

SemigroupPresentation mcnugget() {
  return SemigroupPresentation::numerical({6, 9, 20});
}

bool mentions(const std::exception& e, const std::string& needle) {
  return std::string(e.what()).find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("semigroup documents parse") {
  auto sgp = io::parse_semigroup(R"({"numerical": [6, 9, 20]})");
  CHECK(sgp.is_numerical());
  CHECK(sgp.numerical_generators() == std::vector<std::int64_t>{6, 9, 20});

  auto affine = io::parse_semigroup(
      R"({"free_rank": 2, "torsion": [], "generators":
          [{"free": [2, 1]}, {"free": [1, 2]}]})");
  CHECK(affine.ambient.free_rank == 2);
  CHECK(affine.size() == 2);

  auto tors = io::parse_semigroup(
      R"({"free_rank": 1, "torsion": [2], "generators":
          [{"free": [2]}, {"free": [3], "torsion": [1]}]})");
  CHECK(tors.ambient.torsion_orders == std::vector<std::int64_t>{2});
  CHECK(tors.generators[0].torsion == std::vector<std::int64_t>{0});
  CHECK(tors.generators[1].torsion == std::vector<std::int64_t>{1});

  CHECK_THROWS_AS(io::parse_semigroup(R"({"numerical": [9, 6]})"),
                  BadDocumentError);
  CHECK_THROWS_AS(io::parse_semigroup(R"({"numerical": [6], "extra": 1})"),
                  BadDocumentError);
  CHECK_THROWS_AS(io::parse_semigroup(R"({"free_rank": 1})"),
                  BadDocumentError);
  CHECK_THROWS_AS(
      io::parse_semigroup(
          R"({"free_rank": 1, "torsion": [], "generators": [{"free": [-2]}]})"),
      BadDocumentError);
  CHECK_THROWS_AS(io::parse_semigroup("not json"), BadDocumentError);

  try {
    io::parse_semigroup(R"({"wat": 1})");
    CHECK(false);
  } catch (const BadDocumentError& e) {
    CHECK(e.code() == "BadDocument");
  }
}

TEST_CASE("semigroup documents round trip") {
  auto sgp = mcnugget();
  auto again = io::parse_semigroup(io::semigroup_to_json(sgp));
  CHECK(again.ambient == sgp.ambient);
  CHECK(again.generators == sgp.generators);

  AmbientSpec amb(2, {3});
  SemigroupPresentation fancy(
      amb, {Element({Int(2), Int(0)}, {1}), Element({Int(0), Int(5)}, {2})});
  auto back = io::parse_semigroup(io::semigroup_to_json(fancy));
  CHECK(back.ambient == fancy.ambient);
  CHECK(back.generators == fancy.generators);
}

TEST_CASE("load_semigroup reads a file") {
  fs::path p = fs::path("io_scratch_doc.json");
  {
    std::ofstream out(p);
    out << R"({"numerical": [2, 3]})";
  }
  auto sgp = io::load_semigroup(p.string());
  CHECK(sgp.numerical_generators() == std::vector<std::int64_t>{2, 3});
  fs::remove(p);
  CHECK_THROWS_AS(io::load_semigroup("no_such_file.json"), BadDocumentError);
}

TEST_CASE("element parsing") {
  AmbientSpec one(1, {});
  Element e = io::parse_element("60", one);
  CHECK(e == Element::scalar(Int(60)));

  AmbientSpec two(2, {});
  CHECK(io::parse_element("2,3", two) == Element({Int(2), Int(3)}));

  AmbientSpec wt(2, {4});
  CHECK(io::parse_element("2,3|7", wt) ==
        Element({Int(2), Int(3)}, {3}));  // residue reduced mod 4
  CHECK(io::parse_element("2,3", wt) == Element({Int(2), Int(3)}, {0}));

  CHECK_THROWS_AS(io::parse_element("2,3", one), AmbientMismatchError);
  CHECK_THROWS_AS(io::parse_element("abc", one), std::invalid_argument);
  CHECK_THROWS_AS(io::parse_element("", one), std::invalid_argument);
  CHECK_THROWS_AS(io::parse_element("1|2|3", wt), std::invalid_argument);
  CHECK_THROWS_AS(io::parse_element("-4", one), std::invalid_argument);
}

TEST_CASE("scan csv round trips bit for bit") {
  auto sgp = mcnugget();
  ScanSelection sel;
  sel.z_count = sel.lengths = sel.delta = true;
  sel.max_len = sel.min_len = sel.omega = sel.catenary = true;
  auto table = scan_range(sgp, 0, 80, sel);

  std::string csv = io::scan_to_csv(table, sel);
  CHECK(csv.rfind("element,z_count,lengths,delta,max_len,min_len,omega,"
                  "omega_exact,catenary\n",
                  0) == 0);
  CHECK(csv.find("{3;7;8;9;10}") != std::string::npos);

  std::istringstream in(csv);
  auto parsed = io::read_scan_csv(in, sgp.ambient);
  CHECK(parsed.selection.z_count);
  CHECK(parsed.selection.omega);
  CHECK(parsed.table.records.size() == table.records.size());
  CHECK(io::scan_to_csv(parsed.table, parsed.selection) == csv);
}

TEST_CASE("scan csv quotes plane elements") {
  AmbientSpec amb(2, {});
  SemigroupPresentation cone(amb, {Element({Int(2), Int(1)}),
                                   Element({Int(1), Int(1)}),
                                   Element({Int(1), Int(2)})});
  ScanSelection sel;
  sel.z_count = true;
  auto table = scan_box(cone, Element({Int(0), Int(0)}),
                        Element({Int(3), Int(3)}), sel);
  std::string csv = io::scan_to_csv(table, sel);
  CHECK(csv.find("\"2,2\",1") != std::string::npos);

  std::istringstream in(csv);
  auto parsed = io::read_scan_csv(in, amb);
  CHECK(io::scan_to_csv(parsed.table, parsed.selection) == csv);
}

TEST_CASE("scan csv rejects malformed rows") {
  auto sgp = mcnugget();
  {
    std::istringstream in("nonsense,z_count\n");
    CHECK_THROWS_AS(io::read_scan_csv(in, sgp.ambient), std::runtime_error);
  }
  {
    // columns out of canonical order
    std::istringstream in("element,omega,z_count\n");
    CHECK_THROWS_AS(io::read_scan_csv(in, sgp.ambient), std::runtime_error);
  }
  {
    std::istringstream in("element,z_count\n60,five\n");
    try {
      io::read_scan_csv(in, sgp.ambient);
      CHECK(false);
    } catch (const std::runtime_error& e) {
      CHECK(mentions(e, "line 2"));
    }
  }
}

TEST_CASE("scan jsonl carries the same fields") {
  auto sgp = mcnugget();
  ScanSelection sel;
  sel.z_count = sel.delta = true;
  auto table = scan_range(sgp, 0, 40, sel);
  std::ostringstream out;
  io::write_scan_jsonl(out, table, sel);
  std::istringstream lines(out.str());
  std::string line;
  std::size_t count = 0;
  while (std::getline(lines, line)) {
    CHECK(line.find("\"element\"") != std::string::npos);
    CHECK(line.find("\"z_count\"") != std::string::npos);
    CHECK(line.find("\"delta\"") != std::string::npos);
    CHECK(line.find("\"omega\"") == std::string::npos);
    ++count;
  }
  CHECK(count == table.records.size());
}

TEST_CASE("quasipolynomial json round trips") {
  QuasiPolynomial qp(2, {{q(7, 60), q(3)}, {q(1), q(0)}});
  std::string text = io::quasipoly_to_json(qp);
  CHECK(text.find("7/60") != std::string::npos);
  auto back = io::parse_quasipoly(text);
  CHECK(back == qp);

  CHECK_THROWS_AS(io::parse_quasipoly(R"({"period": 1})"), BadDocumentError);
  CHECK_THROWS_AS(
      io::parse_quasipoly(
          R"({"period": 1, "degree": 5, "coeffs": [["1"]], "x": 0})"),
      BadDocumentError);
  CHECK_THROWS_AS(
      io::parse_quasipoly(
          R"({"period": 1, "degree": 0, "coeffs": [["1"], ["2"]]})"),
      BadDocumentError);
  CHECK_THROWS_AS(
      io::parse_quasipoly(R"({"period": 2, "degree": 0, "coeffs": [["1"]]})"),
      BadDocumentError);
  // a stated degree above the trimmed rows is slack left by zero rows
  CHECK(io::parse_quasipoly(
            R"({"period": 1, "degree": 3, "coeffs": [["1"], ["0"]]})")
            .degree() == 0);
}

TEST_CASE("fit report json") {
  SampleMap samples;
  for (std::int64_t n = 0; n <= 15; ++n) samples[n] = q(3 * n + 1);
  samples[1] = q(-9);
  auto report = fit_search(samples, 1, 2);
  std::string text = io::fit_report_to_json(report);
  CHECK(text.find("\"quasipolynomial\"") != std::string::npos);
  CHECK(text.find("\"onset\":2") != std::string::npos);
  CHECK(text.find("\"residuals\":[1]") != std::string::npos);
  CHECK(text.find("\"exact_matches\"") != std::string::npos);
  CHECK(text.find("\"row_min_cycles\"") != std::string::npos);
}

TEST_CASE("cone polynomial json") {
  AmbientSpec amb(2, {});
  SemigroupPresentation cone_sgp(amb, {Element({Int(2), Int(1)}),
                                       Element({Int(1), Int(1)}),
                                       Element({Int(1), Int(2)})});
  TranslatedCone cone(amb, Element({Int(0), Int(0)}),
                      {Element({Int(2), Int(1)}), Element({Int(1), Int(2)})});
  ElementInvariant ycoord = [](const Element& e) { return Rat(e.free[1]); };
  auto fit = cone_fit(cone_sgp, cone, ycoord, 1, 4);
  REQUIRE(fit.has_value());
  std::string text = io::cone_polynomial_to_json(*fit);
  CHECK(text.find("\"base\"") != std::string::npos);
  CHECK(text.find("\"generators\"") != std::string::npos);
  CHECK(text.find("\"polynomial\"") != std::string::npos);
  CHECK(text.find("\"ambient_polynomial\"") != std::string::npos);
  CHECK(text.find("null") == std::string::npos);

  // one-ray cone inside the plane: no ambient form
  TranslatedCone ray(amb, Element({Int(0), Int(0)}),
                     {Element({Int(1), Int(1)})});
  ElementInvariant xcoord = [](const Element& e) { return Rat(e.free[0]); };
  auto rayfit = cone_fit(cone_sgp, ray, xcoord, 1, 8);
  REQUIRE(rayfit.has_value());
  CHECK(!rayfit->ambient_form.has_value());
  CHECK(io::cone_polynomial_to_json(*rayfit).find("\"ambient_polynomial\":null") !=
        std::string::npos);
}

TEST_CASE("factorization cache") {
  fs::path root("io_cache_scratch");
  fs::remove_all(root);
  auto sgp = mcnugget();
  io::FactorizationCache cache(root.string(), sgp);
  CHECK(fs::exists(cache.directory()));

  std::ostringstream warn;
  CHECK(!cache.load(Element::scalar(Int(60)), warn).has_value());
  CHECK(warn.str().empty());  // a plain miss is silent

  auto zs = factorizations(sgp, Element::scalar(Int(60)));
  cache.store(zs);
  auto hit = cache.load(Element::scalar(Int(60)), warn);
  REQUIRE(hit.has_value());
  CHECK(hit->factorizations == zs.factorizations);
  CHECK(hit->element == zs.element);
  CHECK(warn.str().empty());

  // same presentation maps to the same directory, a different one elsewhere
  io::FactorizationCache cache2(root.string(), sgp);
  CHECK(cache2.directory() == cache.directory());
  io::FactorizationCache other(root.string(),
                               SemigroupPresentation::numerical({2, 3}));
  CHECK(other.directory() != cache.directory());

  // a corrupt entry is a miss with a warning
  fs::path entry = fs::path(cache.directory()) / "el_60.jsonl";
  REQUIRE(fs::exists(entry));
  {
    std::ofstream out(entry, std::ios::trunc);
    out << "[[0,0,\"wat\"]]\n";
  }
  std::ostringstream warn2;
  CHECK(!cache.load(Element::scalar(Int(60)), warn2).has_value());
  CHECK(!warn2.str().empty());

  fs::remove_all(root);
}

TEST_CASE("delta plots are reproducible") {
  auto sgp = mcnugget();
  auto p1 = io::plot_delta(sgp, 100);
  auto p2 = io::plot_delta(sgp, 100);
  CHECK(p1.svg == p2.svg);
  CHECK(p1.csv == p2.csv);

  CHECK(p1.csv.rfind("n,d\n", 0) == 0);
  CHECK(p1.csv.find("60,1\n") != std::string::npos);
  CHECK(p1.csv.find("60,4\n") != std::string::npos);
  CHECK(p1.csv.find("43,") == std::string::npos);
  CHECK(p1.svg.rfind("<svg", 0) == 0);
  CHECK(p1.svg.find("<circle") != std::string::npos);

  CHECK_THROWS_AS(io::plot_delta(sgp, -3), EmptyRangeError);
  AmbientSpec amb(2, {});
  SemigroupPresentation plane(amb, {Element({Int(1), Int(0)}),
                                    Element({Int(0), Int(1)})});
  CHECK_THROWS_AS(io::plot_delta(plane, 50), NotNumericalError);
}

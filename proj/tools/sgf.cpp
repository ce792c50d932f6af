#include <algorithm>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sgf/enumerate.hpp"
#include "sgf/errors.hpp"
#include "sgf/invariants.hpp"
#include "sgf/io.hpp"
#include "sgf/numerical.hpp"
#include "sgf/quasipoly.hpp"
#include "sgf/verify.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;
using namespace sgf;

ordered_json int_json(const Int& v) {
  if (fits_int64(v)) return ordered_json(to_int64(v));
  return ordered_json(int_str(v));
}

// Options shared by every subcommand that reads a semigroup document.
struct Loader {
  std::string path;
  bool permissive = false;

  void attach(CLI::App* sub) {
    sub->add_option("--sgp", path, "semigroup document (JSON)")
        ->required();
    sub->add_flag("--permissive", permissive,
                  "accept non-minimal generating sets with a warning");
  }

  SemigroupPresentation load() const {
    auto sgp = io::load_semigroup(path);
    auto report = validate(sgp);
    if (report.has_errors(permissive)) {
      std::string what = "invalid presentation:";
      for (const auto& v : report.violations)
        what += " " + violation_name(v.kind) +
                (v.generator ? "(generator " + std::to_string(v.generator) + ")"
                             : "");
      throw InvalidPresentationError(what);
    }
    for (const auto& v : report.violations)
      std::cerr << "warning: " << violation_name(v.kind)
                << (v.generator ? " at generator " + std::to_string(v.generator)
                                : "")
                << '\n';
    return sgp;
  }
};

ScanSelection parse_selection(const std::string& list) {
  ScanSelection sel;
  std::string cur;
  auto apply = [&](const std::string& name) {
    if (name == "z_count")
      sel.z_count = true;
    else if (name == "lengths")
      sel.lengths = true;
    else if (name == "delta")
      sel.delta = true;
    else if (name == "max_len")
      sel.max_len = true;
    else if (name == "min_len")
      sel.min_len = true;
    else if (name == "omega")
      sel.omega = true;
    else if (name == "catenary")
      sel.catenary = true;
    else
      throw std::invalid_argument("unknown invariant '" + name + "'");
  };
  for (char c : list) {
    if (c == ',') {
      apply(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  apply(cur);
  return sel;
}

// Per-element invariant adapter for ray and cone fits.
ElementInvariant make_invariant(const SemigroupPresentation& sgp,
                                const std::string& name,
                                std::int64_t omega_cap) {
  if (name == "z_count")
    return [&sgp](const Element& e) {
      return Rat(Int(static_cast<unsigned long>(factorizations(sgp, e).count())));
    };
  if (name == "len_count")
    return [&sgp](const Element& e) {
      return Rat(Int(static_cast<unsigned long>(length_set(sgp, e).size())));
    };
  if (name == "max_len")
    return [&sgp](const Element& e) { return Rat(Int(max_length(sgp, e))); };
  if (name == "min_len")
    return [&sgp](const Element& e) { return Rat(Int(min_length(sgp, e))); };
  if (name == "omega")
    return [&sgp, omega_cap](const Element& e) {
      OmegaResult w = sgp.is_numerical() ? omega(sgp, e)
                                         : omega_bounded(sgp, e, omega_cap);
      if (!w.exact)
        throw InsufficientSamplesError(
            "omega cap " + std::to_string(omega_cap) +
            " did not close at element " + element_text(e));
      return Rat(Int(w.value));
    };
  if (name == "catenary")
    return [&sgp](const Element& e) {
      return Rat(Int(catenary_degree(sgp, e)));
    };
  throw std::invalid_argument("unknown invariant '" + name + "'");
}

// Sample map for range fits. z_count runs on every n (zero at gaps); all
// other invariants sample members only.
SampleMap range_samples(const SemigroupPresentation& sgp,
                        const std::string& name, std::int64_t from,
                        std::int64_t to) {
  if (from < 0 || to < from) throw EmptyRangeError("bad sample range");
  SampleMap samples;
  if (name == "z_count") {
    auto table = denumerant_table(sgp, to);
    for (std::int64_t n = from; n <= to; ++n)
      samples[n] = Rat(table[static_cast<std::size_t>(n)]);
    return samples;
  }
  ScanSelection sel;
  if (name == "len_count")
    sel.lengths = true;
  else if (name == "max_len")
    sel.max_len = true;
  else if (name == "min_len")
    sel.min_len = true;
  else if (name == "omega")
    sel.omega = true;
  else if (name == "catenary")
    sel.catenary = true;
  else
    throw std::invalid_argument("unknown invariant '" + name + "'");
  auto scan = scan_range(sgp, from, to, sel);
  for (const auto& rec : scan.records) {
    std::int64_t n = to_int64(rec.element.free[0]);
    if (name == "len_count")
      samples[n] = Rat(Int(static_cast<unsigned long>(rec.lengths->size())));
    else if (name == "max_len")
      samples[n] = Rat(Int(*rec.max_len));
    else if (name == "min_len")
      samples[n] = Rat(Int(*rec.min_len));
    else if (name == "omega")
      samples[n] = Rat(Int(*rec.omega));
    else
      samples[n] = Rat(Int(*rec.catenary));
  }
  return samples;
}

std::pair<Element, Element> parse_box(const std::string& text,
                                      const AmbientSpec& ambient) {
  auto colon = text.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("box must be lo:hi, e.g. 0,0:40,40");
  return {io::parse_element(text.substr(0, colon), ambient),
          io::parse_element(text.substr(colon + 1), ambient)};
}

std::vector<Element> parse_element_list(const std::string& text,
                                        const AmbientSpec& ambient) {
  std::vector<Element> out;
  std::string cur;
  for (char c : text) {
    if (c == ';') {
      out.push_back(io::parse_element(cur, ambient));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(io::parse_element(cur, ambient));
  return out;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(out_path, std::ios::trunc);
  if (!out) throw BadDocumentError("cannot write " + out_path);
  out << text;
}

ordered_json certificate_json(const DeltaCertificate& cert) {
  ordered_json j;
  j["period"] = cert.period;
  j["status"] = cert.status == CertificateStatus::Verified ? "Verified"
                                                           : "HorizonTooSmall";
  if (cert.status == CertificateStatus::Verified) {
    j["start"] = cert.start;
    j["verified_window"] = {cert.window_begin, cert.window_end};
  }
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"factorization invariants of finitely generated reduced "
               "commutative semigroups"};
  app.require_subcommand(1);

  // factor
  auto* factor_cmd =
      app.add_subcommand("factor", "all factorizations of an element");
  Loader factor_loader;
  factor_loader.attach(factor_cmd);
  std::string factor_element, factor_cache;
  factor_cmd->add_option("--element", factor_element, "target element")
      ->required();
  factor_cmd->add_option("--cache", factor_cache,
                         "factorization cache directory");

  // lengths / delta / maxlen / minlen / omega / catenary
  struct ElementCmd {
    CLI::App* cmd = nullptr;
    Loader loader;
    std::string element;
  };
  auto element_cmd = [&](const char* name, const char* desc) {
    ElementCmd ec;
    ec.cmd = app.add_subcommand(name, desc);
    ec.loader.attach(ec.cmd);
    ec.cmd->add_option("--element", ec.element, "target element")->required();
    return ec;
  };
  ElementCmd lengths_cmd = element_cmd("lengths", "length set of an element");
  ElementCmd delta_cmd = element_cmd("delta", "delta set of an element");
  ElementCmd maxlen_cmd = element_cmd("maxlen", "maximum factorization length");
  ElementCmd minlen_cmd = element_cmd("minlen", "minimum factorization length");
  ElementCmd omega_cmd = element_cmd("omega", "omega-primality of an element");
  std::int64_t omega_cmd_cap = 12;
  omega_cmd.cmd->add_option(
      "--cap", omega_cmd_cap,
      "weight cap for the direct search on non-numerical presentations");
  ElementCmd catenary_cmd =
      element_cmd("catenary", "catenary degree of an element");

  // apery
  auto* apery_cmd = app.add_subcommand("apery", "Apery set of a generator subset");
  Loader apery_loader;
  apery_loader.attach(apery_cmd);
  std::string apery_subset;
  apery_cmd->add_option("--subset", apery_subset,
                        "comma-separated generator values")
      ->required();

  // scan
  auto* scan_cmd =
      app.add_subcommand("scan", "per-element invariants over a range or box");
  Loader scan_loader;
  scan_loader.attach(scan_cmd);
  std::int64_t scan_from = 0, scan_to = -1;
  std::string scan_box_text, scan_invariants = "lengths,delta";
  std::string scan_format = "csv", scan_out;
  std::int64_t scan_omega_cap = 12;
  scan_cmd->add_option("--from", scan_from, "range start (default 0)");
  scan_cmd->add_option("--to", scan_to, "range end, inclusive");
  scan_cmd->add_option("--box", scan_box_text, "coordinate box lo:hi");
  scan_cmd->add_option("--invariants", scan_invariants,
                       "comma-separated list: z_count,lengths,delta,max_len,"
                       "min_len,omega,catenary");
  scan_cmd->add_option("--format", scan_format, "csv or jsonl");
  scan_cmd->add_option("--out", scan_out, "output path (default stdout)");
  scan_cmd->add_option("--omega-cap", scan_omega_cap,
                       "omega weight cap on non-numerical presentations");

  // fit
  auto* fit_cmd = app.add_subcommand(
      "fit", "eventual quasipolynomial of an invariant over a range");
  Loader fit_loader;
  fit_loader.attach(fit_cmd);
  std::string fit_invariant;
  std::int64_t fit_from = 0, fit_to = -1, fit_degree = -1, fit_period = -1;
  fit_cmd->add_option("--invariant", fit_invariant,
                      "z_count, len_count, max_len, min_len, omega, catenary")
      ->required();
  fit_cmd->add_option("--from", fit_from, "sample range start (default 0)");
  fit_cmd->add_option("--to", fit_to, "sample range end, inclusive")
      ->required();
  fit_cmd->add_option("--degree-bound", fit_degree, "largest degree tried")
      ->required();
  fit_cmd->add_option("--period-bound", fit_period,
                      "periods tried are its divisors")
      ->required();

  // ray-fit
  auto* ray_cmd = app.add_subcommand(
      "ray-fit", "eventual quasipolynomial of an invariant along k * element");
  Loader ray_loader;
  ray_loader.attach(ray_cmd);
  std::string ray_element, ray_invariant;
  std::int64_t ray_degree = -1, ray_period = -1, ray_upto = 0,
               ray_omega_cap = 12;
  ray_cmd->add_option("--element", ray_element, "ray direction")->required();
  ray_cmd->add_option("--invariant", ray_invariant,
                      "z_count, len_count, max_len, min_len, omega, catenary")
      ->required();
  ray_cmd->add_option("--degree-bound", ray_degree, "largest degree tried")
      ->required();
  ray_cmd->add_option("--period-bound", ray_period,
                      "periods tried are its divisors")
      ->required();
  ray_cmd->add_option("--samples-upto", ray_upto,
                      "largest multiplier sampled (0 picks a default)");
  ray_cmd->add_option("--omega-cap", ray_omega_cap,
                      "omega weight cap on non-numerical presentations");

  // cone-fit
  auto* cone_cmd = app.add_subcommand(
      "cone-fit", "polynomial fit of an invariant on a translated cone");
  Loader cone_loader;
  cone_loader.attach(cone_cmd);
  std::string cone_base, cone_gens, cone_invariant;
  std::int64_t cone_degree = -1, cone_grid = -1, cone_omega_cap = 12;
  cone_cmd->add_option("--base", cone_base, "cone base point")->required();
  cone_cmd->add_option("--gens", cone_gens,
                       "semicolon-separated cone generators")
      ->required();
  cone_cmd->add_option("--invariant", cone_invariant,
                       "z_count, len_count, max_len, min_len, omega, catenary")
      ->required();
  cone_cmd->add_option("--degree-bound", cone_degree, "total degree bound")
      ->required();
  cone_cmd->add_option("--grid", cone_grid, "coordinate grid sweep bound")
      ->required();
  cone_cmd->add_option("--omega-cap", cone_omega_cap,
                       "omega weight cap on non-numerical presentations");

  // delta-set
  auto* dset_cmd = app.add_subcommand(
      "delta-set", "semigroup delta set with a periodicity certificate");
  Loader dset_loader;
  dset_loader.attach(dset_cmd);
  std::int64_t dset_horizon = -1;
  std::int64_t dset_hint = -1;
  std::string dset_box_text;
  dset_cmd->add_option("--horizon", dset_horizon, "scan horizon");
  dset_cmd->add_option("--start-hint", dset_hint,
                       "externally known periodicity onset");
  dset_cmd->add_option("--box", dset_box_text,
                       "coordinate box lo:hi (general ambients, no "
                       "certificate)");

  // plot-delta
  auto* plot_cmd = app.add_subcommand(
      "plot-delta", "scatter plot of element delta sets as SVG plus CSV");
  Loader plot_loader;
  plot_loader.attach(plot_cmd);
  std::int64_t plot_horizon = -1;
  std::string plot_out;
  plot_cmd->add_option("--horizon", plot_horizon, "scan horizon")->required();
  plot_cmd->add_option("--out", plot_out,
                       "SVG output path; a .csv sidecar lands next to it");

  // verify-paper
  auto* verify_cmd = app.add_subcommand(
      "verify-paper", "run the acceptance suite and report each case");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (factor_cmd->parsed()) {
      auto sgp = factor_loader.load();
      Element alpha = io::parse_element(factor_element, sgp.ambient);
      std::optional<FactorizationSet> zs;
      if (!factor_cache.empty()) {
        io::FactorizationCache cache(factor_cache, sgp);
        zs = cache.load(alpha, std::cerr);
        if (!zs) {
          zs = factorizations(sgp, alpha);
          cache.store(*zs);
        }
      } else {
        zs = factorizations(sgp, alpha);
      }
      ordered_json arr = ordered_json::array();
      for (const auto& f : zs->factorizations) arr.push_back(f.exponents);
      std::cout << arr.dump() << '\n';
      return 0;
    }

    if (lengths_cmd.cmd->parsed()) {
      auto sgp = lengths_cmd.loader.load();
      Element alpha = io::parse_element(lengths_cmd.element, sgp.ambient);
      ordered_json j;
      j["element"] = element_text(alpha);
      j["lengths"] = length_set(sgp, alpha);
      std::cout << j.dump() << '\n';
      return 0;
    }

    if (delta_cmd.cmd->parsed()) {
      auto sgp = delta_cmd.loader.load();
      Element alpha = io::parse_element(delta_cmd.element, sgp.ambient);
      ordered_json j;
      j["element"] = element_text(alpha);
      j["delta"] = delta_of_element(sgp, alpha);
      std::cout << j.dump() << '\n';
      return 0;
    }

    if (maxlen_cmd.cmd->parsed()) {
      auto sgp = maxlen_cmd.loader.load();
      Element alpha = io::parse_element(maxlen_cmd.element, sgp.ambient);
      ordered_json j;
      j["element"] = element_text(alpha);
      j["max_len"] = max_length(sgp, alpha);
      std::cout << j.dump() << '\n';
      return 0;
    }

    if (minlen_cmd.cmd->parsed()) {
      auto sgp = minlen_cmd.loader.load();
      Element alpha = io::parse_element(minlen_cmd.element, sgp.ambient);
      ordered_json j;
      j["element"] = element_text(alpha);
      j["min_len"] = min_length(sgp, alpha);
      std::cout << j.dump() << '\n';
      return 0;
    }

    if (omega_cmd.cmd->parsed()) {
      auto sgp = omega_cmd.loader.load();
      Element alpha = io::parse_element(omega_cmd.element, sgp.ambient);
      OmegaResult w = sgp.is_numerical()
                          ? omega(sgp, alpha)
                          : omega_bounded(sgp, alpha, omega_cmd_cap);
      ordered_json j;
      j["element"] = element_text(alpha);
      j["omega"] = w.value;
      j["exact"] = w.exact;
      std::cout << j.dump() << '\n';
      return 0;
    }

    if (catenary_cmd.cmd->parsed()) {
      auto sgp = catenary_cmd.loader.load();
      Element alpha = io::parse_element(catenary_cmd.element, sgp.ambient);
      ordered_json j;
      j["element"] = element_text(alpha);
      j["catenary"] = catenary_degree(sgp, alpha);
      std::cout << j.dump() << '\n';
      return 0;
    }

    if (apery_cmd->parsed()) {
      auto sgp = apery_loader.load();
      if (!sgp.is_numerical())
        throw NotNumericalError("Apery sets need a numerical semigroup");
      auto gens = sgp.numerical_generators();
      std::vector<std::size_t> subset;
      std::vector<std::int64_t> values;
      std::string cur;
      auto take = [&](const std::string& tok) {
        for (char ch : tok)
          if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw std::invalid_argument("bad subset entry '" + tok + "'");
        std::int64_t v = std::stoll(tok);
        auto it = std::find(gens.begin(), gens.end(), v);
        if (it == gens.end())
          throw std::invalid_argument("subset entry " + tok +
                                      " is not a generator");
        subset.push_back(static_cast<std::size_t>(it - gens.begin()));
        values.push_back(v);
      };
      for (char ch : apery_subset) {
        if (ch == ',') {
          take(cur);
          cur.clear();
        } else {
          cur += ch;
        }
      }
      take(cur);
      ordered_json j;
      j["subset"] = values;
      j["apery"] = apery_set(sgp, subset);
      std::cout << j.dump() << '\n';
      return 0;
    }

    if (scan_cmd->parsed()) {
      auto sgp = scan_loader.load();
      if (scan_format != "csv" && scan_format != "jsonl")
        throw std::invalid_argument("--format must be csv or jsonl");
      ScanSelection sel = parse_selection(scan_invariants);
      sel.omega_cap = scan_omega_cap;
      ScanTable table;
      if (!scan_box_text.empty()) {
        auto [lo, hi] = parse_box(scan_box_text, sgp.ambient);
        table = scan_box(sgp, lo, hi, sel);
      } else {
        if (scan_to < 0)
          throw std::invalid_argument("scan needs --to or --box");
        table = scan_range(sgp, scan_from, scan_to, sel);
      }
      std::ostringstream buf;
      if (scan_format == "csv")
        io::write_scan_csv(buf, table, sel);
      else
        io::write_scan_jsonl(buf, table, sel);
      emit(buf.str(), scan_out);
      return 0;
    }

    if (fit_cmd->parsed()) {
      auto sgp = fit_loader.load();
      auto samples = range_samples(sgp, fit_invariant, fit_from, fit_to);
      auto report = fit_search(samples, fit_degree, fit_period);
      std::cout << io::fit_report_to_json(report) << '\n';
      return 0;
    }

    if (ray_cmd->parsed()) {
      auto sgp = ray_loader.load();
      Element alpha = io::parse_element(ray_element, sgp.ambient);
      auto inv = make_invariant(sgp, ray_invariant, ray_omega_cap);
      auto report =
          ray_fit(sgp, alpha, inv, ray_degree, ray_period, ray_upto);
      ordered_json j = ordered_json::parse(io::fit_report_to_json(report));
      if (ray_invariant == "z_count") {
        std::int64_t upto =
            ray_upto > 0 ? ray_upto : (ray_degree + 4) * ray_period;
        j["ray_rank"] = ray_rank(sgp, alpha, upto);
      }
      std::cout << j.dump() << '\n';
      return 0;
    }

    if (cone_cmd->parsed()) {
      auto sgp = cone_loader.load();
      Element base = io::parse_element(cone_base, sgp.ambient);
      auto gens = parse_element_list(cone_gens, sgp.ambient);
      TranslatedCone cone(sgp.ambient, base, gens);
      auto inv = make_invariant(sgp, cone_invariant, cone_omega_cap);
      auto fit = cone_fit(sgp, cone, inv, cone_degree, cone_grid);
      if (!fit)
        throw NoFitError("no polynomial of degree " +
                         std::to_string(cone_degree) + " matches the grid");
      std::cout << io::cone_polynomial_to_json(*fit) << '\n';
      return 0;
    }

    if (dset_cmd->parsed()) {
      auto sgp = dset_loader.load();
      ordered_json j;
      if (!dset_box_text.empty()) {
        auto [lo, hi] = parse_box(dset_box_text, sgp.ambient);
        j["delta"] = delta_union_over_box(sgp, lo, hi);
      } else {
        if (dset_horizon < 0)
          throw std::invalid_argument("delta-set needs --horizon or --box");
        std::optional<std::int64_t> hint;
        if (dset_hint >= 0) hint = dset_hint;
        auto result = delta_of_semigroup(sgp, dset_horizon, hint);
        j["delta"] = result.delta;
        j["certificate"] = certificate_json(result.certificate);
      }
      std::cout << j.dump() << '\n';
      return 0;
    }

    if (plot_cmd->parsed()) {
      auto sgp = plot_loader.load();
      auto plot = io::plot_delta(sgp, plot_horizon);
      if (plot_out.empty()) {
        std::cout << plot.svg;
      } else {
        emit(plot.svg, plot_out);
        emit(plot.csv, plot_out + ".csv");
      }
      return 0;
    }

    if (verify_cmd->parsed()) {
      auto results = verify::run_suite(std::cout);
      return verify::all_passed(results) ? 0 : 1;
    }
  } catch (const DomainError& e) {
    ordered_json j;
    j["error"] = e.code();
    j["message"] = e.what();
    std::cerr << j.dump() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

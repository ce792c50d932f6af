#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sgf/invariants.hpp"
#include "sgf/presentation.hpp"
#include "sgf/quasipoly.hpp"

namespace sgf {
namespace io {

// Document shapes:
//   {"numerical": [6, 9, 20]}
//   {"free_rank": 2, "torsion": [], "generators": [{"free": [2,1]}, ...]}
// Generators may carry a "torsion" residue array when the ambient has
// torsion. Unknown keys are rejected so typos fail loudly.
SemigroupPresentation parse_semigroup(const std::string& json_text);
SemigroupPresentation load_semigroup(const std::string& path);
std::string semigroup_to_json(const SemigroupPresentation& sgp);

// "60", "2,3", "3,4|1": free coordinates, optional torsion after the bar.
Element parse_element(const std::string& text, const AmbientSpec& ambient);

// Scan tables as CSV. Set-valued columns use {a;b;c}, rationals num/den,
// and element fields are quoted when they contain commas. Column layout:
// element, then any of z_count, lengths, delta, max_len, min_len, omega,
// omega_exact, catenary, in that order, matching what the table carries.
void write_scan_csv(std::ostream& out, const ScanTable& table,
                    const ScanSelection& sel);
std::string scan_to_csv(const ScanTable& table, const ScanSelection& sel);

// One JSON object per line, same fields as the CSV columns.
void write_scan_jsonl(std::ostream& out, const ScanTable& table,
                      const ScanSelection& sel);

struct ParsedScan {
  ScanTable table;
  ScanSelection selection;
};

// Parses what write_scan_csv produced; malformed rows raise
// std::runtime_error naming the line. Round-trips bit-identically.
ParsedScan read_scan_csv(std::istream& in, const AmbientSpec& ambient);

std::string quasipoly_to_json(const QuasiPolynomial& qp);
QuasiPolynomial parse_quasipoly(const std::string& json_text);

std::string fit_report_to_json(const FitReport& report);

std::string cone_polynomial_to_json(const ConePolynomial& cp);

// Factorization cache: one directory per semigroup (content hash of the
// canonical document), one JSON-lines file per element. A corrupted or
// unreadable entry is a miss with a warning on the given stream, never a
// failure. Single writer assumed; writes go through a temp file + rename.
class FactorizationCache {
public:
  FactorizationCache(std::string root_dir, const SemigroupPresentation& sgp);

  std::optional<FactorizationSet> load(const Element& alpha,
                                       std::ostream& warnings) const;
  void store(const FactorizationSet& zs) const;

  const std::string& directory() const { return dir_; }

private:
  std::string dir_;
};

// Scatter plot of (n, d) for d in delta(n), n <= horizon, as a minimal
// self-contained SVG; the same points go to a sidecar CSV ("n,d" header).
// Integer geometry only, so output bytes are reproducible.
struct DeltaPlot {
  std::string svg;
  std::string csv;
};
DeltaPlot plot_delta(const SemigroupPresentation& sgp, std::int64_t horizon);

}  // namespace io
}  // namespace sgf

#include "sgf/io.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>

#include "json.hpp"
#include "sgf/errors.hpp"
#include "sgf/numerical.hpp"

namespace sgf {
namespace io {

namespace {

using ordered_json = nlohmann::ordered_json;

[[noreturn]] void bad(const std::string& msg) { throw BadDocumentError(msg); }

void require_keys(const ordered_json& obj,
                  std::initializer_list<const char*> allowed,
                  const char* where) {
  for (const auto& item : obj.items()) {
    bool known = false;
    for (auto k : allowed)
      if (item.key() == k) {
        known = true;
        break;
      }
    if (!known) bad(std::string("unknown key '") + item.key() + "' in " + where);
  }
}

bool all_digits(const std::string& s, std::size_t from) {
  if (from >= s.size()) return false;
  for (std::size_t i = from; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Int json_to_int(const ordered_json& j, const char* what) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_number_unsigned()) {
    std::uint64_t u = j.get<std::uint64_t>();
    Int r;
    mpz_import(r.get_mpz_t(), 1, 1, sizeof(u), 0, 0, &u);
    return r;
  }
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    std::size_t from = s.size() > 0 && s[0] == '-' ? 1 : 0;
    if (!all_digits(s, from)) bad(std::string(what) + ": not an integer");
    return Int(s, 10);
  }
  bad(std::string(what) + ": expected an integer or a decimal string");
}

std::int64_t json_to_i64(const ordered_json& j, const char* what) {
  Int v = json_to_int(j, what);
  if (!fits_int64(v)) bad(std::string(what) + ": out of 64-bit range");
  return to_int64(v);
}

ordered_json int_to_json(const Int& v) {
  if (fits_int64(v)) return ordered_json(to_int64(v));
  return ordered_json(int_str(v));
}

std::string rat_str(const Rat& q) {
  std::string s = int_str(rat_num(q));
  if (rat_den(q) != 1) s += "/" + int_str(rat_den(q));
  return s;
}

Rat parse_rat_text(const std::string& s, const char* what) {
  auto slash = s.find('/');
  auto as_int = [&](const std::string& part) {
    std::size_t from = part.size() > 0 && part[0] == '-' ? 1 : 0;
    if (!all_digits(part, from)) bad(std::string(what) + ": bad rational");
    return Int(part, 10);
  };
  if (slash == std::string::npos) return Rat(as_int(s));
  return make_rat(as_int(s.substr(0, slash)), as_int(s.substr(slash + 1)));
}

Rat json_to_rat(const ordered_json& j, const char* what) {
  if (j.is_string()) return parse_rat_text(j.get_ref<const std::string&>(), what);
  return Rat(json_to_int(j, what));
}

std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string hex16(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[static_cast<std::size_t>(i)] = digits[v & 0xf];
    v >>= 4;
  }
  return s;
}

}  // namespace

SemigroupPresentation parse_semigroup(const std::string& json_text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    bad(std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) bad("document root must be an object");

  if (doc.contains("numerical")) {
    require_keys(doc, {"numerical"}, "a numerical document");
    const auto& arr = doc["numerical"];
    if (!arr.is_array() || arr.empty())
      bad("'numerical' must be a nonempty array");
    std::vector<std::int64_t> gens;
    for (const auto& g : arr) gens.push_back(json_to_i64(g, "generator"));
    try {
      return SemigroupPresentation::numerical(gens);
    } catch (const std::invalid_argument& e) {
      bad(std::string("bad numerical generators: ") + e.what());
    }
  }

  require_keys(doc, {"free_rank", "torsion", "generators"},
               "a semigroup document");
  if (!doc.contains("free_rank") || !doc.contains("generators"))
    bad("a semigroup document needs 'free_rank' and 'generators'");
  std::int64_t d = json_to_i64(doc["free_rank"], "free_rank");
  std::vector<std::int64_t> orders;
  if (doc.contains("torsion")) {
    if (!doc["torsion"].is_array()) bad("'torsion' must be an array");
    for (const auto& o : doc["torsion"])
      orders.push_back(json_to_i64(o, "torsion order"));
  }
  AmbientSpec ambient;
  try {
    if (d < 1) throw std::invalid_argument("free rank below 1");
    ambient = AmbientSpec(static_cast<std::size_t>(d), orders);
  } catch (const std::invalid_argument& e) {
    bad(std::string("bad ambient: ") + e.what());
  }

  const auto& gens = doc["generators"];
  if (!gens.is_array() || gens.empty())
    bad("'generators' must be a nonempty array");
  SemigroupPresentation sgp;
  sgp.ambient = ambient;
  for (const auto& g : gens) {
    if (!g.is_object()) bad("each generator must be an object");
    require_keys(g, {"free", "torsion"}, "a generator");
    if (!g.contains("free") || !g["free"].is_array() ||
        g["free"].size() != ambient.free_rank)
      bad("generator 'free' must be an array of length free_rank");
    Element e;
    for (const auto& c : g["free"]) {
      Int v = json_to_int(c, "free coordinate");
      if (v < 0) bad("negative free coordinate");
      e.free.push_back(std::move(v));
    }
    if (g.contains("torsion")) {
      if (!g["torsion"].is_array() ||
          g["torsion"].size() != ambient.torsion_rank())
        bad("generator 'torsion' must be an array of length torsion rank");
      for (const auto& t : g["torsion"])
        e.torsion.push_back(json_to_i64(t, "torsion residue"));
    } else {
      e.torsion.assign(ambient.torsion_rank(), 0);
    }
    sgp.generators.push_back(std::move(e));
  }
  return sgp;
}

SemigroupPresentation load_semigroup(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_semigroup(buf.str());
}

std::string semigroup_to_json(const SemigroupPresentation& sgp) {
  ordered_json doc;
  doc["free_rank"] = sgp.ambient.free_rank;
  doc["torsion"] = sgp.ambient.torsion_orders;
  doc["generators"] = ordered_json::array();
  for (const auto& g : sgp.generators) {
    ordered_json gj;
    gj["free"] = ordered_json::array();
    for (const auto& c : g.free) gj["free"].push_back(int_to_json(c));
    if (!g.torsion.empty()) gj["torsion"] = g.torsion;
    doc["generators"].push_back(std::move(gj));
  }
  return doc.dump();
}

Element parse_element(const std::string& text, const AmbientSpec& ambient) {
  std::string free_part = text;
  std::string torsion_part;
  if (auto bar = text.find('|'); bar != std::string::npos) {
    free_part = text.substr(0, bar);
    torsion_part = text.substr(bar + 1);
    if (torsion_part.find('|') != std::string::npos)
      throw std::invalid_argument("more than one '|' in element");
  }

  auto split_ints = [](const std::string& s, const char* what) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
      if (c == ',') {
        out.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    out.push_back(cur);
    for (const auto& p : out)
      if (!all_digits(p, 0))
        throw std::invalid_argument(std::string(what) +
                                    ": expected comma-separated nonnegative "
                                    "integers, got '" +
                                    s + "'");
    return out;
  };

  Element e;
  for (const auto& p : split_ints(free_part, "element free part"))
    e.free.push_back(Int(p, 10));
  if (!torsion_part.empty()) {
    for (const auto& p : split_ints(torsion_part, "element torsion part")) {
      Int v(p, 10);
      if (ambient.torsion_rank() > e.torsion.size()) {
        auto m = ambient.torsion_orders[e.torsion.size()];
        v %= m;
      }
      e.torsion.push_back(to_int64(v));
    }
  }
  if (e.torsion.empty()) e.torsion.assign(ambient.torsion_rank(), 0);
  require_same_ambient(ambient, e, "parsed element");
  return e;
}

namespace {

struct Column {
  const char* name;
  bool ScanSelection::* flag;
};

// omega_exact rides along with omega and has no selection flag of its own.
constexpr Column kColumns[] = {
    {"z_count", &ScanSelection::z_count}, {"lengths", &ScanSelection::lengths},
    {"delta", &ScanSelection::delta},     {"max_len", &ScanSelection::max_len},
    {"min_len", &ScanSelection::min_len}, {"omega", &ScanSelection::omega},
    {"catenary", &ScanSelection::catenary}};

std::string set_text(const std::vector<std::int64_t>& vs) {
  std::string s = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) s += ';';
    s += std::to_string(vs[i]);
  }
  return s + "}";
}

std::string element_field(const Element& e) {
  std::string t = element_text(e);
  if (t.find(',') != std::string::npos) return "\"" + t + "\"";
  return t;
}

std::vector<std::string> split_csv_line(const std::string& line,
                                        std::int64_t lineno) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"')
        quoted = false;
      else
        cur += c;
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (quoted)
    throw std::runtime_error("scan csv line " + std::to_string(lineno) +
                             ": unterminated quote");
  out.push_back(cur);
  return out;
}

std::int64_t field_i64(const std::string& s, std::int64_t lineno) {
  std::size_t from = !s.empty() && s[0] == '-' ? 1 : 0;
  if (!all_digits(s, from))
    throw std::runtime_error("scan csv line " + std::to_string(lineno) +
                             ": expected an integer, got '" + s + "'");
  return std::stoll(s);
}

std::vector<std::int64_t> field_set(const std::string& s, std::int64_t lineno) {
  if (s.size() < 2 || s.front() != '{' || s.back() != '}')
    throw std::runtime_error("scan csv line " + std::to_string(lineno) +
                             ": expected {a;b;...}, got '" + s + "'");
  std::vector<std::int64_t> out;
  std::string inner = s.substr(1, s.size() - 2);
  if (inner.empty()) return out;
  std::string cur;
  for (char c : inner) {
    if (c == ';') {
      out.push_back(field_i64(cur, lineno));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(field_i64(cur, lineno));
  return out;
}

}  // namespace

void write_scan_csv(std::ostream& out, const ScanTable& table,
                    const ScanSelection& sel) {
  out << "element";
  for (const auto& col : kColumns) {
    if (!(sel.*(col.flag))) continue;
    out << ',' << col.name;
    if (col.flag == &ScanSelection::omega) out << ",omega_exact";
  }
  out << '\n';
  for (const auto& rec : table.records) {
    out << element_field(rec.element);
    if (sel.z_count) out << ',' << int_str(*rec.z_count);
    if (sel.lengths) out << ',' << set_text(*rec.lengths);
    if (sel.delta) out << ',' << set_text(*rec.delta);
    if (sel.max_len) out << ',' << *rec.max_len;
    if (sel.min_len) out << ',' << *rec.min_len;
    if (sel.omega)
      out << ',' << *rec.omega << ','
          << (rec.omega_exact && *rec.omega_exact ? "true" : "false");
    if (sel.catenary) out << ',' << *rec.catenary;
    out << '\n';
  }
}

std::string scan_to_csv(const ScanTable& table, const ScanSelection& sel) {
  std::ostringstream out;
  write_scan_csv(out, table, sel);
  return out.str();
}

void write_scan_jsonl(std::ostream& out, const ScanTable& table,
                      const ScanSelection& sel) {
  for (const auto& rec : table.records) {
    ordered_json j;
    j["element"] = element_text(rec.element);
    if (sel.z_count) j["z_count"] = int_to_json(*rec.z_count);
    if (sel.lengths) j["lengths"] = *rec.lengths;
    if (sel.delta) j["delta"] = *rec.delta;
    if (sel.max_len) j["max_len"] = *rec.max_len;
    if (sel.min_len) j["min_len"] = *rec.min_len;
    if (sel.omega) {
      j["omega"] = *rec.omega;
      j["omega_exact"] = rec.omega_exact.value_or(false);
    }
    if (sel.catenary) j["catenary"] = *rec.catenary;
    out << j.dump() << '\n';
  }
}

ParsedScan read_scan_csv(std::istream& in, const AmbientSpec& ambient) {
  std::string line;
  if (!std::getline(in, line))
    throw std::runtime_error("scan csv line 1: missing header");
  auto header = split_csv_line(line, 1);
  if (header.empty() || header[0] != "element")
    throw std::runtime_error("scan csv line 1: first column must be element");

  ParsedScan parsed;
  std::size_t next = 0;
  std::vector<int> layout;  // index into kColumns, -1 for omega_exact
  for (std::size_t h = 1; h < header.size(); ++h) {
    if (header[h] == "omega_exact") {
      if (layout.empty() || layout.back() < 0 ||
          kColumns[layout.back()].name != std::string("omega"))
        throw std::runtime_error(
            "scan csv line 1: omega_exact must follow omega");
      layout.push_back(-1);
      continue;
    }
    bool found = false;
    while (next < std::size(kColumns)) {
      if (header[h] == kColumns[next].name) {
        parsed.selection.*(kColumns[next].flag) = true;
        layout.push_back(static_cast<int>(next));
        ++next;
        found = true;
        break;
      }
      ++next;
    }
    if (!found)
      throw std::runtime_error("scan csv line 1: unknown or misplaced column '" +
                               header[h] + "'");
  }

  std::int64_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    auto fields = split_csv_line(line, lineno);
    if (fields.size() != layout.size() + 1)
      throw std::runtime_error("scan csv line " + std::to_string(lineno) +
                               ": expected " +
                               std::to_string(layout.size() + 1) + " fields");
    ScanRecord rec;
    try {
      rec.element = parse_element(fields[0], ambient);
    } catch (const std::exception& e) {
      throw std::runtime_error("scan csv line " + std::to_string(lineno) +
                               ": " + e.what());
    }
    for (std::size_t f = 0; f < layout.size(); ++f) {
      const std::string& v = fields[f + 1];
      if (layout[f] < 0) {
        if (v != "true" && v != "false")
          throw std::runtime_error("scan csv line " + std::to_string(lineno) +
                                   ": omega_exact must be true or false");
        rec.omega_exact = v == "true";
        continue;
      }
      auto flag = kColumns[layout[f]].flag;
      if (flag == &ScanSelection::z_count) {
        if (!all_digits(v, 0))
          throw std::runtime_error("scan csv line " + std::to_string(lineno) +
                                   ": bad count '" + v + "'");
        rec.z_count = Int(v, 10);
      } else if (flag == &ScanSelection::lengths) {
        rec.lengths = field_set(v, lineno);
      } else if (flag == &ScanSelection::delta) {
        rec.delta = field_set(v, lineno);
      } else if (flag == &ScanSelection::max_len) {
        rec.max_len = field_i64(v, lineno);
      } else if (flag == &ScanSelection::min_len) {
        rec.min_len = field_i64(v, lineno);
      } else if (flag == &ScanSelection::omega) {
        rec.omega = field_i64(v, lineno);
      } else {
        rec.catenary = field_i64(v, lineno);
      }
    }
    parsed.table.records.push_back(std::move(rec));
  }
  return parsed;
}

std::string quasipoly_to_json(const QuasiPolynomial& qp) {
  ordered_json doc;
  doc["period"] = qp.period();
  doc["degree"] = qp.degree();
  doc["coeffs"] = ordered_json::array();
  for (const auto& row : qp.coeffs()) {
    ordered_json rj = ordered_json::array();
    for (const auto& c : row) rj.push_back(rat_str(c));
    doc["coeffs"].push_back(std::move(rj));
  }
  return doc.dump();
}

QuasiPolynomial parse_quasipoly(const std::string& json_text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    bad(std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) bad("quasipolynomial document must be an object");
  require_keys(doc, {"period", "degree", "coeffs"},
               "a quasipolynomial document");
  if (!doc.contains("period") || !doc.contains("coeffs"))
    bad("a quasipolynomial document needs 'period' and 'coeffs'");
  std::int64_t period = json_to_i64(doc["period"], "period");
  if (!doc["coeffs"].is_array()) bad("'coeffs' must be an array of rows");
  std::vector<std::vector<Rat>> coeffs;
  for (const auto& row : doc["coeffs"]) {
    if (!row.is_array()) bad("each coefficient row must be an array");
    std::vector<Rat> r;
    for (const auto& c : row) r.push_back(json_to_rat(c, "coefficient"));
    coeffs.push_back(std::move(r));
  }
  try {
    QuasiPolynomial qp(period, std::move(coeffs));
    if (doc.contains("degree") &&
        json_to_i64(doc["degree"], "degree") < qp.degree())
      bad("stated degree below the actual coefficient rows");
    return qp;
  } catch (const std::invalid_argument& e) {
    bad(std::string("bad quasipolynomial: ") + e.what());
  }
}

std::string fit_report_to_json(const FitReport& report) {
  ordered_json doc;
  doc["quasipolynomial"] = ordered_json::parse(quasipoly_to_json(report.qp));
  doc["onset"] = report.onset;
  doc["exact_matches"] = report.exact_match_count;
  doc["residuals"] = report.residual_positions;
  doc["row_min_cycles"] = report.row_min_cycles;
  return doc.dump();
}

namespace {

ordered_json multipoly_json(const MultiPoly& p) {
  ordered_json arr = ordered_json::array();
  for (const auto& [m, c] : p.terms()) {
    ordered_json t;
    t["monomial"] = m;
    t["coefficient"] = rat_str(c);
    arr.push_back(std::move(t));
  }
  return arr;
}

}  // namespace

std::string cone_polynomial_to_json(const ConePolynomial& cp) {
  ordered_json doc;
  doc["base"] = element_text(cp.cone.base);
  doc["generators"] = ordered_json::array();
  for (const auto& g : cp.cone.generators)
    doc["generators"].push_back(element_text(g));
  doc["polynomial"] = multipoly_json(cp.poly);
  if (cp.ambient_form)
    doc["ambient_polynomial"] = multipoly_json(*cp.ambient_form);
  else
    doc["ambient_polynomial"] = nullptr;
  return doc.dump();
}

FactorizationCache::FactorizationCache(std::string root_dir,
                                       const SemigroupPresentation& sgp) {
  dir_ = root_dir + "/" + hex16(fnv1a64(semigroup_to_json(sgp)));
  std::filesystem::create_directories(dir_);
}

namespace {

std::string cache_file_name(const Element& alpha) {
  std::string t = element_text(alpha);
  for (auto& c : t) {
    if (c == ',') c = '_';
    if (c == '|') c = 't';
  }
  return "el_" + t + ".jsonl";
}

}  // namespace

std::optional<FactorizationSet> FactorizationCache::load(
    const Element& alpha, std::ostream& warnings) const {
  std::string path = dir_ + "/" + cache_file_name(alpha);
  std::ifstream in(path);
  if (!in) return std::nullopt;

  FactorizationSet zs;
  zs.element = alpha;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    ordered_json j = ordered_json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_array()) {
      warnings << "cache entry ignored (bad line): " << path << '\n';
      return std::nullopt;
    }
    std::vector<std::int64_t> e;
    for (const auto& v : j) {
      if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
        warnings << "cache entry ignored (bad exponent): " << path << '\n';
        return std::nullopt;
      }
      e.push_back(v.get<std::int64_t>());
    }
    zs.factorizations.push_back(Factorization(std::move(e)));
  }

  for (std::size_t i = 1; i < zs.factorizations.size(); ++i) {
    bool shape_ok = zs.factorizations[i].exponents.size() ==
                    zs.factorizations[0].exponents.size();
    if (!shape_ok || !(zs.factorizations[i - 1] < zs.factorizations[i])) {
      warnings << "cache entry ignored (not in canonical order): " << path
               << '\n';
      return std::nullopt;
    }
  }
  return zs;
}

void FactorizationCache::store(const FactorizationSet& zs) const {
  std::string path = dir_ + "/" + cache_file_name(zs.element);
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    for (const auto& f : zs.factorizations) {
      ordered_json j = f.exponents;
      out << j.dump() << '\n';
    }
  }
  std::filesystem::rename(tmp, path);
}

DeltaPlot plot_delta(const SemigroupPresentation& sgp, std::int64_t horizon) {
  if (!sgp.is_numerical())
    throw NotNumericalError("delta plot needs a numerical semigroup");
  if (horizon < 0) throw EmptyRangeError("negative plot horizon");
  LengthSetTable table(sgp.numerical_generators(), horizon);

  std::vector<std::pair<std::int64_t, std::int64_t>> points;
  std::int64_t dmax = 1;
  for (std::int64_t n = 0; n <= horizon; ++n)
    for (auto d : table.delta(n)) {
      points.emplace_back(n, d);
      dmax = std::max(dmax, d);
    }

  DeltaPlot plot;
  std::ostringstream csv;
  csv << "n,d\n";
  for (const auto& [n, d] : points) csv << n << ',' << d << '\n';
  plot.csv = csv.str();

  const std::int64_t w = horizon + 20;
  const std::int64_t h = (dmax + 2) * 10;
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << w << ' '
      << h << "\" width=\"" << w << "\" height=\"" << h << "\">\n";
  svg << "<rect x=\"0\" y=\"0\" width=\"" << w << "\" height=\"" << h
      << "\" fill=\"white\"/>\n";
  svg << "<line x1=\"10\" y1=\"" << (dmax + 1) * 10 << "\" x2=\"" << w - 10
      << "\" y2=\"" << (dmax + 1) * 10 << "\" stroke=\"black\"/>\n";
  for (const auto& [n, d] : points)
    svg << "<circle cx=\"" << 10 + n << "\" cy=\"" << (dmax + 1 - d) * 10
        << "\" r=\"2\" fill=\"black\"/>\n";
  svg << "</svg>\n";
  plot.svg = svg.str();
  return plot;
}

}  // namespace io
}  // namespace sgf

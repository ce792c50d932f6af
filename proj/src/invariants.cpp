#include "sgf/invariants.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <map>
#include <numeric>
#include <thread>

#include "sgf/errors.hpp"
#include "sgf/numerical.hpp"

namespace sgf {

namespace {

// Union-find over factorization indices, for the bottleneck connectivity run.
struct DisjointSets {
  std::vector<std::size_t> parent;
  std::size_t components;

  explicit DisjointSets(std::size_t n) : parent(n), components(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    --components;
    return true;
  }
};

std::vector<std::int64_t> numerical_gens_checked(
    const SemigroupPresentation& sgp, const char* what) {
  if (!sgp.is_numerical())
    throw NotNumericalError(std::string(what) +
                            " needs a numerical semigroup");
  return sgp.numerical_generators();
}

}  // namespace

std::vector<std::int64_t> length_set_of(const FactorizationSet& zs) {
  std::vector<std::int64_t> out;
  out.reserve(zs.count());
  for (const auto& f : zs.factorizations) out.push_back(f.length);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::int64_t> length_set(const SemigroupPresentation& sgp,
                                     const Element& alpha) {
  auto zs = factorizations(sgp, alpha);
  if (zs.empty())
    throw NotInSemigroupError("length set of a non-member: " +
                              element_text(alpha));
  return length_set_of(zs);
}

std::vector<std::int64_t> delta_of_lengths(
    const std::vector<std::int64_t>& lengths) {
  std::vector<std::int64_t> out;
  for (std::size_t i = 1; i < lengths.size(); ++i)
    out.push_back(lengths[i] - lengths[i - 1]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::int64_t> delta_of_element(const SemigroupPresentation& sgp,
                                           const Element& alpha) {
  return delta_of_lengths(length_set(sgp, alpha));
}

std::int64_t max_length(const SemigroupPresentation& sgp,
                        const Element& alpha) {
  return length_set(sgp, alpha).back();
}

std::int64_t min_length(const SemigroupPresentation& sgp,
                        const Element& alpha) {
  return length_set(sgp, alpha).front();
}

std::vector<std::int64_t> apery_set(const SemigroupPresentation& sgp,
                                    const std::vector<std::size_t>& subset) {
  auto gens = numerical_gens_checked(sgp, "Apery set");
  if (subset.empty()) throw EmptySubsetError("Apery set of the empty subset");
  std::vector<std::int64_t> tvals;
  for (auto i : subset) tvals.push_back(gens.at(i));

  std::int64_t min_t = *std::min_element(tvals.begin(), tvals.end());
  std::int64_t max_gen = gens.back();
  std::int64_t bound = min_t * max_gen;

  // Ap({min_t}) holds one minimal member per class mod min_t, so exactly
  // min_t elements; the filter bound is right once that count is reached.
  for (;;) {
    MembershipTable table(gens, bound);
    std::vector<std::int64_t> ap_min;
    for (std::int64_t a = 0; a <= bound; ++a)
      if (table.contains(a) && !table.contains(a - min_t)) ap_min.push_back(a);
    if (static_cast<std::int64_t>(ap_min.size()) < min_t) {
      bound *= 2;
      continue;
    }
    assert(static_cast<std::int64_t>(ap_min.size()) == min_t);

    std::vector<std::int64_t> out;
    for (std::int64_t a = 0; a <= bound; ++a) {
      if (!table.contains(a)) continue;
      bool in_ap = true;
      for (auto t : tvals)
        if (table.contains(a - t)) {
          in_ap = false;
          break;
        }
      if (in_ap) out.push_back(a);
    }
    assert(std::includes(ap_min.begin(), ap_min.end(), out.begin(), out.end()));
    return out;
  }
}

std::optional<std::int64_t> max_length_restricted(
    const SemigroupPresentation& sgp, const std::vector<std::size_t>& subset,
    const Element& alpha) {
  if (subset.empty())
    throw EmptySubsetError("restricted max length over the empty subset");
  require_same_ambient(sgp.ambient, alpha, "restricted max length");

  if (sgp.ambient.free_rank == 1 && sgp.torsion_free()) {
    std::vector<std::int64_t> gens;
    for (auto i : subset) gens.push_back(to_int64(sgp.generators.at(i).free[0]));
    return max_length_table_lookup(gens, to_int64(alpha.free[0]));
  }

  auto problem = detail::make_problem(sgp, alpha, subset);
  std::optional<std::int64_t> best;
  detail::enumerate(problem, [&](const std::vector<std::int64_t>& e) {
    std::int64_t len = std::accumulate(e.begin(), e.end(), std::int64_t{0});
    if (!best || len > *best) best = len;
    return true;
  });
  return best;
}

OmegaResult omega(const SemigroupPresentation& sgp, const Element& alpha) {
  auto gens = numerical_gens_checked(sgp, "omega");
  std::int64_t n = to_int64(alpha.free[0]);
  if (n == 0) return {0, true};
  {
    MembershipTable table(gens, n);
    if (!table.contains(n))
      throw NotInSemigroupError("omega of a non-member: " + std::to_string(n));
  }

  std::int64_t best = 0;
  std::size_t r = gens.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << r); ++mask) {
    std::vector<std::size_t> subset;
    for (std::size_t i = 0; i < r; ++i)
      if (mask & (std::size_t{1} << i)) subset.push_back(i);
    for (auto beta : apery_set(sgp, subset)) {
      auto m = max_length_restricted(sgp, subset,
                                     Element::scalar(Int(n + beta)));
      if (m) best = std::max(best, *m);
    }
  }
  return {best, true};
}

OmegaResult omega_bounded(const SemigroupPresentation& sgp,
                          const Element& alpha, std::int64_t cap) {
  require_same_ambient(sgp.ambient, alpha, "omega search");
  if (cap < 0) throw std::invalid_argument("omega search cap negative");
  if (!contains(sgp, alpha))
    throw NotInSemigroupError("omega of a non-member: " + element_text(alpha));

  const std::size_t r = sgp.size();
  const std::size_t d = sgp.ambient.free_rank;
  const auto& orders = sgp.ambient.torsion_orders;

  // Membership of sum(b_i g_i) - alpha, memoized per distinct value. Keys
  // concatenate free coordinates and torsion residues.
  std::map<std::vector<Int>, bool> member_memo;
  auto dominates = [&](const std::vector<std::int64_t>& b) {
    std::vector<Int> free(d, Int(0));
    std::vector<std::int64_t> tors(orders.size(), 0);
    for (std::size_t i = 0; i < r; ++i) {
      if (b[i] == 0) continue;
      const Element& g = sgp.generators[i];
      for (std::size_t j = 0; j < d; ++j) free[j] += Int(b[i]) * g.free[j];
      for (std::size_t j = 0; j < orders.size(); ++j) {
        auto m = orders[j];
        tors[j] = static_cast<std::int64_t>(
            (tors[j] + static_cast<__int128>(g.torsion[j] % m) * b[i]) % m);
      }
    }
    std::vector<Int> key;
    key.reserve(d + orders.size());
    bool negative = false;
    for (std::size_t j = 0; j < d; ++j) {
      key.push_back(free[j] - alpha.free[j]);
      if (key.back() < 0) negative = true;
    }
    for (std::size_t j = 0; j < orders.size(); ++j) {
      auto m = orders[j];
      key.push_back(Int((((tors[j] - alpha.torsion[j]) % m) + m) % m));
    }
    if (negative) return false;
    auto it = member_memo.find(key);
    if (it != member_memo.end()) return it->second;
    std::vector<Int> f(key.begin(), key.begin() + static_cast<std::ptrdiff_t>(d));
    std::vector<std::int64_t> tt;
    for (std::size_t j = 0; j < orders.size(); ++j)
      tt.push_back(to_int64(key[d + j]));
    bool in = contains(sgp, Element(std::move(f), std::move(tt)));
    member_memo.emplace(std::move(key), in);
    return in;
  };

  std::map<std::vector<std::int64_t>, bool> bullet;
  std::int64_t best = 0;
  bool shell_all_bullets = true;
  detail::for_each_weight_capped(
      r, cap,
      [&](const std::vector<std::int64_t>& b, std::int64_t weight) {
        bool is_bullet = dominates(b);
        bullet.emplace(b, is_bullet);
        if (weight == cap && !is_bullet) shell_all_bullets = false;
        if (is_bullet) {
          bool minimal = true;
          std::vector<std::int64_t> down(b);
          for (std::size_t i = 0; i < r && minimal; ++i) {
            if (down[i] == 0) continue;
            --down[i];
            auto it = bullet.find(down);
            assert(it != bullet.end());  // lower weight, visited earlier
            if (it->second) minimal = false;
            ++down[i];
          }
          if (minimal) best = std::max(best, weight);
        }
        return true;
      });

  // If the whole weight-cap shell dominates, every vector beyond it has a
  // dominating proper subvector, so no minimal vector was missed.
  return {best, shell_all_bullets};
}

std::int64_t factorization_distance(const Factorization& a,
                                    const Factorization& b) {
  if (a.exponents.size() != b.exponents.size())
    throw DimensionMismatchError("distance between different generator counts");
  std::int64_t common = 0;
  for (std::size_t i = 0; i < a.exponents.size(); ++i)
    common += std::min(a.exponents[i], b.exponents[i]);
  return std::max(a.length - common, b.length - common);
}

std::int64_t catenary_of_set(const FactorizationSet& zs) {
  const std::size_t n = zs.count();
  if (n <= 1) return 0;

  struct Edge {
    std::int64_t w;
    std::uint32_t a, b;
  };
  std::vector<Edge> edges;
  edges.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      edges.push_back({factorization_distance(zs.factorizations[i],
                                              zs.factorizations[j]),
                       static_cast<std::uint32_t>(i),
                       static_cast<std::uint32_t>(j)});
  std::sort(edges.begin(), edges.end(),
            [](const Edge& x, const Edge& y) { return x.w < y.w; });

  DisjointSets ds(n);
  std::int64_t bottleneck = 0;
  for (const auto& e : edges) {
    if (ds.unite(e.a, e.b)) {
      bottleneck = e.w;
      if (ds.components == 1) break;
    }
  }
  assert(ds.components == 1);
  return bottleneck;
}

std::int64_t catenary_degree(const SemigroupPresentation& sgp,
                             const Element& alpha) {
  auto zs = factorizations(sgp, alpha);
  if (zs.empty())
    throw NotInSemigroupError("catenary degree of a non-member: " +
                              element_text(alpha));
  return catenary_of_set(zs);
}

DeltaSetResult delta_of_semigroup(const SemigroupPresentation& sgp,
                                  std::int64_t horizon,
                                  std::optional<std::int64_t> start_hint) {
  auto gens = numerical_gens_checked(sgp, "semigroup delta set");
  if (horizon < 0) throw EmptyRangeError("negative scan horizon");
  std::int64_t period = std::lcm(gens.front(), gens.back());
  if (start_hint && horizon < *start_hint + 2 * period)
    throw EmptyRangeError("horizon below start hint plus two periods");

  LengthSetTable table(gens, horizon);

  // Signature of n: membership plus the element delta set. The eventual
  // period of n -> delta(n) divides lcm(n_1, n_r); two consecutive agreeing
  // windows of that width certify the pattern within the horizon.
  auto signature_equal = [&](std::int64_t a, std::int64_t b) {
    if (table.member(a) != table.member(b)) return false;
    return table.delta(a) == table.delta(b);
  };

  std::optional<std::int64_t> onset;
  if (start_hint) {
    bool ok = true;
    for (std::int64_t n = *start_hint; n < *start_hint + period && ok; ++n)
      ok = signature_equal(n, n + period);
    if (ok) onset = *start_hint;
  } else if (horizon >= 2 * period) {
    // Sliding window over the mismatch positions.
    std::int64_t last_bad = -1;
    for (std::int64_t n = 0; n + period <= horizon; ++n) {
      if (!signature_equal(n, n + period)) last_bad = n;
      std::int64_t candidate = n - period + 1;
      if (candidate >= 0 && candidate <= horizon - 2 * period &&
          last_bad < candidate) {
        onset = candidate;
        break;
      }
    }
  }

  DeltaSetResult result;
  result.certificate.period = period;
  std::int64_t union_upto = horizon;
  if (onset) {
    result.certificate.status = CertificateStatus::Verified;
    result.certificate.start = *onset;
    result.certificate.window_begin = *onset;
    result.certificate.window_end = *onset + 2 * period;
    union_upto = *onset + period;
  }

  std::vector<char> seen;
  for (std::int64_t n = 0; n <= union_upto; ++n) {
    for (auto dgap : table.delta(n)) {
      if (static_cast<std::size_t>(dgap) >= seen.size())
        seen.resize(static_cast<std::size_t>(dgap) + 1, 0);
      seen[static_cast<std::size_t>(dgap)] = 1;
    }
  }
  for (std::size_t v = 0; v < seen.size(); ++v)
    if (seen[v]) result.delta.push_back(static_cast<std::int64_t>(v));
  return result;
}

std::vector<std::int64_t> delta_union_over_box(const SemigroupPresentation& sgp,
                                               const Element& lo,
                                               const Element& hi) {
  ScanSelection sel;
  sel.delta = true;
  auto t = scan_box(sgp, lo, hi, sel);
  std::vector<std::int64_t> out;
  for (const auto& rec : t.records)
    for (auto v : *rec.delta) out.push_back(v);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

std::optional<ScanRecord> scan_one(const SemigroupPresentation& sgp,
                                   const Element& e, const ScanSelection& sel) {
  auto zs = factorizations(sgp, e);
  if (zs.empty()) return std::nullopt;
  ScanRecord rec;
  rec.element = e;
  if (sel.z_count) rec.z_count = Int(static_cast<unsigned long>(zs.count()));
  std::vector<std::int64_t> ls;
  if (sel.lengths || sel.delta || sel.max_len || sel.min_len)
    ls = length_set_of(zs);
  if (sel.lengths) rec.lengths = ls;
  if (sel.delta) rec.delta = delta_of_lengths(ls);
  if (sel.max_len) rec.max_len = ls.back();
  if (sel.min_len) rec.min_len = ls.front();
  if (sel.catenary) rec.catenary = catenary_of_set(zs);
  if (sel.omega) {
    OmegaResult w = sgp.is_numerical() ? omega(sgp, e)
                                       : omega_bounded(sgp, e, sel.omega_cap);
    rec.omega = w.value;
    rec.omega_exact = w.exact;
  }
  return rec;
}

ScanTable scan_elements(const SemigroupPresentation& sgp,
                        const std::vector<Element>& elements,
                        const ScanSelection& sel) {
  std::vector<std::optional<ScanRecord>> slots(elements.size());
  const std::size_t n = elements.size();
  unsigned workers = std::min<unsigned>(std::thread::hardware_concurrency(),
                                        8u);
  if (workers <= 1 || n < 64) {
    for (std::size_t i = 0; i < n; ++i)
      slots[i] = scan_one(sgp, elements[i], sel);
  } else {
    // Each slot is written by exactly one worker; the merge below keeps the
    // ascending element order, so thread scheduling never shows.
    std::atomic<std::size_t> next{0};
    auto work = [&]() {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= n) return;
        slots[i] = scan_one(sgp, elements[i], sel);
      }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  ScanTable table;
  for (auto& s : slots)
    if (s) table.records.push_back(std::move(*s));
  return table;
}

}  // namespace

ScanTable scan_range(const SemigroupPresentation& sgp, std::int64_t from,
                     std::int64_t to, const ScanSelection& sel) {
  if (sgp.ambient.free_rank != 1 || !sgp.torsion_free())
    throw NotNumericalError("range scan needs a one-dimensional semigroup");
  if (from < 0 || to < from) throw EmptyRangeError("bad scan range");
  std::vector<Element> elements;
  elements.reserve(static_cast<std::size_t>(to - from + 1));
  for (std::int64_t v = from; v <= to; ++v)
    elements.push_back(Element::scalar(Int(v)));
  return scan_elements(sgp, elements, sel);
}

ScanTable scan_box(const SemigroupPresentation& sgp, const Element& lo,
                   const Element& hi, const ScanSelection& sel) {
  require_same_ambient(sgp.ambient, lo, "box scan");
  require_same_ambient(sgp.ambient, hi, "box scan");
  const std::size_t d = sgp.ambient.free_rank;
  for (std::size_t j = 0; j < d; ++j)
    if (lo.free[j] > hi.free[j]) throw EmptyRangeError("empty scan box");

  // Free coordinates sweep the box in lexicographic order; ambients with
  // torsion additionally sweep every residue combination per point.
  std::vector<Element> elements;
  std::vector<Int> cur(d);
  for (std::size_t j = 0; j < d; ++j) cur[j] = lo.free[j];
  const auto& orders = sgp.ambient.torsion_orders;
  for (;;) {
    std::vector<std::int64_t> tors(orders.size(), 0);
    for (;;) {
      elements.push_back(Element(cur, tors));
      std::size_t j = orders.size();
      while (j > 0) {
        --j;
        if (++tors[j] < orders[j]) break;
        tors[j] = 0;
        if (j == 0) goto torsion_done;
      }
      if (orders.empty()) break;
    }
  torsion_done:;
    std::size_t j = d;
    while (j > 0) {
      --j;
      if (++cur[j] <= hi.free[j]) break;
      cur[j] = lo.free[j];
      if (j == 0) return scan_elements(sgp, elements, sel);
    }
    if (d == 0) break;
  }
  return scan_elements(sgp, elements, sel);
}

}  // namespace sgf

#include "sgf/oracles.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace sgf::oracles {

namespace {

// Independently derived per-coordinate caps: coordinate i can be at most
// min over free coordinates j with g_i[j] > 0 of alpha[j] / g_i[j].
std::vector<std::int64_t> box_caps(const SemigroupPresentation& sgp,
                                   const Element& alpha) {
  std::vector<std::int64_t> caps;
  for (const auto& g : sgp.generators) {
    Int best = -1;
    for (std::size_t j = 0; j < g.free.size(); ++j) {
      if (g.free[j] <= 0) continue;
      Int q = alpha.free[j] / g.free[j];
      if (best < 0 || q < best) best = q;
    }
    if (best < 0) throw std::logic_error("generator with no positive part");
    caps.push_back(to_int64(best));
  }
  return caps;
}

bool combo_hits(const SemigroupPresentation& sgp,
                const std::vector<std::int64_t>& e, const Element& alpha) {
  const auto& orders = sgp.ambient.torsion_orders;
  for (std::size_t j = 0; j < alpha.free.size(); ++j) {
    Int sum = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
      sum += Int(e[i]) * sgp.generators[i].free[j];
    if (sum != alpha.free[j]) return false;
  }
  for (std::size_t j = 0; j < orders.size(); ++j) {
    Int sum = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
      sum += Int(e[i]) * sgp.generators[i].torsion[j];
    if ((sum - alpha.torsion[j]) % orders[j] != 0) return false;
  }
  return true;
}

}  // namespace

FactorizationSet naive_factorizations(const SemigroupPresentation& sgp,
                                      const Element& alpha) {
  auto caps = box_caps(sgp, alpha);
  FactorizationSet out;
  out.element = alpha;

  // Plain odometer over the whole box, every cell tested from scratch.
  std::vector<std::int64_t> e(caps.size(), 0);
  for (;;) {
    if (combo_hits(sgp, e, alpha)) out.factorizations.push_back(Factorization(e));
    std::size_t i = e.size();
    for (;;) {
      if (i == 0) {
        std::sort(out.factorizations.begin(), out.factorizations.end());
        return out;
      }
      --i;
      if (++e[i] <= caps[i]) break;
      e[i] = 0;
    }
  }
}

Int naive_box_volume(const SemigroupPresentation& sgp, const Element& alpha) {
  Int vol = 1;
  for (auto c : box_caps(sgp, alpha)) vol *= Int(c) + 1;
  return vol;
}

std::int64_t catenary_oracle(const SemigroupPresentation& sgp,
                             const Element& alpha) {
  FactorizationSet zs = naive_factorizations(sgp, alpha);
  const std::size_t n = zs.count();
  if (n <= 1) return 0;

  auto dist = [&](std::size_t a, std::size_t b) {
    std::int64_t da = 0, db = 0;
    const auto& x = zs.factorizations[a].exponents;
    const auto& y = zs.factorizations[b].exponents;
    for (std::size_t i = 0; i < x.size(); ++i) {
      da += std::max<std::int64_t>(x[i] - y[i], 0);
      db += std::max<std::int64_t>(y[i] - x[i], 0);
    }
    return std::max(da, db);
  };

  // Smallest N such that the graph with edges of distance <= N is connected,
  // found by trying N = 0, 1, 2, ... with a fresh flood fill each time.
  for (std::int64_t cap = 0;; ++cap) {
    std::vector<char> reached(n, 0);
    std::vector<std::size_t> stack{0};
    reached[0] = 1;
    std::size_t seen = 1;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w = 0; w < n; ++w) {
        if (reached[w] || dist(v, w) > cap) continue;
        reached[w] = 1;
        ++seen;
        stack.push_back(w);
      }
    }
    if (seen == n) return cap;
  }
}

OmegaResult bullet_oracle(const SemigroupPresentation& sgp,
                          const Element& alpha, std::int64_t cap) {
  const std::size_t r = sgp.size();
  const std::size_t d = sgp.ambient.free_rank;
  const auto& orders = sgp.ambient.torsion_orders;

  // Own membership test: early-exit odometer sweep, memoized on the value.
  std::map<std::vector<Int>, bool> memo;
  auto member = [&](const Element& target) {
    for (const auto& v : target.free)
      if (v < 0) return false;
    std::vector<Int> key = target.free;
    for (auto t : target.torsion) key.push_back(Int(t));
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    auto caps = box_caps(sgp, target);
    bool found = false;
    std::vector<std::int64_t> e(r, 0);
    for (;;) {
      if (combo_hits(sgp, e, target)) {
        found = true;
        break;
      }
      std::size_t i = r;
      bool done = false;
      while (!done) {
        if (i == 0) {
          done = true;
          break;
        }
        --i;
        if (++e[i] <= caps[i]) break;
        e[i] = 0;
      }
      if (done) break;
    }
    memo.emplace(std::move(key), found);
    return found;
  };

  auto bullet = [&](const std::vector<std::int64_t>& b) {
    std::vector<Int> free(d, Int(0));
    std::vector<Int> tors_raw(orders.size(), Int(0));
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < d; ++j)
        free[j] += Int(b[i]) * sgp.generators[i].free[j];
      for (std::size_t j = 0; j < orders.size(); ++j)
        tors_raw[j] += Int(b[i]) * sgp.generators[i].torsion[j];
    }
    for (std::size_t j = 0; j < d; ++j) free[j] -= alpha.free[j];
    std::vector<std::int64_t> tors(orders.size(), 0);
    for (std::size_t j = 0; j < orders.size(); ++j) {
      Int m(orders[j]);
      Int v = (tors_raw[j] - alpha.torsion[j]) % m;
      if (v < 0) v += m;
      tors[j] = to_int64(v);
    }
    return member(Element(std::move(free), std::move(tors)));
  };

  // Odometer over the box [0, cap]^r, keeping only vectors inside the weight
  // simplex. Exactness needs the entire weight-cap shell to consist of
  // bullets: then anything heavier sits above a bullet and cannot be minimal.
  OmegaResult out;
  out.value = 0;
  out.exact = true;
  std::vector<std::int64_t> b(r, 0);
  for (;;) {
    std::int64_t weight = 0;
    for (auto v : b) weight += v;
    if (weight <= cap) {
      bool is_bullet = bullet(b);
      if (weight == cap && !is_bullet) out.exact = false;
      if (is_bullet) {
        bool minimal = true;
        for (std::size_t i = 0; i < r && minimal; ++i) {
          if (b[i] == 0) continue;
          --b[i];
          if (bullet(b)) minimal = false;
          ++b[i];
        }
        if (minimal) out.value = std::max(out.value, weight);
      }
    }
    std::size_t i = r;
    for (;;) {
      if (i == 0) return out;
      --i;
      if (++b[i] <= cap) break;
      b[i] = 0;
    }
  }
}

}  // namespace sgf::oracles

#include "sgf/enumerate.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "sgf/errors.hpp"

namespace sgf {
namespace detail {

namespace {

std::int64_t checked_coord(const Int& v) {
  if (v < 0) throw std::invalid_argument("negative coordinate");
  if (v >= kCoordinateLimit)
    throw std::overflow_error("coordinate too large to enumerate: " +
                              int_str(v));
  return to_int64(v);
}

}  // namespace

EnumProblem make_problem(const SemigroupPresentation& sgp, const Element& alpha,
                         const std::vector<std::size_t>& subset) {
  require_same_ambient(sgp.ambient, alpha, "enumeration");
  std::vector<std::size_t> idx(subset);
  if (idx.empty()) {
    idx.resize(sgp.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
  }

  EnumProblem p;
  p.rank = idx.size();
  p.dim = sgp.ambient.free_rank;
  p.orders = sgp.ambient.torsion_orders;

  p.gen_free.resize(p.rank);
  p.gen_tors.resize(p.rank);
  for (std::size_t i = 0; i < p.rank; ++i) {
    const Element& g = sgp.generators.at(idx[i]);
    p.gen_free[i].reserve(p.dim);
    for (const auto& c : g.free) p.gen_free[i].push_back(checked_coord(c));
    if (!g.has_nonzero_free())
      throw std::invalid_argument(
          "enumeration requires generators with nonzero free part");
    p.gen_tors[i].resize(p.orders.size());
    for (std::size_t j = 0; j < p.orders.size(); ++j) {
      auto m = p.orders[j];
      p.gen_tors[i][j] = ((g.torsion[j] % m) + m) % m;
    }
  }

  p.target_free.reserve(p.dim);
  for (const auto& c : alpha.free) p.target_free.push_back(checked_coord(c));
  p.target_tors.resize(p.orders.size());
  for (std::size_t j = 0; j < p.orders.size(); ++j) {
    auto m = p.orders[j];
    p.target_tors[j] = ((alpha.torsion[j] % m) + m) % m;
  }

  // suffix_support[i][j]: some generator at position >= i can pay into
  // coordinate j. A level whose remaining budget has mass where no later
  // generator can spend is dead.
  p.suffix_support.assign(p.rank + 1, std::vector<char>(p.dim, 0));
  for (std::size_t i = p.rank; i-- > 0;) {
    for (std::size_t j = 0; j < p.dim; ++j)
      p.suffix_support[i][j] =
          p.suffix_support[i + 1][j] || (p.gen_free[i][j] > 0);
  }
  return p;
}

bool enumerate(const EnumProblem& p,
               const std::function<bool(const std::vector<std::int64_t>&)>&
                   visit) {
  const std::size_t r = p.rank;
  const std::size_t d = p.dim;
  const std::size_t t = p.orders.size();

  std::vector<std::int64_t> expo(r, 0);
  // One remaining-budget row and one torsion accumulator per depth.
  std::vector<std::vector<std::int64_t>> rem(r + 1,
                                             std::vector<std::int64_t>(d));
  std::vector<std::vector<std::int64_t>> acc(r + 1,
                                             std::vector<std::int64_t>(t));
  rem[0] = p.target_free;
  acc[0] = std::vector<std::int64_t>(t, 0);

  // Closed-form last level: the remaining budget must be an exact multiple
  // of the final generator.
  auto solve_last = [&](const std::vector<std::int64_t>& budget,
                        const std::vector<std::int64_t>& tacc) -> bool {
    const auto& g = p.gen_free[r - 1];
    std::int64_t a = -1;
    for (std::size_t j = 0; j < d; ++j) {
      if (g[j] > 0) {
        if (budget[j] % g[j] != 0) return true;
        std::int64_t q = budget[j] / g[j];
        if (a < 0)
          a = q;
        else if (q != a)
          return true;
      } else if (budget[j] != 0) {
        return true;
      }
    }
    if (a < 0) a = 0;  // all-zero generator is rejected in make_problem
    for (std::size_t j = 0; j < t; ++j) {
      auto m = p.orders[j];
      auto v = static_cast<std::int64_t>(
          (static_cast<__int128>(p.gen_tors[r - 1][j]) * a + tacc[j]) % m);
      if (v != p.target_tors[j]) return true;
    }
    expo[r - 1] = a;
    return visit(expo);
  };

  std::function<bool(std::size_t)> descend = [&](std::size_t i) -> bool {
    const auto& budget = rem[i];
    for (std::size_t j = 0; j < d; ++j)
      if (budget[j] > 0 && !p.suffix_support[i][j]) return true;

    if (i == r - 1) return solve_last(budget, acc[i]);

    const auto& g = p.gen_free[i];
    std::int64_t bound = -1;
    for (std::size_t j = 0; j < d; ++j) {
      if (g[j] > 0) {
        std::int64_t q = budget[j] / g[j];
        if (bound < 0 || q < bound) bound = q;
      }
    }
    assert(bound >= 0);

    rem[i + 1] = budget;
    acc[i + 1] = acc[i];
    for (std::int64_t a = 0; a <= bound; ++a) {
      expo[i] = a;
      if (!descend(i + 1)) return false;
      if (a < bound) {
        for (std::size_t j = 0; j < d; ++j) rem[i + 1][j] -= g[j];
        for (std::size_t j = 0; j < t; ++j)
          acc[i + 1][j] = (acc[i + 1][j] + p.gen_tors[i][j]) % p.orders[j];
      }
    }
    expo[i] = 0;
    return true;
  };

  return descend(0);
}

void for_each_weight_capped(
    std::size_t rank, std::int64_t cap,
    const std::function<bool(const std::vector<std::int64_t>&, std::int64_t)>&
        visit) {
  assert(rank >= 1);
  std::vector<std::int64_t> b(rank, 0);
  bool stop = false;
  std::int64_t weight = 0;
  std::function<void(std::size_t, std::int64_t)> place =
      [&](std::size_t i, std::int64_t left) {
        if (stop) return;
        if (i == rank - 1) {
          b[i] = left;
          if (!visit(b, weight)) stop = true;
          b[i] = 0;
          return;
        }
        for (std::int64_t v = 0; v <= left && !stop; ++v) {
          b[i] = v;
          place(i + 1, left - v);
        }
        b[i] = 0;
      };
  for (weight = 0; weight <= cap && !stop; ++weight) place(0, weight);
}

}  // namespace detail

bool contains(const SemigroupPresentation& sgp, const Element& alpha) {
  auto p = detail::make_problem(sgp, alpha);
  bool found = false;
  detail::enumerate(p, [&](const std::vector<std::int64_t>&) {
    found = true;
    return false;
  });
  return found;
}

FactorizationSet factorizations(const SemigroupPresentation& sgp,
                                const Element& alpha) {
  auto p = detail::make_problem(sgp, alpha);
  FactorizationSet out;
  out.element = alpha;
  detail::enumerate(p, [&](const std::vector<std::int64_t>& e) {
    out.factorizations.emplace_back(e);
    return true;
  });
  // The search ascends in every position, so the output is already in the
  // canonical ascending lexicographic order.
  assert(std::is_sorted(out.factorizations.begin(), out.factorizations.end()));
  return out;
}

std::vector<Int> denumerant_table(const SemigroupPresentation& sgp,
                                  std::int64_t upto) {
  if (!sgp.is_numerical())
    throw NotNumericalError("denumerant table needs a numerical semigroup");
  if (upto < 0) throw std::invalid_argument("denumerant table bound negative");
  std::vector<Int> c(static_cast<std::size_t>(upto) + 1, Int(0));
  c[0] = 1;
  for (const auto& g : sgp.generators) {
    std::int64_t n = to_int64(g.free[0]);
    for (std::int64_t m = n; m <= upto; ++m)
      c[static_cast<std::size_t>(m)] += c[static_cast<std::size_t>(m - n)];
  }
  return c;
}

}  // namespace sgf

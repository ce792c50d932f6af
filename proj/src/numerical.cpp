#include "sgf/numerical.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace sgf {

MembershipTable::MembershipTable(const std::vector<std::int64_t>& gens,
                                 std::int64_t limit)
    : limit_(limit), in_(static_cast<std::size_t>(std::max<std::int64_t>(
                             limit, 0)) + 1,
                         0) {
  if (limit < 0) throw std::invalid_argument("membership limit negative");
  in_[0] = 1;
  for (auto g : gens) {
    if (g <= 0) throw std::invalid_argument("generator must be positive");
    for (std::int64_t n = g; n <= limit_; ++n)
      if (in_[static_cast<std::size_t>(n - g)]) in_[static_cast<std::size_t>(n)] = 1;
  }
}

std::int64_t frobenius_number(const std::vector<std::int64_t>& gens) {
  assert(!gens.empty());
  std::int64_t g0 = *std::min_element(gens.begin(), gens.end());
  if (g0 == 1) return -1;
  std::int64_t limit = 4 * (*std::max_element(gens.begin(), gens.end()));
  constexpr std::int64_t kGiveUp = std::int64_t{1} << 30;
  while (limit < kGiveUp) {
    MembershipTable table(gens, limit);
    std::int64_t run = 0, last_gap = -1;
    for (std::int64_t n = 0; n <= limit; ++n) {
      if (table.contains(n)) {
        // g0 consecutive members close the semigroup upward for good.
        if (++run >= g0) return last_gap;
      } else {
        run = 0;
        last_gap = n;
      }
    }
    limit *= 2;
  }
  throw std::logic_error("no conductor found; generators not coprime?");
}

LengthSetTable::LengthSetTable(const std::vector<std::int64_t>& gens,
                               std::int64_t horizon)
    : horizon_(horizon) {
  if (horizon < 0) throw std::invalid_argument("horizon negative");
  std::int64_t g0 = *std::min_element(gens.begin(), gens.end());
  if (g0 <= 0) throw std::invalid_argument("generator must be positive");
  std::int64_t max_len = horizon / g0 + 1;
  words_ = static_cast<std::size_t>(max_len / 64 + 1);
  bits_.assign((static_cast<std::size_t>(horizon) + 1) * words_, 0);
  bits_[0] = 1;  // L(0) = {0}
  for (std::int64_t n = 1; n <= horizon; ++n) {
    auto* dst = bits_.data() + static_cast<std::size_t>(n) * words_;
    for (auto g : gens) {
      if (g > n) continue;
      const auto* src = row(n - g);
      // dst |= src << 1 : one more generator in every expression.
      std::uint64_t carry = 0;
      for (std::size_t w = 0; w < words_; ++w) {
        std::uint64_t v = src[w];
        dst[w] |= (v << 1) | carry;
        carry = v >> 63;
      }
    }
  }
}

bool LengthSetTable::member(std::int64_t n) const {
  if (n < 0 || n > horizon_) return false;
  const auto* r = row(n);
  for (std::size_t w = 0; w < words_; ++w)
    if (r[w]) return true;
  return false;
}

std::vector<std::int64_t> LengthSetTable::lengths(std::int64_t n) const {
  std::vector<std::int64_t> out;
  if (n < 0 || n > horizon_) return out;
  const auto* r = row(n);
  for (std::size_t w = 0; w < words_; ++w) {
    std::uint64_t v = r[w];
    while (v) {
      int bit = __builtin_ctzll(v);
      out.push_back(static_cast<std::int64_t>(w) * 64 + bit);
      v &= v - 1;
    }
  }
  return out;
}

std::vector<std::int64_t> LengthSetTable::delta(std::int64_t n) const {
  auto ls = lengths(n);
  std::vector<std::int64_t> out;
  for (std::size_t i = 1; i < ls.size(); ++i) out.push_back(ls[i] - ls[i - 1]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<std::int64_t> max_length_table_lookup(
    const std::vector<std::int64_t>& subset_gens, std::int64_t n) {
  if (n < 0) return std::nullopt;
  std::vector<std::int64_t> best(static_cast<std::size_t>(n) + 1, -1);
  best[0] = 0;
  for (std::int64_t m = 1; m <= n; ++m) {
    std::int64_t b = -1;
    for (auto g : subset_gens) {
      if (g <= m && best[static_cast<std::size_t>(m - g)] >= 0)
        b = std::max(b, best[static_cast<std::size_t>(m - g)] + 1);
    }
    best[static_cast<std::size_t>(m)] = b;
  }
  auto v = best[static_cast<std::size_t>(n)];
  if (v < 0) return std::nullopt;
  return v;
}

}  // namespace sgf

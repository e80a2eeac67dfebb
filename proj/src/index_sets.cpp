#include "antipower/index_sets.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "antipower/rolling_hash.hpp"

namespace antipower {
namespace {

void require_positive(std::size_t value, const char* what) {
  if (value == 0) throw std::invalid_argument(std::string(what) + " must be >= 1");
}

// Scans m = 1..limit for the first m accepted by test(hasher, m), where the
// test reads the prefix of length offset + k*m. The prefix grows by
// doubling so early hits stay cheap; the cap is hit only if the scan must
// actually read past it.
template <class Test>
std::optional<std::size_t> first_accepted(const InfiniteWord& x, std::size_t offset, std::size_t k,
                                          std::size_t limit, std::size_t cap, Test test) {
  std::size_t done = 0;
  std::size_t chunk = 64;
  while (done < limit) {
    std::size_t hi = std::min(limit, done + chunk);
    if (offset + k * hi > cap) {
      if (offset + k * (done + 1) > cap) throw ResourceLimitError(offset + k * (done + 1), cap);
      hi = (cap - offset) / k;
    }
    Word text = prefix(x, offset + k * hi, cap);
    FactorHasher hasher(text.view());
    for (std::size_t m = done + 1; m <= hi; ++m)
      if (test(hasher, m)) return m;
    done = hi;
    chunk *= 2;
  }
  return std::nullopt;
}

IndexSet collect(const InfiniteWord& x, std::size_t k, std::size_t horizon, std::size_t cap,
                 IndexSetKind kind) {
  require_positive(k, "order k");
  require_positive(horizon, "horizon");
  IndexSet out{kind, x.name(), k, horizon, {}};
  Word text = prefix(x, k * horizon, cap);
  FactorHasher hasher(text.view());
  for (std::size_t m = 1; m <= horizon; ++m) {
    bool member = kind == IndexSetKind::AntiPowerSet ? hasher.blocks_distinct(0, m, k)
                                                     : hasher.blocks_equal(0, m, k);
    if (member) out.members.push_back(m);
  }
  return out;
}

}  // namespace

bool IndexSet::contains(std::size_t m) const {
  return std::binary_search(members.begin(), members.end(), m);
}

IndexSet ap_set(const InfiniteWord& x, std::size_t k, std::size_t horizon, std::size_t cap) {
  return collect(x, k, horizon, cap, IndexSetKind::AntiPowerSet);
}

IndexSet p_set(const InfiniteWord& x, std::size_t k, std::size_t horizon, std::size_t cap) {
  return collect(x, k, horizon, cap, IndexSetKind::PowerSet);
}

std::optional<std::size_t> ap_min(const InfiniteWord& x, std::size_t k, std::size_t limit,
                                  std::size_t cap) {
  require_positive(k, "order k");
  require_positive(limit, "limit");
  return first_accepted(x, 0, k, limit, cap, [k](const FactorHasher& h, std::size_t m) {
    return h.blocks_distinct(0, m, k);
  });
}

std::optional<Occurrence> find_anti_power_factor(const InfiniteWord& x, std::size_t k,
                                                 std::size_t max_prefix, std::size_t cap) {
  if (k < 2) throw std::invalid_argument("order k must be >= 2");
  if (max_prefix < k) throw std::invalid_argument("prefix bound must be >= k");
  Word text = prefix(x, max_prefix, cap);
  const auto symbols = text.view();
  FactorHasher hasher(symbols);
  std::vector<std::size_t> pair_a, pair_b;
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b) {
      pair_a.push_back(a);
      pair_b.push_back(b);
    }
  for (std::size_t len = 1; len * k <= max_prefix; ++len) {
    const auto fps = hasher.fingerprints_of_length(len);
    const std::size_t span = len * k;
    for (std::size_t start = 0; start + span <= max_prefix; ++start) {
      bool distinct = true;
      for (std::size_t p = 0; p < pair_a.size() && distinct; ++p) {
        std::size_t u = start + pair_a[p] * len;
        std::size_t v = start + pair_b[p] * len;
        if (fps[u] == fps[v] &&
            std::equal(symbols.begin() + u, symbols.begin() + u + len, symbols.begin() + v))
          distinct = false;
      }
      if (distinct) return Occurrence{start + 1, len};
    }
  }
  return std::nullopt;
}

std::optional<std::size_t> anti_power_at_position(const InfiniteWord& x, std::size_t k,
                                                  std::uint64_t pos, std::size_t limit,
                                                  std::size_t cap) {
  if (k < 2) throw std::invalid_argument("order k must be >= 2");
  if (pos == 0) throw std::invalid_argument("positions are 1-based");
  if (limit == 0) return std::nullopt;
  const std::size_t offset = pos - 1;
  return first_accepted(x, offset, k, limit, cap, [k, offset](const FactorHasher& h, std::size_t len) {
    return h.blocks_distinct(offset, len, k);
  });
}

Ratio::Ratio(std::uint64_t numerator, std::uint64_t denominator) {
  if (denominator == 0) throw std::invalid_argument("zero denominator");
  std::uint64_t g = std::gcd(numerator, denominator);
  num_ = numerator / g;
  den_ = denominator / g;
}

std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) noexcept {
  using wide = unsigned __int128;
  return static_cast<wide>(a.num_) * b.den_ <=> static_cast<wide>(b.num_) * a.den_;
}

DensityEstimate density_estimate(const IndexSet& s) {
  if (s.horizon < 2) throw std::invalid_argument("density estimate needs horizon >= 2");
  DensityEstimate out;
  out.ratios.reserve(s.horizon);
  std::size_t count = 0;
  auto next = s.members.begin();
  for (std::size_t n = 1; n <= s.horizon; ++n) {
    while (next != s.members.end() && *next <= n) {
      ++count;
      ++next;
    }
    out.ratios.emplace_back(count, n);
  }
  out.tail_start = std::max<std::size_t>(1, s.horizon / 2);
  out.min_tail = *std::min_element(out.ratios.begin() + static_cast<std::ptrdiff_t>(out.tail_start - 1),
                                   out.ratios.end());
  return out;
}

}  // namespace antipower

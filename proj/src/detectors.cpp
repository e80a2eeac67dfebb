#include "antipower/detectors.hpp"

#include <algorithm>
#include <stdexcept>

#include "antipower/rolling_hash.hpp"

namespace antipower {
namespace {

void require_order(std::size_t k) {
  if (k == 0) throw std::invalid_argument("order k must be >= 1");
}

bool same(std::span<const Symbol> w, std::size_t a, std::size_t b, std::size_t len) {
  return std::equal(w.begin() + a, w.begin() + a + len, w.begin() + b);
}

bool equal_blocks_at(std::span<const Symbol> w, std::size_t start, std::size_t len, std::size_t k) {
  for (std::size_t j = 1; j < k; ++j)
    if (!same(w, start, start + j * len, len)) return false;
  return true;
}

bool distinct_blocks_at(std::span<const Symbol> w, std::size_t start, std::size_t len,
                        std::size_t k) {
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b)
      if (same(w, start + a * len, start + b * len, len)) return false;
  return true;
}

}  // namespace

bool is_k_power(std::span<const Symbol> w, std::size_t k) {
  require_order(k);
  if (w.size() % k != 0) return false;
  return equal_blocks_at(w, 0, w.size() / k, k);
}

bool is_k_anti_power(std::span<const Symbol> w, std::size_t k) {
  require_order(k);
  if (w.empty() || w.size() % k != 0) return false;
  if (k == 1) return true;
  FactorHasher hasher(w);
  return hasher.blocks_distinct(0, w.size() / k, k);
}

bool has_power_suffix(std::span<const Symbol> w, std::size_t k) {
  require_order(k);
  for (std::size_t len = 1; len * k <= w.size(); ++len)
    if (equal_blocks_at(w, w.size() - len * k, len, k)) return true;
  return false;
}

bool has_anti_power_suffix(std::span<const Symbol> w, std::size_t k) {
  require_order(k);
  for (std::size_t len = 1; len * k <= w.size(); ++len)
    if (distinct_blocks_at(w, w.size() - len * k, len, k)) return true;
  return false;
}

std::optional<FactorHit> first_power_factor(std::span<const Symbol> w, std::size_t k) {
  require_order(k);
  for (std::size_t len = 1; len * k <= w.size(); ++len)
    for (std::size_t start = 0; start + len * k <= w.size(); ++start)
      if (equal_blocks_at(w, start, len, k)) return FactorHit{start, len};
  return std::nullopt;
}

std::optional<FactorHit> first_anti_power_factor(std::span<const Symbol> w, std::size_t k) {
  require_order(k);
  for (std::size_t len = 1; len * k <= w.size(); ++len)
    for (std::size_t start = 0; start + len * k <= w.size(); ++start)
      if (distinct_blocks_at(w, start, len, k)) return FactorHit{start, len};
  return std::nullopt;
}

}  // namespace antipower

#include "antipower/rolling_hash.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace antipower {
namespace {

constexpr std::uint64_t kTwo61 = std::uint64_t{1} << 61;
constexpr std::uint64_t kMask61 = kTwo61 - 1;

// Moduli of the form 2^61 - c with small c reduce by folding the high bits.
std::uint64_t fold_constant(std::uint64_t m) noexcept {
  return m < kTwo61 && kTwo61 - m < (std::uint64_t{1} << 20) ? kTwo61 - m : 0;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
  unsigned __int128 x = static_cast<unsigned __int128>(a) * b;
  std::uint64_t c = fold_constant(m);
  if (c == 0) return static_cast<std::uint64_t>(x % m);
  unsigned __int128 y = (x & kMask61) + (x >> 61) * c;
  std::uint64_t z = static_cast<std::uint64_t>(y & kMask61) + static_cast<std::uint64_t>(y >> 61) * c;
  while (z >= m) z -= m;
  return z;
}

void build_lane(std::span<const Symbol> text, std::uint64_t mod, std::uint64_t base,
                std::vector<std::uint64_t>& prefix, std::vector<std::uint64_t>& power) {
  prefix.assign(text.size() + 1, 0);
  power.assign(text.size() + 1, 1);
  base %= mod;
  for (std::size_t i = 0; i < text.size(); ++i) {
    prefix[i + 1] = (mulmod(prefix[i], base, mod) + (text[i] + 1u) % mod) % mod;
    power[i + 1] = mulmod(power[i], base, mod);
  }
}

std::uint64_t lane_value(const std::vector<std::uint64_t>& prefix,
                         const std::vector<std::uint64_t>& power, std::uint64_t mod,
                         std::size_t offset, std::size_t len) noexcept {
  std::uint64_t sub = mulmod(prefix[offset], power[len], mod);
  std::uint64_t v = prefix[offset + len];
  return v >= sub ? v - sub : v + mod - sub;
}

}  // namespace

FactorHasher::FactorHasher(std::span<const Symbol> text, HashParams params)
    : text_(text), params_(params) {
  if (params_.modulus_lo < 2 || params_.modulus_hi < 2 ||
      params_.modulus_lo >= (std::uint64_t{1} << 63) || params_.modulus_hi >= (std::uint64_t{1} << 63))
    throw std::invalid_argument("hash moduli must lie in [2, 2^63)");
  build_lane(text_, params_.modulus_lo, params_.base_lo, prefix_lo_, power_lo_);
  build_lane(text_, params_.modulus_hi, params_.base_hi, prefix_hi_, power_hi_);
}

Fingerprint FactorHasher::fingerprint(std::size_t offset, std::size_t len) const noexcept {
  return {lane_value(prefix_lo_, power_lo_, params_.modulus_lo, offset, len),
          lane_value(prefix_hi_, power_hi_, params_.modulus_hi, offset, len)};
}

std::vector<Fingerprint> FactorHasher::fingerprints_of_length(std::size_t len) const {
  if (len > text_.size()) return {};
  std::vector<Fingerprint> out(text_.size() - len + 1);
  for (std::size_t p = 0; p < out.size(); ++p) out[p] = fingerprint(p, len);
  return out;
}

bool FactorHasher::same_factor(std::size_t a, std::size_t b, std::size_t len) const noexcept {
  if (a == b) return true;
  if (fingerprint(a, len) != fingerprint(b, len)) return false;
  return std::equal(text_.begin() + a, text_.begin() + a + len, text_.begin() + b);
}

bool FactorHasher::blocks_distinct(std::size_t start, std::size_t len, std::size_t k) const {
  if (k <= 1) return true;
  if (len == 0) return false;
  // Small orders: pairwise on fingerprints. Large orders: sort fingerprints
  // and confirm every group of equal fingerprints pairwise.
  if (k <= 24) {
    Fingerprint fp[24];
    for (std::size_t j = 0; j < k; ++j) fp[j] = fingerprint(start + j * len, len);
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = a + 1; b < k; ++b)
        if (fp[a] == fp[b] && same_factor(start + a * len, start + b * len, len)) return false;
    return true;
  }
  std::vector<std::pair<Fingerprint, std::size_t>> fps(k);
  for (std::size_t j = 0; j < k; ++j) fps[j] = {fingerprint(start + j * len, len), j};
  std::sort(fps.begin(), fps.end(), [](const auto& x, const auto& y) {
    return std::tie(x.first.lo, x.first.hi, x.second) < std::tie(y.first.lo, y.first.hi, y.second);
  });
  for (std::size_t g = 0; g < k;) {
    std::size_t e = g + 1;
    while (e < k && fps[e].first == fps[g].first) ++e;
    for (std::size_t a = g; a < e; ++a)
      for (std::size_t b = a + 1; b < e; ++b)
        if (same_factor(start + fps[a].second * len, start + fps[b].second * len, len)) return false;
    g = e;
  }
  return true;
}

bool FactorHasher::blocks_equal(std::size_t start, std::size_t len, std::size_t k) const noexcept {
  for (std::size_t j = 1; j < k; ++j)
    if (!same_factor(start, start + j * len, len)) return false;
  return true;
}

}  // namespace antipower

#ifndef ANTIPOWER_DETECTORS_HPP
#define ANTIPOWER_DETECTORS_HPP

#include <cstddef>
#include <optional>
#include <span>

#include "antipower/word.hpp"

namespace antipower {

/// w is a concatenation of k equal blocks. The empty word is a k-power for
/// every k. Throws std::invalid_argument when k == 0.
bool is_k_power(std::span<const Symbol> w, std::size_t k);
inline bool is_k_power(const Word& w, std::size_t k) { return is_k_power(w.view(), k); }

/// w is a non-empty concatenation of k pairwise distinct blocks of equal
/// length. Blocks are compared by fingerprint, with exact confirmation.
bool is_k_anti_power(std::span<const Symbol> w, std::size_t k);
inline bool is_k_anti_power(const Word& w, std::size_t k) { return is_k_anti_power(w.view(), k); }

/// A factor occurrence: 0-based offset and block length.
struct FactorHit {
  std::size_t offset = 0;
  std::size_t block_length = 0;
  friend bool operator==(const FactorHit&, const FactorHit&) = default;
};

// Suffix tests used by the incremental searches. Direct symbol comparison.

/// Some suffix of w is a k-power of a non-empty word.
bool has_power_suffix(std::span<const Symbol> w, std::size_t k);
/// Some suffix of w is a k-anti-power.
bool has_anti_power_suffix(std::span<const Symbol> w, std::size_t k);

// Full-word scans by direct block comparison, without fingerprints. Used to
// re-verify search results independently of the fast paths.

std::optional<FactorHit> first_power_factor(std::span<const Symbol> w, std::size_t k);
std::optional<FactorHit> first_anti_power_factor(std::span<const Symbol> w, std::size_t k);

inline bool contains_power_factor(const Word& w, std::size_t k) {
  return first_power_factor(w.view(), k).has_value();
}
inline bool contains_anti_power_factor(const Word& w, std::size_t k) {
  return first_anti_power_factor(w.view(), k).has_value();
}

}  // namespace antipower

#endif  // ANTIPOWER_DETECTORS_HPP

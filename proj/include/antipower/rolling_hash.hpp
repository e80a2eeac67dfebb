#ifndef ANTIPOWER_ROLLING_HASH_HPP
#define ANTIPOWER_ROLLING_HASH_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "antipower/word.hpp"

namespace antipower {

/// Pair of polynomial hashes modulo two 61-bit primes.
struct Fingerprint {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

/// Moduli and bases of the two hash lanes. Moduli must be below 2^63.
struct HashParams {
  std::uint64_t modulus_lo = (std::uint64_t{1} << 61) - 1;
  std::uint64_t modulus_hi = 2305843009213693921ULL;  // largest prime below 2^61 - 1
  std::uint64_t base_lo = 1'000'003;
  std::uint64_t base_hi = 911'382'323;
};

/// O(1) fingerprints of arbitrary factors of a fixed text after O(n) setup.
/// Equal fingerprints are only a hint: same_factor() always confirms by
/// direct comparison.
class FactorHasher {
public:
  explicit FactorHasher(std::span<const Symbol> text, HashParams params = {});

  /// Fingerprint of text[offset, offset + len).
  Fingerprint fingerprint(std::size_t offset, std::size_t len) const noexcept;

  /// Fingerprints of every factor of length len, indexed by offset.
  std::vector<Fingerprint> fingerprints_of_length(std::size_t len) const;

  /// Exact equality of text[a, a + len) and text[b, b + len).
  bool same_factor(std::size_t a, std::size_t b, std::size_t len) const noexcept;

  /// True iff the k factors text[start + j*len, start + (j+1)*len) are
  /// pairwise distinct. Every fingerprint match is confirmed exactly.
  bool blocks_distinct(std::size_t start, std::size_t len, std::size_t k) const;

  /// True iff the k blocks are all equal.
  bool blocks_equal(std::size_t start, std::size_t len, std::size_t k) const noexcept;

  std::size_t size() const noexcept { return text_.size(); }
  std::span<const Symbol> text() const noexcept { return text_; }

private:
  std::span<const Symbol> text_;
  HashParams params_;
  std::vector<std::uint64_t> prefix_lo_, prefix_hi_;
  std::vector<std::uint64_t> power_lo_, power_hi_;
};

}  // namespace antipower

#endif  // ANTIPOWER_ROLLING_HASH_HPP

#ifndef ANTIPOWER_EXTENSION_HPP
#define ANTIPOWER_EXTENSION_HPP

#include <cstddef>
#include <cstdint>

#include "antipower/word.hpp"

namespace antipower {

/// Outcome of extending a seed to the right while avoiding k-anti-powers.
struct ExtensionResult {
  /// True if every branch died; false if some extension reached depth_cap.
  bool exhausted = false;
  /// exhausted: the depth by which every branch has died (0 when the seed
  /// already contains a k-anti-power). open: the depth cap.
  std::size_t depth = 0;
  /// A longest surviving extension (the seed itself when depth is 0 or 1).
  Word longest;
  std::uint64_t nodes = 0;
};

/// Depth-first search over right extensions of w by single letters. A
/// branch dies as soon as a suffix ending at the new letter is a
/// k-anti-power. Branches are explored in increasing letter order.
ExtensionResult max_avoiding_extension(const Word& w, std::size_t k, unsigned alphabet_size,
                                       std::size_t depth_cap);

}  // namespace antipower

#endif  // ANTIPOWER_EXTENSION_HPP

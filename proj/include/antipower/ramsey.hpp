#ifndef ANTIPOWER_RAMSEY_HPP
#define ANTIPOWER_RAMSEY_HPP

#include <cstddef>
#include <cstdint>

#include "antipower/word.hpp"

namespace antipower {

struct SearchParams {
  std::size_t l = 2;  // power order
  std::size_t k = 2;  // anti-power order
  unsigned alphabet_size = 2;
  std::size_t length_cap = 64;
  /// Words of this length are the roots of independent subtrees.
  std::size_t parallel_depth = 8;
  /// Worker threads; 1 runs the whole search on the calling thread.
  unsigned threads = 1;

  void validate() const;
};

enum class SearchStatus { Exact, LowerBoundOnly };

/// Exact: N(l, k) == bound. LowerBoundOnly: N(l, k) > bound, certified by
/// a word of length bound that avoids both patterns.
struct SearchOutcome {
  SearchParams params;
  SearchStatus status = SearchStatus::Exact;
  std::size_t bound = 0;
  /// Lexicographically least among the longest words reached.
  Word max_avoiding_word;
  std::uint64_t nodes_explored = 0;
};

/// Depth-first search over words whose letters first appear in increasing
/// order (one representative per renaming class). A node dies when a suffix
/// ending at its last letter is an l-power or a k-anti-power. The final
/// witness is re-checked by full direct scans; a failed re-check throws
/// std::logic_error.
SearchOutcome compute_n(const SearchParams& params);

/// (0^{k-1} 1)^{k-2} 0^{k-2} 1 0^{k-1}, of length k^2 - 2, which contains
/// neither a k-power nor a k-anti-power. k >= 3.
Word lower_bound_witness(std::size_t k);

/// k^3 C(k, 2). k >= 2.
std::uint64_t theoretical_upper_bound(std::uint64_t k);

}  // namespace antipower

#endif  // ANTIPOWER_RAMSEY_HPP

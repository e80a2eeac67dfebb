#include "antipower/extension.hpp"

#include <stdexcept>
#include <vector>

#include "antipower/detectors.hpp"

namespace antipower {
namespace {

struct Search {
  std::size_t k;
  unsigned alphabet;
  std::size_t seed_length;
  std::size_t depth_cap;
  std::vector<Symbol> buffer;
  std::vector<Symbol> best;
  std::size_t best_depth = 0;
  std::uint64_t nodes = 0;

  // Returns true once some branch reaches the cap.
  bool extend(std::size_t depth) {
    ++nodes;
    if (depth > best_depth) {
      best_depth = depth;
      best = buffer;
    }
    if (depth == depth_cap) return true;
    for (unsigned a = 0; a < alphabet; ++a) {
      buffer.push_back(static_cast<Symbol>(a));
      bool reached = !has_anti_power_suffix(buffer, k) && extend(depth + 1);
      buffer.pop_back();
      if (reached) return true;
    }
    return false;
  }
};

}  // namespace

ExtensionResult max_avoiding_extension(const Word& w, std::size_t k, unsigned alphabet_size,
                                       std::size_t depth_cap) {
  if (k < 2) throw std::invalid_argument("order k must be >= 2");
  if (alphabet_size < 2 || alphabet_size > kMaxAlphabet)
    throw std::invalid_argument("alphabet size must be in [2, 256]");
  for (Symbol s : w)
    if (s >= alphabet_size) throw std::invalid_argument("seed uses a letter outside the alphabet");

  ExtensionResult out;
  if (contains_anti_power_factor(w, k)) {
    out.exhausted = true;
    out.depth = 0;
    out.longest = w;
    return out;
  }
  Search search{k, alphabet_size, w.size(), depth_cap, w.symbols(), w.symbols()};
  bool reached = search.extend(0);
  out.exhausted = !reached;
  out.depth = reached ? depth_cap : search.best_depth + 1;
  out.longest = Word(std::move(search.best), alphabet_size);
  out.nodes = search.nodes;
  return out;
}

}  // namespace antipower

#include "antipower/borders.hpp"

#include <algorithm>
#include <string>

namespace antipower {

std::vector<std::size_t> longest_border_array(const Word& w) {
  if (w.empty()) throw std::invalid_argument("border array of the empty word");
  std::vector<std::size_t> table(w.size(), 0);
  std::size_t b = 0;
  for (std::size_t p = 1; p < w.size(); ++p) {
    while (b > 0 && w[p] != w[b]) b = table[b - 1];
    if (w[p] == w[b]) ++b;
    table[p] = b;
  }
  return table;
}

std::vector<std::size_t> border_lengths(const Word& w) {
  if (w.empty()) return {};
  auto table = longest_border_array(w);
  std::vector<std::size_t> out;
  for (std::size_t b = table.back(); b > 0; b = table[b - 1]) out.push_back(b);
  out.push_back(0);
  return out;
}

std::variant<Word, LengthDeficit> root_power_from_border(const Word& w, std::size_t border_len,
                                                         std::size_t l) {
  if (border_len >= w.size())
    throw InvalidBorderError("border length " + std::to_string(border_len) +
                             " is not shorter than the word (" + std::to_string(w.size()) + ")");
  auto suffix_start = w.begin() + static_cast<std::ptrdiff_t>(w.size() - border_len);
  if (!std::equal(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(border_len), suffix_start))
    throw InvalidBorderError("prefix of length " + std::to_string(border_len) +
                             " is not a suffix");
  std::size_t root = w.size() - border_len;
  if (w.size() < l * root) return LengthDeficit{w.size(), root, l};
  return w.slice(0, root);
}

}  // namespace antipower

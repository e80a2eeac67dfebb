#ifndef ANTIPOWER_BORDERS_HPP
#define ANTIPOWER_BORDERS_HPP

#include <cstddef>
#include <stdexcept>
#include <variant>
#include <vector>

#include "antipower/word.hpp"

namespace antipower {

/// Entry p - 1 is the length of the longest border of the prefix of length
/// p (the classical failure function). Iterating b -> table[b - 1] from
/// table.back() lists every border of w, longest first.
std::vector<std::size_t> longest_border_array(const Word& w);

/// All border lengths of w, longest first, ending with 0.
std::vector<std::size_t> border_lengths(const Word& w);

class InvalidBorderError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Refusal from root_power_from_border: |w| < l * |u|.
struct LengthDeficit {
  std::size_t word_length = 0;
  std::size_t root_length = 0;
  std::size_t exponent = 0;
  /// l * |u| - |w|
  std::size_t deficit() const noexcept { return exponent * root_length - word_length; }
};

/// Let v be the border of w of length border_len and w = u v. If
/// |w| >= l |u| then u^l is a prefix of w and u is returned; otherwise the
/// shortfall is reported. Throws InvalidBorderError if the prefix of
/// length border_len is not also a suffix, or border_len >= |w|.
std::variant<Word, LengthDeficit> root_power_from_border(const Word& w, std::size_t border_len,
                                                         std::size_t l);

}  // namespace antipower

#endif  // ANTIPOWER_BORDERS_HPP

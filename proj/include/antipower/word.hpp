#ifndef ANTIPOWER_WORD_HPP
#define ANTIPOWER_WORD_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace antipower {

/// A letter, stored as its 0-based index in the alphabet.
using Symbol = std::uint8_t;

/// Largest alphabet that has a single-character ASCII rendering (0-9, a-z).
inline constexpr unsigned kMaxAsciiAlphabet = 36;

/// Largest alphabet representable by Symbol.
inline constexpr unsigned kMaxAlphabet = 256;

/// A finite word over {0, ..., alphabet_size - 1}. The empty word is valid.
class Word {
public:
  Word() = default;
  Word(std::vector<Symbol> symbols, unsigned alphabet_size);
  Word(std::initializer_list<Symbol> symbols, unsigned alphabet_size);

  /// Parses an ASCII literal. A literal made only of digits maps '0'..'9'
  /// to 0..9; one made only of lowercase letters maps 'a'..'z' to 0..25;
  /// a mixed literal uses the 36-letter rendering alphabet (0-9 then a-z).
  /// The alphabet is the smallest one containing every letter (at least 2).
  static Word parse(std::string_view text);

  /// Parses with an explicit alphabet size, using the rendering alphabet.
  static Word parse(std::string_view text, unsigned alphabet_size);

  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  unsigned alphabet_size() const noexcept { return alphabet_size_; }

  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  std::span<const Symbol> view() const noexcept { return symbols_; }
  const std::vector<Symbol>& symbols() const noexcept { return symbols_; }

  auto begin() const noexcept { return symbols_.begin(); }
  auto end() const noexcept { return symbols_.end(); }

  /// The factor of length len starting at the 0-based offset.
  Word slice(std::size_t offset, std::size_t len) const;

  /// Digits 0-9 then letters a-z; alphabets above 36 cannot be rendered.
  std::string to_string() const;

  friend bool operator==(const Word& a, const Word& b) noexcept {
    return a.symbols_ == b.symbols_;
  }
  friend auto operator<=>(const Word& a, const Word& b) noexcept {
    return a.symbols_ <=> b.symbols_;
  }

private:
  std::vector<Symbol> symbols_;
  unsigned alphabet_size_ = 2;
};

/// The word u^count.
Word repeat(const Word& u, std::size_t count);

/// Concatenation; the result uses the larger of the two alphabets.
Word concat(const Word& a, const Word& b);

char render_symbol(Symbol s);

}  // namespace antipower

#endif  // ANTIPOWER_WORD_HPP

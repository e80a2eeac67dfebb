#include "antipower/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace antipower {
namespace {

void check_alphabet(unsigned alphabet_size) {
  if (alphabet_size == 0 || alphabet_size > kMaxAlphabet)
    throw std::invalid_argument("alphabet size must be in [1, 256], got " +
                                std::to_string(alphabet_size));
}

int ascii_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'z') return 10 + (c - 'a');
  return -1;
}

}  // namespace

Word::Word(std::vector<Symbol> symbols, unsigned alphabet_size)
    : symbols_(std::move(symbols)), alphabet_size_(alphabet_size) {
  check_alphabet(alphabet_size_);
  for (Symbol s : symbols_) {
    if (s >= alphabet_size_)
      throw std::invalid_argument("symbol " + std::to_string(s) +
                                  " outside alphabet of size " +
                                  std::to_string(alphabet_size_));
  }
}

Word::Word(std::initializer_list<Symbol> symbols, unsigned alphabet_size)
    : Word(std::vector<Symbol>(symbols), alphabet_size) {}

Word Word::parse(std::string_view text) {
  bool digits = std::all_of(text.begin(), text.end(),
                            [](char c) { return c >= '0' && c <= '9'; });
  bool letters = std::all_of(text.begin(), text.end(),
                             [](char c) { return c >= 'a' && c <= 'z'; });
  std::vector<Symbol> symbols;
  symbols.reserve(text.size());
  for (char c : text) {
    int v = ascii_value(c);
    if (v < 0)
      throw std::invalid_argument(std::string("invalid letter '") + c + "' in literal");
    if (letters && !digits) v -= 10;
    symbols.push_back(static_cast<Symbol>(v));
  }
  unsigned alphabet = 2;
  for (Symbol s : symbols) alphabet = std::max(alphabet, unsigned{s} + 1);
  return Word(std::move(symbols), alphabet);
}

Word Word::parse(std::string_view text, unsigned alphabet_size) {
  std::vector<Symbol> symbols;
  symbols.reserve(text.size());
  for (char c : text) {
    int v = ascii_value(c);
    if (v < 0)
      throw std::invalid_argument(std::string("invalid letter '") + c + "' in literal");
    symbols.push_back(static_cast<Symbol>(v));
  }
  return Word(std::move(symbols), alphabet_size);
}

Word Word::slice(std::size_t offset, std::size_t len) const {
  if (offset > size() || len > size() - offset)
    throw std::out_of_range("slice outside word");
  Word out;
  out.alphabet_size_ = alphabet_size_;
  out.symbols_.assign(symbols_.begin() + static_cast<std::ptrdiff_t>(offset),
                      symbols_.begin() + static_cast<std::ptrdiff_t>(offset + len));
  return out;
}

std::string Word::to_string() const {
  if (alphabet_size_ > kMaxAsciiAlphabet)
    throw std::domain_error("alphabet too large for ASCII rendering");
  std::string out;
  out.reserve(symbols_.size());
  for (Symbol s : symbols_) out.push_back(render_symbol(s));
  return out;
}

char render_symbol(Symbol s) {
  return s < 10 ? static_cast<char>('0' + s) : static_cast<char>('a' + (s - 10));
}

Word repeat(const Word& u, std::size_t count) {
  std::vector<Symbol> out;
  out.reserve(u.size() * count);
  for (std::size_t i = 0; i < count; ++i)
    out.insert(out.end(), u.begin(), u.end());
  return Word(std::move(out), u.alphabet_size());
}

Word concat(const Word& a, const Word& b) {
  std::vector<Symbol> out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return Word(std::move(out), std::max(a.alphabet_size(), b.alphabet_size()));
}

}  // namespace antipower

#ifndef ANTIPOWER_GENERATORS_HPP
#define ANTIPOWER_GENERATORS_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "antipower/word.hpp"

namespace antipower {

/// Default bound on the number of symbols a single prefix() call may produce.
inline constexpr std::size_t kDefaultMaterializationCap = 10'000'000;

/// Raised when a request would materialize more symbols than the cap allows.
class ResourceLimitError : public std::runtime_error {
public:
  ResourceLimitError(std::size_t requested, std::size_t cap);
  std::size_t requested() const noexcept { return requested_; }
  std::size_t cap() const noexcept { return cap_; }

private:
  std::size_t requested_;
  std::size_t cap_;
};

/// Positions of the 1s in the sparse avoider: first * growth^(i-1), i >= 1.
/// growth >= 5 keeps consecutive positions at least a factor 5 apart.
class GeneratorConfig {
public:
  GeneratorConfig() = default;
  GeneratorConfig(std::uint64_t first, std::uint64_t growth);

  std::uint64_t first() const noexcept { return first_; }
  std::uint64_t growth() const noexcept { return growth_; }

  /// The i-th position (1-based), or 0 if it overflows 64 bits.
  std::uint64_t alpha(unsigned i) const noexcept;

  /// True iff n equals some alpha(i). O(log n).
  bool contains(std::uint64_t n) const noexcept;

private:
  std::uint64_t first_ = 1;
  std::uint64_t growth_ = 5;
};

namespace gen {
struct ThueMorse {};
struct Fibonacci {};
struct Periodic { Word seed; };
struct SparseAvoider { GeneratorConfig config; };
struct RecurrentAvoider {};
/// prefix followed by tail repeated forever.
struct Literal { Word prefix; Word tail; };
}  // namespace gen

using Generator = std::variant<gen::ThueMorse, gen::Fibonacci, gen::Periodic,
                               gen::SparseAvoider, gen::RecurrentAvoider, gen::Literal>;

/// An infinite word given by a pure symbol function. Positions are 1-based.
class InfiniteWord {
public:
  explicit InfiniteWord(Generator generator);

  static InfiniteWord thue_morse() { return InfiniteWord(gen::ThueMorse{}); }
  static InfiniteWord fibonacci() { return InfiniteWord(gen::Fibonacci{}); }
  static InfiniteWord periodic(Word seed) { return InfiniteWord(gen::Periodic{std::move(seed)}); }
  static InfiniteWord sparse_avoider(GeneratorConfig cfg = {}) {
    return InfiniteWord(gen::SparseAvoider{cfg});
  }
  static InfiniteWord recurrent_avoider() { return InfiniteWord(gen::RecurrentAvoider{}); }
  static InfiniteWord ultimately_periodic(Word prefix, Word tail) {
    return InfiniteWord(gen::Literal{std::move(prefix), std::move(tail)});
  }

  /// Parses a generator name: thue-morse, fibonacci, periodic:<seed>,
  /// sparse-avoider[:<first>:<growth>], recurrent-avoider,
  /// ultimately-periodic:<prefix>:<tail>. Throws std::invalid_argument.
  static InfiniteWord parse(std::string_view spec);

  Symbol symbol_at(std::uint64_t position) const;
  unsigned alphabet_size() const noexcept { return alphabet_size_; }
  const Generator& generator() const noexcept { return generator_; }

  /// Canonical name, accepted back by parse().
  std::string name() const;

private:
  Generator generator_;
  unsigned alphabet_size_;
};

/// The first n symbols of x. Throws ResourceLimitError when n > cap.
Word prefix(const InfiniteWord& x, std::size_t n,
            std::size_t cap = kDefaultMaterializationCap);

Word thue_morse_prefix(std::size_t n);
Word fibonacci_prefix(std::size_t n);
Symbol thue_morse_symbol(std::uint64_t position);
Symbol fibonacci_symbol(std::uint64_t position);
Symbol sparse_avoider_symbol(std::uint64_t position, const GeneratorConfig& cfg = {});
Symbol recurrent_avoider_symbol(std::uint64_t position);

}  // namespace antipower

#endif  // ANTIPOWER_GENERATORS_HPP

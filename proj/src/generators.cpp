#include "antipower/generators.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <limits>

namespace antipower {

ResourceLimitError::ResourceLimitError(std::size_t requested, std::size_t cap)
    : std::runtime_error("materialization of " + std::to_string(requested) +
                         " symbols exceeds cap " + std::to_string(cap)),
      requested_(requested),
      cap_(cap) {}

GeneratorConfig::GeneratorConfig(std::uint64_t first, std::uint64_t growth)
    : first_(first), growth_(growth) {
  if (first_ < 1) throw std::invalid_argument("sparse avoider: first position must be >= 1");
  if (growth_ < 5) throw std::invalid_argument("sparse avoider: growth factor must be >= 5");
}

std::uint64_t GeneratorConfig::alpha(unsigned i) const noexcept {
  if (i == 0) return 0;
  std::uint64_t a = first_;
  for (unsigned step = 1; step < i; ++step) {
    if (a > std::numeric_limits<std::uint64_t>::max() / growth_) return 0;
    a *= growth_;
  }
  return a;
}

bool GeneratorConfig::contains(std::uint64_t n) const noexcept {
  if (n < first_ || n % first_ != 0) return false;
  std::uint64_t q = n / first_;
  while (q % growth_ == 0) q /= growth_;
  return q == 1;
}

Symbol thue_morse_symbol(std::uint64_t position) {
  return static_cast<Symbol>(std::popcount(position - 1) & 1);
}

// The letter at 0-based index i is 1 iff the Zeckendorf representation of i
// uses the term 1.
Symbol fibonacci_symbol(std::uint64_t position) {
  static const auto fibs = [] {
    std::array<std::uint64_t, 92> f{};
    f[0] = 1;
    f[1] = 2;
    for (std::size_t i = 2; i < f.size(); ++i) f[i] = f[i - 1] + f[i - 2];
    return f;
  }();
  std::uint64_t i = position - 1;
  std::uint64_t last = 0;
  for (auto it = fibs.rbegin(); it != fibs.rend() && i > 0; ++it) {
    if (*it <= i) {
      i -= *it;
      last = *it;
    }
  }
  return last == 1 ? 1 : 0;
}

Symbol sparse_avoider_symbol(std::uint64_t position, const GeneratorConfig& cfg) {
  return cfg.contains(position) ? 1 : 0;
}

// w_0 = 0, w_n = w_{n-1} 1^{3|w_{n-1}|} w_{n-1}, so |w_n| = 5^n.
Symbol recurrent_avoider_symbol(std::uint64_t position) {
  std::uint64_t i = position - 1;
  // Smallest m with i < 5^m; 128 bits since 5^28 exceeds 64.
  unsigned __int128 size = 1;
  while (i >= size) size *= 5;
  while (size > 1) {
    unsigned __int128 sub = size / 5;
    if (i >= sub) {
      if (i < 4 * sub) return 1;
      i -= static_cast<std::uint64_t>(4 * sub);
    }
    size = sub;
  }
  return 0;
}

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

unsigned alphabet_of(const Generator& g) {
  return std::visit(
      overloaded{
          [](const gen::Periodic& p) { return p.seed.alphabet_size(); },
          [](const gen::Literal& l) {
            return std::max(l.prefix.alphabet_size(), l.tail.alphabet_size());
          },
          [](const auto&) { return 2u; },
      },
      g);
}

std::uint64_t parse_u64(std::string_view text, std::string_view what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw std::invalid_argument("invalid " + std::string(what) + ": '" + std::string(text) + "'");
  return v;
}

}  // namespace

InfiniteWord::InfiniteWord(Generator generator)
    : generator_(std::move(generator)), alphabet_size_(alphabet_of(generator_)) {
  if (auto* p = std::get_if<gen::Periodic>(&generator_); p && p->seed.empty())
    throw std::invalid_argument("periodic word needs a non-empty seed");
  if (auto* l = std::get_if<gen::Literal>(&generator_); l && l->tail.empty())
    throw std::invalid_argument("ultimately periodic word needs a non-empty tail");
}

InfiniteWord InfiniteWord::parse(std::string_view spec) {
  auto colon = spec.find(':');
  std::string_view head = spec.substr(0, colon);
  std::string_view rest = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);
  bool has_args = colon != std::string_view::npos;

  if (head == "thue-morse" && !has_args) return thue_morse();
  if (head == "fibonacci" && !has_args) return fibonacci();
  if (head == "recurrent-avoider" && !has_args) return recurrent_avoider();
  if (head == "periodic" && has_args) return periodic(Word::parse(rest));
  if (head == "sparse-avoider") {
    if (!has_args) return sparse_avoider();
    auto sep = rest.find(':');
    if (sep == std::string_view::npos)
      throw std::invalid_argument("sparse-avoider expects <first>:<growth>");
    return sparse_avoider(GeneratorConfig(parse_u64(rest.substr(0, sep), "first position"),
                                          parse_u64(rest.substr(sep + 1), "growth factor")));
  }
  if (head == "ultimately-periodic" && has_args) {
    auto sep = rest.find(':');
    if (sep == std::string_view::npos)
      throw std::invalid_argument("ultimately-periodic expects <prefix>:<tail>");
    Word pre = Word::parse(rest.substr(0, sep));
    Word tail = Word::parse(rest.substr(sep + 1));
    unsigned alphabet = std::max(pre.alphabet_size(), tail.alphabet_size());
    return ultimately_periodic(Word(pre.symbols(), alphabet), Word(tail.symbols(), alphabet));
  }
  throw std::invalid_argument("unknown generator '" + std::string(spec) + "'");
}

Symbol InfiniteWord::symbol_at(std::uint64_t position) const {
  if (position == 0) throw std::out_of_range("positions are 1-based");
  return std::visit(
      overloaded{
          [&](const gen::ThueMorse&) { return thue_morse_symbol(position); },
          [&](const gen::Fibonacci&) { return fibonacci_symbol(position); },
          [&](const gen::Periodic& p) { return p.seed[(position - 1) % p.seed.size()]; },
          [&](const gen::SparseAvoider& s) { return sparse_avoider_symbol(position, s.config); },
          [&](const gen::RecurrentAvoider&) { return recurrent_avoider_symbol(position); },
          [&](const gen::Literal& l) {
            if (position <= l.prefix.size()) return l.prefix[position - 1];
            return l.tail[(position - 1 - l.prefix.size()) % l.tail.size()];
          },
      },
      generator_);
}

std::string InfiniteWord::name() const {
  return std::visit(
      overloaded{
          [](const gen::ThueMorse&) -> std::string { return "thue-morse"; },
          [](const gen::Fibonacci&) -> std::string { return "fibonacci"; },
          [](const gen::Periodic& p) { return "periodic:" + p.seed.to_string(); },
          [](const gen::SparseAvoider& s) {
            if (s.config.first() == 1 && s.config.growth() == 5) return std::string("sparse-avoider");
            return "sparse-avoider:" + std::to_string(s.config.first()) + ":" +
                   std::to_string(s.config.growth());
          },
          [](const gen::RecurrentAvoider&) -> std::string { return "recurrent-avoider"; },
          [](const gen::Literal& l) {
            return "ultimately-periodic:" + l.prefix.to_string() + ":" + l.tail.to_string();
          },
      },
      generator_);
}

Word prefix(const InfiniteWord& x, std::size_t n, std::size_t cap) {
  if (n > cap) throw ResourceLimitError(n, cap);
  std::vector<Symbol> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = x.symbol_at(i + 1);
  return Word(std::move(out), x.alphabet_size());
}

Word thue_morse_prefix(std::size_t n) { return prefix(InfiniteWord::thue_morse(), n); }
Word fibonacci_prefix(std::size_t n) { return prefix(InfiniteWord::fibonacci(), n); }

}  // namespace antipower

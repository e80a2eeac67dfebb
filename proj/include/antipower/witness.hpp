#ifndef ANTIPOWER_WITNESS_HPP
#define ANTIPOWER_WITNESS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "antipower/generators.hpp"

namespace antipower {

/// Scan budget for the window search of extract_power_witness.
inline constexpr std::size_t kDefaultWitnessBudget = 100'000;

/// n choose 2
constexpr std::uint64_t choose2(std::uint64_t n) noexcept { return n * (n - 1) / 2; }

/// Prefix blocks U(j, r) = x[j*r + 1 .. (j+1)*r] for 0 <= j < k and every
/// radius r in [first_radius, first_radius + C(k, 2)].
class BlockGrid {
public:
  BlockGrid(const InfiniteWord& x, std::size_t k, std::size_t first_radius,
            std::size_t cap = kDefaultMaterializationCap);

  std::size_t k() const noexcept { return k_; }
  std::size_t first_radius() const noexcept { return first_; }
  std::size_t last_radius() const noexcept { return first_ + choose2(k_); }

  Word block(std::size_t j, std::size_t r) const;
  bool same_block(std::size_t i, std::size_t j, std::size_t r) const;

  /// The lexicographically first pair i < j with U(i, r) = U(j, r).
  std::optional<std::pair<std::size_t, std::size_t>> first_equal_pair(std::size_t r) const;

  /// The materialized prefix, of length k * last_radius().
  const Word& text() const noexcept { return text_; }

private:
  std::size_t k_;
  std::size_t first_;
  Word text_;
};

/// Certificate that u^l is a factor of x, built from two radii r < s
/// sharing an equal block pair (i, j).
struct WitnessEvidence {
  Word u;
  std::size_t l = 0;
  std::size_t k = 0;
  std::uint64_t max_root = 0;  // M = (k - 1) C(k, 2)
  std::size_t window_start = 0;  // m
  std::size_t r = 0, s = 0;
  std::size_t i = 0, j = 0;
  std::uint64_t position = 0;  // 1-based start of u^l in x
};

/// The other branch: every scanned window {m, ..., m + C(k, 2)} with
/// m in [first_window, last_window] contains a member of AP(x, k).
struct AntiPowerReport {
  std::size_t k = 0;
  std::size_t l = 0;
  std::size_t first_window = 0;
  std::size_t last_window = 0;
  std::vector<std::size_t> members;  // AP(x, k) in [first_window, last_window + C(k, 2)]
};

using WitnessOutcome = std::variant<WitnessEvidence, AntiPowerReport>;

class BudgetExhaustedError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Looks for m > (l + 1) M, m <= budget, with none of m .. m + C(k, 2) in
/// AP(x, k). If one exists, extracts u with 1 <= |u| <= M and u^l a factor
/// of x; every equality used is re-checked symbol by symbol. Otherwise
/// returns the anti-power prefixes that blocked each window. Throws
/// BudgetExhaustedError when the budget admits no window at all.
WitnessOutcome extract_power_witness(const InfiniteWord& x, std::size_t k, std::size_t l,
                                     std::size_t budget = kDefaultWitnessBudget,
                                     std::size_t cap = kDefaultMaterializationCap);

/// Re-derives every claim of the evidence from x directly. Returns an empty
/// string when sound, else a description of the first failed check.
std::string verify_witness(const InfiniteWord& x, const WitnessEvidence& e);

}  // namespace antipower

#endif  // ANTIPOWER_WITNESS_HPP

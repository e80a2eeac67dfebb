#ifndef ANTIPOWER_INDEX_SETS_HPP
#define ANTIPOWER_INDEX_SETS_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "antipower/generators.hpp"

namespace antipower {

enum class IndexSetKind { AntiPowerSet, PowerSet };

/// Members m <= horizon of AP(x, k) or P(x, k): the prefix of x of length
/// k*m is a k-anti-power (resp. k-power).
struct IndexSet {
  IndexSetKind kind = IndexSetKind::AntiPowerSet;
  std::string word;  // generator name of x
  std::size_t k = 1;
  std::size_t horizon = 0;
  std::vector<std::size_t> members;  // sorted, 1-based

  bool contains(std::size_t m) const;
};

IndexSet ap_set(const InfiniteWord& x, std::size_t k, std::size_t horizon,
                std::size_t cap = kDefaultMaterializationCap);
IndexSet p_set(const InfiniteWord& x, std::size_t k, std::size_t horizon,
               std::size_t cap = kDefaultMaterializationCap);

/// Least m <= limit in AP(x, k), or nullopt. The prefix is materialized
/// incrementally, so the cap only matters when the search runs past it.
std::optional<std::size_t> ap_min(const InfiniteWord& x, std::size_t k, std::size_t limit,
                                  std::size_t cap = kDefaultMaterializationCap);

/// 1-based start position and block length of a factor of x.
struct Occurrence {
  std::uint64_t position = 0;
  std::size_t block_length = 0;
  friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

/// First k-anti-power factor inside the prefix of length max_prefix,
/// ordered by (block length, position). k >= 2, max_prefix >= k.
std::optional<Occurrence> find_anti_power_factor(const InfiniteWord& x, std::size_t k,
                                                 std::size_t max_prefix,
                                                 std::size_t cap = kDefaultMaterializationCap);

/// Least block length l <= limit such that the factor of length k*l at
/// position pos is a k-anti-power. nullopt is an ordinary outcome.
std::optional<std::size_t> anti_power_at_position(const InfiniteWord& x, std::size_t k,
                                                  std::uint64_t pos, std::size_t limit,
                                                  std::size_t cap = kDefaultMaterializationCap);

/// Non-negative fraction kept in lowest terms.
class Ratio {
public:
  Ratio() = default;
  Ratio(std::uint64_t numerator, std::uint64_t denominator);
  std::uint64_t numerator() const noexcept { return num_; }
  std::uint64_t denominator() const noexcept { return den_; }
  friend bool operator==(const Ratio&, const Ratio&) = default;
  friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) noexcept;

private:
  std::uint64_t num_ = 0;
  std::uint64_t den_ = 1;
};

/// Finite surrogate for the lower density of an index set: the ratios
/// |X n {1..n}| / n for n = 1..horizon and their minimum over the tail
/// window [horizon/2, horizon]. This is an estimate, not the liminf.
struct DensityEstimate {
  std::vector<Ratio> ratios;  // ratios[n - 1] = d_n
  Ratio min_tail;
  std::size_t tail_start = 1;
};

DensityEstimate density_estimate(const IndexSet& s);

}  // namespace antipower

#endif  // ANTIPOWER_INDEX_SETS_HPP

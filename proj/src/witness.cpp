#include "antipower/witness.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <tuple>

#include "antipower/borders.hpp"
#include "antipower/rolling_hash.hpp"

namespace antipower {

BlockGrid::BlockGrid(const InfiniteWord& x, std::size_t k, std::size_t first_radius,
                     std::size_t cap)
    : k_(k), first_(first_radius) {
  if (k_ < 2) throw std::invalid_argument("block grid needs k >= 2");
  if (first_ < 1) throw std::invalid_argument("block grid radii start at 1");
  text_ = prefix(x, k_ * last_radius(), cap);
}

Word BlockGrid::block(std::size_t j, std::size_t r) const {
  return text_.slice(j * r, r);
}

bool BlockGrid::same_block(std::size_t i, std::size_t j, std::size_t r) const {
  auto base = text_.begin();
  return std::equal(base + static_cast<std::ptrdiff_t>(i * r),
                    base + static_cast<std::ptrdiff_t>((i + 1) * r),
                    base + static_cast<std::ptrdiff_t>(j * r));
}

std::optional<std::pair<std::size_t, std::size_t>> BlockGrid::first_equal_pair(std::size_t r) const {
  if (r < first_ || r > last_radius()) throw std::out_of_range("radius outside the grid");
  for (std::size_t i = 0; i < k_; ++i)
    for (std::size_t j = i + 1; j < k_; ++j)
      if (same_block(i, j, r)) return std::pair{i, j};
  return std::nullopt;
}

namespace {

struct WindowScan {
  std::optional<std::size_t> free_window;
  std::vector<std::size_t> members;
};

// Walks r = first .. last + span and finds the first run of span + 1
// consecutive radii outside AP(x, k).
WindowScan scan_windows(const InfiniteWord& x, std::size_t k, std::size_t first, std::size_t last,
                        std::size_t span, std::size_t cap) {
  WindowScan out;
  const std::size_t end = last + span;
  std::size_t run = 0;
  std::size_t done = first - 1;
  std::size_t chunk = 256;
  while (done < end) {
    std::size_t hi = std::min(end, done + chunk);
    Word text = prefix(x, k * hi, cap);
    FactorHasher hasher(text.view());
    for (std::size_t r = done + 1; r <= hi; ++r) {
      if (hasher.blocks_distinct(0, r, k)) {
        out.members.push_back(r);
        run = 0;
      } else if (++run == span + 1) {
        out.free_window = r - span;
        return out;
      }
    }
    done = hi;
    chunk *= 2;
  }
  return out;
}

void require(bool condition, const std::string& what) {
  if (!condition) throw std::logic_error("power witness invariant violated: " + what);
}

}  // namespace

WitnessOutcome extract_power_witness(const InfiniteWord& x, std::size_t k, std::size_t l,
                                     std::size_t budget, std::size_t cap) {
  if (k < 2) throw std::invalid_argument("order k must be >= 2");
  if (l < 1) throw std::invalid_argument("exponent l must be >= 1");
  const std::size_t span = choose2(k);
  const std::size_t max_root = (k - 1) * span;
  const std::size_t first_window = (l + 1) * max_root + 1;
  if (budget < first_window)
    throw BudgetExhaustedError("budget " + std::to_string(budget) +
                               " admits no window start above " + std::to_string(first_window - 1));

  WindowScan scan = scan_windows(x, k, first_window, budget, span, cap);
  if (!scan.free_window) return AntiPowerReport{k, l, first_window, budget, std::move(scan.members)};

  const std::size_t m = *scan.free_window;
  BlockGrid grid(x, k, m, cap);
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> seen;
  std::size_t r = 0, s = 0, i = 0, j = 0;
  for (std::size_t radius = m; radius <= grid.last_radius(); ++radius) {
    auto pair = grid.first_equal_pair(radius);
    require(pair.has_value(), "radius " + std::to_string(radius) + " has no equal block pair");
    auto [it, inserted] = seen.emplace(*pair, radius);
    if (!inserted) {
      r = it->second;
      s = radius;
      std::tie(i, j) = *pair;
      break;
    }
  }
  require(s > r && r >= m, "pigeonhole found no repeated pair");
  require((i + 1) * r > i * s + 1, "(i+1)r > is+1");
  require((j + 1) * r > j * s + 1, "(j+1)r > js+1");

  // w = x[is+1 .. (i+1)r], v = x[js+1 .. (j+1)r]
  const Word& text = grid.text();
  Word w = text.slice(i * s, (i + 1) * r - i * s);
  Word v = text.slice(j * s, (j + 1) * r - j * s);
  require(v.size() < w.size(), "|v| < |w|");
  require(std::equal(v.begin(), v.end(), w.begin()), "v is a prefix of w");
  require(std::equal(v.begin(), v.end(), w.end() - static_cast<std::ptrdiff_t>(v.size())),
          "v is a suffix of w");

  auto root = root_power_from_border(w, v.size(), l);
  require(std::holds_alternative<Word>(root), "|w| >= l|u|");
  Word u = std::get<Word>(std::move(root));
  require(u.size() == (j - i) * (s - r), "|u| = (j-i)(s-r)");
  require(u.size() >= 1 && u.size() <= max_root, "1 <= |u| <= M");

  WitnessEvidence e{std::move(u), l, k, max_root, m, r, s, i, j, i * s + 1};
  std::string problem = verify_witness(x, e);
  require(problem.empty(), problem);
  return e;
}

std::string verify_witness(const InfiniteWord& x, const WitnessEvidence& e) {
  const std::size_t span = choose2(e.k);
  if (e.k < 2) return "k < 2";
  if (e.max_root != (e.k - 1) * span) return "M != (k-1)C(k,2)";
  if (e.u.empty() || e.u.size() > e.max_root) return "|u| outside [1, M]";
  if (!(e.window_start <= e.r && e.r < e.s && e.s <= e.window_start + span))
    return "radii outside m <= r < s <= m + C(k,2)";
  if (!(e.i < e.j && e.j < e.k)) return "indices outside 0 <= i < j <= k-1";
  if (e.position == 0) return "position is 1-based";

  auto block_equal = [&](std::size_t radius) {
    for (std::size_t t = 0; t < radius; ++t)
      if (x.symbol_at(e.i * radius + t + 1) != x.symbol_at(e.j * radius + t + 1)) return false;
    return true;
  };
  if (!block_equal(e.r)) return "U(i,r) != U(j,r)";
  if (!block_equal(e.s)) return "U(i,s) != U(j,s)";

  for (std::size_t t = 0; t < e.l * e.u.size(); ++t)
    if (x.symbol_at(e.position + t) != e.u[t % e.u.size()])
      return "u^l does not occur at the stated position";
  return {};
}

}  // namespace antipower

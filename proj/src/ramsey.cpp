#include "antipower/ramsey.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "antipower/detectors.hpp"

namespace antipower {

void SearchParams::validate() const {
  if (l < 2) throw std::invalid_argument("power order l must be >= 2");
  if (k < 2) throw std::invalid_argument("anti-power order k must be >= 2");
  if (alphabet_size < 2 || alphabet_size > kMaxAlphabet)
    throw std::invalid_argument("alphabet size must be in [2, 256]");
  if (length_cap < 1) throw std::invalid_argument("length cap must be >= 1");
  if (threads < 1) throw std::invalid_argument("thread count must be >= 1");
}

namespace {

constexpr std::size_t kNoIndex = std::numeric_limits<std::size_t>::max();

struct SubtreeResult {
  std::vector<Symbol> best;
  bool reached_cap = false;
  std::uint64_t nodes = 0;
};

// One depth-first walk. `stop_depth` turns nodes of that length into
// frontier roots instead of descending; `frontier` collects them.
class Walker {
public:
  Walker(const SearchParams& p, std::vector<Symbol> start, unsigned letters_used,
         const std::atomic<std::size_t>* cap_owner = nullptr, std::size_t self = 0)
      : p_(p), buffer_(std::move(start)), used_(letters_used), cap_owner_(cap_owner), self_(self) {
    result_.best = buffer_;
  }

  SubtreeResult run(std::size_t stop_depth = kNoIndex,
                    std::vector<std::vector<Symbol>>* frontier = nullptr) {
    stop_depth_ = stop_depth;
    frontier_ = frontier;
    visit();
    return std::move(result_);
  }

private:
  // Returns true when the walk must end (cap reached or a lower-indexed
  // subtree already owns a cap-length word).
  bool visit() {
    ++result_.nodes;
    if (buffer_.size() > result_.best.size()) result_.best = buffer_;
    if (buffer_.size() == p_.length_cap) {
      result_.reached_cap = true;
      return true;
    }
    if (buffer_.size() == stop_depth_) {
      frontier_->push_back(buffer_);
      return false;
    }
    if (cap_owner_ && (result_.nodes & 0xfff) == 0 && cap_owner_->load(std::memory_order_relaxed) < self_)
      return true;
    const unsigned limit = std::min(p_.alphabet_size, used_ + 1);
    for (unsigned a = 0; a < limit; ++a) {
      buffer_.push_back(static_cast<Symbol>(a));
      bool end = false;
      if (!has_power_suffix(buffer_, p_.l) && !has_anti_power_suffix(buffer_, p_.k)) {
        unsigned saved = used_;
        used_ = std::max(used_, a + 1);
        end = visit();
        used_ = saved;
      }
      buffer_.pop_back();
      if (end) return true;
    }
    return false;
  }

  const SearchParams& p_;
  std::vector<Symbol> buffer_;
  unsigned used_;
  const std::atomic<std::size_t>* cap_owner_;
  std::size_t self_;
  std::size_t stop_depth_ = kNoIndex;
  std::vector<std::vector<Symbol>>* frontier_ = nullptr;
  SubtreeResult result_;
};

unsigned letters_in(const std::vector<Symbol>& w) {
  unsigned used = 0;
  for (Symbol s : w) used = std::max(used, unsigned{s} + 1);
  return used;
}

SubtreeResult search_parallel(const SearchParams& p) {
  std::vector<std::vector<Symbol>> frontier;
  SubtreeResult head = Walker(p, {}, 0).run(p.parallel_depth, &frontier);
  if (head.reached_cap || frontier.empty()) return head;

  std::vector<SubtreeResult> results(frontier.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> cap_owner{kNoIndex};
  auto work = [&] {
    for (std::size_t idx = next.fetch_add(1); idx < frontier.size(); idx = next.fetch_add(1)) {
      if (cap_owner.load() < idx) continue;
      results[idx] = Walker(p, frontier[idx], letters_in(frontier[idx]), &cap_owner, idx).run();
      if (results[idx].reached_cap) {
        std::size_t seen = cap_owner.load();
        while (idx < seen && !cap_owner.compare_exchange_weak(seen, idx)) {
        }
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < p.threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  // Subtrees are in lexicographic order, so the first maximum is the
  // lexicographically least longest word.
  SubtreeResult out;
  out.nodes = head.nodes;
  out.best = std::move(head.best);
  const std::size_t owner = cap_owner.load();
  for (std::size_t idx = 0; idx < results.size(); ++idx) {
    out.nodes += results[idx].nodes;
    if (idx > owner) continue;
    if (results[idx].best.size() > out.best.size()) out.best = results[idx].best;
  }
  out.reached_cap = owner != kNoIndex;
  if (out.reached_cap) out.best = results[owner].best;
  return out;
}

}  // namespace

SearchOutcome compute_n(const SearchParams& params) {
  params.validate();
  SubtreeResult r = params.threads > 1 && params.parallel_depth < params.length_cap
                        ? search_parallel(params)
                        : Walker(params, {}, 0).run();

  SearchOutcome out;
  out.params = params;
  out.nodes_explored = r.nodes;
  out.status = r.reached_cap ? SearchStatus::LowerBoundOnly : SearchStatus::Exact;
  out.bound = r.reached_cap ? r.best.size() : r.best.size() + 1;
  out.max_avoiding_word = Word(std::move(r.best), params.alphabet_size);

  if (contains_power_factor(out.max_avoiding_word, params.l) ||
      contains_anti_power_factor(out.max_avoiding_word, params.k))
    throw std::logic_error("search witness " + out.max_avoiding_word.to_string() +
                           " failed the full re-check");
  return out;
}

Word lower_bound_witness(std::size_t k) {
  if (k < 3) throw std::invalid_argument("lower bound witness needs k >= 3");
  std::vector<Symbol> w;
  w.reserve(k * k - 2);
  for (std::size_t rep = 0; rep + 2 < k; ++rep) {
    w.insert(w.end(), k - 1, 0);
    w.push_back(1);
  }
  w.insert(w.end(), k - 2, 0);
  w.push_back(1);
  w.insert(w.end(), k - 1, 0);
  return Word(std::move(w), 2);
}

std::uint64_t theoretical_upper_bound(std::uint64_t k) {
  if (k < 2) throw std::invalid_argument("upper bound needs k >= 2");
  return k * k * k * (k * (k - 1) / 2);
}

}  // namespace antipower

#include "ordcover/oracle.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "ordcover/error.hpp"

namespace ordcover {

namespace oracle {

PairCounts cover_count_exact(std::span<const Block> blocks, std::uint32_t n) {
  PairCounts counts(n);
  std::vector<std::uint32_t> distinct;
  for (const Block& block : blocks) {
    distinct.assign(block.begin(), block.end());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (std::uint32_t label : distinct) {
      if (label < 1 || label > n) {
        throw Error(ErrorCode::InvalidRange,
                    "label " + std::to_string(label) + " outside 1.." + std::to_string(n));
      }
    }
    for (std::size_t i = 0; i < distinct.size(); ++i) {
      for (std::size_t j = i + 1; j < distinct.size(); ++j) counts.increment(distinct[i], distinct[j]);
    }
  }
  return counts;
}

std::string_view to_string(Limit limit) noexcept {
  switch (limit) {
    case Limit::MaxBlocks: return "max_blocks";
    case Limit::TimeLimit: return "time_limit";
    case Limit::NodeLimit: return "node_limit";
  }
  return "unknown";
}

namespace {

using PointMask = std::uint32_t;
using PairMask = std::uint64_t;

struct BudgetExhausted {
  Limit limit;
};

// Precomputed tables for one (n, k).
class Instance {
 public:
  Instance(std::uint32_t n, std::uint32_t k) : n_(n), k_(k) {
    pair_of_points_.assign(n * n, 0);
    point_pairs_.assign(n, 0);
    std::uint32_t index = 0;
    for (std::uint32_t a = 0; a < n; ++a) {
      for (std::uint32_t b = a + 1; b < n; ++b, ++index) {
        pair_of_points_[a * n + b] = index;
        pair_of_points_[b * n + a] = index;
        pairs_.push_back({a, b});
        point_pairs_[a] |= PairMask{1} << index;
        point_pairs_[b] |= PairMask{1} << index;
      }
    }
    all_pairs_ = index == 64 ? ~PairMask{0} : (PairMask{1} << index) - 1;

    std::vector<std::uint32_t> current;
    enumerate_subsets(0, current);

    candidates_.resize(pairs_.size());
    for (std::size_t s = 0; s < subsets_.size(); ++s) {
      PairMask covered = subset_pairs_[s];
      while (covered) {
        candidates_[std::countr_zero(covered)].push_back(static_cast<std::uint32_t>(s));
        covered &= covered - 1;
      }
    }
  }

  std::uint32_t n() const { return n_; }
  std::uint32_t k() const { return k_; }
  PairMask all_pairs() const { return all_pairs_; }
  PointMask all_points() const { return (PointMask{1} << n_) - 1; }
  const std::vector<PointMask>& subsets() const { return subsets_; }
  const std::vector<PairMask>& subset_pairs() const { return subset_pairs_; }
  const std::vector<std::uint32_t>& candidates(std::uint32_t pair) const { return candidates_[pair]; }
  std::pair<std::uint32_t, std::uint32_t> pair(std::uint32_t index) const { return pairs_[index]; }

  // Any completion needs at least this many more blocks.
  std::uint64_t lower_bound(PairMask uncovered) const {
    if (uncovered == 0) return 0;
    const std::uint64_t per_block = static_cast<std::uint64_t>(k_) * (k_ - 1) / 2;
    std::uint64_t bound = (std::popcount(uncovered) + per_block - 1) / per_block;
    std::uint64_t incidences = 0;
    for (std::uint32_t x = 0; x < n_; ++x) {
      const std::uint64_t open = std::popcount(uncovered & point_pairs_[x]);
      const std::uint64_t need = (open + k_ - 2) / (k_ - 1);
      bound = std::max(bound, need);
      incidences += need;
    }
    return std::max(bound, (incidences + k_ - 1) / k_);
  }

  Block to_block(PointMask mask) const {
    Block block;
    for (std::uint32_t x = 0; x < n_; ++x) {
      if (mask & (PointMask{1} << x)) block.push_back(x + 1);
    }
    return block;
  }

 private:
  void enumerate_subsets(std::uint32_t start, std::vector<std::uint32_t>& current) {
    if (current.size() == k_) {
      PointMask mask = 0;
      PairMask covered = 0;
      for (std::size_t i = 0; i < current.size(); ++i) {
        mask |= PointMask{1} << current[i];
        for (std::size_t j = i + 1; j < current.size(); ++j) {
          covered |= PairMask{1} << pair_of_points_[current[i] * n_ + current[j]];
        }
      }
      subsets_.push_back(mask);
      subset_pairs_.push_back(covered);
      return;
    }
    for (std::uint32_t x = start; x < n_; ++x) {
      current.push_back(x);
      enumerate_subsets(x + 1, current);
      current.pop_back();
    }
  }

  std::uint32_t n_;
  std::uint32_t k_;
  PairMask all_pairs_ = 0;
  std::vector<std::uint32_t> pair_of_points_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs_;
  std::vector<PairMask> point_pairs_;
  std::vector<PointMask> subsets_;  // lexicographic order
  std::vector<PairMask> subset_pairs_;
  std::vector<std::vector<std::uint32_t>> candidates_;
};

PointMask lowest_bits(PointMask mask, int count) {
  PointMask out = 0;
  for (int i = 0; i < count && mask; ++i) {
    out |= mask & (~mask + 1);
    mask &= mask - 1;
  }
  return out;
}

class DepthSearch {
 public:
  DepthSearch(const Instance& inst, const SearchBudget& budget,
              std::chrono::steady_clock::time_point deadline, std::uint64_t& nodes)
      : inst_(inst), budget_(budget), deadline_(deadline), nodes_(nodes) {}

  // Throws BudgetExhausted when a limit fires.
  bool run(std::uint64_t depth) {
    chosen_.clear();
    return descend(inst_.all_pairs(), 0, depth);
  }

  const std::vector<std::uint32_t>& chosen() const { return chosen_; }

 private:
  bool descend(PairMask uncovered, PointMask touched, std::uint64_t depth_left) {
    if (++nodes_ > budget_.node_limit) throw BudgetExhausted{Limit::NodeLimit};
    if ((nodes_ & 0xFFF) == 0 && std::chrono::steady_clock::now() > deadline_) {
      throw BudgetExhausted{Limit::TimeLimit};
    }
    if (uncovered == 0) return true;
    if (inst_.lower_bound(uncovered) > depth_left) return false;

    const auto pair_index = static_cast<std::uint32_t>(std::countr_zero(uncovered));
    const auto [a, b] = inst_.pair(pair_index);
    const PointMask unused =
        inst_.all_points() & ~touched & ~((PointMask{1} << a) | (PointMask{1} << b));

    for (std::uint32_t s : inst_.candidates(pair_index)) {
      const PointMask block = inst_.subsets()[s];
      const PointMask fresh = block & unused;
      if (fresh != lowest_bits(unused, std::popcount(fresh))) continue;
      chosen_.push_back(s);
      if (descend(uncovered & ~inst_.subset_pairs()[s], touched | block, depth_left - 1)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  const Instance& inst_;
  const SearchBudget& budget_;
  std::chrono::steady_clock::time_point deadline_;
  std::uint64_t& nodes_;
  std::vector<std::uint32_t> chosen_;
};

void check_instance(std::uint32_t n, std::uint32_t k, std::uint32_t max_points) {
  const std::uint32_t threshold = std::min(max_points, kHardMaxPoints);
  if (n > threshold) {
    throw Error(ErrorCode::TooLarge, "n = " + std::to_string(n) + " exceeds the search threshold " +
                                         std::to_string(threshold));
  }
  if (k < 2 || k >= n) {
    throw Error(ErrorCode::InvalidRange, "need 2 <= k < n, got n = " + std::to_string(n) +
                                             ", k = " + std::to_string(k));
  }
}

Cover greedy_from(const Instance& inst) {
  Cover cover;
  PairMask uncovered = inst.all_pairs();
  while (uncovered) {
    std::size_t best = 0;
    int best_gain = -1;
    for (std::size_t s = 0; s < inst.subsets().size(); ++s) {
      const int gain = std::popcount(uncovered & inst.subset_pairs()[s]);
      if (gain > best_gain) {
        best_gain = gain;
        best = s;
      }
    }
    uncovered &= ~inst.subset_pairs()[best];
    cover.blocks.push_back(inst.to_block(inst.subsets()[best]));
  }
  return cover;
}

}  // namespace

Cover greedy_cover(std::uint32_t n, std::uint32_t k) {
  check_instance(n, k, kHardMaxPoints);
  return greedy_from(Instance(n, k));
}

SearchOutcome min_cover_exact(std::uint32_t n, std::uint32_t k, const SearchBudget& budget) {
  check_instance(n, k, budget.max_points);
  const Instance inst(n, k);
  const auto deadline = std::chrono::steady_clock::now() + budget.time_limit;
  const std::uint64_t max_blocks =
      budget.max_blocks == 0 ? static_cast<std::uint64_t>(n) * (n - 1) / 2 : budget.max_blocks;

  SearchOutcome outcome;
  Cover greedy = greedy_from(inst);
  outcome.best_found = greedy;
  outcome.proven_lower = inst.lower_bound(inst.all_pairs());

  const std::uint64_t last_depth = std::min<std::uint64_t>(greedy.size() - 1, max_blocks);
  DepthSearch search(inst, budget, deadline, outcome.nodes);
  try {
    for (std::uint64_t depth = outcome.proven_lower; depth <= last_depth; ++depth) {
      if (search.run(depth)) {
        Cover found;
        for (std::uint32_t s : search.chosen()) found.blocks.push_back(inst.to_block(inst.subsets()[s]));
        outcome.minimum = found;
        outcome.best_found = found;
        outcome.proven_lower = found.size();
        return outcome;
      }
      outcome.proven_lower = depth + 1;
    }
  } catch (const BudgetExhausted& e) {
    outcome.fired = e.limit;
    return outcome;
  }

  if (greedy.size() <= max_blocks) {
    outcome.minimum = std::move(greedy);
    outcome.proven_lower = outcome.minimum->size();
  } else {
    outcome.fired = Limit::MaxBlocks;
  }
  return outcome;
}

}  // namespace oracle

}  // namespace ordcover

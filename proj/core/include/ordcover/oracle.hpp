#pragma once

// Brute-force search for minimum pair coverings of 1..n by k-subsets.
//
// The search is independent of the design and bounds code: it shares only the
// pair counter, and its pruning bound is computed from scratch. It is meant
// for tiny instances whose optimum certifies claims made elsewhere.

#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "ordcover/cover_count.hpp"

namespace ordcover::oracle {

inline constexpr std::uint32_t kDefaultMaxPoints = 10;
/// Pairs are tracked in a 64-bit mask, so C(n, 2) <= 64.
inline constexpr std::uint32_t kHardMaxPoints = 11;

struct SearchBudget {
  std::uint64_t max_blocks = 0;  ///< 0 means C(n, 2), always sufficient
  std::chrono::milliseconds time_limit{std::chrono::minutes(5)};
  std::uint64_t node_limit = 20'000'000'000ULL;
  std::uint32_t max_points = kDefaultMaxPoints;
};

enum class Limit { MaxBlocks, TimeLimit, NodeLimit };
std::string_view to_string(Limit limit) noexcept;

struct Cover {
  std::vector<Block> blocks;
  std::size_t size() const noexcept { return blocks.size(); }
};

struct SearchOutcome {
  /// Present only when optimality was proven within budget.
  std::optional<Cover> minimum;
  /// Which limit stopped the search, if any.
  std::optional<Limit> fired;
  /// Every covering has at least this many blocks (proven by exhausted depths).
  std::uint64_t proven_lower = 0;
  /// Smallest covering seen; the greedy cover when nothing better was proven.
  std::optional<Cover> best_found;
  std::uint64_t nodes = 0;
};

/// Minimum number of k-subsets of 1..n covering every pair.
///
/// Iterative deepening from a degree-based lower bound. Each level branches on
/// the lexicographically smallest uncovered pair and tries the k-subsets
/// containing it in lexicographic order; points not yet used by any block are
/// interchangeable, so a candidate may only bring in the lowest-labelled
/// unused points.
///
/// Throws Error{TooLarge} when n exceeds budget.max_points (itself capped at
/// kHardMaxPoints) and Error{InvalidRange} unless 2 <= k < n.
SearchOutcome min_cover_exact(std::uint32_t n, std::uint32_t k, const SearchBudget& budget = {});

/// Deterministic greedy cover: repeatedly take the lexicographically first
/// k-subset covering the most uncovered pairs.
Cover greedy_cover(std::uint32_t n, std::uint32_t k);

}  // namespace ordcover::oracle

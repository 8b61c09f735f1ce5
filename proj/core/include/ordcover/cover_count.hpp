#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace ordcover {

/// Sorted, duplicate-free set of 1-based point (or proposal) labels.
using Block = std::vector<std::uint32_t>;

/// Co-occurrence count for every unordered pair {a, b} of labels in 1..n.
class PairCounts {
 public:
  explicit PairCounts(std::uint32_t n)
      : n_(n), counts_(n == 0 ? 0 : static_cast<std::size_t>(n) * (n - 1) / 2, 0) {}

  std::uint32_t n() const noexcept { return n_; }
  std::size_t pair_total() const noexcept { return counts_.size(); }

  /// Order of a and b does not matter; a != b, both in 1..n.
  std::uint32_t count(std::uint32_t a, std::uint32_t b) const { return counts_[slot(a, b)]; }
  void increment(std::uint32_t a, std::uint32_t b) { ++counts_[slot(a, b)]; }

  /// Visits (a, b, count) with a < b in lexicographic order.
  template <typename Fn>
  void for_each(Fn&& fn) const {
    std::size_t i = 0;
    for (std::uint32_t a = 1; a <= n_; ++a) {
      for (std::uint32_t b = a + 1; b <= n_; ++b) fn(a, b, counts_[i++]);
    }
  }

 private:
  std::size_t slot(std::uint32_t a, std::uint32_t b) const {
    if (a > b) std::swap(a, b);
    // Row-major upper triangle, rows a = 1..n.
    const std::size_t row = a - 1;
    return row * n_ - row * (row + 1) / 2 + (b - a - 1);
  }

  std::uint32_t n_;
  std::vector<std::uint32_t> counts_;
};

namespace oracle {

/// Exhaustive pair co-occurrence count. Labels outside 1..n throw
/// Error{InvalidRange}; a label repeated inside one block is counted once.
PairCounts cover_count_exact(std::span<const Block> blocks, std::uint32_t n);

}  // namespace oracle

}  // namespace ordcover

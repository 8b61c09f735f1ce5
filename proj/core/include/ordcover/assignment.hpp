#pragma once

// Referee assignments lifted from a (q^2, q, 1) block design.
//
// The n proposals are cut into q^2 consecutive groups of g = k^2/n, one group
// per design point, and each referee reads the union of the groups named by
// one block: q groups of g proposals, i.e. exactly k.

#include <cstdint>
#include <optional>
#include <vector>

#include "ordcover/block_design.hpp"
#include "ordcover/bounds.hpp"
#include "ordcover/error.hpp"

namespace ordcover {

struct ProblemInstance {
  std::uint32_t n;  ///< proposals
  std::uint32_t k;  ///< referee capacity
  std::uint32_t q;  ///< n / k, a prime power
  std::uint32_t g;  ///< k^2 / n, proposals per group

  friend bool operator==(const ProblemInstance&, const ProblemInstance&) = default;
};

/// Why (n, k) is not a valid instance, checked in this order:
/// InvalidRange (n < 4, k < 2, or too large), NotDivisible (k does not divide
/// n, or n does not divide k^2), OutOfRegime (k outside [sqrt(n), n/2]),
/// NotPrimePower (n/k). Empty when valid.
std::optional<ErrorCode> instance_error(std::uint64_t n, std::uint64_t k);

/// Throws Error carrying instance_error(n, k).
ProblemInstance make_instance(std::uint64_t n, std::uint64_t k);

struct Assignment {
  ProblemInstance instance;
  /// Sorted proposal sets, one per referee, in block order.
  std::vector<Block> referees;
  /// groups[i] holds the proposals identified with design point i + 1.
  std::vector<Block> groups;
};

/// Lifts construct_q2_bibd(instance.q).
Assignment assign(const ProblemInstance& instance);

/// Lifts any design on q^2 points whose blocks all have q points. Throws
/// Error{InvalidDesign} otherwise. Coverage is only guaranteed when the
/// design covers every pair of points.
Assignment assign(const ProblemInstance& instance, const Design& base);

struct CoverageReport {
  bool passed = false;
  std::uint64_t pairs_total = 0;
  std::uint64_t pairs_covered = 0;
  /// First uncovered pair in lexicographic order.
  std::optional<std::pair<std::uint32_t, std::uint32_t>> first_uncovered;
  std::uint32_t min_pair_count = 0;
  std::uint32_t max_pair_count = 0;
  std::uint64_t min_load = 0;
  std::uint64_t max_load = 0;
  std::uint64_t capacity = 0;
  bool within_capacity = false;
  PairCounts counts{0};
};

/// passed iff every pair of proposals shares at least one referee. The load
/// check is reported separately in within_capacity.
CoverageReport verify_cover(const Assignment& assignment);

/// q(q + 1), which equals n(n + k) / k^2.
std::uint64_t referee_count(const ProblemInstance& instance);

/// Finite-n minimality: the referee count equals lower_bound(n, k).
bool attains_lower_bound(const Assignment& assignment);

/// referees * k(k-1) / (n(n-1)); minimal in the asymptotic sense when this
/// tends to 1.
Rational normalized_referee_ratio(const Assignment& assignment);

}  // namespace ordcover

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ordcover/cover_count.hpp"

namespace ordcover {

/// Blocks over the points 1..v, kept in construction order.
struct Design {
  std::uint32_t v = 0;
  std::vector<Block> blocks;

  friend bool operator==(const Design&, const Design&) = default;
};

struct BibdParams {
  std::uint64_t v;
  std::uint64_t b;
  std::uint64_t r;
  std::uint64_t t;
  std::uint64_t lambda;

  friend bool operator==(const BibdParams&, const BibdParams&) = default;
};

/// b = v(v-1)lambda / (t(t-1)), r = (v-1)lambda / (t-1).
/// Throws Error{InvalidRange} unless 2 <= t < v and lambda >= 1, and
/// Error{NonIntegralParams} when either quotient is fractional.
BibdParams bibd_params(std::uint64_t v, std::uint64_t t, std::uint64_t lambda);

/// The (q^2, q, 1) design: blocks U_1..U_q with U_i = {(i-1)q+1, ..., iq},
/// then one block per cell of the juxtaposed complete MOLS, row-major, each
/// extended by (q-1)q + row. Throws Error{NotPrimePower}.
Design construct_q2_bibd(std::uint32_t q);

enum class ViolationKind {
  Parameters,
  LabelOutOfRange,
  RepeatedLabel,
  BlockSize,
  Replication,
  BlockCount,
  PairCount,
};

struct Violation {
  ViolationKind kind;
  std::size_t block = 0;    ///< 0-based block index (label, size violations)
  std::uint32_t point = 0;  ///< offending point (label, replication violations)
  std::uint32_t other = 0;  ///< second point of a pair violation
  std::uint64_t observed = 0;
  std::uint64_t expected = 0;

  std::string describe() const;
};

struct BibdReport {
  bool passed = false;
  std::uint32_t v = 0;
  std::uint64_t b = 0;
  std::uint64_t t = 0;
  std::uint64_t lambda = 0;
  /// From bibd_params; absent when the parameters are not integral.
  std::optional<BibdParams> expected;
  bool block_sizes_ok = false;
  /// Replication count per point, index 0 is point 1.
  std::vector<std::uint64_t> replication;
  /// The common replication when every point has the same count.
  std::optional<std::uint64_t> uniform_replication;
  std::uint64_t pairs_checked = 0;
  std::uint64_t pairs_off_lambda = 0;
  /// All violations in check order: parameters, labels, block sizes,
  /// replication, block count, pairs.
  std::vector<Violation> violations;

  const Violation* first_counterexample() const {
    return violations.empty() ? nullptr : &violations.front();
  }
};

/// Checks a design against the (v, t, lambda) axioms. Failures are reported,
/// never thrown.
BibdReport validate_bibd(const Design& design, std::uint64_t t, std::uint64_t lambda);

struct PairPartitionIdentity {
  std::uint64_t lhs;
  std::uint64_t rhs;
  bool equal;
};

/// q^2 C(q,2) + q C(q,2) against C(q^2,2): pairs inside the q^2 lifted blocks
/// plus pairs inside the q base blocks account for every pair of points.
PairPartitionIdentity pair_partition_identity(std::uint64_t q);

}  // namespace ordcover

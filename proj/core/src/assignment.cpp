#include "ordcover/assignment.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "ordcover/finite_field.hpp"

namespace ordcover {

std::optional<ErrorCode> instance_error(std::uint64_t n, std::uint64_t k) {
  if (n < 4 || k < 2 || n > std::numeric_limits<std::uint32_t>::max()) return ErrorCode::InvalidRange;
  if (n % k != 0 || (k * k) % n != 0) return ErrorCode::NotDivisible;
  // With n | k^2, k >= sqrt(n) always holds; k > n/2 leaves only k = n.
  if (k * k < n || 2 * k > n) return ErrorCode::OutOfRegime;
  if (!is_prime_power(n / k)) return ErrorCode::NotPrimePower;
  return std::nullopt;
}

ProblemInstance make_instance(std::uint64_t n, std::uint64_t k) {
  if (const auto err = instance_error(n, k)) {
    const std::string nk = "n=" + std::to_string(n) + " k=" + std::to_string(k);
    switch (*err) {
      case ErrorCode::NotDivisible:
        throw Error(*err, nk + ": need k | n and n | k^2");
      case ErrorCode::OutOfRegime:
        throw Error(*err, nk + ": need sqrt(n) <= k <= n/2");
      case ErrorCode::NotPrimePower:
        throw Error(*err, nk + ": n/k = " + std::to_string(n / k) + " is not a prime power");
      default:
        throw Error(*err, nk + ": need n >= 4 and k >= 2");
    }
  }
  return ProblemInstance{static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(k),
                         static_cast<std::uint32_t>(n / k), static_cast<std::uint32_t>(k * k / n)};
}

Assignment assign(const ProblemInstance& instance) {
  return assign(instance, construct_q2_bibd(instance.q));
}

Assignment assign(const ProblemInstance& instance, const Design& base) {
  const std::uint32_t q = instance.q;
  const std::uint32_t g = instance.g;
  if (base.v != q * q) {
    throw Error(ErrorCode::InvalidDesign, "design has " + std::to_string(base.v) + " points, need " +
                                              std::to_string(q * q));
  }

  Assignment out;
  out.instance = instance;
  out.groups.reserve(base.v);
  for (std::uint32_t i = 0; i < base.v; ++i) {
    Block group(g);
    for (std::uint32_t j = 0; j < g; ++j) group[j] = i * g + j + 1;
    out.groups.push_back(std::move(group));
  }

  out.referees.reserve(base.blocks.size());
  for (const Block& block : base.blocks) {
    if (block.size() != q) {
      throw Error(ErrorCode::InvalidDesign, "block of size " + std::to_string(block.size()) +
                                                ", need " + std::to_string(q));
    }
    Block proposals;
    proposals.reserve(instance.k);
    for (std::uint32_t point : block) {
      if (point < 1 || point > base.v) {
        throw Error(ErrorCode::InvalidDesign, "point " + std::to_string(point) + " out of range");
      }
      const Block& group = out.groups[point - 1];
      proposals.insert(proposals.end(), group.begin(), group.end());
    }
    std::sort(proposals.begin(), proposals.end());
    if (std::adjacent_find(proposals.begin(), proposals.end()) != proposals.end()) {
      throw Error(ErrorCode::InvalidDesign, "block repeats a point");
    }
    out.referees.push_back(std::move(proposals));
  }
  return out;
}

CoverageReport verify_cover(const Assignment& assignment) {
  CoverageReport report;
  report.capacity = assignment.instance.k;
  report.counts = oracle::cover_count_exact(assignment.referees, assignment.instance.n);
  report.pairs_total = report.counts.pair_total();
  report.min_pair_count = std::numeric_limits<std::uint32_t>::max();
  report.counts.for_each([&](std::uint32_t a, std::uint32_t b, std::uint32_t count) {
    report.min_pair_count = std::min(report.min_pair_count, count);
    report.max_pair_count = std::max(report.max_pair_count, count);
    if (count > 0) {
      ++report.pairs_covered;
    } else if (!report.first_uncovered) {
      report.first_uncovered = std::pair{a, b};
    }
  });
  if (report.pairs_total == 0) report.min_pair_count = 0;

  if (!assignment.referees.empty()) {
    report.min_load = std::numeric_limits<std::uint64_t>::max();
    for (const Block& r : assignment.referees) {
      report.min_load = std::min<std::uint64_t>(report.min_load, r.size());
      report.max_load = std::max<std::uint64_t>(report.max_load, r.size());
    }
  }
  report.within_capacity = report.max_load <= report.capacity;
  report.passed = report.pairs_covered == report.pairs_total;
  return report;
}

std::uint64_t referee_count(const ProblemInstance& instance) {
  return static_cast<std::uint64_t>(instance.q) * (instance.q + 1);
}

bool attains_lower_bound(const Assignment& assignment) {
  return assignment.referees.size() == lower_bound(assignment.instance.n, assignment.instance.k);
}

Rational normalized_referee_ratio(const Assignment& assignment) {
  const std::int64_t n = assignment.instance.n;
  const std::int64_t k = assignment.instance.k;
  return Rational(static_cast<std::int64_t>(assignment.referees.size()) * k * (k - 1), n * (n - 1));
}

}  // namespace ordcover

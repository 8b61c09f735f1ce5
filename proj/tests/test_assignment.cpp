#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "fixtures.hpp"
#include "ordcover/assignment.hpp"
#include "ordcover/bounds.hpp"
#include "ordcover/finite_field.hpp"

namespace ordcover {
namespace {

ErrorCode instance_failure(std::uint64_t n, std::uint64_t k) {
  try {
    make_instance(n, k);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for n=" << n << " k=" << k;
  return ErrorCode::InvalidRange;
}

Block range(std::uint32_t first, std::uint32_t last) {
  Block b(last - first + 1);
  std::iota(b.begin(), b.end(), first);
  return b;
}

TEST(MakeInstance, DerivedQuantities) {
  EXPECT_EQ(make_instance(9, 3), (ProblemInstance{9, 3, 3, 1}));
  EXPECT_EQ(make_instance(27, 9), (ProblemInstance{27, 9, 3, 3}));
  EXPECT_EQ(make_instance(32, 8), (ProblemInstance{32, 8, 4, 2}));
  EXPECT_EQ(make_instance(4, 2), (ProblemInstance{4, 2, 2, 1}));
}

TEST(MakeInstance, DistinctFailures) {
  EXPECT_EQ(instance_failure(10, 5), ErrorCode::NotDivisible);  // 10 does not divide 25
  EXPECT_EQ(instance_failure(12, 5), ErrorCode::NotDivisible);  // 5 does not divide 12
  EXPECT_EQ(instance_failure(36, 6), ErrorCode::NotPrimePower);
  EXPECT_EQ(instance_failure(100, 10), ErrorCode::NotPrimePower);
  EXPECT_EQ(instance_failure(9, 9), ErrorCode::OutOfRegime);
  EXPECT_EQ(instance_failure(3, 3), ErrorCode::InvalidRange);
  EXPECT_EQ(instance_failure(9, 1), ErrorCode::InvalidRange);
  EXPECT_EQ(instance_error(25, 5), std::nullopt);
}

TEST(MakeInstance, RegimeMatchesBruteForce) {
  for (std::uint64_t n = 4; n <= 400; ++n) {
    for (std::uint64_t k = 2; k <= n; ++k) {
      const bool expected = n % k == 0 && (k * k) % n == 0 && k * k >= n && 2 * k <= n &&
                            is_prime_power(n / k).has_value();
      ASSERT_EQ(!instance_error(n, k).has_value(), expected) << n << "," << k;
    }
  }
}

TEST(Assign, NineProposals) {
  const auto a = assign(make_instance(9, 3));
  ASSERT_EQ(a.referees.size(), 12u);
  EXPECT_EQ(a.referees[0], (Block{1, 2, 3}));
  EXPECT_EQ(a.referees[3], (Block{2, 6, 7}));
  for (const auto& r : a.referees) EXPECT_EQ(r.size(), 3u);
}

TEST(Assign, NineProposalsFromNinePointDesignReproducesTable) {
  const auto a = assign(make_instance(9, 3), fixtures::nine_point_design());
  EXPECT_EQ(a.referees, fixtures::kNineProposalTable);
  EXPECT_EQ(a.referees[3], (Block{1, 4, 7}));
}

TEST(Assign, TwentySevenProposals) {
  const auto a = assign(make_instance(27, 9));
  ASSERT_EQ(a.referees.size(), 12u);
  EXPECT_EQ(a.referees[0], range(1, 9));
  EXPECT_EQ(a.groups[0], range(1, 3));
  EXPECT_EQ(a.groups[8], range(25, 27));
  // Lifting the nine-point design gives the 27-proposal table rows.
  const auto table = assign(make_instance(27, 9), fixtures::nine_point_design());
  EXPECT_EQ(table.referees[1], range(10, 18));
  Block fourth = range(1, 3);
  for (auto p : {10u, 11u, 12u, 19u, 20u, 21u}) fourth.push_back(p);
  EXPECT_EQ(table.referees[3], fourth);
}

TEST(Assign, TwentyFiveProposals) {
  const auto a = assign(make_instance(25, 5));
  EXPECT_EQ(a.referees.size(), 30u);
  for (const auto& r : a.referees) EXPECT_EQ(r.size(), 5u);
}

TEST(Assign, RejectsMismatchedDesign) {
  EXPECT_THROW(assign(make_instance(9, 3), construct_q2_bibd(2)), Error);
  Design short_block = fixtures::nine_point_design();
  short_block.blocks[0] = {1, 2};
  EXPECT_THROW(assign(make_instance(9, 3), short_block), Error);
}

TEST(VerifyCover, PublishedInstances) {
  for (auto [n, k, pairs] : {std::tuple{9u, 3u, 36u}, std::tuple{27u, 9u, 351u}, std::tuple{54u, 18u, 1431u}}) {
    const auto report = verify_cover(assign(make_instance(n, k)));
    EXPECT_TRUE(report.passed);
    EXPECT_EQ(report.pairs_total, pairs);
    EXPECT_EQ(report.pairs_covered, pairs);
    EXPECT_EQ(report.min_load, k);
    EXPECT_EQ(report.max_load, k);
    EXPECT_TRUE(report.within_capacity);
  }
}

TEST(VerifyCover, ReportsUncoveredPair) {
  auto a = assign(make_instance(9, 3));
  a.referees.pop_back();  // {3,6,9} is the only referee with 3 and 6
  const auto report = verify_cover(a);
  EXPECT_FALSE(report.passed);
  EXPECT_EQ(report.pairs_covered, 33u);
  ASSERT_TRUE(report.first_uncovered.has_value());
  EXPECT_EQ(*report.first_uncovered, (std::pair{3u, 6u}));
  EXPECT_EQ(report.min_pair_count, 0u);
}

TEST(RefereeCount, Values) {
  EXPECT_EQ(referee_count(make_instance(25, 5)), 30u);
  EXPECT_EQ(referee_count(make_instance(32, 8)), 20u);
  EXPECT_EQ(referee_count(make_instance(9, 3)), 12u);
}

TEST(AssignProperties, GridOfInstances) {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    for (std::uint32_t g : {1u, 2u, 3u, 4u}) {
      const std::uint32_t n = q * q * g;
      const std::uint32_t k = q * g;
      const auto instance = make_instance(n, k);
      const auto a = assign(instance);
      const auto report = verify_cover(a);
      ASSERT_TRUE(report.passed) << n << "," << k;
      EXPECT_EQ(a.referees.size(), q * q + q);
      EXPECT_EQ(a.referees.size(), referee_count(instance));
      EXPECT_EQ(referee_count(instance), ceil_div(std::uint64_t{n} * (n + k), std::uint64_t{k} * k));
      for (const auto& r : a.referees) ASSERT_EQ(r.size(), k);

      // Same group: q + 1 referees. Different groups: exactly one.
      report.counts.for_each([&](std::uint32_t x, std::uint32_t y, std::uint32_t count) {
        const bool same_group = (x - 1) / g == (y - 1) / g;
        ASSERT_EQ(count, same_group ? q + 1 : 1u) << n << "," << k << " {" << x << "," << y << "}";
      });

      if (g == 1) {
        EXPECT_TRUE(attains_lower_bound(a));
        EXPECT_EQ(a.referees.size(), lower_bound(n, k));
        EXPECT_EQ(normalized_referee_ratio(a), Rational(1, 1));
      } else {
        EXPECT_FALSE(attains_lower_bound(a));
        EXPECT_GT(normalized_referee_ratio(a), Rational(1, 1));
      }
    }
  }
}

}  // namespace
}  // namespace ordcover

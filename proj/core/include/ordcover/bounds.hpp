#pragma once

// Referee-count bounds for covering all pairs of n proposals with referees
// that each read k of them. Everything here is exact integer arithmetic.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace ordcover {

/// Reduced fraction with a positive denominator.
class Rational {
 public:
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string str() const;  ///< "a/b", or "a" when b = 1

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept;

 private:
  std::int64_t num_;
  std::int64_t den_;
};

/// ceil(a / b) for b > 0.
constexpr std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return (a + b - 1) / b; }

/// ceil(n(n-1) / (k(k-1))). Throws Error{InvalidRange} unless 2 <= k <= n.
std::uint64_t lower_bound(std::uint64_t n, std::uint64_t k);

/// ceil(n(n+k) / k^2). Throws Error{InvalidRange} unless 2 <= k <= n.
std::uint64_t upper_bound_new(std::uint64_t n, std::uint64_t k);

/// Denominator of the earlier sufficient bound. It is printed both as k^2 and
/// as k(k-1); the comparison inequalities only hold with k^2.
enum class PriorForm { KSquared, KTimesKMinus1 };

/// ceil(n(2n-k) / k^2), or over k(k-1) with KTimesKMinus1.
/// Throws Error{InvalidRange} unless 2 <= k <= n, Error{NotDivisible} unless k | n.
std::uint64_t upper_bound_prior(std::uint64_t n, std::uint64_t k,
                                PriorForm form = PriorForm::KSquared);

/// (n+k)(k-1) / ((n-1)k): unrounded new upper bound over unrounded lower bound.
Rational ratio_new(std::uint64_t n, std::uint64_t k);
/// (2n-k)(k-1) / ((n-1)k): unrounded prior upper bound over unrounded lower bound.
Rational ratio_prior(std::uint64_t n, std::uint64_t k);

enum class Method { Bibd, Prior };
std::string_view to_string(Method method) noexcept;

struct BoundsReport {
  std::uint64_t n;
  std::uint64_t k;
  std::uint64_t lower;
  std::uint64_t upper_new;
  std::uint64_t upper_prior;
  Rational ratio_new;
  Rational ratio_prior;
  /// Bibd when upper_new <= upper_prior.
  Method recommended;
  /// Whether (n, k) meets the preconditions of the block-design assignment.
  bool bibd_applicable;
};

/// Throws Error{InvalidRange} unless 2 <= k <= n. upper_prior is evaluated by
/// its formula even when k does not divide n.
BoundsReport compare(std::uint64_t n, std::uint64_t k, PriorForm form = PriorForm::KSquared);

}  // namespace ordcover

#include "ordcover/bounds.hpp"

#include <numeric>

#include "ordcover/assignment.hpp"
#include "ordcover/error.hpp"

namespace ordcover {

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorCode::InvalidRange, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  const std::int64_t q = a / b;
  return (a % b != 0 && a < 0) ? q - 1 : q;
}

// Compares a/b with c/d (b, d > 0) through their continued fractions, which
// never forms a product and so cannot overflow.
std::strong_ordering compare_fractions(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  while (true) {
    const std::int64_t qa = floor_div(a, b);
    const std::int64_t qc = floor_div(c, d);
    if (qa != qc) return qa <=> qc;
    const std::int64_t ra = a - qa * b;
    const std::int64_t rc = c - qc * d;
    if (ra == 0 || rc == 0) return ra <=> rc;
    // ra/b against rc/d has the same outcome as d/rc against b/ra.
    const std::int64_t next_a = d, next_b = rc, next_c = b, next_d = ra;
    a = next_a;
    b = next_b;
    c = next_c;
    d = next_d;
  }
}

}  // namespace

std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
  return compare_fractions(a.num_, a.den_, b.num_, b.den_);
}

namespace {

void check_range(std::uint64_t n, std::uint64_t k) {
  if (k < 2 || k > n) {
    throw Error(ErrorCode::InvalidRange,
                "need 2 <= k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
  }
}

std::uint64_t prior_formula(std::uint64_t n, std::uint64_t k, PriorForm form) {
  const std::uint64_t den = form == PriorForm::KSquared ? k * k : k * (k - 1);
  return ceil_div(n * (2 * n - k), den);
}

}  // namespace

std::uint64_t lower_bound(std::uint64_t n, std::uint64_t k) {
  check_range(n, k);
  return ceil_div(n * (n - 1), k * (k - 1));
}

std::uint64_t upper_bound_new(std::uint64_t n, std::uint64_t k) {
  check_range(n, k);
  return ceil_div(n * (n + k), k * k);
}

std::uint64_t upper_bound_prior(std::uint64_t n, std::uint64_t k, PriorForm form) {
  check_range(n, k);
  if (n % k != 0) {
    throw Error(ErrorCode::NotDivisible, std::to_string(k) + " does not divide " + std::to_string(n));
  }
  return prior_formula(n, k, form);
}

Rational ratio_new(std::uint64_t n, std::uint64_t k) {
  check_range(n, k);
  return Rational(static_cast<std::int64_t>((n + k) * (k - 1)), static_cast<std::int64_t>((n - 1) * k));
}

Rational ratio_prior(std::uint64_t n, std::uint64_t k) {
  check_range(n, k);
  return Rational(static_cast<std::int64_t>((2 * n - k) * (k - 1)),
                  static_cast<std::int64_t>((n - 1) * k));
}

std::string_view to_string(Method method) noexcept {
  return method == Method::Bibd ? "bibd" : "prior";
}

BoundsReport compare(std::uint64_t n, std::uint64_t k, PriorForm form) {
  check_range(n, k);
  const std::uint64_t upper_new = upper_bound_new(n, k);
  const std::uint64_t upper_prior = prior_formula(n, k, form);
  return BoundsReport{
      .n = n,
      .k = k,
      .lower = lower_bound(n, k),
      .upper_new = upper_new,
      .upper_prior = upper_prior,
      .ratio_new = ratio_new(n, k),
      .ratio_prior = ratio_prior(n, k),
      .recommended = upper_new <= upper_prior ? Method::Bibd : Method::Prior,
      .bibd_applicable = !instance_error(n, k).has_value(),
  };
}

}  // namespace ordcover

#pragma once

// Exact arithmetic in GF(p^m) using a polynomial basis over GF(p).
//
// Elements are identified by a canonical index in 0..q-1, the base-p
// evaluation of their coefficient vector (least-significant coefficient
// first). Index 0 is the additive identity and index 1 the multiplicative
// identity. For m > 1 the modulus is the lexicographically smallest monic
// irreducible polynomial of degree m, comparing coefficients from the
// constant term upward.

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace ordcover {

struct PrimePower {
  std::uint32_t p;
  std::uint32_t m;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Factorization q = p^m, or nullopt when q is not a prime power (q = 1 included).
std::optional<PrimePower> is_prime_power(std::uint64_t q);

namespace detail {
struct FieldCore;
}

class FieldElement;

/// A finite field GF(q). Cheap to copy; copies share immutable state.
class FieldSpec {
 public:
  /// Throws Error{NotPrimePower} unless q = p^m with q >= 2.
  static FieldSpec create(std::uint32_t q);

  std::uint32_t order() const noexcept;
  std::uint32_t characteristic() const noexcept;
  std::uint32_t degree() const noexcept;

  /// Monic modulus coefficients, constant term first, length m + 1.
  /// Empty for prime fields.
  const std::vector<std::uint32_t>& modulus() const noexcept;

  FieldElement element(std::uint32_t index) const;
  FieldElement zero() const;
  FieldElement one() const;

  /// All q elements in canonical index order.
  std::vector<FieldElement> elements() const;

  // Index-level arithmetic; arguments must be < order().
  std::uint32_t add_index(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg_index(std::uint32_t a) const;
  std::uint32_t mul_index(std::uint32_t a, std::uint32_t b) const;

  std::vector<std::uint32_t> coeffs_of(std::uint32_t index) const;
  std::uint32_t index_of(const std::vector<std::uint32_t>& coeffs) const;

  /// Same order, characteristic and modulus.
  friend bool operator==(const FieldSpec& a, const FieldSpec& b) noexcept;

 private:
  explicit FieldSpec(std::shared_ptr<const detail::FieldCore> core) : core_(std::move(core)) {}

  std::shared_ptr<const detail::FieldCore> core_;
};

class FieldElement {
 public:
  const FieldSpec& field() const noexcept { return field_; }
  std::uint32_t index() const noexcept { return index_; }
  std::vector<std::uint32_t> coeffs() const { return field_.coeffs_of(index_); }
  bool is_zero() const noexcept { return index_ == 0; }

  /// Equal when both the field and the index agree.
  friend bool operator==(const FieldElement& a, const FieldElement& b) noexcept {
    return a.index_ == b.index_ && a.field_ == b.field_;
  }

 private:
  friend class FieldSpec;
  FieldElement(FieldSpec field, std::uint32_t index) : field_(std::move(field)), index_(index) {}

  FieldSpec field_;
  std::uint32_t index_;
};

// These throw Error{MixedFields} when the operands come from different fields.
FieldElement add(const FieldElement& a, const FieldElement& b);
FieldElement sub(const FieldElement& a, const FieldElement& b);
FieldElement mul(const FieldElement& a, const FieldElement& b);
FieldElement neg(const FieldElement& a);
FieldElement pow(const FieldElement& a, std::uint64_t exponent);
/// Throws Error{ZeroInverse} for the zero element.
FieldElement inv(const FieldElement& a);

inline FieldElement operator+(const FieldElement& a, const FieldElement& b) { return add(a, b); }
inline FieldElement operator-(const FieldElement& a, const FieldElement& b) { return sub(a, b); }
inline FieldElement operator*(const FieldElement& a, const FieldElement& b) { return mul(a, b); }
inline FieldElement operator-(const FieldElement& a) { return neg(a); }

/// Trial-division irreducibility test for a polynomial over GF(p), constant term first.
bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p);

}  // namespace ordcover

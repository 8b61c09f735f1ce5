#include "ordcover/finite_field.hpp"

#include <string>

#include "ordcover/error.hpp"

namespace ordcover {

namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  // p is prime, so a^(p-2) is the inverse.
  std::uint64_t result = 1;
  std::uint64_t base = a % p;
  for (std::uint64_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

// Remainder of a divided by b over GF(p); b must be nonzero after trimming.
Poly poly_mod(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  const std::uint32_t lead_inv = inverse_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint64_t factor = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      const std::uint64_t sub = factor * b[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

// Monic polynomial of the given degree whose lower coefficients are the base-p
// digits of `code`, least-significant digit at the constant term.
Poly monic_from_code(std::uint64_t code, std::uint32_t degree, std::uint32_t p) {
  Poly poly(degree + 1, 0);
  for (std::uint32_t i = 0; i < degree; ++i) {
    poly[i] = static_cast<std::uint32_t>(code % p);
    code /= p;
  }
  poly[degree] = 1;
  return poly;
}

std::uint64_t ipow(std::uint64_t base, std::uint32_t exp) {
  std::uint64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

Poly find_canonical_modulus(std::uint32_t p, std::uint32_t m) {
  const std::uint64_t count = ipow(p, m);
  for (std::uint64_t t = 0; t < count; ++t) {
    // Constant term is the most significant digit of t, so ascending t walks
    // candidates in lexicographic order compared from the constant term up.
    Poly poly(m + 1, 0);
    std::uint64_t rest = t;
    for (std::uint32_t i = m; i-- > 0;) {
      poly[i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    poly[m] = 1;
    if (is_irreducible(poly, p)) return poly;
  }
  throw Error(ErrorCode::NotPrimePower, "no irreducible polynomial found");
}

}  // namespace

namespace detail {

struct FieldCore {
  std::uint32_t q;
  std::uint32_t p;
  std::uint32_t m;
  Poly modulus;
};

}  // namespace detail

std::optional<PrimePower> is_prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return PrimePower{static_cast<std::uint32_t>(q), 1};
  std::uint32_t m = 0;
  while (q % p == 0) {
    q /= p;
    ++m;
  }
  if (q != 1) return std::nullopt;
  return PrimePower{static_cast<std::uint32_t>(p), m};
}

bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
  Poly f = poly;
  trim(f);
  if (f.size() < 2) return false;
  const auto degree = static_cast<std::uint32_t>(f.size() - 1);
  if (degree == 1) return true;
  for (std::uint32_t d = 1; d <= degree / 2; ++d) {
    const std::uint64_t count = ipow(p, d);
    for (std::uint64_t code = 0; code < count; ++code) {
      if (poly_mod(f, monic_from_code(code, d, p), p).empty()) return false;
    }
  }
  return true;
}

FieldSpec FieldSpec::create(std::uint32_t q) {
  const auto pp = is_prime_power(q);
  if (!pp) throw Error(ErrorCode::NotPrimePower, std::to_string(q) + " is not a prime power");
  auto core = std::make_shared<detail::FieldCore>();
  core->q = q;
  core->p = pp->p;
  core->m = pp->m;
  if (pp->m > 1) core->modulus = find_canonical_modulus(pp->p, pp->m);
  return FieldSpec(std::move(core));
}

std::uint32_t FieldSpec::order() const noexcept { return core_->q; }
std::uint32_t FieldSpec::characteristic() const noexcept { return core_->p; }
std::uint32_t FieldSpec::degree() const noexcept { return core_->m; }
const std::vector<std::uint32_t>& FieldSpec::modulus() const noexcept { return core_->modulus; }

FieldElement FieldSpec::element(std::uint32_t index) const {
  if (index >= core_->q) {
    throw Error(ErrorCode::InvalidRange, "element index " + std::to_string(index) + " outside GF(" +
                                             std::to_string(core_->q) + ")");
  }
  return FieldElement(*this, index);
}

FieldElement FieldSpec::zero() const { return FieldElement(*this, 0); }
FieldElement FieldSpec::one() const { return FieldElement(*this, 1); }

std::vector<FieldElement> FieldSpec::elements() const {
  std::vector<FieldElement> out;
  out.reserve(core_->q);
  for (std::uint32_t i = 0; i < core_->q; ++i) out.push_back(FieldElement(*this, i));
  return out;
}

std::vector<std::uint32_t> FieldSpec::coeffs_of(std::uint32_t index) const {
  std::vector<std::uint32_t> coeffs(core_->m, 0);
  for (std::uint32_t i = 0; i < core_->m; ++i) {
    coeffs[i] = index % core_->p;
    index /= core_->p;
  }
  return coeffs;
}

std::uint32_t FieldSpec::index_of(const std::vector<std::uint32_t>& coeffs) const {
  std::uint32_t index = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) index = index * core_->p + coeffs[i];
  return index;
}

std::uint32_t FieldSpec::add_index(std::uint32_t a, std::uint32_t b) const {
  const std::uint32_t p = core_->p;
  if (core_->m == 1) return (a + b) % p;
  std::uint32_t result = 0;
  std::uint32_t place = 1;
  for (std::uint32_t i = 0; i < core_->m; ++i) {
    result += ((a % p + b % p) % p) * place;
    a /= p;
    b /= p;
    place *= p;
  }
  return result;
}

std::uint32_t FieldSpec::neg_index(std::uint32_t a) const {
  const std::uint32_t p = core_->p;
  std::uint32_t result = 0;
  std::uint32_t place = 1;
  for (std::uint32_t i = 0; i < core_->m; ++i) {
    result += ((p - a % p) % p) * place;
    a /= p;
    place *= p;
  }
  return result;
}

std::uint32_t FieldSpec::mul_index(std::uint32_t a, std::uint32_t b) const {
  const std::uint32_t p = core_->p;
  if (core_->m == 1) {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
  }
  const Poly x = coeffs_of(a);
  const Poly y = coeffs_of(b);
  Poly product(2 * core_->m - 1, 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) {
      product[i + j] = static_cast<std::uint32_t>(
          (product[i + j] + static_cast<std::uint64_t>(x[i]) * y[j]) % p);
    }
  }
  Poly reduced = poly_mod(std::move(product), core_->modulus, p);
  reduced.resize(core_->m, 0);
  return index_of(reduced);
}

bool operator==(const FieldSpec& a, const FieldSpec& b) noexcept {
  if (a.core_ == b.core_) return true;
  return a.core_->q == b.core_->q && a.core_->p == b.core_->p &&
         a.core_->modulus == b.core_->modulus;
}

namespace {

void require_same_field(const FieldElement& a, const FieldElement& b) {
  if (!(a.field() == b.field())) {
    throw Error(ErrorCode::MixedFields, "operands from GF(" + std::to_string(a.field().order()) +
                                            ") and GF(" + std::to_string(b.field().order()) + ")");
  }
}

}  // namespace

FieldElement add(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return a.field().element(a.field().add_index(a.index(), b.index()));
}

FieldElement sub(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  const auto& f = a.field();
  return f.element(f.add_index(a.index(), f.neg_index(b.index())));
}

FieldElement mul(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return a.field().element(a.field().mul_index(a.index(), b.index()));
}

FieldElement neg(const FieldElement& a) { return a.field().element(a.field().neg_index(a.index())); }

FieldElement pow(const FieldElement& a, std::uint64_t exponent) {
  const auto& f = a.field();
  std::uint32_t result = 1;
  std::uint32_t base = a.index();
  for (; exponent > 0; exponent >>= 1) {
    if (exponent & 1) result = f.mul_index(result, base);
    base = f.mul_index(base, base);
  }
  return f.element(result);
}

FieldElement inv(const FieldElement& a) {
  if (a.is_zero()) throw Error(ErrorCode::ZeroInverse, "zero has no multiplicative inverse");
  return pow(a, a.field().order() - 2);
}

}  // namespace ordcover

#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace ordcover {

/// A q x q matrix of symbols. Nothing is enforced beyond the shape, so the
/// same type holds candidates that is_latin() may reject.
class LatinSquare {
 public:
  LatinSquare() = default;
  LatinSquare(std::uint32_t order, std::vector<std::uint32_t> cells);

  /// Throws Error{InvalidRange} unless rows form a square matrix.
  static LatinSquare from_rows(const std::vector<std::vector<std::uint32_t>>& rows);

  std::uint32_t order() const noexcept { return order_; }
  /// 0-based row and column.
  std::uint32_t at(std::uint32_t row, std::uint32_t col) const { return cells_[row * order_ + col]; }
  std::span<const std::uint32_t> row(std::uint32_t r) const {
    return std::span<const std::uint32_t>(cells_).subspan(r * order_, order_);
  }
  std::vector<std::vector<std::uint32_t>> rows() const;

  friend bool operator==(const LatinSquare&, const LatinSquare&) = default;

 private:
  std::uint32_t order_ = 0;
  std::vector<std::uint32_t> cells_;
};

/// Cell-wise stacking of several squares of one order. The i-th coordinate of
/// every tuple carries the i-th square's symbol shifted into (i-1)q+1..iq.
class Juxtaposition {
 public:
  Juxtaposition(std::uint32_t order, std::uint32_t square_count, std::vector<std::uint32_t> values);

  std::uint32_t order() const noexcept { return order_; }
  std::uint32_t square_count() const noexcept { return square_count_; }
  /// 0-based row and column; the span has square_count() entries.
  std::span<const std::uint32_t> at(std::uint32_t row, std::uint32_t col) const {
    return std::span<const std::uint32_t>(values_).subspan(
        (static_cast<std::size_t>(row) * order_ + col) * square_count_, square_count_);
  }

 private:
  std::uint32_t order_;
  std::uint32_t square_count_;
  std::vector<std::uint32_t> values_;
};

/// The q-1 squares L_a(x, y) = a*x + y over GF(q), a = 1..q-1.
///
/// Matrix position i (1-based) stands for the field element with canonical
/// index i mod q, and the element with index e is written as symbol e, with
/// e = 0 written as q. For prime q this is plain arithmetic mod q with 0
/// shown as q. Throws Error{NotPrimePower}.
std::vector<LatinSquare> mols_complete(std::uint32_t q);

/// Every row and every column is a permutation of 1..q.
bool is_latin(const LatinSquare& square);

/// Throws Error{OrderMismatch} on differing orders.
bool are_orthogonal(const LatinSquare& a, const LatinSquare& b);

/// Throws Error{OrderMismatch} on differing orders and Error{InvalidRange} on
/// an empty list.
Juxtaposition juxtapose(std::span<const LatinSquare> squares);

/// Cells sharing a row, or sharing a column, have pairwise disjoint tuples.
bool check_disjoint_lines(const Juxtaposition& j);

}  // namespace ordcover

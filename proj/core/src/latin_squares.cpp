#include "ordcover/latin_squares.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "ordcover/error.hpp"
#include "ordcover/finite_field.hpp"

namespace ordcover {

LatinSquare::LatinSquare(std::uint32_t order, std::vector<std::uint32_t> cells)
    : order_(order), cells_(std::move(cells)) {
  if (cells_.size() != static_cast<std::size_t>(order_) * order_) {
    throw Error(ErrorCode::InvalidRange, "cell count does not match order " + std::to_string(order_));
  }
}

LatinSquare LatinSquare::from_rows(const std::vector<std::vector<std::uint32_t>>& rows) {
  const auto order = static_cast<std::uint32_t>(rows.size());
  std::vector<std::uint32_t> cells;
  cells.reserve(static_cast<std::size_t>(order) * order);
  for (const auto& r : rows) {
    if (r.size() != order) throw Error(ErrorCode::InvalidRange, "matrix is not square");
    cells.insert(cells.end(), r.begin(), r.end());
  }
  return LatinSquare(order, std::move(cells));
}

std::vector<std::vector<std::uint32_t>> LatinSquare::rows() const {
  std::vector<std::vector<std::uint32_t>> out;
  out.reserve(order_);
  for (std::uint32_t r = 0; r < order_; ++r) {
    auto span = row(r);
    out.emplace_back(span.begin(), span.end());
  }
  return out;
}

Juxtaposition::Juxtaposition(std::uint32_t order, std::uint32_t square_count,
                             std::vector<std::uint32_t> values)
    : order_(order), square_count_(square_count), values_(std::move(values)) {
  if (values_.size() != static_cast<std::size_t>(order_) * order_ * square_count_) {
    throw Error(ErrorCode::InvalidRange, "tuple storage does not match shape");
  }
}

std::vector<LatinSquare> mols_complete(std::uint32_t q) {
  const FieldSpec field = FieldSpec::create(q);
  const auto symbol = [q](std::uint32_t index) { return index == 0 ? q : index; };

  std::vector<LatinSquare> squares;
  squares.reserve(q - 1);
  for (std::uint32_t a = 1; a < q; ++a) {
    std::vector<std::uint32_t> cells;
    cells.reserve(static_cast<std::size_t>(q) * q);
    for (std::uint32_t row = 1; row <= q; ++row) {
      const std::uint32_t ax = field.mul_index(a, row % q);
      for (std::uint32_t col = 1; col <= q; ++col) {
        cells.push_back(symbol(field.add_index(ax, col % q)));
      }
    }
    squares.emplace_back(q, std::move(cells));
  }
  return squares;
}

bool is_latin(const LatinSquare& square) {
  const std::uint32_t q = square.order();
  std::vector<char> seen_row(q + 1);
  std::vector<char> seen_col(q + 1);
  for (std::uint32_t i = 0; i < q; ++i) {
    std::fill(seen_row.begin(), seen_row.end(), 0);
    std::fill(seen_col.begin(), seen_col.end(), 0);
    for (std::uint32_t j = 0; j < q; ++j) {
      const std::uint32_t r = square.at(i, j);
      const std::uint32_t c = square.at(j, i);
      if (r < 1 || r > q || seen_row[r]) return false;
      if (c < 1 || c > q || seen_col[c]) return false;
      seen_row[r] = 1;
      seen_col[c] = 1;
    }
  }
  return true;
}

bool are_orthogonal(const LatinSquare& a, const LatinSquare& b) {
  if (a.order() != b.order()) {
    throw Error(ErrorCode::OrderMismatch,
                std::to_string(a.order()) + " vs " + std::to_string(b.order()));
  }
  const std::uint32_t q = a.order();
  // Symbols outside 1..q cannot form q^2 distinct pairs from 1..q x 1..q.
  std::vector<char> seen(static_cast<std::size_t>(q) * q, 0);
  for (std::uint32_t r = 0; r < q; ++r) {
    for (std::uint32_t c = 0; c < q; ++c) {
      const std::uint32_t x = a.at(r, c);
      const std::uint32_t y = b.at(r, c);
      if (x < 1 || x > q || y < 1 || y > q) return false;
      const std::size_t slot = static_cast<std::size_t>(x - 1) * q + (y - 1);
      if (seen[slot]) return false;
      seen[slot] = 1;
    }
  }
  return true;
}

Juxtaposition juxtapose(std::span<const LatinSquare> squares) {
  if (squares.empty()) throw Error(ErrorCode::InvalidRange, "nothing to juxtapose");
  const std::uint32_t q = squares.front().order();
  for (const auto& s : squares) {
    if (s.order() != q) {
      throw Error(ErrorCode::OrderMismatch,
                  std::to_string(q) + " vs " + std::to_string(s.order()));
    }
  }
  const auto count = static_cast<std::uint32_t>(squares.size());
  std::vector<std::uint32_t> values;
  values.reserve(static_cast<std::size_t>(q) * q * count);
  for (std::uint32_t r = 0; r < q; ++r) {
    for (std::uint32_t c = 0; c < q; ++c) {
      for (std::uint32_t i = 0; i < count; ++i) values.push_back(i * q + squares[i].at(r, c));
    }
  }
  return Juxtaposition(q, count, std::move(values));
}

namespace {

// Values of distinct cells along one line must never coincide.
template <typename CellAt>
bool line_is_disjoint(std::uint32_t q, CellAt cell_at) {
  std::unordered_map<std::uint32_t, std::uint32_t> owner;
  for (std::uint32_t pos = 0; pos < q; ++pos) {
    for (std::uint32_t value : cell_at(pos)) {
      auto [it, inserted] = owner.emplace(value, pos);
      if (!inserted && it->second != pos) return false;
    }
  }
  return true;
}

}  // namespace

bool check_disjoint_lines(const Juxtaposition& j) {
  const std::uint32_t q = j.order();
  for (std::uint32_t line = 0; line < q; ++line) {
    if (!line_is_disjoint(q, [&](std::uint32_t col) { return j.at(line, col); })) return false;
    if (!line_is_disjoint(q, [&](std::uint32_t row) { return j.at(row, line); })) return false;
  }
  return true;
}

}  // namespace ordcover

#include "ordcover/block_design.hpp"

#include <algorithm>
#include <sstream>

#include "ordcover/error.hpp"
#include "ordcover/latin_squares.hpp"

namespace ordcover {

BibdParams bibd_params(std::uint64_t v, std::uint64_t t, std::uint64_t lambda) {
  if (t < 2 || t >= v || lambda < 1) {
    std::ostringstream msg;
    msg << "need 2 <= t < v and lambda >= 1, got v=" << v << " t=" << t << " lambda=" << lambda;
    throw Error(ErrorCode::InvalidRange, msg.str());
  }
  const std::uint64_t r_num = (v - 1) * lambda;
  const std::uint64_t b_num = v * r_num;
  const std::uint64_t b_den = t * (t - 1);
  if (r_num % (t - 1) != 0 || b_num % b_den != 0) {
    std::ostringstream msg;
    msg << "(" << v << "," << t << "," << lambda << ") gives fractional b or r";
    throw Error(ErrorCode::NonIntegralParams, msg.str());
  }
  return BibdParams{v, b_num / b_den, r_num / (t - 1), t, lambda};
}

Design construct_q2_bibd(std::uint32_t q) {
  const std::vector<LatinSquare> squares = mols_complete(q);
  Design design;
  design.v = q * q;
  design.blocks.reserve(static_cast<std::size_t>(q) * q + q);

  for (std::uint32_t i = 0; i < q; ++i) {
    Block base(q);
    for (std::uint32_t j = 0; j < q; ++j) base[j] = i * q + j + 1;
    design.blocks.push_back(std::move(base));
  }

  // q = 2 has a single square, still juxtaposable; the line points come from U_q.
  const Juxtaposition m = juxtapose(squares);
  for (std::uint32_t row = 0; row < q; ++row) {
    for (std::uint32_t col = 0; col < q; ++col) {
      auto cell = m.at(row, col);
      Block block(cell.begin(), cell.end());
      block.push_back((q - 1) * q + row + 1);
      std::sort(block.begin(), block.end());
      design.blocks.push_back(std::move(block));
    }
  }
  return design;
}

std::string Violation::describe() const {
  std::ostringstream out;
  switch (kind) {
    case ViolationKind::Parameters:
      out << "parameters admit no design (fractional or out-of-range b, r)";
      break;
    case ViolationKind::LabelOutOfRange:
      out << "block " << block + 1 << " has label " << point << " outside 1.." << expected;
      break;
    case ViolationKind::RepeatedLabel:
      out << "block " << block + 1 << " repeats label " << point;
      break;
    case ViolationKind::BlockSize:
      out << "block " << block + 1 << " has " << observed << " points, expected " << expected;
      break;
    case ViolationKind::Replication:
      out << "point " << point << " appears in " << observed << " blocks, expected " << expected;
      break;
    case ViolationKind::BlockCount:
      out << "design has " << observed << " blocks, expected " << expected;
      break;
    case ViolationKind::PairCount:
      out << "pair {" << point << "," << other << "} appears in " << observed << " blocks, expected "
          << expected;
      break;
  }
  return out.str();
}

BibdReport validate_bibd(const Design& design, std::uint64_t t, std::uint64_t lambda) {
  BibdReport report;
  report.v = design.v;
  report.b = design.blocks.size();
  report.t = t;
  report.lambda = lambda;

  try {
    report.expected = bibd_params(design.v, t, lambda);
  } catch (const Error&) {
    report.violations.push_back({.kind = ViolationKind::Parameters});
  }

  // Labels; the sanitized copy feeds the pair counter.
  std::vector<Block> clean;
  clean.reserve(design.blocks.size());
  for (std::size_t i = 0; i < design.blocks.size(); ++i) {
    Block block;
    std::vector<std::uint32_t> sorted = design.blocks[i];
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t j = 0; j < sorted.size(); ++j) {
      const std::uint32_t label = sorted[j];
      if (label < 1 || label > design.v) {
        report.violations.push_back({.kind = ViolationKind::LabelOutOfRange,
                                     .block = i,
                                     .point = label,
                                     .expected = design.v});
      } else if (j > 0 && sorted[j - 1] == label) {
        report.violations.push_back(
            {.kind = ViolationKind::RepeatedLabel, .block = i, .point = label});
      } else {
        block.push_back(label);
      }
    }
    clean.push_back(std::move(block));
  }

  report.block_sizes_ok = true;
  for (std::size_t i = 0; i < design.blocks.size(); ++i) {
    if (design.blocks[i].size() != t) {
      report.block_sizes_ok = false;
      report.violations.push_back({.kind = ViolationKind::BlockSize,
                                   .block = i,
                                   .observed = design.blocks[i].size(),
                                   .expected = t});
    }
  }

  report.replication.assign(design.v, 0);
  for (const Block& block : clean) {
    for (std::uint32_t label : block) ++report.replication[label - 1];
  }
  if (!report.replication.empty() &&
      std::all_of(report.replication.begin(), report.replication.end(),
                  [&](std::uint64_t r) { return r == report.replication.front(); })) {
    report.uniform_replication = report.replication.front();
  }
  if (report.expected) {
    for (std::uint32_t p = 0; p < design.v; ++p) {
      if (report.replication[p] != report.expected->r) {
        report.violations.push_back({.kind = ViolationKind::Replication,
                                     .point = p + 1,
                                     .observed = report.replication[p],
                                     .expected = report.expected->r});
      }
    }
    if (report.b != report.expected->b) {
      report.violations.push_back(
          {.kind = ViolationKind::BlockCount, .observed = report.b, .expected = report.expected->b});
    }
  }

  const PairCounts counts = oracle::cover_count_exact(clean, design.v);
  report.pairs_checked = counts.pair_total();
  counts.for_each([&](std::uint32_t a, std::uint32_t b, std::uint32_t count) {
    if (count != lambda) {
      ++report.pairs_off_lambda;
      report.violations.push_back({.kind = ViolationKind::PairCount,
                                   .point = a,
                                   .other = b,
                                   .observed = count,
                                   .expected = lambda});
    }
  });

  report.passed = report.violations.empty();
  return report;
}

PairPartitionIdentity pair_partition_identity(std::uint64_t q) {
  if (q < 2) throw Error(ErrorCode::InvalidRange, "need q >= 2");
  const auto choose2 = [](std::uint64_t x) { return x * (x - 1) / 2; };
  const std::uint64_t lhs = q * q * choose2(q) + q * choose2(q);
  const std::uint64_t rhs = choose2(q * q);
  return {lhs, rhs, lhs == rhs};
}

}  // namespace ordcover

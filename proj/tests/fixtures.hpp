#pragma once

// Published designs and squares, entered verbatim.

#include <cstdint>
#include <vector>

#include "ordcover/block_design.hpp"
#include "ordcover/latin_squares.hpp"

namespace ordcover::fixtures {

using Rows = std::vector<std::vector<std::uint32_t>>;

// (9,3,1) design, 12 blocks.
inline Design nine_point_design() {
  return Design{9,
                {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}, {1, 4, 7}, {1, 5, 8}, {1, 6, 9},
                 {2, 4, 9}, {2, 5, 7}, {2, 6, 8}, {3, 4, 8}, {3, 5, 9}, {3, 6, 7}}};
}

// Printed (16,4,1) list. The 15th block reads {1,6,12,13}; a consistent design
// would need 3 in place of 1, so point 1 appears 6 times and point 3 only 4.
inline Design sixteen_point_design_as_printed() {
  return Design{16,
                {{1, 2, 3, 4},    {5, 6, 7, 8},     {9, 10, 11, 12},  {13, 14, 15, 16},
                 {1, 5, 9, 13},   {1, 6, 11, 16},   {1, 7, 12, 14},   {1, 8, 10, 15},
                 {2, 6, 10, 14},  {2, 5, 12, 15},   {2, 8, 11, 13},   {2, 7, 9, 16},
                 {3, 7, 11, 15},  {3, 5, 10, 16},   {1, 6, 12, 13},   {3, 8, 9, 14},
                 {4, 8, 12, 16},  {4, 5, 11, 14},   {4, 7, 10, 13},   {4, 6, 9, 15}}};
}

// Final (25,5,1) block list, 30 blocks.
inline Design twenty_five_point_design() {
  return Design{25,
                {{1, 2, 3, 4, 5},      {6, 7, 8, 9, 10},     {11, 12, 13, 14, 15},
                 {16, 17, 18, 19, 20}, {21, 22, 23, 24, 25}, {1, 6, 11, 16, 21},
                 {2, 7, 12, 17, 21},   {3, 8, 13, 18, 21},   {4, 9, 14, 19, 21},
                 {5, 10, 15, 20, 21},  {2, 8, 14, 20, 22},   {3, 10, 11, 19, 22},
                 {5, 9, 12, 16, 22},   {1, 7, 15, 18, 22},   {4, 6, 13, 17, 22},
                 {3, 9, 15, 17, 23},   {5, 6, 14, 18, 23},   {4, 7, 11, 20, 23},
                 {2, 10, 13, 16, 23},  {1, 8, 12, 19, 23},   {4, 10, 12, 18, 24},
                 {1, 9, 13, 20, 24},   {2, 6, 15, 19, 24},   {5, 8, 11, 17, 24},
                 {3, 7, 14, 16, 24},   {5, 7, 13, 19, 25},   {4, 8, 15, 16, 25},
                 {1, 10, 14, 17, 25},  {3, 6, 12, 20, 25},   {2, 9, 11, 18, 25}}};
}

// Order-3 squares built from a*x + y, a = 1, 2.
inline const Rows kOrder3SquareA{{2, 3, 1}, {3, 1, 2}, {1, 2, 3}};
inline const Rows kOrder3SquareB{{3, 1, 2}, {2, 3, 1}, {1, 2, 3}};

// An orthogonal and a non-orthogonal pair of order 3, second squares
// relabelled from 4..6 to 1..3.
inline const Rows kCyclic3{{1, 2, 3}, {2, 3, 1}, {3, 1, 2}};
inline const Rows kOrthogonalPartner3{{1, 2, 3}, {3, 1, 2}, {2, 3, 1}};
inline const Rows kNonOrthogonalPartner3{{3, 2, 1}, {2, 1, 3}, {1, 3, 2}};

// Complete MOLS of order 5 as printed, already shifted into 1..5, 6..10,
// 11..15 and 16..20.
inline const std::vector<Rows> kOrder5PrintedSquares{
    {{1, 2, 3, 4, 5}, {2, 3, 5, 1, 4}, {3, 5, 4, 2, 1}, {4, 1, 2, 5, 3}, {5, 4, 1, 3, 2}},
    {{6, 7, 8, 9, 10}, {8, 10, 9, 7, 6}, {9, 6, 7, 10, 8}, {10, 9, 6, 8, 7}, {7, 8, 10, 6, 9}},
    {{11, 12, 13, 14, 15}, {14, 11, 12, 15, 13}, {15, 14, 11, 13, 12}, {12, 13, 15, 11, 14},
     {13, 15, 14, 12, 11}},
    {{16, 17, 18, 19, 20}, {20, 19, 16, 18, 17}, {17, 18, 20, 16, 19}, {18, 20, 19, 17, 16},
     {19, 16, 17, 20, 18}},
};

// The juxtaposition of the four squares above, row-major cells.
inline const std::vector<std::vector<std::uint32_t>> kOrder5PrintedJuxtaposition{
    {1, 6, 11, 16},  {2, 7, 12, 17},  {3, 8, 13, 18},  {4, 9, 14, 19},  {5, 10, 15, 20},
    {2, 8, 14, 20},  {3, 10, 11, 19}, {5, 9, 12, 16},  {1, 7, 15, 18},  {4, 6, 13, 17},
    {3, 9, 15, 17},  {5, 6, 14, 18},  {4, 7, 11, 20},  {2, 10, 13, 16}, {1, 8, 12, 19},
    {4, 10, 12, 18}, {1, 9, 13, 20},  {2, 6, 15, 19},  {5, 8, 11, 17},  {3, 7, 14, 16},
    {5, 7, 13, 19},  {4, 8, 15, 16},  {1, 10, 14, 17}, {3, 6, 12, 20},  {2, 9, 11, 18},
};

/// The printed order-5 squares with symbols shifted back to 1..5.
inline std::vector<LatinSquare> order5_printed_squares_normalized() {
  std::vector<LatinSquare> out;
  for (std::uint32_t i = 0; i < kOrder5PrintedSquares.size(); ++i) {
    Rows rows = kOrder5PrintedSquares[i];
    for (auto& row : rows) {
      for (auto& cell : row) cell -= i * 5;
    }
    out.push_back(LatinSquare::from_rows(rows));
  }
  return out;
}

// Referee rows of the 9-proposal, capacity-3 assignment table.
inline const std::vector<std::vector<std::uint32_t>> kNineProposalTable{
    {1, 2, 3}, {4, 5, 6}, {7, 8, 9}, {1, 4, 7}, {1, 5, 8}, {1, 6, 9},
    {2, 4, 9}, {2, 5, 7}, {2, 6, 8}, {3, 4, 8}, {3, 5, 9}, {3, 6, 7}};

}  // namespace ordcover::fixtures

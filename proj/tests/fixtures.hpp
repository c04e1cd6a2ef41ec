#pragma once

#include <algorithm>
#include <array>
#include <vector>

#include "magic/models.hpp"

// Two classical 8x8 Franklin squares of sum 260.
inline magic::Square franklin_f1() {
  return {{52, 61, 4, 13, 20, 29, 36, 45}, {14, 3, 62, 51, 46, 35, 30, 19},
          {53, 60, 5, 12, 21, 28, 37, 44}, {11, 6, 59, 54, 43, 38, 27, 22},
          {55, 58, 7, 10, 23, 26, 39, 42}, {9, 8, 57, 56, 41, 40, 25, 24},
          {50, 63, 2, 15, 18, 31, 34, 47}, {16, 1, 64, 49, 48, 33, 32, 17}};
}

inline magic::Square franklin_f2() {
  return {{17, 47, 30, 36, 21, 43, 26, 40}, {32, 34, 19, 45, 28, 38, 23, 41},
          {33, 31, 46, 20, 37, 27, 42, 24}, {48, 18, 35, 29, 44, 22, 39, 25},
          {49, 15, 62, 4, 53, 11, 58, 8},   {64, 2, 51, 13, 60, 6, 55, 9},
          {1, 63, 14, 52, 5, 59, 10, 56},   {16, 50, 3, 61, 12, 54, 7, 57}};
}

// Multiplication table of S3 with elements (123), (132), (23), (12), (13), e.
inline std::vector<std::vector<std::size_t>> s3_table() {
  using P = std::array<std::size_t, 3>;
  const std::vector<P> g{{1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {1, 0, 2}, {2, 1, 0}, {0, 1, 2}};
  std::vector<std::vector<std::size_t>> t(6, std::vector<std::size_t>(6));
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      P c{g[a][g[b][0]], g[a][g[b][1]], g[a][g[b][2]]};
      t[a][b] = static_cast<std::size_t>(std::find(g.begin(), g.end(), c) - g.begin());
    }
  return t;
}

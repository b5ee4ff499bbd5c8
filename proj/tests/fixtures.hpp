#pragma once

#include <vector>

#include "vrsplit/circular.hpp"
#include "vrsplit/metric.hpp"

namespace fixtures {

using vrsplit::distance_matrix;
using vrsplit::rational;

inline distance_matrix<rational> from_ints(const std::vector<std::vector<long>>& rows) {
  int n = static_cast<int>(rows.size());
  distance_matrix<rational> m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = rational(rows[i][j]);
  return m;
}

// Hexagon with all circular weights 1: the 6-point circular decomposable
// metric with distance pattern 5, 8, 9.
inline distance_matrix<rational> hexagon() {
  return from_ints({
      {0, 5, 8, 9, 8, 5},
      {5, 0, 5, 8, 9, 8},
      {8, 5, 0, 5, 8, 9},
      {9, 8, 5, 0, 5, 8},
      {8, 9, 8, 5, 0, 5},
      {5, 8, 9, 8, 5, 0},
  });
}

// Five points on the unit-circumference circle at 0, .1, .3, .6, .8 with the
// geodesic metric (exact rationals).
inline distance_matrix<rational> five_circle_points() {
  std::vector<rational> pos = {rational(0), rational(1, 10), rational(3, 10), rational(6, 10),
                               rational(8, 10)};
  distance_matrix<rational> m(5);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      rational gap = pos[i] < pos[j] ? pos[j] - pos[i] : pos[i] - pos[j];
      m(i, j) = std::min(gap, 1 - gap);
    }
  return m;
}

// 7-point circular decomposable metric: isolation indices and the distance
// matrix they produce.
inline distance_matrix<rational> seven_point_alpha() {
  return from_ints({
      {0, 1, 1, 1, 2, 2, 1},
      {1, 0, 2, 3, 1, 1, 1},
      {1, 2, 0, 2, 1, 1, 1},
      {1, 3, 2, 0, 1, 1, 1},
      {2, 1, 1, 1, 0, 1, 1},
      {2, 1, 1, 1, 1, 0, 2},
      {1, 1, 1, 1, 1, 2, 0},
  });
}

inline distance_matrix<rational> seven_point_metric() {
  return from_ints({
      {0, 9, 13, 12, 13, 13, 8},
      {9, 0, 8, 13, 16, 18, 15},
      {13, 8, 0, 9, 14, 18, 17},
      {12, 13, 9, 0, 7, 13, 14},
      {13, 16, 14, 7, 0, 8, 11},
      {13, 18, 18, 13, 8, 0, 7},
      {8, 15, 17, 14, 11, 7, 0},
  });
}

// 12-point metric whose Mayer-Vietoris recursion blocks at r = 45: weights 1
// except six chords of weight 5.
inline distance_matrix<rational> twelve_point_alpha() {
  std::vector<std::vector<long>> a(12, std::vector<long>(12, 1));
  for (int i = 0; i < 12; ++i) a[i][i] = 0;
  auto heavy = [&](int i, int j) { a[i - 1][j - 1] = a[j - 1][i - 1] = 5; };
  heavy(1, 4);
  heavy(2, 11);
  heavy(3, 6);
  heavy(5, 8);
  heavy(7, 10);
  heavy(9, 12);
  return from_ints(a);
}

inline distance_matrix<rational> twelve_point_metric() {
  return from_ints({
      {0, 15, 28, 39, 48, 47, 52, 47, 48, 39, 28, 15},
      {15, 0, 15, 28, 39, 40, 47, 44, 47, 40, 39, 28},
      {28, 15, 0, 15, 28, 39, 48, 47, 52, 47, 48, 39},
      {39, 28, 15, 0, 15, 28, 39, 40, 47, 44, 47, 40},
      {48, 39, 28, 15, 0, 15, 28, 39, 48, 47, 52, 47},
      {47, 40, 39, 28, 15, 0, 15, 28, 39, 40, 47, 44},
      {52, 47, 48, 39, 28, 15, 0, 15, 28, 39, 48, 47},
      {47, 44, 47, 40, 39, 28, 15, 0, 15, 28, 39, 40},
      {48, 47, 52, 47, 48, 39, 28, 15, 0, 15, 28, 39},
      {39, 40, 47, 44, 47, 40, 39, 28, 15, 0, 15, 28},
      {28, 39, 48, 47, 52, 47, 48, 39, 28, 15, 0, 15},
      {15, 28, 39, 40, 47, 44, 47, 40, 39, 28, 15, 0},
  });
}

// Shortest-path metric of the complete bipartite graph K_{2,3}: points 0,1 on
// the small side, 2,3,4 on the large side. Split-prime.
inline distance_matrix<rational> k23_metric() {
  distance_matrix<rational> m(5);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      if (i == j)
        m(i, j) = 0;
      else if ((i < 2) == (j < 2))
        m(i, j) = 2;
      else
        m(i, j) = 1;
    }
  return m;
}

// Shortest-path metric of the 3-cube (Hamming distance on 3 bits). Split-prime.
inline distance_matrix<rational> h3_metric() {
  distance_matrix<rational> m(8);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) m(i, j) = rational(__builtin_popcount(i ^ j));
  return m;
}

// Circular decomposition with the identity order from an alpha matrix.
inline vrsplit::circular_decomposition<rational> cd_from_alpha(
    const distance_matrix<rational>& alpha) {
  std::vector<int> order(alpha.size());
  for (int i = 0; i < alpha.size(); ++i) order[i] = i;
  return {order, alpha};
}

// All-ones off-diagonal alpha on n points.
inline vrsplit::circular_decomposition<rational> cd_ones(int n) {
  distance_matrix<rational> a(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = rational(i == j ? 0 : 1);
  return cd_from_alpha(a);
}

}  // namespace fixtures

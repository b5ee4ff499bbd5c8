#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "vrsplit/metric.hpp"

namespace vrsplit {

// A split A|B of {0..n-1}, stored as the bitmask of the side containing
// point 0 so that {A,B} == {B,A}. Supports n <= 63.
struct split {
  std::uint64_t side0;  // side containing point 0
  int n;

  split(std::uint64_t mask, int n_) : side0(mask), n(n_) {
    std::uint64_t full = (n_ >= 64) ? ~0ull : ((1ull << n_) - 1);
    if (n_ > 63) throw std::invalid_argument("split: n > 63 unsupported");
    side0 &= full;
    if (!(side0 & 1ull)) side0 = full & ~side0;
    if (side0 == 0 || side0 == full)
      throw std::invalid_argument("split: both sides must be nonempty");
  }

  std::uint64_t other() const {
    std::uint64_t full = (1ull << n) - 1;
    return full & ~side0;
  }
  bool contains0(int x) const { return (side0 >> x) & 1ull; }
  bool same_side(int x, int y) const { return contains0(x) == contains0(y); }

  std::vector<int> side_of_0() const {
    std::vector<int> v;
    for (int i = 0; i < n; ++i)
      if ((side0 >> i) & 1ull) v.push_back(i);
    return v;
  }
  std::vector<int> other_side() const {
    std::vector<int> v;
    for (int i = 0; i < n; ++i)
      if (!((side0 >> i) & 1ull)) v.push_back(i);
    return v;
  }

  auto operator<=>(const split& o) const = default;
};

// delta_{A|B}(x,y): 1 across the split, 0 within a side.
inline int split_metric(const split& s, int x, int y) { return s.same_side(x, y) ? 0 : 1; }

template <typename S>
struct weighted_split_system {
  int n = 0;
  std::vector<std::pair<split, S>> entries;  // canonically sorted, weights > 0

  void add(const split& s, S weight) {
    if (!(weight > S(0))) throw std::invalid_argument("split weight must be positive");
    for (auto& e : entries)
      if (e.first == s) throw std::invalid_argument("duplicate split");
    entries.push_back({s, std::move(weight)});
  }
  void canonicalize() {
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first.side0 < b.first.side0; });
  }
  size_t size() const { return entries.size(); }

  bool operator==(const weighted_split_system& o) const {
    if (n != o.n || entries.size() != o.entries.size()) return false;
    for (size_t i = 0; i < entries.size(); ++i)
      if (entries[i].first != o.entries[i].first ||
          !numeric_traits<S>::eq(entries[i].second, o.entries[i].second))
        return false;
    return true;
  }
};

// beta coefficient of two (not necessarily distinct) point pairs.
template <typename S>
S beta(const distance_matrix<S>& m, int a1, int a2, int b1, int b2) {
  S cross1 = m(a1, b1) + m(a2, b2);
  S cross2 = m(a1, b2) + m(a2, b1);
  S straight = m(a1, a2) + m(b1, b2);
  return std::max({cross1, cross2, straight}) - straight;
}

// Isolation index: half the minimum beta over all quadruples drawn from the
// two sides. The half calibrates weights so that synthesize_metric inverts
// enumerate_d_splits exactly.
template <typename S>
S isolation_index(const distance_matrix<S>& m, const split& s) {
  auto a = s.side_of_0(), b = s.other_side();
  bool first = true;
  S best(0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = i; j < a.size(); ++j)
      for (size_t k = 0; k < b.size(); ++k)
        for (size_t l = k; l < b.size(); ++l) {
          S v = beta(m, a[i], a[j], b[k], b[l]);
          if (first || v < best) best = std::move(v), first = false;
          if (numeric_traits<S>::is_zero(best)) return S(0);
        }
  return numeric_traits<S>::half(best);
}

struct capacity_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// All d-splits (isolation index > 0) with their weights. Cost grows as
// 2^(n-1) * n^4; the cap keeps this at desk scale.
template <typename S>
weighted_split_system<S> enumerate_d_splits(const distance_matrix<S>& m, int cap = 16) {
  int n = m.size();
  if (n > cap)
    throw capacity_error(
        "enumerate_d_splits: n exceeds the exhaustive cap; use the circular pipeline or raise "
        "the cap");
  weighted_split_system<S> sys;
  sys.n = n;
  if (n < 2) return sys;
  std::uint64_t top = 1ull << (n - 1);
  for (std::uint64_t mask = 1; mask < top; ++mask) {
    // mask ranges over nonempty subsets of {1..n-1}; the complement holds 0.
    split s((~(mask << 1)) & ((1ull << n) - 1), n);
    S w = isolation_index(m, s);
    if (!numeric_traits<S>::is_zero(w)) sys.entries.push_back({s, std::move(w)});
  }
  sys.canonicalize();
  return sys;
}

template <typename S>
distance_matrix<S> synthesize_metric(const weighted_split_system<S>& sys) {
  distance_matrix<S> d(sys.n);
  for (auto& [s, w] : sys.entries)
    for (int i = 0; i < sys.n; ++i)
      for (int j = i + 1; j < sys.n; ++j)
        if (!s.same_side(i, j)) {
          d(i, j) += w;
          d(j, i) = d(i, j);
        }
  return d;
}

// Split-prime residue d0 = m - sum of weighted split metrics. Symmetric with
// zero diagonal but in general not a metric; never validated for triangles.
template <typename S>
distance_matrix<S> residue(const distance_matrix<S>& m, const weighted_split_system<S>& sys) {
  distance_matrix<S> d0 = m;
  distance_matrix<S> synth = synthesize_metric(sys);
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j) d0(i, j) -= synth(i, j);
  return d0;
}

template <typename S>
bool is_totally_decomposable(const distance_matrix<S>& m, int cap = 16) {
  auto d0 = residue(m, enumerate_d_splits(m, cap));
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j)
      if (!numeric_traits<S>::is_zero(d0(i, j))) return false;
  return true;
}

// No three splits may exhibit the forbidden crossing pattern on four points:
// S_j(x_i) = S_j(x_0) exactly when i = j.
template <typename S>
bool is_weakly_compatible(const weighted_split_system<S>& sys) {
  int n = sys.n;
  size_t m = sys.entries.size();
  for (size_t s1 = 0; s1 < m; ++s1)
    for (size_t s2 = s1 + 1; s2 < m; ++s2)
      for (size_t s3 = s2 + 1; s3 < m; ++s3) {
        const split* sp[3] = {&sys.entries[s1].first, &sys.entries[s2].first,
                              &sys.entries[s3].first};
        for (int x0 = 0; x0 < n; ++x0)
          for (int x1 = 0; x1 < n; ++x1)
            for (int x2 = 0; x2 < n; ++x2)
              for (int x3 = 0; x3 < n; ++x3) {
                int xs[4] = {x0, x1, x2, x3};
                bool bad = true;
                for (int j = 1; j <= 3 && bad; ++j)
                  for (int i = 1; i <= 3 && bad; ++i)
                    if ((sp[j - 1]->same_side(xs[i], xs[0])) != (i == j)) bad = false;
                if (bad) return false;
              }
      }
  return true;
}

// Compatible iff some pair of sides is disjoint (equivalently: covers X, or
// one nested in the other).
inline bool splits_compatible(const split& a, const split& b) {
  std::uint64_t full = (1ull << a.n) - 1;
  std::uint64_t a0 = a.side0, a1 = full & ~a.side0;
  std::uint64_t b0 = b.side0, b1 = full & ~b.side0;
  return (a0 & b0) == 0 || (a0 & b1) == 0 || (a1 & b0) == 0 || (a1 & b1) == 0;
}

// Connected components of the incompatibility graph, as index lists into
// sys.entries.
template <typename S>
std::vector<std::vector<int>> incompatibility_components(const weighted_split_system<S>& sys) {
  int m = static_cast<int>(sys.entries.size());
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (!splits_compatible(sys.entries[i].first, sys.entries[j].first))
        parent[find(i)] = find(j);
  std::vector<std::vector<int>> comps(m);
  for (int i = 0; i < m; ++i) comps[find(i)].push_back(i);
  std::erase_if(comps, [](const auto& c) { return c.empty(); });
  return comps;
}

}  // namespace vrsplit

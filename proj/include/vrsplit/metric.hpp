#pragma once

#include <algorithm>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "vrsplit/numeric.hpp"

namespace vrsplit {

template <typename S>
class distance_matrix {
 public:
  distance_matrix() : n_(0) {}
  explicit distance_matrix(int n) : n_(n), entries_(static_cast<size_t>(n) * n, S(0)) {}
  distance_matrix(int n, std::vector<S> entries) : n_(n), entries_(std::move(entries)) {
    if (entries_.size() != static_cast<size_t>(n) * n)
      throw std::invalid_argument("distance matrix: entry count does not match n*n");
  }

  int size() const { return n_; }
  const S& operator()(int i, int j) const { return entries_[static_cast<size_t>(i) * n_ + j]; }
  S& operator()(int i, int j) { return entries_[static_cast<size_t>(i) * n_ + j]; }

  distance_matrix restrict_to(std::span<const int> points) const {
    distance_matrix r(static_cast<int>(points.size()));
    for (size_t i = 0; i < points.size(); ++i)
      for (size_t j = 0; j < points.size(); ++j)
        r(static_cast<int>(i), static_cast<int>(j)) = (*this)(points[i], points[j]);
    return r;
  }

  distance_matrix permuted(std::span<const int> order) const { return restrict_to(order); }

  bool operator==(const distance_matrix& o) const = default;

  // All distinct pairwise values, ascending. These are the critical radii of
  // the Vietoris-Rips filtration.
  std::vector<S> critical_values() const {
    std::set<S> vals;
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j) vals.insert((*this)(i, j));
    return std::vector<S>(vals.begin(), vals.end());
  }

 private:
  int n_;
  std::vector<S> entries_;
};

struct metric_violation {
  enum kind_t { negative_entry, nonzero_diagonal, asymmetry, triangle } kind;
  int i, j, k;  // k only used for triangle violations

  std::string describe() const {
    auto p = [](int a) { return std::to_string(a + 1); };
    switch (kind) {
      case negative_entry: return "negative entry at (" + p(i) + "," + p(j) + ")";
      case nonzero_diagonal: return "nonzero diagonal at (" + p(i) + "," + p(i) + ")";
      case asymmetry: return "asymmetry at (" + p(i) + "," + p(j) + ")";
      case triangle:
        return "triangle inequality violated: d(" + p(i) + "," + p(j) + ") > d(" + p(i) + "," +
               p(k) + ") + d(" + p(k) + "," + p(j) + ")";
    }
    return "";
  }
};

// Empty report means the matrix is a metric.
template <typename S>
std::vector<metric_violation> validate_metric(const distance_matrix<S>& m,
                                              bool check_triangle = true) {
  using T = numeric_traits<S>;
  std::vector<metric_violation> out;
  int n = m.size();
  for (int i = 0; i < n; ++i)
    if (!T::is_zero(m(i, i))) out.push_back({metric_violation::nonzero_diagonal, i, i, -1});
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (!T::eq(m(i, j), m(j, i))) out.push_back({metric_violation::asymmetry, i, j, -1});
      if (T::lt(m(i, j), S(0))) out.push_back({metric_violation::negative_entry, i, j, -1});
    }
  if (check_triangle)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          if (i != j && j != k && i != k && !T::le(m(i, j), m(i, k) + m(k, j)))
            out.push_back({metric_violation::triangle, i, j, k});
  return out;
}

template <typename S>
S diameter(const distance_matrix<S>& m, std::span<const int> subset) {
  if (subset.empty()) throw std::domain_error("diameter of empty subset");
  S best(0);
  for (size_t i = 0; i < subset.size(); ++i)
    for (size_t j = i + 1; j < subset.size(); ++j)
      best = std::max(best, m(subset[i], subset[j]));
  return best;
}

template <typename S>
S radius(const distance_matrix<S>& m, std::span<const int> subset) {
  if (subset.empty()) throw std::domain_error("radius of empty subset");
  bool first = true;
  S best(0);
  for (int c = 0; c < m.size(); ++c) {
    S ecc(0);
    for (int p : subset) ecc = std::max(ecc, m(c, p));
    if (first || ecc < best) best = ecc, first = false;
  }
  return best;
}

template <typename S>
std::vector<int> all_points(const distance_matrix<S>& m) {
  std::vector<int> v(m.size());
  for (int i = 0; i < m.size(); ++i) v[i] = i;
  return v;
}

template <typename S>
S diameter(const distance_matrix<S>& m) {
  auto pts = all_points(m);
  return diameter(m, std::span<const int>(pts));
}

template <typename S>
S radius(const distance_matrix<S>& m) {
  auto pts = all_points(m);
  return radius(m, std::span<const int>(pts));
}

}  // namespace vrsplit

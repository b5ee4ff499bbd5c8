#pragma once

#include <bitset>
#include <stdexcept>
#include <utility>
#include <vector>

#include "vrsplit/metric.hpp"

namespace vrsplit {

constexpr int max_points = 128;

// Simple undirected graph on 0..n-1 with bitset adjacency rows.
struct ugraph {
  int n = 0;
  std::vector<std::bitset<max_points>> adj;

  ugraph() = default;
  explicit ugraph(int n_) : n(n_), adj(n_) {
    if (n_ > max_points) throw std::invalid_argument("graph exceeds max_points");
  }

  void add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("self loop");
    adj[u].set(v);
    adj[v].set(u);
  }
  void remove_edge(int u, int v) {
    adj[u].reset(v);
    adj[v].reset(u);
  }
  bool has_edge(int u, int v) const { return adj[u].test(v); }
  int degree(int v) const { return static_cast<int>(adj[v].count()); }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (has_edge(u, v)) out.push_back({u, v});
    return out;
  }
  size_t edge_count() const {
    size_t c = 0;
    for (int u = 0; u < n; ++u) c += adj[u].count();
    return c / 2;
  }

  ugraph induced(const std::vector<int>& verts) const {
    ugraph g(static_cast<int>(verts.size()));
    for (size_t i = 0; i < verts.size(); ++i)
      for (size_t j = i + 1; j < verts.size(); ++j)
        if (has_edge(verts[i], verts[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    return g;
  }

  bool operator==(const ugraph& o) const = default;
};

enum class vr_convention { open, closed };  // diam < r vs diam <= r

// 1-skeleton of the Vietoris-Rips complex at radius r.
template <typename S>
ugraph vr_graph(const distance_matrix<S>& m, const S& r,
                vr_convention conv = vr_convention::open) {
  ugraph g(m.size());
  for (int i = 0; i < m.size(); ++i)
    for (int j = i + 1; j < m.size(); ++j) {
      bool in = conv == vr_convention::open ? m(i, j) < r : m(i, j) <= r;
      if (in) g.add_edge(i, j);
    }
  return g;
}

}  // namespace vrsplit

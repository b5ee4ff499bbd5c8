#pragma once

#include <algorithm>
#include <vector>

#include "vrsplit/graph.hpp"

namespace vrsplit {

// Simplices stored per dimension as lexicographically sorted vertex lists.
// Construction routines only emit complexes closed under faces; the flag can
// be re-verified with is_closed_under_faces.
class simplicial_complex {
 public:
  int n_vertices = 0;
  std::vector<std::vector<std::vector<int>>> dims;  // dims[d][i] = sorted vertices

  int maxdim() const { return static_cast<int>(dims.size()) - 1; }
  long count(int d) const {
    return d >= 0 && d <= maxdim() ? static_cast<long>(dims[d].size()) : 0;
  }
  long total() const {
    long t = 0;
    for (auto& ds : dims) t += static_cast<long>(ds.size());
    return t;
  }

  // Index of a face among the d-simplices, -1 if absent.
  int index_of(int d, const std::vector<int>& face) const {
    if (d < 0 || d > maxdim()) return -1;
    auto& v = dims[d];
    auto it = std::lower_bound(v.begin(), v.end(), face);
    if (it == v.end() || *it != face) return -1;
    return static_cast<int>(it - v.begin());
  }
  bool contains(int d, const std::vector<int>& face) const { return index_of(d, face) >= 0; }

  long euler_characteristic() const {
    long chi = 0;
    for (int d = 0; d <= maxdim(); ++d) chi += (d % 2 == 0 ? 1 : -1) * count(d);
    return chi;
  }

  // Simplexwise inclusion test.
  bool subcomplex_of(const simplicial_complex& super) const {
    for (int d = 0; d <= maxdim(); ++d)
      for (auto& s : dims[d])
        if (!super.contains(d, s)) return false;
    return true;
  }
};

inline bool is_closed_under_faces(const simplicial_complex& c) {
  for (int d = 1; d <= c.maxdim(); ++d)
    for (auto& s : c.dims[d]) {
      std::vector<int> face(s.size() - 1);
      for (size_t drop = 0; drop < s.size(); ++drop) {
        size_t w = 0;
        for (size_t i = 0; i < s.size(); ++i)
          if (i != drop) face[w++] = s[i];
        if (!c.contains(d - 1, face)) return false;
      }
    }
  return true;
}

namespace detail {
inline void expand_cliques(const ugraph& g, std::vector<int>& cur,
                           const std::bitset<max_points>& allowed, int maxdim,
                           simplicial_complex& out) {
  int d = static_cast<int>(cur.size()) - 1;
  if (d >= 0) out.dims[d].push_back(cur);
  if (d == maxdim) return;
  int start = cur.empty() ? 0 : cur.back() + 1;
  for (int v = start; v < g.n; ++v) {
    if (!allowed.test(v)) continue;
    cur.push_back(v);
    expand_cliques(g, cur, allowed & g.adj[v], maxdim, out);
    cur.pop_back();
  }
}
}  // namespace detail

// Clique complex of g up to maxdim. Vertex lists come out lex-sorted.
inline simplicial_complex clique_complex(const ugraph& g, int maxdim) {
  simplicial_complex c;
  c.n_vertices = g.n;
  c.dims.assign(maxdim + 1, {});
  std::bitset<max_points> all;
  for (int v = 0; v < g.n; ++v) all.set(v);
  std::vector<int> cur;
  detail::expand_cliques(g, cur, all, maxdim, c);
  for (auto& ds : c.dims) std::sort(ds.begin(), ds.end());
  return c;
}

// Vietoris-Rips complex: subsets of diameter < r (open, the default) or
// <= r (closed), by clique expansion of the 1-skeleton.
template <typename S>
simplicial_complex vr_complex(const distance_matrix<S>& m, const S& r, int maxdim,
                              vr_convention conv = vr_convention::open) {
  if (maxdim > m.size() - 1) maxdim = m.size() - 1;
  return clique_complex(vr_graph(m, r, conv), maxdim);
}

}  // namespace vrsplit

#pragma once

#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "vrsplit/cyclic.hpp"
#include "vrsplit/graph.hpp"

namespace vrsplit {

// Homotopy type of a clique complex of a cyclic graph: an odd sphere, a wedge
// of even spheres, a point, or a discrete set. `isolated` carries extra
// isolated points re-attached by degenerate-point bookkeeping.
struct homotopy_type {
  enum kind_t { odd_sphere, wedge_even_spheres, contractible, discrete } kind = contractible;
  int l = 0;         // odd_sphere: S^{2l+1}; wedge: copies of S^{2l}
  long count = 0;    // wedge summands / discrete point count
  long isolated = 0;

  long betti(int k) const {
    long b = 0;
    switch (kind) {
      case odd_sphere:
        if (k == 0) b = 1;
        if (k == 2 * l + 1) b += 1;
        break;
      case wedge_even_spheres:
        if (l == 0)
          b = (k == 0) ? count + 1 : 0;
        else {
          if (k == 0) b = 1;
          if (k == 2 * l) b = count;
        }
        break;
      case contractible:
        b = (k == 0) ? 1 : 0;
        break;
      case discrete:
        b = (k == 0) ? count : 0;
        break;
    }
    if (k == 0) b += isolated;
    return b;
  }

  std::vector<long> betti_vector(int maxk) const {
    std::vector<long> v(maxk + 1);
    for (int k = 0; k <= maxk; ++k) v[k] = betti(k);
    return v;
  }

  std::string describe() const {
    std::string base;
    switch (kind) {
      case odd_sphere: base = "S^" + std::to_string(2 * l + 1); break;
      case wedge_even_spheres:
        base = "wedge of " + std::to_string(count) + " copies of S^" + std::to_string(2 * l);
        break;
      case contractible: base = "contractible"; break;
      case discrete: base = std::to_string(count) + " discrete points"; break;
    }
    if (isolated > 0) base += " plus " + std::to_string(isolated) + " isolated point(s)";
    return base;
  }

  bool operator==(const homotopy_type&) const = default;
};

inline long betti(const homotopy_type& t, int k) { return t.betti(k); }

// Validation report for a direction function M on a graph with the cyclic
// vertex order 0 < 1 < ... < n-1.
struct orient_report {
  bool ok = false;
  bool ambiguous = false;  // some edge {a, M(a)} with a = M(b): forces a cone
  int a = -1, b = -1;      // witness pair
  std::string message;
};

// Checks that (g, M) is a cyclic graph: M has no fixed point, the orientation
// conditions hold, and every short edge {a,b} with b in (a, M(a)] pulls in
// {a+1,b} and {a,b-1}. Ambiguity (both directions admissible) is reported
// separately; such complexes are cones.
inline orient_report orient_and_check(const ugraph& g, const std::vector<int>& M) {
  int n = g.n;
  orient_report rep;
  if (static_cast<int>(M.size()) != n) {
    rep.message = "M is not total";
    return rep;
  }
  for (int a = 0; a < n; ++a)
    if (M[a] == a || M[a] < 0 || M[a] >= n) {
      rep.a = a;
      rep.message = "M(" + std::to_string(a + 1) + ") invalid or a fixed point";
      return rep;
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      if (cyc_lt_le(n, a, b, M[a]) && !cyc_le_lt(n, M[b], a, b)) {
        rep.a = a, rep.b = b;
        rep.message = "orientation condition failed: a<b<=M(a) but not M(b)<=a<b at (" +
                      std::to_string(a + 1) + "," + std::to_string(b + 1) + ")";
        return rep;
      }
      if (cyc_between(n, M[b], a, b) && !cyc_lt_le(n, a, b, M[a])) {
        rep.a = a, rep.b = b;
        rep.message = "orientation condition failed: M(b)<a<b but not a<b<=M(a) at (" +
                      std::to_string(a + 1) + "," + std::to_string(b + 1) + ")";
        return rep;
      }
    }
  for (auto [u, v] : g.edges()) {
    for (int dir = 0; dir < 2; ++dir) {
      int a = dir ? v : u, b = dir ? u : v;
      if (!cyc_lt_le(n, a, b, M[a])) continue;
      if (a == M[b] && cyc_lt_le(n, b, a, M[b])) {
        rep.ambiguous = true;
        rep.a = a, rep.b = b;
        rep.message = "ambiguous orientation at {" + std::to_string(a + 1) + "," +
                      std::to_string(b + 1) + "}: complex is a cone";
        return rep;
      }
      if (b == cyc_add(n, a, 1)) continue;
      if (!g.has_edge(cyc_add(n, a, 1), b) || !g.has_edge(a, cyc_add(n, b, -1))) {
        rep.a = a, rep.b = b;
        rep.message = "edge condition failed at {" + std::to_string(a + 1) + "," +
                      std::to_string(b + 1) + "}";
        return rep;
      }
    }
  }
  rep.ok = true;
  return rep;
}

struct dismantle_result {
  std::vector<int> kept;           // surviving vertices, ascending original labels
  std::vector<int> removal_order;  // dominated vertices in removal order
  ugraph terminal;                 // induced graph on kept, relabeled 0..m-1
};

// Repeatedly removes the smallest vertex whose closed neighborhood is
// contained in another live vertex's. Folding preserves the homotopy type of
// the clique complex.
inline dismantle_result dismantle(const ugraph& g) {
  int n = g.n;
  std::bitset<max_points> alive;
  for (int v = 0; v < n; ++v) alive.set(v);
  dismantle_result res;
  bool progress = true;
  while (progress) {
    progress = false;
    for (int v = 0; v < n && !progress; ++v) {
      if (!alive.test(v)) continue;
      auto nv = (g.adj[v] | std::bitset<max_points>().set(v)) & alive;
      for (int u = 0; u < n; ++u) {
        if (u == v || !alive.test(u)) continue;
        auto nu = (g.adj[u] | std::bitset<max_points>().set(u)) & alive;
        if ((nv & ~nu).none()) {
          alive.reset(v);
          res.removal_order.push_back(v);
          progress = true;
          break;
        }
      }
    }
  }
  for (int v = 0; v < n; ++v)
    if (alive.test(v)) res.kept.push_back(v);
  res.terminal = g.induced(res.kept);
  return res;
}

// Recognizes a terminal graph as the circulant C_n^k in the inherited cyclic
// order: vertex i adjacent to exactly i+-1..i+-k. Returns k, or nullopt.
inline std::optional<int> recognize_circulant(const ugraph& g) {
  int n = g.n;
  if (n == 0) return std::nullopt;
  size_t edges = g.edge_count();
  if (edges == 0) return 0;
  if (edges % n != 0) return std::nullopt;
  int k = static_cast<int>(edges / n);
  if (2 * k >= n) return std::nullopt;  // wf < 1/2 for any dismantled terminal
  for (int i = 0; i < n; ++i)
    for (int j = 1; j <= k; ++j)
      if (!g.has_edge(i, cyc_add(n, i, j))) return std::nullopt;
  return k;
}

struct winding_fraction_t {
  enum kind_t { fraction, contractible_point, edgeless } kind;
  long k = 0, n = 0;  // wf = k/n in lowest terms when kind == fraction

  bool critical(long& l_out) const {
    // wf == l/(2l+1) for some integer l >= 0
    if (kind != fraction) return false;
    long g = std::gcd(k, n);
    long kk = k / g, nn = n / g;
    if (nn == 2 * kk + 1) {
      l_out = kk;
      return true;
    }
    return false;
  }
};

// wf of a cyclic graph computed from its dismantled circulant terminal.
inline winding_fraction_t winding_fraction(const ugraph& g) {
  auto dis = dismantle(g);
  int m = static_cast<int>(dis.kept.size());
  if (m == 1) return {winding_fraction_t::contractible_point, 0, 1};
  auto k = recognize_circulant(dis.terminal);
  if (!k)
    throw std::logic_error(
        "dismantled terminal is not a circulant: input graph was not cyclic");
  if (*k == 0) return {winding_fraction_t::edgeless, 0, static_cast<long>(m)};
  long gg = std::gcd(static_cast<long>(*k), static_cast<long>(m));
  return {winding_fraction_t::fraction, *k / gg, m / gg};
}

// Homotopy type of the clique complex of a cyclic graph.
inline homotopy_type classify(const ugraph& g) {
  if (g.n == 0) throw std::invalid_argument("classify: empty graph");
  if (g.edge_count() == 0) return {homotopy_type::discrete, 0, g.n, 0};
  auto dis = dismantle(g);
  int m = static_cast<int>(dis.kept.size());
  if (m == 1) return {homotopy_type::contractible, 0, 0, 0};
  auto kopt = recognize_circulant(dis.terminal);
  if (!kopt)
    throw std::logic_error(
        "dismantled terminal is not a circulant: input graph was not cyclic");
  int k = *kopt;
  if (k == 0) return {homotopy_type::discrete, 0, m, 0};
  long gg = std::gcd(static_cast<long>(k), static_cast<long>(m));
  long kk = k / gg, nn = m / gg;
  if (nn == 2 * kk + 1)  // critical: wedge of n-2k-1 copies of S^{2l}
    return {homotopy_type::wedge_even_spheres, static_cast<int>(kk), m - 2 * k - 1, 0};
  for (long l = 0;; ++l) {
    // l/(2l+1) < k/n < (l+1)/(2l+3), strictly; wf < 1/2 so some l matches
    bool lower = l * nn < kk * (2 * l + 1);
    bool upper = kk * (2 * l + 3) < (l + 1) * nn;
    if (lower && upper) return {homotopy_type::odd_sphere, static_cast<int>(l), 0, 0};
    if (!lower) throw std::logic_error("winding fraction outside expected range");
  }
}

}  // namespace vrsplit

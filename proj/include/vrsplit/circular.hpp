#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "vrsplit/cyclic.hpp"
#include "vrsplit/cyclic_graph.hpp"
#include "vrsplit/metric.hpp"
#include "vrsplit/splits.hpp"

namespace vrsplit {

// A circular decomposition: a cyclic order on the points (order[p] = original
// label at position p) and the matrix of circular-split weights alpha, indexed
// by positions. All sigma/M computations happen in position space.
template <typename S>
struct circular_decomposition {
  std::vector<int> order;
  distance_matrix<S> alpha;

  int size() const { return static_cast<int>(order.size()); }
};

// d(p,q) = double circular sum of alpha over the two arcs separating p and q.
template <typename S>
distance_matrix<S> metric_from_alpha(const circular_decomposition<S>& cd) {
  int n = cd.size();
  distance_matrix<S> d(n);
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) {
      S acc(0);
      for (int i = cyc_add(n, p, 1);; i = cyc_add(n, i, 1)) {
        for (int j = cyc_add(n, q, 1);; j = cyc_add(n, j, 1)) {
          acc += cd.alpha(i, j);
          if (j == p) break;
        }
        if (i == q) break;
      }
      d(p, q) = acc;
      d(q, p) = d(p, q);
    }
  return d;
}

template <typename S>
struct alpha_recovery {
  std::optional<circular_decomposition<S>> cd;
  // on rejection: the most negative coefficient and its position pair
  S worst = S(0);
  int i = -1, j = -1;
};

namespace detail {
template <typename S>
distance_matrix<S> position_metric(const distance_matrix<S>& m, const std::vector<int>& order) {
  return m.restrict_to(order);
}
}  // namespace detail

// Solves d = sum alpha_ij * delta_ij for the full circular basis on the given
// order. The solution is the cyclic quadrangle second difference
//   2 alpha(p,q) = d(p,q) + d(p-1,q-1) - d(p,q-1) - d(p-1,q).
// Accepts iff every coefficient is nonnegative; the metric is then circular
// decomposable with respect to this order.
template <typename S>
alpha_recovery<S> alpha_from_metric(const distance_matrix<S>& m, const std::vector<int>& order) {
  int n = m.size();
  if (static_cast<int>(order.size()) != n)
    throw std::invalid_argument("alpha_from_metric: order size mismatch");
  auto d = detail::position_metric(m, order);
  distance_matrix<S> alpha(n);
  alpha_recovery<S> out;
  bool reject = false;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      if (p == q) continue;
      int pm = cyc_add(n, p, -1), qm = cyc_add(n, q, -1);
      S v = numeric_traits<S>::half(d(p, q) + d(pm, qm) - d(p, qm) - d(pm, q));
      alpha(p, q) = v;
      if (numeric_traits<S>::lt(v, S(0)) && (!reject || v < out.worst)) {
        reject = true;
        out.worst = v;
        out.i = p;
        out.j = q;
      }
    }
  if (reject) return out;
  circular_decomposition<S> cd{order, std::move(alpha)};
  // the split metrics form a basis, so reconstruction is an identity check
  if (!(metric_from_alpha(cd) == d))
    throw std::logic_error("alpha_from_metric: reconstruction failed");
  out.cd = std::move(cd);
  return out;
}

// Exhaustive search over cyclic orders (point 0 pinned, reflections skipped)
// with partial quadrangle pruning. Desk-scale; pass an explicit order to
// bypass the cap.
template <typename S>
std::optional<circular_decomposition<S>> recognize_circular(const distance_matrix<S>& m,
                                                            int cap = 11) {
  int n = m.size();
  if (n > cap)
    throw capacity_error("recognize_circular: n exceeds the exhaustive cap; supply an order");
  if (n <= 2) {
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    auto rec = alpha_from_metric(m, order);
    if (rec.cd) return rec.cd;
    return std::nullopt;
  }
  std::vector<int> order(n, -1);
  std::vector<char> used(n, 0);
  order[0] = 0;
  used[0] = 1;
  std::optional<circular_decomposition<S>> found;

  auto quad = [&](int pm, int p, int qm, int q) {
    return m(order[p], order[q]) + m(order[pm], order[qm]) - m(order[p], order[qm]) -
           m(order[pm], order[q]);
  };
  auto rec = [&](auto&& self, int pos) -> bool {
    if (found) return true;
    if (pos == n) {
      auto r = alpha_from_metric(m, order);
      if (r.cd) {
        found = std::move(r.cd);
        return true;
      }
      return false;
    }
    for (int v = 1; v < n; ++v) {
      if (used[v]) continue;
      if (pos == n - 1 && order[1] > v) continue;  // fix reflection: order[1] < order[n-1]
      order[pos] = v;
      used[v] = 1;
      // prune on quadrangle entries fully determined by the placed prefix
      bool ok = true;
      for (int p = 1; p + 1 < pos && ok; ++p)
        if (numeric_traits<S>::lt(quad(p - 1, p, pos - 1, pos), S(0))) ok = false;
      if (ok && self(self, pos + 1)) return true;
      used[v] = 0;
      order[pos] = -1;
    }
    return false;
  };
  rec(rec, 1);
  return found;
}

struct sigma_table {
  std::vector<int> sigma;          // position space; -1 where undefined
  std::vector<int> undefined_set;  // positions with undefined sigma

  bool defined_everywhere() const { return undefined_set.empty(); }
};

// sigma(c): the last a in c+1..c-1 with the arc sum of column c from a+1 to c
// at least the sum from c+1 to a. Exact comparisons; ties keep scanning.
template <typename S>
sigma_table compute_sigma(const circular_decomposition<S>& cd) {
  int n = cd.size();
  sigma_table st;
  st.sigma.assign(n, -1);
  for (int c = 0; c < n; ++c) {
    S total(0);
    for (int i = 0; i < n; ++i) total += cd.alpha(i, c);
    S right(0);  // circular sum of alpha_{ic} for i in (c, a]
    int best = -1;
    for (int step = 1; step < n; ++step) {
      int a = cyc_add(n, c, step);
      right += cd.alpha(a, c);
      if (numeric_traits<S>::le(right + right, total)) best = a;
    }
    st.sigma[c] = best;
    if (best == -1) st.undefined_set.push_back(c);
  }
  return st;
}

struct monotone_certificate {
  std::vector<int> M;     // last m with sigma(m) < a < m
  std::vector<int> Mbar;  // adjusted direction function
  bool star_holds = false;
};

// Builds M and Mbar from sigma and evaluates Property (star):
// a < b <= sigma(a)  implies  sigma(a) <= sigma(b) < a.
template <typename S>
monotone_certificate compute_M(const circular_decomposition<S>& cd, const sigma_table& st) {
  int n = cd.size();
  if (!st.undefined_set.empty()) {
    std::string pts;
    for (int c : st.undefined_set) pts += (pts.empty() ? "" : ", ") + std::to_string(c + 1);
    throw std::invalid_argument("sigma undefined at positions {" + pts +
                                "}: remove degenerate points first");
  }
  monotone_certificate cert;
  cert.M.assign(n, -1);
  cert.Mbar.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int step = 1; step < n; ++step) {
      int mm = cyc_add(n, a, step);
      if (cyc_between(n, st.sigma[mm], a, mm)) cert.M[a] = mm;
    }
    if (cert.M[a] == -1)
      throw std::invalid_argument("M undefined at position " + std::to_string(a + 1));
  }
  for (int a = 0; a < n; ++a) {
    int mm = cert.M[a];
    if (cyc_le_lt(n, cert.M[mm], a, mm))
      cert.Mbar[a] = mm;
    else if (cyc_between(n, mm, a, cert.M[mm]))
      cert.Mbar[a] = cyc_add(n, mm, -1);
    else
      throw std::logic_error("Mbar case split exhausted");
  }
  cert.star_holds = true;
  for (int a = 0; a < n && cert.star_holds; ++a)
    for (int b = 0; b < n; ++b)
      if (cyc_lt_le(n, a, b, st.sigma[a]) && !cyc_le_lt(n, st.sigma[a], st.sigma[b], a)) {
        cert.star_holds = false;
        break;
      }
  return cert;
}

template <typename S>
bool is_monotone(const circular_decomposition<S>& cd) {
  auto st = compute_sigma(cd);
  return compute_M(cd, st).star_holds;
}

// The four inequality families plus the non-ambiguity implications that make
// Mbar a direction function in the sense of monotone metrics. Used as the
// exhaustive cross-check against Property (star).
template <typename S>
bool monotone_definition_holds(const distance_matrix<S>& pos_metric,
                               const std::vector<int>& Mbar) {
  using T = numeric_traits<S>;
  int n = pos_metric.size();
  auto d = [&](int x, int y) { return pos_metric(x, y); };
  for (int a = 0; a < n; ++a) {
    int ma = Mbar[a];
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (b == c) continue;
        if (cyc_le_lt(n, a, b, c) && cyc_lt_le(n, a, c, ma)) {
          // a <= b < c <= Mbar(a)
          if (!T::lt(d(b, cyc_add(n, c, -1)), d(b, c))) return false;
          if (!T::le(d(cyc_add(n, b, 1), c), d(b, c))) return false;
        }
        if (cyc_between(n, ma, b, c) && cyc_lt_le(n, ma, c, a)) {
          // Mbar(a) < b < c <= a
          if (!T::lt(d(b, cyc_add(n, c, -1)), d(b, c))) return false;
          if (!T::le(d(cyc_add(n, b, 1), c), d(b, c))) return false;
        }
      }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      if (cyc_lt_le(n, a, b, Mbar[a]) && !cyc_le_lt(n, Mbar[b], a, b)) return false;
      if (cyc_between(n, Mbar[b], a, b) && !cyc_lt_le(n, a, b, Mbar[a])) return false;
    }
  return true;
}

template <typename S>
struct degenerate_removal {
  distance_matrix<S> reduced;          // metric on the surviving points
  std::vector<int> reduced_order;      // surviving original labels in cyclic order
  std::vector<std::pair<int, S>> removals;  // (original label, R_c) in removal order
};

// Iteratively removes points whose sigma is undefined; each removal records
// R_c, the distance from c to the rest at removal time. Downstream homotopy
// reports re-attach an isolated point for radii r <= R_c.
template <typename S>
degenerate_removal<S> remove_degenerate_points(const distance_matrix<S>& m,
                                               const std::vector<int>& order) {
  degenerate_removal<S> out;
  std::vector<int> cur_order = order;
  while (true) {
    if (static_cast<int>(cur_order.size()) < 3)
      throw std::domain_error("degenerate input: fewer than 3 points survive sigma cleanup");
    auto sub = m.restrict_to(cur_order);
    std::vector<int> identity(sub.size());
    for (int i = 0; i < sub.size(); ++i) identity[i] = i;
    auto rec = alpha_from_metric(sub, identity);
    if (!rec.cd) throw std::invalid_argument("metric is not circular for the given order");
    auto st = compute_sigma(*rec.cd);
    if (st.undefined_set.empty()) {
      out.reduced = std::move(sub);
      out.reduced_order = cur_order;
      return out;
    }
    int cpos = st.undefined_set.front();
    S rc;
    bool first = true;
    for (int i = 0; i < sub.size(); ++i) {
      if (i == cpos) continue;
      S v = sub(cpos, i);
      if (first || v < rc) rc = v, first = false;
    }
    out.removals.push_back({cur_order[cpos], rc});
    cur_order.erase(cur_order.begin() + cpos);
  }
}

// Closed-form homotopy type of the open VR complex of a monotone circular
// decomposable metric at radius r.
template <typename S>
homotopy_type monotone_vr_homotopy(const circular_decomposition<S>& cd, const S& r) {
  if (!(r > S(0))) throw std::invalid_argument("radius must be positive");
  if (!is_monotone(cd))
    throw std::invalid_argument("metric is not monotone: use the Mayer-Vietoris pipeline");
  auto d = metric_from_alpha(cd);
  int n = d.size();
  for (int a = 0; a < n; ++a) {  // cone vertex: every edge at a present
    bool cone = true;
    for (int b = 0; b < n && cone; ++b)
      if (b != a && !(d(a, b) < r)) cone = false;
    if (cone) return {homotopy_type::contractible, 0, 0, 0};
  }
  auto g = vr_graph(d, r, vr_convention::open);
  if (g.edge_count() == 0) return {homotopy_type::discrete, 0, n, 0};
  return classify(g);
}

}  // namespace vrsplit

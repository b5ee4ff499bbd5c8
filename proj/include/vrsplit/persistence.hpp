#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "vrsplit/homology.hpp"
#include "vrsplit/metric.hpp"

namespace vrsplit {

template <typename S>
struct bar {
  S birth;
  std::optional<S> death;  // nullopt = infinite

  bool operator==(const bar& o) const = default;
};

// Intervals are stored in the closed convention: a k-bar [b, d) contributes
// to the closed complex {diam <= r} for b <= r < d. Open-convention queries
// (the diam < r complexes) translate to birth < r <= death.
template <typename S>
struct barcode_t {
  field_tag field;
  std::vector<std::vector<bar<S>>> dims;

  int maxdim() const { return static_cast<int>(dims.size()) - 1; }

  long betti_closed(const S& r, int k) const {
    if (k < 0 || k > maxdim()) return 0;
    long c = 0;
    for (auto& b : dims[k])
      if (b.birth <= r && (!b.death || r < *b.death)) ++c;
    return c;
  }
  long betti_open(const S& r, int k) const {
    if (k < 0 || k > maxdim()) return 0;
    long c = 0;
    for (auto& b : dims[k])
      if (b.birth < r && (!b.death || r <= *b.death)) ++c;
    return c;
  }

  void normalize() {
    for (auto& ds : dims)
      std::sort(ds.begin(), ds.end(), [](const bar<S>& a, const bar<S>& b) {
        if (a.birth != b.birth) return a.birth < b.birth;
        if (a.death.has_value() != b.death.has_value()) return b.death.has_value();
        if (a.death && b.death) return *a.death < *b.death;
        return false;
      });
  }

  // multiset equality per dimension
  bool same_bars(const barcode_t& o) const {
    barcode_t a = *this, b = o;
    a.normalize();
    b.normalize();
    int top = std::max(a.maxdim(), b.maxdim());
    for (int k = 0; k <= top; ++k) {
      std::vector<bar<S>> ea = k <= a.maxdim() ? a.dims[k] : std::vector<bar<S>>{};
      std::vector<bar<S>> eb = k <= b.maxdim() ? b.dims[k] : std::vector<bar<S>>{};
      if (ea != eb) return false;
    }
    return true;
  }
};

namespace detail {

template <typename S>
struct filtered_simplex {
  S diam;
  std::vector<int> vertices;  // sorted
};

// Full flag filtration up to simplex dimension `topdim`, sorted by
// (diameter, dimension, lex). Closed convention: simplex enters at its
// diameter.
template <typename S>
std::vector<filtered_simplex<S>> vr_filtration(const distance_matrix<S>& m, int topdim) {
  std::vector<filtered_simplex<S>> out;
  int n = m.size();
  std::vector<int> cur;
  S zero(0);
  auto rec = [&](auto&& self, int start, const S& diam) -> void {
    int d = static_cast<int>(cur.size()) - 1;
    if (d >= 0) out.push_back({diam, cur});
    if (d == topdim) return;
    for (int v = start; v < n; ++v) {
      S nd = diam;
      for (int u : cur) nd = std::max(nd, m(u, v));
      cur.push_back(v);
      self(self, v + 1, nd);
      cur.pop_back();
    }
  };
  rec(rec, 0, zero);
  std::stable_sort(out.begin(), out.end(),
                   [](const filtered_simplex<S>& a, const filtered_simplex<S>& b) {
                     if (a.diam != b.diam) return a.diam < b.diam;
                     if (a.vertices.size() != b.vertices.size())
                       return a.vertices.size() < b.vertices.size();
                     return a.vertices < b.vertices;
                   });
  return out;
}

}  // namespace detail

// Persistence of the closed VR filtration by standard boundary reduction with
// the clearing optimization (top dimension first). Bars reported for
// dimensions 0..maxdim; simplices of dimension maxdim+1 participate only to
// kill maxdim classes.
template <typename F, typename S>
barcode_t<S> persistence_f(const F& f, const distance_matrix<S>& m, int maxdim,
                           const field_tag& tag) {
  int topdim = std::min(maxdim + 1, m.size() - 1);
  auto fil = detail::vr_filtration(m, topdim);
  long total = static_cast<long>(fil.size());

  // face lookup: per dimension, sorted (vertices, global index)
  std::vector<std::vector<std::pair<std::vector<int>, long>>> lookup(topdim + 1);
  std::vector<long> dim_of(total);
  for (long i = 0; i < total; ++i) {
    int d = static_cast<int>(fil[i].vertices.size()) - 1;
    dim_of[i] = d;
    lookup[d].push_back({fil[i].vertices, i});
  }
  for (auto& l : lookup) std::sort(l.begin(), l.end());
  auto face_index = [&](int d, const std::vector<int>& face) -> long {
    auto& l = lookup[d];
    auto it = std::lower_bound(l.begin(), l.end(), face,
                               [](const auto& a, const std::vector<int>& b) { return a.first < b; });
    return static_cast<long>(it - l.begin()) >= 0 && it != l.end() && it->first == face
               ? it->second
               : -1;
  };

  std::vector<char> cleared(total, 0), positive(total, 0), killed(total, 0);
  std::vector<std::pair<long, long>> pairs;  // (row simplex, column simplex)

  for (int d = topdim; d >= 1; --d) {
    std::map<long, sparse_col<F>> reduced_by_low;  // low row (global idx) -> column
    for (long j = 0; j < total; ++j) {
      if (dim_of[j] != d || cleared[j]) continue;
      sparse_col<F> col;
      const auto& s = fil[j].vertices;
      std::vector<int> face(s.size() - 1);
      for (size_t drop = 0; drop < s.size(); ++drop) {
        size_t w = 0;
        for (size_t i = 0; i < s.size(); ++i)
          if (i != drop) face[w++] = s[i];
        long row = face_index(d - 1, face);
        col.push_back({static_cast<int>(row), drop % 2 == 0 ? f.one() : f.neg(f.one())});
      }
      std::sort(col.begin(), col.end(), [](auto& a, auto& b) { return a.first < b.first; });
      while (!col.empty()) {
        auto it = reduced_by_low.find(col.back().first);
        if (it == reduced_by_low.end()) break;
        auto coeff = f.mul(col.back().second, f.inv(it->second.back().second));
        linalg::axpy(f, col, it->second, f.neg(coeff));
      }
      if (col.empty()) {
        positive[j] = 1;
      } else {
        long low = col.back().first;
        reduced_by_low[low] = std::move(col);
        pairs.push_back({low, j});
        cleared[low] = 1;
        killed[low] = 1;
      }
    }
  }

  barcode_t<S> bc;
  bc.field = tag;
  bc.dims.assign(maxdim + 1, {});
  for (auto& [r, c] : pairs) {
    int k = static_cast<int>(dim_of[r]);
    if (k > maxdim) continue;
    if (fil[r].diam < fil[c].diam) bc.dims[k].push_back({fil[r].diam, fil[c].diam});
  }
  for (long i = 0; i < total; ++i) {
    int k = static_cast<int>(dim_of[i]);
    if (k > maxdim || killed[i]) continue;
    bool pos = positive[i] || k == 0;  // vertices are never reduced
    if (pos) bc.dims[k].push_back({fil[i].diam, std::nullopt});
  }
  bc.normalize();
  return bc;
}

template <typename S>
barcode_t<S> persistence(const distance_matrix<S>& m, int maxdim, const field_tag& tag) {
  return with_field(tag, [&](auto f) { return persistence_f(f, m, maxdim, tag); });
}

}  // namespace vrsplit

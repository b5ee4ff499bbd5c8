#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "vrsplit/complex.hpp"
#include "vrsplit/field.hpp"

namespace vrsplit {

template <typename F>
using sparse_col = std::vector<std::pair<int, typename F::elem>>;  // sorted by row

namespace linalg {

// dst += coeff * src
template <typename F>
void axpy(const F& f, sparse_col<F>& dst, const sparse_col<F>& src,
          const typename F::elem& coeff) {
  sparse_col<F> out;
  out.reserve(dst.size() + src.size());
  size_t i = 0, j = 0;
  while (i < dst.size() || j < src.size()) {
    if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
      out.push_back(dst[i++]);
    } else if (i == dst.size() || src[j].first < dst[i].first) {
      auto v = f.mul(coeff, src[j].second);
      if (!f.is_zero(v)) out.push_back({src[j].first, std::move(v)});
      ++j;
    } else {
      auto v = f.add(dst[i].second, f.mul(coeff, src[j].second));
      if (!f.is_zero(v)) out.push_back({dst[i].first, std::move(v)});
      ++i, ++j;
    }
  }
  dst = std::move(out);
}

// Incrementally built column space with unique pivot rows. Insertion order is
// deterministic, which fixes the homology bases downstream.
template <typename F>
struct column_space {
  const F& f;
  std::vector<sparse_col<F>> cols;
  std::vector<int> tags;         // caller-defined label per stored column
  std::map<int, int> pivot_row;  // low row -> position in cols

  explicit column_space(const F& f_) : f(f_) {}

  // Reduces c against the stored columns. If lambdas is non-null, records in
  // it the negated elimination coefficient against each stored column's tag.
  sparse_col<F> reduce(sparse_col<F> c, std::map<int, typename F::elem>* lambdas = nullptr) const {
    while (!c.empty()) {
      int low = c.back().first;
      auto it = pivot_row.find(low);
      if (it == pivot_row.end()) break;
      const auto& pc = cols[it->second];
      auto coeff = f.mul(c.back().second, f.inv(pc.back().second));
      if (lambdas) {
        auto& slot = (*lambdas)[tags[it->second]];
        slot = f.sub(slot, coeff);
      }
      axpy(f, c, pc, f.neg(coeff));
    }
    return c;
  }

  // Returns true when c is independent of the current span (and stores it).
  bool insert(sparse_col<F> c, int tag) {
    c = reduce(std::move(c));
    if (c.empty()) return false;
    pivot_row[c.back().first] = static_cast<int>(cols.size());
    cols.push_back(std::move(c));
    tags.push_back(tag);
    return true;
  }

  long rank() const { return static_cast<long>(cols.size()); }
};

template <typename F>
long rank_of(const F& f, const std::vector<sparse_col<F>>& columns) {
  column_space<F> cs(f);
  for (auto& c : columns) cs.insert(c, 0);
  return cs.rank();
}

// Kernel basis via left-to-right reduction with a tracked change-of-basis.
template <typename F>
std::vector<sparse_col<F>> kernel_basis(const F& f, const std::vector<sparse_col<F>>& columns) {
  column_space<F> cs(f);
  std::vector<sparse_col<F>> kernel;
  for (size_t j = 0; j < columns.size(); ++j) {
    std::map<int, typename F::elem> lambdas;
    auto res = cs.reduce(columns[j], &lambdas);
    if (!res.empty()) {
      cs.pivot_row[res.back().first] = static_cast<int>(cs.cols.size());
      cs.cols.push_back(std::move(res));
      cs.tags.push_back(static_cast<int>(j));
      continue;
    }
    sparse_col<F> v;  // combination of original columns summing to zero
    for (auto& [tag, coeff] : lambdas)
      if (!f.is_zero(coeff)) v.push_back({tag, coeff});
    v.push_back({static_cast<int>(j), f.one()});
    kernel.push_back(std::move(v));
  }
  return kernel;
}

}  // namespace linalg

// Boundary matrix of the k-simplices: rows index (k-1)-simplices.
template <typename F>
std::vector<sparse_col<F>> boundary_columns(const F& f, const simplicial_complex& c, int k) {
  std::vector<sparse_col<F>> cols(c.count(k));
  if (k < 1) return cols;
  for (long j = 0; j < c.count(k); ++j) {
    const auto& s = c.dims[k][j];
    sparse_col<F> col;
    std::vector<int> face(s.size() - 1);
    for (size_t drop = 0; drop < s.size(); ++drop) {
      size_t w = 0;
      for (size_t i = 0; i < s.size(); ++i)
        if (i != drop) face[w++] = s[i];
      int row = c.index_of(k - 1, face);
      if (row < 0) throw std::logic_error("complex not closed under faces");
      col.push_back({row, drop % 2 == 0 ? f.one() : f.neg(f.one())});
    }
    std::sort(col.begin(), col.end(), [](auto& a, auto& b) { return a.first < b.first; });
    cols[j] = std::move(col);
  }
  return cols;
}

// Betti numbers beta_0..maxdim. The top dimension is only meaningful when the
// complex stores all simplices of dimension maxdim+1 or has none (callers that
// truncate should build one dimension higher than they report).
template <typename F>
std::vector<long> homology_ranks_f(const F& f, const simplicial_complex& c) {
  int d = c.maxdim();
  std::vector<long> ranks(d + 2, 0);  // ranks[k] = rank of boundary_k
  for (int k = 1; k <= d; ++k) ranks[k] = linalg::rank_of(f, boundary_columns(f, c, k));
  std::vector<long> betti(d + 1, 0);
  for (int k = 0; k <= d; ++k) betti[k] = c.count(k) - ranks[k] - ranks[k + 1];
  return betti;
}

inline std::vector<long> homology_ranks(const simplicial_complex& c, const field_tag& tag) {
  return with_field(tag, [&](auto f) { return homology_ranks_f(f, c); });
}

// Homology basis of H_k: cycle representatives plus the machinery needed to
// express an arbitrary k-cycle in this basis.
template <typename F>
struct homology_basis {
  std::vector<sparse_col<F>> reps;   // chain vectors over the k-simplices
  linalg::column_space<F> span;      // boundaries (tag -1) then basis residues (tag i)

  explicit homology_basis(const F& f) : span(f) {}
  long dim() const { return static_cast<long>(reps.size()); }

  // Coordinates of a cycle in the basis; throws if z is not a cycle mod B.
  std::vector<typename F::elem> express(const F& f, const sparse_col<F>& z) const {
    std::map<int, typename F::elem> lambdas;
    auto res = span.reduce(z, &lambdas);
    if (!res.empty()) throw std::invalid_argument("chain is not a cycle modulo boundaries");
    std::vector<typename F::elem> coords(reps.size(), f.zero());
    for (auto& [tag, coeff] : lambdas)
      if (tag >= 0) coords[tag] = f.neg(coeff);
    return coords;
  }
};

template <typename F>
homology_basis<F> compute_homology_basis(const F& f, const simplicial_complex& c, int k) {
  homology_basis<F> basis(f);
  if (k < 0 || k > c.maxdim()) return basis;
  std::vector<sparse_col<F>> cycles;
  if (k == 0) {
    for (long v = 0; v < c.count(0); ++v) cycles.push_back({{static_cast<int>(v), f.one()}});
  } else {
    cycles = linalg::kernel_basis(f, boundary_columns(f, c, k));
  }
  if (k + 1 <= c.maxdim())
    for (auto& b : boundary_columns(f, c, k + 1)) basis.span.insert(b, -1);
  for (auto& z : cycles) {
    auto res = basis.span.reduce(z);
    if (res.empty()) continue;
    basis.span.pivot_row[res.back().first] = static_cast<int>(basis.span.cols.size());
    basis.span.cols.push_back(std::move(res));
    basis.span.tags.push_back(static_cast<int>(basis.reps.size()));
    basis.reps.push_back(z);
  }
  return basis;
}

// Matrix of the inclusion-induced map H_k(sub) -> H_k(super) in the canonical
// bases. Throws if sub is not simplexwise contained in super.
template <typename F>
std::vector<std::vector<typename F::elem>> induced_map_f(const F& f,
                                                         const simplicial_complex& sub,
                                                         const simplicial_complex& super, int k) {
  if (!sub.subcomplex_of(super))
    throw std::invalid_argument("induced map requires a simplexwise inclusion");
  auto hs = compute_homology_basis(f, sub, k);
  auto hp = compute_homology_basis(f, super, k);
  // translate sub k-simplex indices into super indices
  std::vector<int> translate(sub.count(k));
  for (long i = 0; i < sub.count(k); ++i) {
    translate[i] = super.index_of(k, sub.dims[k][i]);
    if (translate[i] < 0) throw std::invalid_argument("missing simplex in supercomplex");
  }
  std::vector<std::vector<typename F::elem>> mat(hp.dim(),
                                                 std::vector<typename F::elem>(hs.dim(), f.zero()));
  for (long j = 0; j < hs.dim(); ++j) {
    sparse_col<F> pushed;
    for (auto& [row, coeff] : hs.reps[j]) pushed.push_back({translate[row], coeff});
    std::sort(pushed.begin(), pushed.end(), [](auto& a, auto& b) { return a.first < b.first; });
    auto coords = hp.express(f, pushed);
    for (long i = 0; i < hp.dim(); ++i) mat[i][j] = coords[i];
  }
  return mat;
}

template <typename F>
long matrix_rank_dense(const F& f, std::vector<std::vector<typename F::elem>> m) {
  std::vector<sparse_col<F>> cols;
  if (m.empty()) return 0;
  size_t rows = m.size(), ncols = m[0].size();
  for (size_t j = 0; j < ncols; ++j) {
    sparse_col<F> c;
    for (size_t i = 0; i < rows; ++i)
      if (!f.is_zero(m[i][j])) c.push_back({static_cast<int>(i), m[i][j]});
    cols.push_back(std::move(c));
  }
  return linalg::rank_of(f, cols);
}

// Summary of an induced map for field-tag callers: rank plus kernel/cokernel
// dimensions, with the matrix rendered as strings.
struct induced_map_summary {
  long rows = 0, cols = 0, rank = 0;
  long kernel_dim() const { return cols - rank; }
  long cokernel_dim() const { return rows - rank; }
  std::vector<std::vector<std::string>> matrix;
};

inline induced_map_summary induced_map_on_homology(const simplicial_complex& sub,
                                                   const simplicial_complex& super, int k,
                                                   const field_tag& tag) {
  return with_field(tag, [&](auto f) {
    auto m = induced_map_f(f, sub, super, k);
    induced_map_summary out;
    out.rows = static_cast<long>(m.size());
    out.cols = m.empty() ? 0 : static_cast<long>(m[0].size());
    if (out.cols == 0) {
      // column count equals dim H_k(sub) even when the target is trivial
      auto hs = compute_homology_basis(f, sub, k);
      out.cols = hs.dim();
    }
    out.rank = matrix_rank_dense(f, m);
    for (auto& row : m) {
      std::vector<std::string> r;
      for (auto& v : row) r.push_back(f.format(v));
      out.matrix.push_back(std::move(r));
    }
    return out;
  });
}

}  // namespace vrsplit

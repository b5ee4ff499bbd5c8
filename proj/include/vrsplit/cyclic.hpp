#pragma once

#include <stdexcept>

namespace vrsplit {

// Points carry the cyclic order 0 < 1 < ... < n-1 (0-based internally; IO is
// 1-based to match conventional table layouts). All predicates below read an
// arc clockwise from its left anchor.

inline int cyc_offset(int n, int a, int x) {
  int d = (x - a) % n;
  return d < 0 ? d + n : d;
}

inline int cyc_add(int n, int a, int k) {
  int v = (a + k) % n;
  return v < 0 ? v + n : v;
}

// a < b < c strictly: pairwise distinct, b on the clockwise arc a -> c.
inline bool cyc_between(int n, int a, int b, int c) {
  return 0 < cyc_offset(n, a, b) && cyc_offset(n, a, b) < cyc_offset(n, a, c);
}

// a <= b < c
inline bool cyc_le_lt(int n, int a, int b, int c) {
  return cyc_offset(n, a, b) < cyc_offset(n, a, c);
}

// a < b <= c
inline bool cyc_lt_le(int n, int a, int b, int c) {
  int ob = cyc_offset(n, a, b);
  return 0 < ob && ob <= cyc_offset(n, a, c);
}

// a <= b <= c
inline bool cyc_le_le(int n, int a, int b, int c) {
  return cyc_offset(n, a, b) <= cyc_offset(n, a, c);
}

// Sum of f(i) over the clockwise arc a <= i <= b, wrapping through n-1 when
// needed. Circular sums are never empty: a == b yields the single term f(a).
template <typename S, typename F>
S circular_sum(int n, int a, int b, F&& f) {
  S acc = f(a);
  for (int i = a; i != b;) {
    i = cyc_add(n, i, 1);
    acc += f(i);
  }
  return acc;
}

// Validated cyclic index, 1-based externally.
struct cyclic_index {
  int value;    // 0..modulus-1
  int modulus;  // n

  cyclic_index(int one_based, int n) : value(one_based - 1), modulus(n) {
    if (n < 1 || one_based < 1 || one_based > n)
      throw std::invalid_argument("cyclic index out of range");
  }
  int one_based() const { return value + 1; }
  cyclic_index operator+(int k) const {
    cyclic_index r(*this);
    r.value = cyc_add(modulus, value, k);
    return r;
  }
  cyclic_index operator-(int k) const { return *this + (-k); }
  bool operator==(const cyclic_index& o) const = default;
};

inline bool cyclic_between(cyclic_index a, cyclic_index b, cyclic_index c) {
  if (a.modulus != b.modulus || b.modulus != c.modulus)
    throw std::invalid_argument("cyclic indices with mixed moduli");
  return cyc_between(a.modulus, a.value, b.value, c.value);
}

}  // namespace vrsplit

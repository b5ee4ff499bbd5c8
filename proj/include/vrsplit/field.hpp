#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "vrsplit/numeric.hpp"

namespace vrsplit {

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Coefficient field selector: Q or GF(p), p prime.
struct field_tag {
  enum kind_t { Q, GFP } kind = Q;
  std::uint64_t p = 0;

  static field_tag rationals() { return {Q, 0}; }
  static field_tag gf(std::uint64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
    return {GFP, p};
  }
  std::string name() const { return kind == Q ? "Q" : "F" + std::to_string(p); }
  bool operator==(const field_tag&) const = default;
};

struct rational_field {
  using elem = rational;
  elem zero() const { return rational(0); }
  elem one() const { return rational(1); }
  elem from_int(long v) const { return rational(v); }
  bool is_zero(const elem& a) const { return a.is_zero(); }
  elem neg(const elem& a) const { return -a; }
  elem add(const elem& a, const elem& b) const { return a + b; }
  elem sub(const elem& a, const elem& b) const { return a - b; }
  elem mul(const elem& a, const elem& b) const { return a * b; }
  elem inv(const elem& a) const {
    if (a.is_zero()) throw std::domain_error("inverse of zero");
    return 1 / a;
  }
  std::string format(const elem& a) const { return numeric_traits<rational>::format(a); }
};

struct prime_field {
  std::uint64_t p;
  using elem = std::uint64_t;

  explicit prime_field(std::uint64_t p_) : p(p_) {
    if (!is_prime(p_)) throw std::invalid_argument("field characteristic must be prime");
  }
  elem zero() const { return 0; }
  elem one() const { return 1 % p; }
  elem from_int(long v) const {
    long r = v % static_cast<long>(p);
    return static_cast<elem>(r < 0 ? r + static_cast<long>(p) : r);
  }
  bool is_zero(elem a) const { return a == 0; }
  elem neg(elem a) const { return a == 0 ? 0 : p - a; }
  elem add(elem a, elem b) const {
    elem s = a + b;
    return s >= p ? s - p : s;
  }
  elem sub(elem a, elem b) const { return add(a, neg(b)); }
  elem mul(elem a, elem b) const { return (a * b) % p; }  // p < 2^32
  elem inv(elem a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    // Fermat: a^(p-2) mod p
    elem r = 1, base = a, e = p - 2;
    while (e) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }
  std::string format(elem a) const { return std::to_string(a); }
};

// Runs fn with the concrete field object selected by the tag.
template <typename Fn>
auto with_field(const field_tag& tag, Fn&& fn) {
  if (tag.kind == field_tag::Q) return fn(rational_field{});
  return fn(prime_field{tag.p});
}

}  // namespace vrsplit

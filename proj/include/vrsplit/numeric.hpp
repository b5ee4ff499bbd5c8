#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace vrsplit {

// et_off: plain value semantics, no expression templates
using rational =
    boost::multiprecision::number<boost::multiprecision::backends::rational_adaptor<
                                      boost::multiprecision::backends::cpp_int_backend<>>,
                                  boost::multiprecision::et_off>;
using bigint = boost::multiprecision::cpp_int;

// Numeric policy: decomposition arithmetic (isolation indices, alpha
// matrices, sigma scans, gluing identities) is exact over `rational`.
// `double` is accepted for benchmark-style inputs; its comparisons carry a
// configurable tolerance and are lossy near ties.
template <typename S> struct numeric_traits;

template <> struct numeric_traits<rational> {
  static constexpr bool exact = true;

  static bool eq(const rational& a, const rational& b) { return a == b; }
  static bool lt(const rational& a, const rational& b) { return a < b; }
  static bool le(const rational& a, const rational& b) { return a <= b; }
  static bool is_zero(const rational& a) { return a.is_zero(); }

  static rational parse(const std::string& s);
  static std::string format(const rational& v);
  static double to_double(const rational& v) { return v.convert_to<double>(); }
  static rational from_int(long v) { return rational(v); }
  static rational half(const rational& v) { return v / 2; }
};

template <> struct numeric_traits<double> {
  static constexpr bool exact = false;
  static inline double tolerance = 1e-9;

  static bool eq(double a, double b) {
    double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
    return std::fabs(a - b) <= tolerance * scale;
  }
  static bool lt(double a, double b) { return a < b && !eq(a, b); }
  static bool le(double a, double b) { return a < b || eq(a, b); }
  static bool is_zero(double a) { return eq(a, 0.0); }

  static double parse(const std::string& s);
  static std::string format(double v);
  static double to_double(double v) { return v; }
  static double from_int(long v) { return static_cast<double>(v); }
  static double half(double v) { return v / 2; }
};

inline rational numeric_traits<rational>::parse(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw std::invalid_argument("empty numeric field");
  auto slash = t.find('/');
  if (slash != std::string::npos) {
    bigint p(t.substr(0, slash)), q(t.substr(slash + 1));
    if (q == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    return rational(p, q);
  }
  auto dot = t.find('.');
  if (dot == std::string::npos) {
    auto e = t.find_first_of("eE");
    if (e == std::string::npos) return rational(bigint(t));
    // scientific notation without a dot, e.g. "5e-2"
    bigint mant(t.substr(0, e));
    long exp = std::strtol(t.c_str() + e + 1, nullptr, 10);
    rational r(mant);
    bigint ten(10);
    for (long i = 0; i < std::labs(exp); ++i) r = exp > 0 ? r * ten : r / ten;
    return r;
  }
  std::string head = t.substr(0, dot), tail = t.substr(dot + 1);
  long exp = 0;
  auto e = tail.find_first_of("eE");
  if (e != std::string::npos) {
    exp = std::strtol(tail.c_str() + e + 1, nullptr, 10);
    tail = tail.substr(0, e);
  }
  bool neg = !head.empty() && head[0] == '-';
  if (!head.empty() && (head[0] == '-' || head[0] == '+')) head = head.substr(1);
  bigint p = head.empty() ? bigint(0) : bigint(head);
  bigint q(1);
  for (char c : tail) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("bad numeric field '" + s + "'");
    p = p * 10 + (c - '0');
    q *= 10;
  }
  rational r(p, q);
  bigint ten(10);
  for (long i = 0; i < std::labs(exp); ++i) r = exp > 0 ? r * ten : r / ten;
  return neg ? -r : r;
}

inline std::string numeric_traits<rational>::format(const rational& v) {
  std::string s = numerator(v).str();
  if (denominator(v) != 1) s += "/" + denominator(v).str();
  return s;
}

inline double numeric_traits<double>::parse(const std::string& s) {
  auto slash = s.find('/');
  if (slash != std::string::npos)
    return std::stod(s.substr(0, slash)) / std::stod(s.substr(slash + 1));
  return std::stod(s);
}

inline std::string numeric_traits<double>::format(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace vrsplit

// Dense univariate polynomials over an integral domain, used recursively to
// get Z[z] and Z[z][m].  Internal to the library.
#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "lspec/numeric.hpp"

namespace lspec::detail {

inline bool is_zero(const Integer& v) { return v == 0; }

template <class T>
struct UPoly {
  std::vector<T> c;  // c[i] is the coefficient of x^i; no trailing zeros

  UPoly() = default;
  explicit UPoly(std::vector<T> coeffs) : c(std::move(coeffs)) { trim(); }
  static UPoly constant(T v) { return UPoly(std::vector<T>{std::move(v)}); }
  static UPoly monomial(T v, int degree) {
    std::vector<T> coeffs(degree + 1);
    coeffs[degree] = std::move(v);
    return UPoly(std::move(coeffs));
  }

  void trim() {
    while (!c.empty() && is_zero(c.back())) c.pop_back();
  }
  int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
  bool zero() const { return c.empty(); }
  const T& lead() const { return c.back(); }
  T at(int i) const { return i >= 0 && i < static_cast<int>(c.size()) ? c[i] : T{}; }

  friend bool operator==(const UPoly&, const UPoly&) = default;
};

template <class T>
bool is_zero(const UPoly<T>& p) { return p.zero(); }

inline int lead_sign(const Integer& v) { return v < 0 ? -1 : (v > 0 ? 1 : 0); }
template <class T>
int lead_sign(const UPoly<T>& p) { return p.zero() ? 0 : lead_sign(p.lead()); }

template <class T>
UPoly<T> operator+(const UPoly<T>& a, const UPoly<T>& b) {
  std::vector<T> out(std::max(a.c.size(), b.c.size()));
  for (size_t i = 0; i < out.size(); ++i) {
    if (i < a.c.size()) out[i] = a.c[i];
    if (i < b.c.size()) out[i] = out[i] + b.c[i];
  }
  return UPoly<T>(std::move(out));
}

template <class T>
UPoly<T> operator-(const UPoly<T>& a) {
  UPoly<T> out = a;
  for (auto& v : out.c) v = -v;
  return out;
}

template <class T>
UPoly<T> operator-(const UPoly<T>& a, const UPoly<T>& b) { return a + (-b); }

template <class T>
UPoly<T> operator*(const UPoly<T>& a, const UPoly<T>& b) {
  if (a.zero() || b.zero()) return {};
  std::vector<T> out(a.c.size() + b.c.size() - 1);
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (is_zero(a.c[i])) continue;
    for (size_t j = 0; j < b.c.size(); ++j) out[i + j] = out[i + j] + a.c[i] * b.c[j];
  }
  return UPoly<T>(std::move(out));
}

template <class T>
UPoly<T> scale(const UPoly<T>& a, const T& s) {
  UPoly<T> out = a;
  for (auto& v : out.c) v = v * s;
  out.trim();
  return out;
}

template <class T>
UPoly<T> shift_up(const UPoly<T>& a, int d) {
  if (a.zero()) return a;
  std::vector<T> out(a.c.size() + d);
  std::copy(a.c.begin(), a.c.end(), out.begin() + d);
  return UPoly<T>(std::move(out));
}

// Exact division; throws std::logic_error if the divisor does not divide.
inline Integer exact_div(const Integer& a, const Integer& b) {
  if (b == 0) throw std::logic_error("division by zero");
  Integer q = a / b;
  if (q * b != a) throw std::logic_error("inexact integer division");
  return q;
}

template <class T>
UPoly<T> exact_div(UPoly<T> a, const UPoly<T>& b) {
  if (b.zero()) throw std::logic_error("division by zero polynomial");
  if (a.degree() < b.degree()) {
    if (!a.zero()) throw std::logic_error("inexact polynomial division");
    return {};
  }
  std::vector<T> q(a.degree() - b.degree() + 1);
  while (!a.zero() && a.degree() >= b.degree()) {
    const int d = a.degree() - b.degree();
    q[d] = exact_div(a.lead(), b.lead());
    a = a - shift_up(scale(b, q[d]), d);
  }
  if (!a.zero()) throw std::logic_error("inexact polynomial division");
  return UPoly<T>(std::move(q));
}

template <class T>
UPoly<T> exact_div_scalar(const UPoly<T>& a, const T& s) {
  UPoly<T> out = a;
  for (auto& v : out.c) v = exact_div(v, s);
  return out;
}

inline Integer ring_gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);  // nonnegative
}

template <class T>
UPoly<T> ring_gcd(const UPoly<T>& a, const UPoly<T>& b);

template <class T>
T content(const UPoly<T>& p) {
  T g{};
  for (const auto& v : p.c) {
    g = ring_gcd(g, v);
  }
  return g;
}

template <class T>
UPoly<T> primitive_part(const UPoly<T>& p) {
  if (p.zero()) return p;
  return exact_div_scalar(p, content(p));
}

// Multiplies by -1 if needed so the innermost leading coefficient is positive.
template <class T>
UPoly<T> unit_normal(const UPoly<T>& p) { return lead_sign(p) < 0 ? -p : p; }

template <class T>
UPoly<T> pseudo_remainder(UPoly<T> a, const UPoly<T>& b) {
  while (!a.zero() && a.degree() >= b.degree()) {
    const int d = a.degree() - b.degree();
    a = scale(a, b.lead()) - shift_up(scale(b, a.lead()), d);
  }
  return a;
}

template <class T>
UPoly<T> ring_gcd(const UPoly<T>& a, const UPoly<T>& b) {
  if (a.zero()) return unit_normal(b);
  if (b.zero()) return unit_normal(a);
  const T g = ring_gcd(content(a), content(b));
  UPoly<T> x = primitive_part(a), y = primitive_part(b);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.zero()) {
    UPoly<T> r = pseudo_remainder(x, y);
    x = std::move(y);
    y = primitive_part(r);
  }
  return unit_normal(scale(x, g));
}

using ZPoly = UPoly<Integer>;   // Z[z]
using ZZPoly = UPoly<ZPoly>;    // Z[z][m]

}  // namespace lspec::detail

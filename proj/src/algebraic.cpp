#include "lspec/algebraic.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "lspec/enumeration.hpp"
#include "lspec/errors.hpp"
#include "lspec/partition.hpp"
#include "poly_algebra.hpp"

namespace lspec {

using detail::ZPoly;
using detail::ZZPoly;

namespace {

void check_heights(std::span<const int> heights) {
  if (heights.empty()) throw UsageError("empty height vector");
  for (size_t i = 0; i < heights.size(); ++i)
    if (heights[i] <= 0) throw UsageError("non-positive height at index " + std::to_string(i + 1));
}

// Rational function N/D in Z[z][m], kept in lowest terms.
struct Fraction {
  ZZPoly num;
  ZZPoly den;
};

Fraction reduce(ZZPoly num, ZZPoly den) {
  if (num.zero()) return {num, ZZPoly::constant(ZPoly::constant(1))};
  const ZZPoly g = detail::ring_gcd(num, den);
  num = detail::exact_div(num, g);
  den = detail::exact_div(den, g);
  if (detail::lead_sign(den) < 0) {
    num = -num;
    den = -den;
  }
  return {num, den};
}

Fraction sum(const std::vector<Fraction>& terms) {
  Fraction acc{{}, ZZPoly::constant(ZPoly::constant(1))};
  for (const auto& t : terms) acc = reduce(acc.num * t.den + t.num * acc.den, acc.den * t.den);
  return acc;
}

ZZPoly constant(long v) { return ZZPoly::constant(ZPoly::constant(Integer(v))); }
ZZPoly z_times(long a) { return ZZPoly::constant(ZPoly::monomial(Integer(a), 1)); }
ZZPoly m_var() { return ZZPoly::monomial(ZPoly::constant(1), 1); }

// a z / (base + S), S = N/D:  a z D / (base D + N).
Fraction solve_block(long a, const ZZPoly& base, const Fraction& s) {
  return reduce(z_times(a) * s.den, base * s.den + s.num);
}

BivariatePoly to_bivariate(const ZZPoly& p) {
  std::vector<std::vector<Integer>> rows(p.c.size());
  for (size_t i = 0; i < p.c.size(); ++i) rows[i] = p.c[i].c;
  return BivariatePoly(std::move(rows));
}

Integer largest_square_divisor_root(Integer n, Integer& squarefree) {
  Integer root = 1;
  for (Integer d = 2; d * d <= n; ++d) {
    while (n % (d * d) == 0) {
      n /= d * d;
      root *= d;
    }
  }
  squarefree = n;
  return root;
}

}  // namespace

HSystemSeries h_system_series(std::span<const int> heights, int order) {
  check_heights(heights);
  const int r = static_cast<int>(heights.size());
  const TruncatedSeries z = TruncatedSeries::monomial(1, 1, order);
  std::vector<TruncatedSeries> H(r, TruncatedSeries(order));
  // Each sweep fixes one more coefficient of every H_j.
  for (int sweep = 0; sweep < order; ++sweep) {
    std::vector<TruncatedSeries> next;
    next.reserve(r);
    for (int j = 1; j <= r; ++j) {
      TruncatedSeries s(order);
      for (int q = 1; q <= r + 1 - j; ++q) s = s + Rational(heights[q - 1]) * H[q - 1];
      next.push_back(z + H[j - 1] * s);
    }
    H = std::move(next);
  }
  TruncatedSeries M(order);
  for (int j = 0; j < r; ++j) M = M + Rational(heights[j]) * H[j];
  return {std::move(H), std::move(M)};
}

BivariatePoly eliminate_moment_equation(std::span<const int> heights) {
  check_heights(heights);
  const int r = static_cast<int>(heights.size());
  if (r > kMaxEliminationBlocks)
    throw UsageError("elimination supports at most " + std::to_string(kMaxEliminationBlocks) +
                     " blocks, got " + std::to_string(r));
  // With x_j = a_j H_j the system reads x_j (1 - Σ_{q <= r+1-j} x_q) = a_j z.
  // Alternate between the front (whose sum is m minus the known tail) and
  // the back (whose sum is the known head).
  std::vector<Fraction> x(r);
  const ZZPoly one_minus_m = constant(1) - m_var();
  int lo = 1, hi = r;
  while (lo <= hi) {
    std::vector<Fraction> tail(x.begin() + hi, x.end());
    x[lo - 1] = solve_block(heights[lo - 1], one_minus_m, sum(tail));
    ++lo;
    if (lo > hi) break;
    std::vector<Fraction> head(x.begin(), x.begin() + (lo - 1));
    const Fraction h = sum(head);
    x[hi - 1] = solve_block(heights[hi - 1], constant(1), {-h.num, h.den});
    --hi;
  }
  const Fraction total = sum(x);
  return to_bivariate(m_var() * total.den - total.num).normalized();
}

BivariatePoly cauchy_equation(const BivariatePoly& P, long ell) {
  const int dz = P.degree_z();
  BivariatePoly::Terms terms;
  for (const auto& [degrees, c] : P.terms())
    terms[{degrees.first, dz - degrees.second}] = c * ipow(Integer(ell), degrees.first);
  return BivariatePoly(terms).normalized();
}

BivariatePoly eliminate(std::span<const int> heights) {
  const long ell = std::accumulate(heights.begin(), heights.end(), 0L);
  return cauchy_equation(eliminate_moment_equation(heights), ell);
}

BivariatePoly fat_hook_cubic(int a1, int a2) {
  if (a1 < 1 || a2 < 1) throw UsageError("fat hook heights must be positive");
  const Integer l = a1 + a2, A1 = a1, A2 = a2;
  return BivariatePoly(BivariatePoly::Terms{
      {{3, 2}, l * l * l},
      {{2, 1}, (A1 - A2) * l * l},
      {{2, 2}, -2 * l * l},
      {{1, 1}, 2 * A2 * l},
      {{1, 2}, l},
      {{0, 0}, A1 * A1},
      {{0, 1}, -l},
  });
}

TruncatedSeries r_equation_residual(const BivariatePoly& L, const TruncatedSeries& R) {
  const int K = R.order();
  const int d = L.degree_z();
  const TruncatedSeries one_plus_zR = R.times_z().truncated(K) + Rational(1);
  std::vector<TruncatedSeries> powers{TruncatedSeries::constant(1, K)};
  for (int j = 1; j <= d; ++j) powers.push_back(powers.back() * one_plus_zR);
  TruncatedSeries total(K);
  for (const auto& [degrees, c] : L.terms()) {
    const auto [i, j] = degrees;
    total = total + Rational(c) * (TruncatedSeries::monomial(1, i + d - j, K) * powers[j]);
  }
  return total;
}

TruncatedSeries r_transform_from_moments(std::span<const int> heights, int order) {
  const Partition p = self_conjugate_from_heights(heights);
  const MomentTable table = count_recurrence(p, order + 1);
  return G_to_R(moments_to_G(table.moments, order + 2));
}

TruncatedSeries fat_hook_R_series(int a1, int a2, int order) {
  if (a1 < 1 || a2 < 1) throw UsageError("fat hook heights must be positive");
  const Rational l = a1 + a2;
  const Rational c = Rational((a2 - a1) * (a2 - a1)) / l;
  const int K = order + 1;
  const TruncatedSeries one = TruncatedSeries::constant(1, K);
  const TruncatedSeries numerator = one + TruncatedSeries::monomial(-c, 1, K);
  const TruncatedSeries geometric = reciprocal(one + TruncatedSeries::monomial(-l, 1, K));
  const TruncatedSeries root = sqrt(numerator * geometric);
  const TruncatedSeries tail = Rational(1, 2) * (root + Rational(-1)).over_z();
  return Rational(a1) * geometric.truncated(order) + tail;
}

std::complex<double> fat_hook_R(int a1, int a2, std::complex<double> z) {
  if (a1 < 1 || a2 < 1) throw UsageError("fat hook heights must be positive");
  const double l = a1 + a2;
  const double c = double(a2 - a1) * double(a2 - a1) / l;
  const std::complex<double> pole = 1.0 - l * z;
  const std::complex<double> branch = 1.0 - c * z;
  if (std::abs(pole) < 1e-12) throw std::domain_error("fat_hook_R: pole at z = 1/ℓ");
  if (c != 0.0 && std::abs(branch) < 1e-12) throw std::domain_error("fat_hook_R: branch point");
  if (std::abs(z) < 1e-4 / l) {
    const TruncatedSeries s = fat_hook_R_series(a1, a2, 6);
    std::complex<double> acc = 0;
    for (int n = 6; n >= 0; --n) acc = acc * z + to_double(s[n]);
    return acc;
  }
  return double(a1) / pole + (std::sqrt(branch / pole) - 1.0) / (2.0 * z);
}

double QuadraticSurd::value() const {
  return to_double(p) + to_double(q) * std::sqrt(s.convert_to<double>());
}

double FatHookSpectrum::support_min() const { return std::max(0.0, z_minus.value()); }
double FatHookSpectrum::support_max() const { return z_plus.value(); }

FatHookSpectrum fat_hook_support(int a1, int a2) {
  const BivariatePoly L = fat_hook_cubic(a1, a2);
  const std::vector<Integer> disc = L.discriminant();
  // The discriminant is z³ ℓ⁶ a1² times a quadratic.
  const Integer l = a1 + a2;
  const Integer prefactor = ipow(l, 6) * Integer(a1) * Integer(a1);
  std::vector<Integer> q;
  for (size_t j = 0; j < disc.size(); ++j) {
    if (j < 3) {
      if (disc[j] != 0) throw std::logic_error("discriminant lacks the z^3 factor");
      continue;
    }
    if (disc[j] % prefactor != 0) throw std::logic_error("discriminant lacks the ℓ^6 a1^2 factor");
    q.push_back(disc[j] / prefactor);
  }
  if (q.size() != 3) throw std::logic_error("discriminant cofactor is not quadratic");

  FatHookSpectrum out;
  out.a1 = a1;
  out.a2 = a2;
  out.atom_mass = Rational(std::max(a2 - a1, 0), a1 + a2);
  out.edge_quadratic = {q[2], q[1], q[0]};
  const Integer& A = q[2];
  const Integer& B = q[1];
  const Integer& C = q[0];
  const Integer delta = B * B - 4 * A * C;
  if (delta < 0) throw std::logic_error("edge quadratic has no real roots");
  Integer squarefree;
  const Integer root = largest_square_divisor_root(delta, squarefree);
  const Rational p = Rational(-B, 2 * A);
  Rational qq = Rational(root, 2 * A);
  if (squarefree == 1) {  // rational edges; keep the surd trivial
    out.z_minus = {p - qq, 0, 1};
    out.z_plus = {p + qq, 0, 1};
  } else {
    if (A < 0) qq = -qq;
    out.z_minus = {p, -qq, squarefree};
    out.z_plus = {p, qq, squarefree};
  }
  return out;
}

}  // namespace lspec

#pragma once

#include <array>
#include <complex>
#include <span>
#include <vector>

#include "lspec/bivariate.hpp"
#include "lspec/numeric.hpp"
#include "lspec/series.hpp"

namespace lspec {

struct HSystemSeries {
  std::vector<TruncatedSeries> H;  // H_1 .. H_r
  TruncatedSeries M;               // Σ a_j H_j = Σ C_k z^{k+1}
};

/// Power-series solution of H_j = z + H_j (a_1 H_1 + ... + a_{r+1-j} H_{r+1-j}),
/// known to order K.
HSystemSeries h_system_series(std::span<const int> heights, int order);

inline constexpr int kMaxEliminationBlocks = 6;

/// P(M, z) with P(M^λ(z), z) = 0, obtained by solving the H-system for each
/// block variable in terms of (M, z) and clearing denominators.  Normalized.
/// Throws UsageError when r exceeds kMaxEliminationBlocks.
BivariatePoly eliminate_moment_equation(std::span<const int> heights);

/// L(G, z) = z^{deg_z P} P(ℓ G, 1/z), normalized.
BivariatePoly cauchy_equation(const BivariatePoly& P, long ell);

/// cauchy_equation(eliminate_moment_equation(a), |a|).
BivariatePoly eliminate(std::span<const int> heights);

/// The fat-hook cubic
///   ℓ³z²G³ + (a1 − a2 − 2z)ℓ²zG² + (2a2 + z)ℓzG + (a1² − ℓz)
/// exactly as displayed (not content-normalized).
BivariatePoly fat_hook_cubic(int a1, int a2);

/// z^d L(z, R + 1/z) with d = deg_z L, as a series.  Vanishes identically
/// when R is the R-transform of the law whose Cauchy transform solves L.
TruncatedSeries r_equation_residual(const BivariatePoly& L, const TruncatedSeries& R);

/// R-transform of a λ-shaped law from its exact moments, to order K.
TruncatedSeries r_transform_from_moments(std::span<const int> heights, int order);

/// a1/(1 − ℓz) + (1/(2z))(√((1 − (a2−a1)²z/ℓ)/(1 − ℓz)) − 1) as a series.
TruncatedSeries fat_hook_R_series(int a1, int a2, int order);
/// The same closed form evaluated at a complex point (principal branch).
/// Throws std::domain_error at z = 1/ℓ or at the branch point.
std::complex<double> fat_hook_R(int a1, int a2, std::complex<double> z);

/// p + q √s.
struct QuadraticSurd {
  Rational p;
  Rational q;
  Integer s;
  double value() const;
};

struct FatHookSpectrum {
  int a1 = 0;
  int a2 = 0;
  Rational atom_mass;
  /// A z² + B z + C, the quadratic factor of the discriminant of the cubic.
  std::array<Integer, 3> edge_quadratic;
  QuadraticSurd z_minus;
  QuadraticSurd z_plus;

  long ell() const noexcept { return a1 + a2; }
  /// [max(z−, 0), z+].
  double support_min() const;
  double support_max() const;
};

/// Atom and support edges, the edges taken from the discriminant of the cubic.
FatHookSpectrum fat_hook_support(int a1, int a2);

}  // namespace lspec

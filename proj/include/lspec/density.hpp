#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "lspec/algebraic.hpp"
#include "lspec/bivariate.hpp"
#include "lspec/partition.hpp"

namespace lspec {

/// Closed-form fat-hook density from the cubic's discriminant and the
/// companion polynomial P_λ(x), using the real cube root.  Interior points only.
double fat_hook_density_closed_form(int a1, int a2, double x);

/// Root of L(·, x + iε) on the physical branch, selected at large imaginary
/// part (where G ~ 1/z) and tracked down to the requested ε (0 allowed).
std::complex<double> cauchy_by_continuation(const BivariatePoly& L, double x, double eps = 0.0);

/// −Im G(x + i0)/π via cauchy_by_continuation on the fat-hook cubic.
double fat_hook_density_continuation(int a1, int a2, double x);

struct DensityPoint {
  double value = 0.0;
  bool in_support = false;
  bool used_continuation = false;
};

/// Relative distance to a support edge below which only the continuation
/// route is used.
inline constexpr double kEdgeSwitch = 1e-3;

/// Density of the continuous part; 0 with in_support = false outside (z−, z+).
DensityPoint fat_hook_density(const FatHookSpectrum& spectrum, double x);

struct StieltjesOptions {
  std::vector<double> eps_ladder{1e-2, 1e-3, 1e-4};
  /// Scale each ε by min(1, x) so the ratio ε/x stays bounded near x = 0.
  bool relative_eps = true;
  /// Two-point extrapolation across the last two ladder rungs.
  bool richardson = true;
  double damping = 0.5;
  double tolerance = 1e-12;
  int max_iterations = 200;
};

struct StieltjesResult {
  double density = 0.0;
  std::vector<double> ladder_values;  // −Im G/π at each rung
  std::complex<double> G;             // at the last rung
  double residual = 0.0;
};

/// Numerical Stieltjes inversion of the H-system at z = x + iε.
/// Throws ConvergenceError when Newton fails even after step refinement.
StieltjesResult stieltjes_density(std::span<const int> heights, double x,
                                  const StieltjesOptions& options = {});

/// Solves the H-system at a single complex z by damped Newton from `seed`;
/// returns H and sets `residual`.  Throws ConvergenceError on failure.
std::vector<std::complex<double>> solve_h_system(std::span<const int> heights, std::complex<double> z,
                                                 std::vector<std::complex<double>> seed,
                                                 const StieltjesOptions& options, double* residual = nullptr);

/// Positive real roots of the discriminant of L in G (candidate support
/// edges), ascending.
std::vector<double> discriminant_positive_roots(const BivariatePoly& L);

/// How the integrand behaves at the lower limit.
enum class LowerEdge {
  power_singularity,  // lower limit 0, density ~ x^{-α} with α < 1
  square_root,        // soft edge
};

/// ∫_lo^hi x^k f(x) dx for k = 0..kmax, f with a square-root upper edge.
/// `sharpness` is the power used to flatten a power singularity at lo
/// (x = hi·sin(θ)^{2·sharpness}).
std::vector<double> density_moments(const std::function<double(double)>& f, double lo, double hi,
                                    LowerEdge lower, int kmax, int sharpness = 4,
                                    double tolerance = 1e-11);

/// Limiting law of a self-conjugate shape: atom at 0 plus a density on
/// [support_lo, support_hi].  Fat hooks use the closed form; other shapes use
/// Stieltjes inversion with edges from the discriminant.
struct AnalyticLaw {
  std::vector<int> heights;
  double atom_mass = 0.0;
  double support_lo = 0.0;
  double support_hi = 0.0;
  LowerEdge lower = LowerEdge::power_singularity;
  std::function<double(double)> density;
};

AnalyticLaw analytic_law(const Partition& p, const StieltjesOptions& options = {});

/// ∫ density over each [edges[b], edges[b+1]].
std::vector<double> analytic_bin_masses(const AnalyticLaw& law, const std::vector<double>& edges);

}  // namespace lspec

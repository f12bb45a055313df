#include "lspec/density.hpp"

#include <Eigen/Dense>
#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include "lspec/errors.hpp"
#include "lspec/partition.hpp"

namespace lspec {

namespace {

constexpr double kPi = boost::math::constants::pi<double>();
using cd = std::complex<double>;

double max_abs(const std::vector<cd>& v) {
  double m = 0;
  for (const auto& c : v) m = std::max(m, std::abs(c));
  return m;
}

}  // namespace

double fat_hook_density_closed_form(int a1, int a2, double x) {
  const double A1 = a1, A2 = a2, l = A1 + A2;
  const double l2 = l * l, l3 = l2 * l;
  const double P = std::pow(3.0, -1.5) * l3 * x *
                   (2 * std::pow(A2 - x, 3) - 6 * A1 * (A2 - x) * (A2 + 2 * x) +
                    3 * A1 * A1 * (2 * A2 - 5 * x) - 2 * A1 * A1 * A1);
  const double D = std::pow(x, 3) * l3 * l3 * A1 * A1 *
                   (4 * A2 * x * x + (A1 * A1 - 20 * A1 * A2 - 8 * A2 * A2) * x - 4 * std::pow(A1 - A2, 3));
  if (D >= 0) return 0.0;
  // Both Cardano branches give the same value; take the one without cancellation.
  const double u = std::cbrt(P >= 0 ? P + std::sqrt(-D) : P - std::sqrt(-D));
  const double t2 = std::cbrt(4.0) / 3.0 * std::cbrt(x * x) * l2 *
                    (3 * x * (2 * A2 + x) - std::pow(A2 - A1 + 2 * x, 2));
  return std::abs(u + t2 / u) / (kPi * l2 * std::cbrt(16.0) * x * std::cbrt(x));
}

cd cauchy_by_continuation(const BivariatePoly& L, double x, double eps) {
  const double scale = 1.0 + std::abs(x);
  double y = 10.0 * scale;
  cd z(x, y);
  auto roots_at = [&](cd at) { return polynomial_roots(L.coefficients_at(at)); };
  auto nearest = [](const std::vector<cd>& roots, cd target, double* ambiguity) {
    std::vector<double> d(roots.size());
    for (size_t i = 0; i < roots.size(); ++i) d[i] = std::abs(roots[i] - target);
    const size_t best = std::min_element(d.begin(), d.end()) - d.begin();
    double second = INFINITY;
    for (size_t i = 0; i < d.size(); ++i)
      if (i != best) second = std::min(second, d[i]);
    if (ambiguity) *ambiguity = second > 0 ? d[best] / second : 1.0;
    return roots[best];
  };
  cd current = nearest(roots_at(z), 1.0 / z, nullptr);
  const double y_floor = std::max(eps, 1e-12 * std::min(scale, std::max(std::abs(x), 1e-300)));
  double ratio = 0.7;
  while (y > y_floor) {
    const double next_y = std::max(y * ratio, y_floor);
    double ambiguity = 0;
    const cd candidate = nearest(roots_at(cd(x, next_y)), current, &ambiguity);
    if (ambiguity > 0.5 && ratio < 0.999) {
      ratio = 1.0 - (1.0 - ratio) / 2;
      continue;
    }
    current = candidate;
    y = next_y;
    ratio = std::max(0.5, 1.0 - (1.0 - ratio) * 1.5);
  }
  if (eps < y_floor) current = nearest(roots_at(cd(x, eps)), current, nullptr);
  return current;
}

double fat_hook_density_continuation(int a1, int a2, double x) {
  const cd G = cauchy_by_continuation(fat_hook_cubic(a1, a2), x, 0.0);
  return std::max(0.0, -G.imag() / kPi);
}

DensityPoint fat_hook_density(const FatHookSpectrum& spectrum, double x) {
  DensityPoint out;
  const double lo = spectrum.support_min(), hi = spectrum.support_max();
  if (!(x > lo && x < hi)) return out;
  out.in_support = true;
  const double width = hi - lo;
  const double edge_distance = std::min(x - lo, hi - x) / width;
  if (edge_distance < kEdgeSwitch) {
    out.used_continuation = true;
    out.value = fat_hook_density_continuation(spectrum.a1, spectrum.a2, x);
  } else {
    out.value = fat_hook_density_closed_form(spectrum.a1, spectrum.a2, x);
  }
  return out;
}

std::vector<cd> solve_h_system(std::span<const int> heights, cd z, std::vector<cd> H,
                               const StieltjesOptions& options, double* residual_out) {
  const int r = static_cast<int>(heights.size());
  const cd w = 1.0 / z;
  auto evaluate = [&](const std::vector<cd>& h, std::vector<cd>& F, std::vector<cd>& S) {
    double scale = std::max(1.0, std::abs(w));
    for (int j = 1; j <= r; ++j) {
      cd s = 0;
      for (int q = 1; q <= r + 1 - j; ++q) s += double(heights[q - 1]) * h[q - 1];
      S[j - 1] = s;
      F[j - 1] = h[j - 1] - w - h[j - 1] * s;
      scale = std::max(scale, std::abs(h[j - 1]) * (1.0 + std::abs(s)));
    }
    return max_abs(F) / scale;  // relative residual
  };
  std::vector<cd> F(r), S(r), trialF(r), trialS(r);
  double residual = evaluate(H, F, S);
  int iteration = 0;
  for (; iteration < options.max_iterations && residual > options.tolerance; ++iteration) {
    Eigen::MatrixXcd J = Eigen::MatrixXcd::Zero(r, r);
    Eigen::VectorXcd rhs(r);
    for (int j = 1; j <= r; ++j) {
      J(j - 1, j - 1) += 1.0 - S[j - 1];
      for (int k = 1; k <= r + 1 - j; ++k) J(j - 1, k - 1) -= H[j - 1] * double(heights[k - 1]);
      rhs(j - 1) = -F[j - 1];
    }
    const Eigen::VectorXcd delta = J.partialPivLu().solve(rhs);
    double step = 1.0;
    bool improved = false;
    for (int halving = 0; halving < 40; ++halving, step *= options.damping) {
      std::vector<cd> trial(r);
      for (int j = 0; j < r; ++j) trial[j] = H[j] + step * delta(j);
      const double trial_residual = evaluate(trial, trialF, trialS);
      if (trial_residual < residual) {
        H = std::move(trial);
        F = trialF;
        S = trialS;
        residual = trial_residual;
        improved = true;
        break;
      }
    }
    if (!improved) break;
  }
  if (residual_out) *residual_out = residual;
  if (!(residual <= options.tolerance))
    throw ConvergenceError("Newton did not converge for the H-system", residual, iteration);
  return H;
}

StieltjesResult stieltjes_density(std::span<const int> heights, double x, const StieltjesOptions& options) {
  if (heights.empty()) throw UsageError("empty height vector");
  if (!(x > 0)) throw UsageError("stieltjes_density needs x > 0");
  if (options.eps_ladder.empty()) throw UsageError("empty epsilon ladder");
  const int r = static_cast<int>(heights.size());
  const double ell = std::accumulate(heights.begin(), heights.end(), 0.0);
  const double factor = options.relative_eps ? std::min(1.0, x) : 1.0;

  std::vector<double> targets;
  for (double e : options.eps_ladder) targets.push_back(e * factor);
  std::sort(targets.begin(), targets.end(), std::greater<>());

  // Start where |z| is large and H_j ≈ 1/z.
  double y = 10.0 * (1.0 + x + ell);
  cd z(x, y);
  std::vector<cd> H(r, 1.0 / z);
  double residual = 0;
  H = solve_h_system(heights, z, H, options, &residual);

  auto G_of = [&](const std::vector<cd>& h) {
    cd m = 0;
    for (int j = 0; j < r; ++j) m += double(heights[j]) * h[j];
    return m / ell;
  };

  StieltjesResult out;
  cd G = G_of(H);
  for (double target : targets) {
    double ratio = 0.5;
    while (y > target) {
      const double next_y = std::max(y * ratio, target);
      const cd next_z(x, next_y);
      bool accepted = false;
      try {
        double r_next = 0;
        std::vector<cd> next = solve_h_system(heights, next_z, H, options, &r_next);
        const cd next_G = G_of(next);
        // A sudden relative jump in G signals a branch change: refine.
        const bool jump = std::abs(next_G - G) > 0.5 * std::max(std::abs(G), 1e-300) ||
                          next_G.imag() > 0;
        if (!jump) {
          H = std::move(next);
          G = next_G;
          residual = r_next;
          y = next_y;
          accepted = true;
        }
      } catch (const ConvergenceError&) {
        if (ratio > 0.999) throw;
      }
      if (accepted) {
        ratio = std::max(0.5, 1.0 - (1.0 - ratio) * 1.5);
      } else {
        if (ratio > 0.999)
          throw ConvergenceError("Stieltjes path-following stalled (branch guard)", residual, 0);
        ratio = 1.0 - (1.0 - ratio) / 2;
      }
    }
    out.ladder_values.push_back(-G.imag() / kPi);
  }
  out.G = G;
  out.residual = residual;
  const size_t n = out.ladder_values.size();
  double value = out.ladder_values.back();
  if (options.richardson && n >= 2) {
    const double rho = targets[n - 2] / targets[n - 1];
    value = (rho * out.ladder_values[n - 1] - out.ladder_values[n - 2]) / (rho - 1.0);
  }
  out.density = std::max(0.0, value);
  return out;
}

std::vector<double> discriminant_positive_roots(const BivariatePoly& L) {
  std::vector<Integer> disc = L.discriminant();
  // Strip the factor z^m; 0 is not a positive root.
  size_t first = 0;
  while (first < disc.size() && disc[first] == 0) ++first;
  std::vector<cd> coeffs;
  for (size_t j = first; j < disc.size(); ++j) coeffs.push_back(disc[j].convert_to<double>());
  std::vector<double> out;
  if (coeffs.size() < 2) return out;
  const double top = std::abs(coeffs.back());
  for (auto& c : coeffs) c /= top;
  for (const cd& root : polynomial_roots(coeffs))
    if (std::abs(root.imag()) < 1e-9 * (1 + std::abs(root)) && root.real() > 0) out.push_back(root.real());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> density_moments(const std::function<double(double)>& f, double lo, double hi,
                                    LowerEdge lower, int kmax, int sharpness, double tolerance) {
  if (!(hi > lo)) throw UsageError("density_moments needs hi > lo");
  const double half_pi = kPi / 2;
  // θ ∈ [0, π/2] ↦ (x, dx/dθ): flattens the lower singularity and turns
  // square-root edges into smooth endpoints.
  auto map = [&](double theta) -> std::pair<double, double> {
    const double s = std::sin(theta), c = std::cos(theta);
    if (lower == LowerEdge::power_singularity) {
      const int p = 2 * sharpness;
      const double sp = std::pow(s, p - 1);
      return {lo + (hi - lo) * sp * s, (hi - lo) * p * sp * c};
    }
    return {lo + (hi - lo) * s * s, (hi - lo) * 2 * s * c};
  };
  std::map<double, double> cache;  // f is the expensive part; reuse across k
  auto weighted = [&](double theta) {
    auto it = cache.find(theta);
    if (it != cache.end()) return it->second;
    const auto [x, jac] = map(theta);
    const double v = (x > lo && x < hi && jac > 0) ? f(x) * jac : 0.0;
    cache.emplace(theta, v);
    return v;
  };
  std::vector<double> out;
  for (int k = 0; k <= kmax; ++k) {
    auto integrand = [&](double theta) {
      const double v = weighted(theta);
      return v == 0.0 ? 0.0 : v * std::pow(map(theta).first, k);
    };
    double error = 0;
    out.push_back(boost::math::quadrature::gauss_kronrod<double, 61>::integrate(integrand, 0.0, half_pi, 15,
                                                                                tolerance, &error));
  }
  return out;
}

AnalyticLaw analytic_law(const Partition& p, const StieltjesOptions& options) {
  require_self_conjugate(p);
  AnalyticLaw law;
  law.heights = p.heights();
  law.atom_mass = double(generic_null_space_dim(p)) / p.length();
  if (law.heights.size() == 2) {
    const FatHookSpectrum spectrum = fat_hook_support(law.heights[0], law.heights[1]);
    law.support_lo = spectrum.support_min();
    law.support_hi = spectrum.support_max();
    law.lower = spectrum.a1 >= spectrum.a2 ? LowerEdge::power_singularity : LowerEdge::square_root;
    law.density = [spectrum](double x) { return fat_hook_density(spectrum, x).value; };
    return law;
  }
  const std::vector<double> edges = discriminant_positive_roots(eliminate(law.heights));
  if (edges.empty()) throw std::logic_error("no positive support edge found");
  law.support_hi = edges.back();
  // Heuristic: with an atom the continuous part is taken to start at the
  // smallest positive edge.
  if (law.atom_mass > 0 && edges.size() > 1) {
    law.support_lo = edges.front();
    law.lower = LowerEdge::square_root;
  }
  const std::vector<int> heights = law.heights;
  law.density = [heights, options](double x) { return stieltjes_density(heights, x, options).density; };
  return law;
}

std::vector<double> analytic_bin_masses(const AnalyticLaw& law, const std::vector<double>& edges) {
  std::vector<double> out;
  for (size_t b = 0; b + 1 < edges.size(); ++b) {
    const double lo = std::max(edges[b], law.support_lo);
    const double hi = std::min(edges[b + 1], law.support_hi);
    if (!(hi > lo)) {
      out.push_back(0.0);
      continue;
    }
    // Only the interval touching the lower support edge carries its singularity.
    const bool at_edge = lo == law.support_lo;
    const LowerEdge kind = at_edge ? law.lower : LowerEdge::square_root;
    out.push_back(density_moments(law.density, lo, hi, kind, 0, 4, 1e-9)[0]);
  }
  return out;
}

}  // namespace lspec

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "lspec/partition.hpp"

namespace lspec {

enum class EntryLaw {
  complex_gaussian,  // real and imaginary parts N(0, 1/2)
  uniform_phase,     // e^{iθ}, θ uniform on [0, 2π)
};

EntryLaw parse_entry_law(const std::string& name);  // "gaussian" | "phase"
std::string to_string(EntryLaw law);

inline constexpr int kDefaultDimensionCap = 2000;

struct ShapedMatrix {
  Partition shape;  // λ, before dilation
  int N = 1;
  std::uint64_t seed = 0;
  EntryLaw law = EntryLaw::complex_gaussian;
  Eigen::MatrixXcd entries;  // (Nℓ)×(Nℓ), zero off Nλ

  int dimension() const { return static_cast<int>(entries.rows()); }
};

/// Stream derivation: the trial-th seed is SplitMix64 applied to
/// master + (trial+1)·golden-ratio increment.
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial);

/// Throws UsageError if N < 1 or Nℓ exceeds cap.
ShapedMatrix sample_matrix(const Partition& p, int N, std::uint64_t seed,
                           EntryLaw law = EntryLaw::complex_gaussian, int cap = kDefaultDimensionCap);

/// Sorted eigenvalues of a Hermitian matrix, checked against the trace
/// contracts |Σλ − tr W| and |Σλ² − tr W²| <= 1e−10·(1 + |tr|).
std::vector<double> hermitian_eigenvalues(const Eigen::MatrixXcd& W);

/// Eigenvalues of W = X X^* / N.
std::vector<double> gram_eigenvalues(const ShapedMatrix& X);

/// (1/(N²ℓ)) Σ |X_ij|², the first empirical moment computed from entries.
double entry_energy_moment(const ShapedMatrix& X);

struct Histogram {
  std::vector<double> edges;   // bins + 1 edges
  std::vector<double> masses;  // sums to 1
};

/// Histogram of values over [lo, hi]; hi is raised to cover the largest value.
Histogram make_histogram(const std::vector<double>& values, double lo, double hi, int bins);

struct MomentEstimate {
  int k = 0;
  double mean = 0.0;
  double standard_error = 0.0;
};

struct SpectralSample {
  int dimension = 0;               // Nℓ (per trial)
  int trials = 0;
  std::vector<double> eigenvalues;  // pooled over trials, ascending
  Histogram histogram;
  /// Same bins, kernel eigenvalues removed; masses still divided by the
  /// total count, so they sum to 1 − near_zero_fraction.
  Histogram continuous_histogram;
  std::vector<MomentEstimate> moments;               // k = 0..kmax
  std::vector<std::vector<double>> trial_moments;    // [trial][k]
  double near_zero_fraction = 0.0;  // eigenvalues below 1e−8·λ_max of their own trial
};

struct ExperimentConfig {
  int N = 20;
  int trials = 100;
  std::uint64_t seed = 42;
  int bins = 200;
  EntryLaw law = EntryLaw::complex_gaussian;
  int kmax = 4;
  /// Histogram upper edge; defaults to the largest eigenvalue.
  std::optional<double> range_max;
  int cap = kDefaultDimensionCap;
  /// Worker threads; 0 means LS_THREADS or the hardware count.
  int threads = 0;
};

/// Threads to use: LS_THREADS if set and positive, else hardware concurrency.
int default_thread_count();

SpectralSample run_experiment(const Partition& p, const ExperimentConfig& config);

inline constexpr double kRankTolerance = 1e-8;

struct KernelCheck {
  int numeric_dim = 0;
  int predicted_dim = 0;  // null_space_dim(Nλ), the row-count formula
  int generic_dim = 0;    // generic_null_space_dim(Nλ), rook placement
  /// Gap between the smallest "nonzero" and largest "zero" eigenvalue is
  /// below 10×tolerance.
  bool ambiguous = false;
};

KernelCheck kernel_dim_check(const Partition& p, int N, std::uint64_t seed,
                             EntryLaw law = EntryLaw::complex_gaussian);

/// W = (A A^* + D B B^* D)/N with A, B (Nℓ)×(N a1) Gaussian and
/// D = diag of `pattern` repeated N times (default 0^{a1} 1^{a2}).
SpectralSample freeness_model(int a1, int a2, const ExperimentConfig& config,
                              std::optional<std::vector<double>> pattern = std::nullopt);

}  // namespace lspec

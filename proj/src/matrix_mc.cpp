#include "lspec/matrix_mc.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <random>
#include <thread>

#include "lspec/errors.hpp"

namespace lspec {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

class EntrySampler {
 public:
  EntrySampler(std::uint64_t seed, EntryLaw law) : engine_(seed), law_(law) {}
  std::complex<double> operator()() {
    if (law_ == EntryLaw::complex_gaussian) {
      const double re = normal_(engine_), im = normal_(engine_);
      return {re, im};
    }
    return std::polar(1.0, phase_(engine_));
  }

 private:
  std::mt19937_64 engine_;
  EntryLaw law_;
  std::normal_distribution<double> normal_{0.0, std::sqrt(0.5)};
  std::uniform_real_distribution<double> phase_{0.0, 2 * M_PI};
};

// Runs body(t) for t in [0, count) on `threads` workers; results are
// written by index so the reduction order never depends on scheduling.
void parallel_for(int count, int threads, const std::function<void(int)>& body) {
  threads = std::max(1, std::min(threads, count));
  if (threads == 1) {
    for (int t = 0; t < count; ++t) body(t);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (int w = 0; w < threads; ++w) {
    pool.emplace_back([&] {
      for (int t; (t = next.fetch_add(1)) < count;) {
        try {
          body(t);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

struct TrialResult {
  std::vector<double> eigenvalues;
  int zeros = 0;
};

int count_zeros(const std::vector<double>& eigenvalues) {
  const double top = eigenvalues.empty() ? 0.0 : std::max(eigenvalues.back(), 0.0);
  const double tol = kRankTolerance * top;
  return static_cast<int>(std::count_if(eigenvalues.begin(), eigenvalues.end(),
                                        [&](double v) { return v < tol; }));
}

SpectralSample aggregate(std::vector<TrialResult> results, int dimension, const ExperimentConfig& config) {
  SpectralSample out;
  out.dimension = dimension;
  out.trials = static_cast<int>(results.size());
  long zeros = 0;
  std::vector<double> continuous;
  for (auto& r : results) {
    continuous.insert(continuous.end(), r.eigenvalues.begin() + r.zeros, r.eigenvalues.end());
    std::vector<double> m(config.kmax + 1, 0.0);
    for (double v : r.eigenvalues) {
      double power = 1.0;
      for (int k = 0; k <= config.kmax; ++k, power *= v) m[k] += power;
    }
    for (auto& v : m) v /= dimension;
    out.trial_moments.push_back(std::move(m));
    zeros += r.zeros;
    out.eigenvalues.insert(out.eigenvalues.end(), r.eigenvalues.begin(), r.eigenvalues.end());
  }
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end());
  out.near_zero_fraction = double(zeros) / double(out.eigenvalues.size());
  for (int k = 0; k <= config.kmax; ++k) {
    double mean = 0;
    for (const auto& m : out.trial_moments) mean += m[k];
    mean /= out.trials;
    double var = 0;
    for (const auto& m : out.trial_moments) var += (m[k] - mean) * (m[k] - mean);
    const double se = out.trials > 1 ? std::sqrt(var / (out.trials - 1) / out.trials) : 0.0;
    out.moments.push_back({k, mean, se});
  }
  const double hi = config.range_max.value_or(out.eigenvalues.empty() ? 1.0 : out.eigenvalues.back());
  out.histogram = make_histogram(out.eigenvalues, 0.0, hi, config.bins);
  out.continuous_histogram = make_histogram(continuous, 0.0, out.histogram.edges.back(), config.bins);
  const double share = double(continuous.size()) / double(out.eigenvalues.size());
  for (auto& m : out.continuous_histogram.masses) m *= share;
  return out;
}

void check_config(const ExperimentConfig& config) {
  if (config.trials < 1) throw UsageError("trials must be >= 1");
  if (config.bins < 1) throw UsageError("bins must be >= 1");
  if (config.kmax < 0) throw UsageError("kmax must be >= 0");
}

}  // namespace

EntryLaw parse_entry_law(const std::string& name) {
  if (name == "gaussian" || name == "complex-gaussian") return EntryLaw::complex_gaussian;
  if (name == "phase" || name == "uniform-phase") return EntryLaw::uniform_phase;
  throw UsageError("unknown entry law '" + name + "' (expected gaussian or phase)");
}

std::string to_string(EntryLaw law) {
  return law == EntryLaw::complex_gaussian ? "gaussian" : "phase";
}

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial) {
  return splitmix64(master + (trial + 1) * 0x9E3779B97F4A7C15ULL);
}

ShapedMatrix sample_matrix(const Partition& p, int N, std::uint64_t seed, EntryLaw law, int cap) {
  if (N < 1) throw UsageError("N must be >= 1");
  const long dim = static_cast<long>(N) * p.length();
  if (dim > cap)
    throw UsageError("matrix dimension " + std::to_string(dim) + " exceeds the cap " + std::to_string(cap));
  ShapedMatrix X{p, N, seed, law, Eigen::MatrixXcd::Zero(dim, dim)};
  EntrySampler sample(seed, law);
  // Row-major fill over the cells of Nλ so the stream order is fixed.
  for (long i = 0; i < dim; ++i) {
    const long row_length = static_cast<long>(N) * p.part(static_cast<int>(i / N) + 1);
    for (long j = 0; j < row_length; ++j) X.entries(i, j) = sample();
  }
  return X;
}

std::vector<double> hermitian_eigenvalues(const Eigen::MatrixXcd& W) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(W, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw ConvergenceError("Hermitian eigensolver did not converge", NAN, 0);
  std::vector<double> values(solver.eigenvalues().data(), solver.eigenvalues().data() + W.rows());
  std::sort(values.begin(), values.end());
  const double trace = W.trace().real();
  const double trace_sq = W.squaredNorm();  // tr W² for Hermitian W
  double sum = 0, sum_sq = 0;
  for (double v : values) {
    sum += v;
    sum_sq += v * v;
  }
  const double e1 = std::abs(sum - trace) / (1 + std::abs(trace));
  const double e2 = std::abs(sum_sq - trace_sq) / (1 + std::abs(trace_sq));
  if (e1 > 1e-10 || e2 > 1e-10)
    throw ConvergenceError("eigenvalues violate the trace contract", std::max(e1, e2), 0);
  return values;
}

std::vector<double> gram_eigenvalues(const ShapedMatrix& X) {
  const Eigen::MatrixXcd W = (X.entries * X.entries.adjoint()) / double(X.N);
  return hermitian_eigenvalues(W);
}

double entry_energy_moment(const ShapedMatrix& X) {
  return X.entries.squaredNorm() / (double(X.N) * double(X.N) * X.shape.length());
}

Histogram make_histogram(const std::vector<double>& values, double lo, double hi, int bins) {
  if (bins < 1) throw UsageError("bins must be >= 1");
  for (double v : values) hi = std::max(hi, v);
  if (!(hi > lo)) hi = lo + 1.0;
  Histogram h;
  h.edges.resize(bins + 1);
  for (int b = 0; b <= bins; ++b) h.edges[b] = lo + (hi - lo) * b / bins;
  h.masses.assign(bins, 0.0);
  for (double v : values) {
    int b = static_cast<int>(std::floor((v - lo) / (hi - lo) * bins));
    b = std::clamp(b, 0, bins - 1);
    h.masses[b] += 1.0;
  }
  if (!values.empty())
    for (auto& m : h.masses) m /= double(values.size());
  return h;
}

int default_thread_count() {
  if (const char* env = std::getenv("LS_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

SpectralSample run_experiment(const Partition& p, const ExperimentConfig& config) {
  check_config(config);
  const int dim = config.N * p.length();
  if (config.N < 1) throw UsageError("N must be >= 1");
  if (dim > config.cap) sample_matrix(p, config.N, 0, config.law, config.cap);  // throws
  std::vector<TrialResult> results(config.trials);
  parallel_for(config.trials, config.threads > 0 ? config.threads : default_thread_count(), [&](int t) {
    const ShapedMatrix X = sample_matrix(p, config.N, trial_seed(config.seed, t), config.law, config.cap);
    auto values = gram_eigenvalues(X);
    const int zeros = count_zeros(values);
    results[t] = {std::move(values), zeros};
  });
  return aggregate(std::move(results), dim, config);
}

KernelCheck kernel_dim_check(const Partition& p, int N, std::uint64_t seed, EntryLaw law) {
  const ShapedMatrix X = sample_matrix(p, N, seed, law);
  const std::vector<double> values = gram_eigenvalues(X);
  KernelCheck out;
  out.numeric_dim = count_zeros(values);
  const Partition dilated = dilate(p, N);
  out.predicted_dim = null_space_dim(dilated);
  out.generic_dim = generic_null_space_dim(dilated);
  const double tol = kRankTolerance * std::max(values.back(), 0.0);
  const double largest_zero = out.numeric_dim > 0 ? std::max(values[out.numeric_dim - 1], 0.0) : 0.0;
  const double smallest_nonzero = out.numeric_dim < static_cast<int>(values.size()) ? values[out.numeric_dim] : INFINITY;
  out.ambiguous = smallest_nonzero - largest_zero < 10 * tol;
  return out;
}

SpectralSample freeness_model(int a1, int a2, const ExperimentConfig& config,
                              std::optional<std::vector<double>> pattern) {
  check_config(config);
  if (a1 < 1 || a2 < 1) throw UsageError("fat hook heights must be positive");
  if (config.N < 1) throw UsageError("N must be >= 1");
  const int ell = a1 + a2;
  const int dim = config.N * ell, cols = config.N * a1;
  if (dim > config.cap) throw UsageError("matrix dimension " + std::to_string(dim) + " exceeds the cap");
  std::vector<double> base = pattern.value_or(std::vector<double>{});
  if (!pattern) {
    base.assign(a1, 0.0);
    base.insert(base.end(), a2, 1.0);
  }
  if (static_cast<int>(base.size()) != ell) throw UsageError("projection pattern must have ℓ entries");
  Eigen::VectorXd d(dim);
  for (int i = 0; i < dim; ++i) d(i) = base[i % ell];

  std::vector<TrialResult> results(config.trials);
  parallel_for(config.trials, config.threads > 0 ? config.threads : default_thread_count(), [&](int t) {
    EntrySampler sample(trial_seed(config.seed, t), config.law);
    Eigen::MatrixXcd A(dim, cols), B(dim, cols);
    for (int j = 0; j < cols; ++j)
      for (int i = 0; i < dim; ++i) A(i, j) = sample();
    for (int j = 0; j < cols; ++j)
      for (int i = 0; i < dim; ++i) B(i, j) = sample() * d(i);
    const Eigen::MatrixXcd W = (A * A.adjoint() + B * B.adjoint()) / double(config.N);
    auto values = hermitian_eigenvalues(W);
    const int zeros = count_zeros(values);
    results[t] = {std::move(values), zeros};
  });
  return aggregate(std::move(results), dim, config);
}

}  // namespace lspec

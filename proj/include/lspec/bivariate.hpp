#pragma once

#include <complex>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lspec/numeric.hpp"
#include "lspec/series.hpp"

namespace lspec {

/// Polynomial in two variables (x, z) with integer coefficients.  x is the
/// "main" variable (M or G); z is the spectral parameter.
class BivariatePoly {
 public:
  using Terms = std::map<std::pair<int, int>, Integer>;  // (deg_x, deg_z) -> coefficient

  BivariatePoly() = default;
  explicit BivariatePoly(const Terms& terms);
  /// rows[i][j] is the coefficient of x^i z^j.
  explicit BivariatePoly(std::vector<std::vector<Integer>> rows);

  Integer coefficient(int deg_x, int deg_z) const;
  Terms terms() const;
  const std::vector<std::vector<Integer>>& rows() const noexcept { return rows_; }

  int degree_x() const noexcept { return static_cast<int>(rows_.size()) - 1; }
  int degree_z() const noexcept;
  bool is_zero() const noexcept { return rows_.empty(); }

  /// Content 1 and positive leading coefficient in x (ties broken by the
  /// highest z power of that coefficient).
  BivariatePoly normalized() const;

  /// P(x(z), z) as a truncated series.
  TruncatedSeries evaluate(const TruncatedSeries& x) const;
  std::complex<double> evaluate(std::complex<double> x, std::complex<double> z) const;
  /// Coefficients of P(., z) as a polynomial in x, lowest degree first.
  std::vector<std::complex<double>> coefficients_at(std::complex<double> z) const;

  /// Discriminant with respect to x, as coefficients of a polynomial in z
  /// (lowest degree first).
  std::vector<Integer> discriminant() const;

  std::string to_string(const std::string& x = "G", const std::string& z = "z") const;

  friend bool operator==(const BivariatePoly&, const BivariatePoly&) = default;

 private:
  void trim();
  std::vector<std::vector<Integer>> rows_;
};

/// Content of an integer polynomial (gcd of coefficients, nonnegative).
Integer integer_content(const std::vector<Integer>& poly);

/// Roots of Σ c_i x^i (c.back() != 0), polished by Newton steps.
std::vector<std::complex<double>> polynomial_roots(const std::vector<std::complex<double>>& coefficients);

}  // namespace lspec

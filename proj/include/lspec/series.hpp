#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "lspec/numeric.hpp"

namespace lspec {

class SeriesError : public std::domain_error {
 public:
  enum class Kind {
    zero_divisor_constant,
    sqrt_constant_not_square,
    reversion_needs_zero_constant,
    reversion_needs_linear_term,
    compose_inner_constant,
    shift_nonzero_constant,
    transform_precondition,
  };
  SeriesError(Kind kind, const std::string& what) : std::domain_error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// c_0 + c_1 z + ... + c_K z^K + O(z^{K+1}) over exact rationals.
///
/// Every binary operation returns a series known to the smaller of the two
/// operand orders; nothing is silently padded or extended.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order);  // zero series
  explicit TruncatedSeries(std::vector<Rational> coefficients);

  static TruncatedSeries constant(const Rational& c, int order);
  /// c z^degree.
  static TruncatedSeries monomial(const Rational& c, int degree, int order);

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  const Rational& operator[](int n) const { return coeffs_.at(n); }

  TruncatedSeries truncated(int order) const;

  TruncatedSeries operator-() const;
  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const Rational& s, const TruncatedSeries& a);
  friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator+(const TruncatedSeries& a, const Rational& c);

  /// Multiplies by z; the result is known to one order higher.
  TruncatedSeries times_z() const;
  /// Divides by z; requires c_0 = 0.
  TruncatedSeries over_z() const;

  /// True iff every known coefficient vanishes.
  bool is_zero() const;

  std::string to_string(const std::string& variable = "z") const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// Principal root; the constant term must be the square of a rational.
TruncatedSeries sqrt(const TruncatedSeries& f);
/// 1/f; requires f_0 != 0.
TruncatedSeries reciprocal(const TruncatedSeries& f);
/// f(g(z)); requires g_0 = 0.
TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& g);
/// g with f(g(z)) = z; requires f_0 = 0 and f_1 != 0.
TruncatedSeries reversion(const TruncatedSeries& f);

// ---------------------------------------------------------------------------
// Free-probability transforms.  A Cauchy transform G is carried as a series
// in w = 1/z: G = m_0 w + m_1 w^2 + ...; R and S are plain power series.

/// Σ_{k<K} m_k w^{k+1} to order K; needs m.size() >= K and m_0 = 1.
TruncatedSeries moments_to_G(const std::vector<Rational>& m, int order);

/// R with G(R(z) + 1/z) = z.  G of order K yields R of order K - 2.
TruncatedSeries G_to_R(const TruncatedSeries& G);

/// Residual G(R(z)+1/z) - z, computed as G(z/(1 + z R(z))) - z.
TruncatedSeries R_identity_residual(const TruncatedSeries& G, const TruncatedSeries& R);

/// S with S(z) R(z S(z)) = 1; requires R_0 != 0.
TruncatedSeries R_to_S(const TruncatedSeries& R);

/// Inverse of R_to_S: R(u) = 1 / S(z(u)) where u = z S(z).
TruncatedSeries S_to_R(const TruncatedSeries& S);

/// S(z) R(z S(z)) - 1.
TruncatedSeries S_identity_residual(const TruncatedSeries& R, const TruncatedSeries& S);

TruncatedSeries free_add(const TruncatedSeries& R1, const TruncatedSeries& R2);
TruncatedSeries free_mul(const TruncatedSeries& S1, const TruncatedSeries& S2);

/// Moments m_0..m_{count-1} from a G series (inverse of moments_to_G).
std::vector<Rational> G_to_moments(const TruncatedSeries& G);

// Reference laws.  MP(α, β): free Poisson with rate α and jump size β.
TruncatedSeries marchenko_pastur_R(const Rational& alpha, const Rational& beta, int order);
TruncatedSeries marchenko_pastur_S(const Rational& alpha, const Rational& beta, int order);
TruncatedSeries bernoulli_R(const Rational& p, int order);
TruncatedSeries bernoulli_S(const Rational& p, int order);

}  // namespace lspec

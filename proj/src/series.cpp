#include "lspec/series.hpp"

#include <algorithm>

namespace lspec {

namespace {

using Kind = SeriesError::Kind;

bool rational_sqrt(const Rational& q, Rational& root) {
  if (q < 0) return false;
  const Integer num = boost::multiprecision::numerator(q);
  const Integer den = boost::multiprecision::denominator(q);
  const Integer rn = boost::multiprecision::sqrt(num);
  const Integer rd = boost::multiprecision::sqrt(den);
  if (rn * rn != num || rd * rd != den) return false;
  root = Rational(rn, rd);
  return true;
}

}  // namespace

TruncatedSeries::TruncatedSeries(int order) : coeffs_(std::max(order, 0) + 1) {
  if (order < 0) throw std::invalid_argument("series order must be >= 0");
}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) throw std::invalid_argument("series needs at least one coefficient");
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, int order) {
  TruncatedSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

TruncatedSeries TruncatedSeries::monomial(const Rational& c, int degree, int order) {
  TruncatedSeries s(order);
  if (degree >= 0 && degree <= order) s.coeffs_[degree] = c;
  return s;
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
  if (order > this->order()) throw std::invalid_argument("cannot extend a truncated series");
  return TruncatedSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries r(std::min(a.order(), b.order()));
  for (int n = 0; n <= r.order(); ++n) r.coeffs_[n] = a.coeffs_[n] + b.coeffs_[n];
  return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return a + (-b); }

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries r(std::min(a.order(), b.order()));
  for (int i = 0; i <= r.order(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (int j = 0; i + j <= r.order(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return r;
}

TruncatedSeries operator*(const Rational& s, const TruncatedSeries& a) {
  TruncatedSeries r(a);
  for (auto& c : r.coeffs_) c *= s;
  return r;
}

TruncatedSeries operator+(const TruncatedSeries& a, const Rational& c) {
  TruncatedSeries r(a);
  r.coeffs_[0] += c;
  return r;
}

TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
  return a * reciprocal(b);
}

TruncatedSeries TruncatedSeries::times_z() const {
  std::vector<Rational> c(coeffs_.size() + 1);
  std::copy(coeffs_.begin(), coeffs_.end(), c.begin() + 1);
  return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::over_z() const {
  if (coeffs_[0] != 0) throw SeriesError(Kind::shift_nonzero_constant, "cannot divide by z: nonzero constant term");
  if (coeffs_.size() == 1) throw SeriesError(Kind::shift_nonzero_constant, "cannot divide an order-0 series by z");
  return TruncatedSeries(std::vector<Rational>(coeffs_.begin() + 1, coeffs_.end()));
}

bool TruncatedSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

std::string TruncatedSeries::to_string(const std::string& variable) const {
  std::string out;
  for (int n = 0; n <= order(); ++n) {
    if (coeffs_[n] == 0) continue;
    if (!out.empty()) out += " + ";
    out += "(" + to_fraction_string(coeffs_[n]) + ")";
    if (n == 1) out += variable;
    if (n > 1) out += variable + "^" + std::to_string(n);
  }
  if (out.empty()) out = "0";
  return out + " + O(" + variable + "^" + std::to_string(order() + 1) + ")";
}

TruncatedSeries reciprocal(const TruncatedSeries& f) {
  if (f[0] == 0) throw SeriesError(Kind::zero_divisor_constant, "division by a series with zero constant term");
  const int K = f.order();
  std::vector<Rational> g(K + 1);
  g[0] = 1 / f[0];
  for (int n = 1; n <= K; ++n) {
    Rational acc = 0;
    for (int i = 1; i <= n; ++i) acc += f[i] * g[n - i];
    g[n] = -acc * g[0];
  }
  return TruncatedSeries(std::move(g));
}

TruncatedSeries sqrt(const TruncatedSeries& f) {
  Rational root;
  if (!rational_sqrt(f[0], root) || root == 0)
    throw SeriesError(Kind::sqrt_constant_not_square,
                      "sqrt needs a nonzero rational square constant term, got " + to_fraction_string(f[0]));
  const int K = f.order();
  std::vector<Rational> s(K + 1);
  s[0] = root;
  for (int n = 1; n <= K; ++n) {
    Rational acc = f[n];
    for (int i = 1; i < n; ++i) acc -= s[i] * s[n - i];
    s[n] = acc / (2 * root);
  }
  return TruncatedSeries(std::move(s));
}

TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& g) {
  if (g[0] != 0) throw SeriesError(Kind::compose_inner_constant, "inner series of a composition must have zero constant term");
  const int K = std::min(f.order(), g.order());
  const TruncatedSeries inner = g.truncated(K);
  TruncatedSeries result = TruncatedSeries::constant(f[K], K);
  for (int n = K - 1; n >= 0; --n) result = result * inner + f[n];
  return result;
}

TruncatedSeries reversion(const TruncatedSeries& f) {
  if (f[0] != 0) throw SeriesError(Kind::reversion_needs_zero_constant, "reversion needs zero constant term");
  if (f.order() < 1 || f[1] == 0) throw SeriesError(Kind::reversion_needs_linear_term, "reversion needs a nonzero linear term");
  const int K = f.order();
  std::vector<Rational> g(K + 1);
  g[1] = 1 / f[1];
  // Fix one coefficient per pass: the z^n coefficient of f(g) is
  // f_1 g_n + (terms in g_1..g_{n-1}).
  for (int n = 2; n <= K; ++n) {
    const TruncatedSeries partial(std::vector<Rational>(g.begin(), g.begin() + n + 1));
    const TruncatedSeries fg = compose(f.truncated(n), partial);
    g[n] = -fg[n] / f[1];
  }
  return TruncatedSeries(std::move(g));
}

TruncatedSeries moments_to_G(const std::vector<Rational>& m, int order) {
  if (order < 1) throw std::invalid_argument("G needs order >= 1");
  if (static_cast<int>(m.size()) < order)
    throw std::invalid_argument("moments_to_G: need " + std::to_string(order) + " moments");
  if (m[0] != 1) throw SeriesError(Kind::transform_precondition, "moments_to_G: m_0 must be 1");
  std::vector<Rational> c(order + 1);
  for (int k = 0; k < order; ++k) c[k + 1] = m[k];
  return TruncatedSeries(std::move(c));
}

std::vector<Rational> G_to_moments(const TruncatedSeries& G) {
  std::vector<Rational> m;
  for (int n = 1; n <= G.order(); ++n) m.push_back(G[n]);
  return m;
}

TruncatedSeries G_to_R(const TruncatedSeries& G) {
  if (G.order() < 2 || G[0] != 0 || G[1] != 1)
    throw SeriesError(Kind::transform_precondition, "G_to_R: G must be w + O(w^2) with order >= 2");
  // G(1/u) = z  <=>  1/u = Ginv(z);  R = 1/Ginv(z) - 1/z = (1/Q - 1)/z, Q = Ginv/z.
  const TruncatedSeries Q = reversion(G).over_z();
  return (reciprocal(Q) + Rational(-1)).over_z();
}

TruncatedSeries R_identity_residual(const TruncatedSeries& G, const TruncatedSeries& R) {
  // 1/(R + 1/z) = z / (1 + z R).
  const TruncatedSeries zR = R.times_z();
  const TruncatedSeries T = TruncatedSeries::monomial(1, 1, zR.order()) / (zR + Rational(1));
  const TruncatedSeries value = compose(G, T);
  return value - TruncatedSeries::monomial(1, 1, value.order());
}

TruncatedSeries R_to_S(const TruncatedSeries& R) {
  if (R[0] == 0) throw SeriesError(Kind::transform_precondition, "R_to_S: zero mean (R_0 = 0)");
  const int K = R.order();
  std::vector<Rational> s(K + 1);
  s[0] = 1 / R[0];
  // z^n coefficient of S(z) R(z S(z)) is S_n R_0 + (terms in S_0..S_{n-1}).
  for (int n = 1; n <= K; ++n) {
    const TruncatedSeries partial(std::vector<Rational>(s.begin(), s.begin() + n + 1));
    const TruncatedSeries product = partial * compose(R.truncated(n), partial.times_z().truncated(n));
    s[n] = -product[n] / R[0];
  }
  return TruncatedSeries(std::move(s));
}

TruncatedSeries S_to_R(const TruncatedSeries& S) {
  if (S[0] == 0) throw SeriesError(Kind::transform_precondition, "S_to_R: S_0 must be nonzero");
  const TruncatedSeries u = S.times_z().truncated(S.order());
  return compose(reciprocal(S), reversion(u));
}

TruncatedSeries S_identity_residual(const TruncatedSeries& R, const TruncatedSeries& S) {
  const int K = std::min(R.order(), S.order());
  const TruncatedSeries s = S.truncated(K);
  return s * compose(R.truncated(K), s.times_z().truncated(K)) + Rational(-1);
}

TruncatedSeries free_add(const TruncatedSeries& R1, const TruncatedSeries& R2) { return R1 + R2; }
TruncatedSeries free_mul(const TruncatedSeries& S1, const TruncatedSeries& S2) { return S1 * S2; }

TruncatedSeries marchenko_pastur_R(const Rational& alpha, const Rational& beta, int order) {
  // αβ / (1 - βz) = αβ Σ β^n z^n.
  std::vector<Rational> c(order + 1);
  Rational power = alpha * beta;
  for (int n = 0; n <= order; ++n, power *= beta) c[n] = power;
  return TruncatedSeries(std::move(c));
}

TruncatedSeries marchenko_pastur_S(const Rational& alpha, const Rational& beta, int order) {
  const TruncatedSeries denominator =
      TruncatedSeries::constant(beta * alpha, order) + TruncatedSeries::monomial(beta, 1, order);
  return reciprocal(denominator);
}

TruncatedSeries bernoulli_R(const Rational& p, int order) {
  // (z - 1 + sqrt(1 - 2(1-2p) z + z^2)) / (2z); numerator is known to one
  // order beyond the result.
  const int K = order + 1;
  TruncatedSeries radicand = TruncatedSeries::constant(1, K) +
                             TruncatedSeries::monomial(-2 * (1 - 2 * p), 1, K) +
                             TruncatedSeries::monomial(1, 2, K);
  const TruncatedSeries numerator = sqrt(radicand) + TruncatedSeries::monomial(1, 1, K) + Rational(-1);
  return Rational(1, 2) * numerator.over_z();
}

TruncatedSeries bernoulli_S(const Rational& p, int order) {
  const TruncatedSeries numerator = TruncatedSeries::constant(1, order) + TruncatedSeries::monomial(1, 1, order);
  const TruncatedSeries denominator = TruncatedSeries::constant(p, order) + TruncatedSeries::monomial(1, 1, order);
  return numerator / denominator;
}

}  // namespace lspec

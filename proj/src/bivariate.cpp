#include "lspec/bivariate.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "poly_algebra.hpp"

namespace lspec {

using detail::ZPoly;

BivariatePoly::BivariatePoly(const Terms& terms) {
  for (const auto& [degrees, value] : terms) {
    const auto [i, j] = degrees;
    if (i < 0 || j < 0) throw std::invalid_argument("negative exponent in bivariate polynomial");
    if (static_cast<int>(rows_.size()) <= i) rows_.resize(i + 1);
    if (static_cast<int>(rows_[i].size()) <= j) rows_[i].resize(j + 1);
    rows_[i][j] += value;
  }
  trim();
}

BivariatePoly::BivariatePoly(std::vector<std::vector<Integer>> rows) : rows_(std::move(rows)) { trim(); }

void BivariatePoly::trim() {
  for (auto& row : rows_)
    while (!row.empty() && row.back() == 0) row.pop_back();
  while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
}

int BivariatePoly::degree_z() const noexcept {
  int d = -1;
  for (const auto& row : rows_) d = std::max(d, static_cast<int>(row.size()) - 1);
  return d;
}

Integer BivariatePoly::coefficient(int deg_x, int deg_z) const {
  if (deg_x < 0 || deg_x >= static_cast<int>(rows_.size())) return 0;
  const auto& row = rows_[deg_x];
  if (deg_z < 0 || deg_z >= static_cast<int>(row.size())) return 0;
  return row[deg_z];
}

BivariatePoly::Terms BivariatePoly::terms() const {
  Terms out;
  for (size_t i = 0; i < rows_.size(); ++i)
    for (size_t j = 0; j < rows_[i].size(); ++j)
      if (rows_[i][j] != 0) out[{static_cast<int>(i), static_cast<int>(j)}] = rows_[i][j];
  return out;
}

Integer integer_content(const std::vector<Integer>& poly) {
  Integer g = 0;
  for (const auto& v : poly) g = boost::multiprecision::gcd(g, v);
  return g;
}

BivariatePoly BivariatePoly::normalized() const {
  if (is_zero()) return *this;
  Integer g = 0;
  for (const auto& row : rows_) g = boost::multiprecision::gcd(g, integer_content(row));
  const auto& lead_row = rows_.back();
  if (lead_row.back() < 0) g = -g;
  auto rows = rows_;
  for (auto& row : rows)
    for (auto& v : row) v /= g;
  return BivariatePoly(std::move(rows));
}

TruncatedSeries BivariatePoly::evaluate(const TruncatedSeries& x) const {
  const int K = x.order();
  TruncatedSeries result(K);
  // Horner in x; each coefficient is a polynomial in z truncated at K.
  for (int i = degree_x(); i >= 0; --i) {
    std::vector<Rational> c(K + 1);
    const auto& row = rows_[i];
    for (int j = 0; j < static_cast<int>(row.size()) && j <= K; ++j) c[j] = Rational(row[j]);
    result = result * x + TruncatedSeries(std::move(c));
  }
  return result;
}

std::vector<std::complex<double>> BivariatePoly::coefficients_at(std::complex<double> z) const {
  std::vector<std::complex<double>> out(rows_.size());
  for (size_t i = 0; i < rows_.size(); ++i) {
    std::complex<double> acc = 0;
    for (size_t j = rows_[i].size(); j-- > 0;) acc = acc * z + rows_[i][j].convert_to<double>();
    out[i] = acc;
  }
  return out;
}

std::complex<double> BivariatePoly::evaluate(std::complex<double> x, std::complex<double> z) const {
  const auto c = coefficients_at(z);
  std::complex<double> acc = 0;
  for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

namespace {

ZPoly row_poly(const std::vector<Integer>& row) { return ZPoly(row); }

// Fraction-free (Bareiss) determinant over Z[z].
ZPoly bareiss_determinant(std::vector<std::vector<ZPoly>> m) {
  const size_t n = m.size();
  if (n == 0) return ZPoly::constant(1);
  ZPoly previous = ZPoly::constant(1);
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].zero()) {
      size_t p = k + 1;
      while (p < n && m[p][k].zero()) ++p;
      if (p == n) return {};
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j)
        m[i][j] = detail::exact_div(m[k][k] * m[i][j] - m[i][k] * m[k][j], previous);
      m[i][k] = {};
    }
    previous = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

}  // namespace

std::vector<Integer> BivariatePoly::discriminant() const {
  const int n = degree_x();
  if (n < 1) throw std::domain_error("discriminant needs degree >= 1 in the main variable");
  std::vector<ZPoly> f(n + 1), df(n);
  for (int i = 0; i <= n; ++i) f[i] = row_poly(rows_[i]);
  for (int i = 1; i <= n; ++i) df[i - 1] = detail::scale(f[i], Integer(i));
  if (n == 1) return {Integer(1)};
  const int m = n - 1;
  const int size = n + m;
  std::vector<std::vector<ZPoly>> sylvester(size, std::vector<ZPoly>(size));
  for (int row = 0; row < m; ++row)
    for (int i = 0; i <= n; ++i) sylvester[row][row + (n - i)] = f[i];
  for (int row = 0; row < n; ++row)
    for (int i = 0; i <= m; ++i) sylvester[m + row][row + (m - i)] = df[i];
  ZPoly res = bareiss_determinant(std::move(sylvester));
  ZPoly disc = detail::exact_div(res, f[n]);
  if ((n * (n - 1) / 2) % 2 == 1) disc = -disc;
  return disc.c;
}

std::string BivariatePoly::to_string(const std::string& x, const std::string& z) const {
  std::ostringstream out;
  bool first = true;
  for (int i = degree_x(); i >= 0; --i) {
    for (int j = static_cast<int>(rows_[i].size()) - 1; j >= 0; --j) {
      const Integer& c = rows_[i][j];
      if (c == 0) continue;
      out << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
      first = false;
      const Integer a = boost::multiprecision::abs(c);
      const bool bare = (i > 0 || j > 0) && a == 1;
      if (!bare) out << a;
      if (i > 0) out << (bare ? "" : "*") << x << (i > 1 ? "^" + std::to_string(i) : "");
      if (j > 0) out << ((bare && i == 0) ? "" : "*") << z << (j > 1 ? "^" + std::to_string(j) : "");
    }
  }
  return first ? "0" : out.str();
}

std::vector<std::complex<double>> polynomial_roots(const std::vector<std::complex<double>>& coefficients) {
  const int n = static_cast<int>(coefficients.size()) - 1;
  if (n < 1 || coefficients.back() == 0.0) throw std::domain_error("polynomial_roots needs degree >= 1 and nonzero leading coefficient");
  // Rescale x = s·y so the extreme coefficients have equal size; keeps the
  // companion matrix balanced when the leading coefficient is tiny.
  double s = 1.0;
  if (coefficients[0] != 0.0) s = std::pow(std::abs(coefficients[0]) / std::abs(coefficients[n]), 1.0 / n);
  std::vector<std::complex<double>> scaled(n + 1);
  double power = 1.0;
  for (int i = 0; i <= n; ++i, power *= s) scaled[i] = coefficients[i] * power;
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -scaled[i] / scaled[n];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  if (solver.info() != Eigen::Success) throw std::runtime_error("companion eigensolver failed");
  std::vector<std::complex<double>> roots(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  for (auto& root : roots) root *= s;
  auto value_and_slope = [&](std::complex<double> x) {
    std::complex<double> p = coefficients[n], dp = 0;
    for (int i = n - 1; i >= 0; --i) {
      dp = dp * x + p;
      p = p * x + coefficients[i];
    }
    return std::pair{p, dp};
  };
  // Newton polish, accepted only while the residual shrinks so a root never
  // slides onto a nearby one.
  for (auto& root : roots) {
    for (int iter = 0; iter < 4; ++iter) {
      const auto [p, dp] = value_and_slope(root);
      if (dp == 0.0 || p == 0.0) break;
      const std::complex<double> candidate = root - p / dp;
      if (!(std::abs(value_and_slope(candidate).first) < std::abs(p))) break;
      root = candidate;
    }
  }
  return roots;
}

}  // namespace lspec

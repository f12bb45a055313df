#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

#include "lspec/algebraic.hpp"
#include "lspec/enumeration.hpp"
#include "lspec/errors.hpp"
#include "oracles.hpp"

using namespace lspec;

namespace {

using Coeffs = std::vector<Rational>;
using cd = std::complex<double>;

TruncatedSeries counts_series(const Partition& p, int order) {
  auto t = count_recurrence(p, order - 1);
  Coeffs c(order + 1);
  for (int k = 0; k < order; ++k) c[k + 1] = Rational(t.counts[k]);
  return TruncatedSeries(c);
}

// Σ c_ij G^i w^{d - j} with G a series in w = 1/z.
TruncatedSeries cauchy_residual(const BivariatePoly& L, const TruncatedSeries& G) {
  const int K = G.order(), d = L.degree_z();
  TruncatedSeries total(K);
  for (const auto& [deg, c] : L.terms()) {
    TruncatedSeries term = TruncatedSeries::monomial(Rational(c), d - deg.second, K);
    for (int i = 0; i < deg.first; ++i) term = term * G;
    total = total + term;
  }
  return total;
}

const std::vector<std::vector<int>> kSamples{
    {1}, {3}, {1, 1}, {2, 1}, {1, 3}, {1, 1, 1}, {2, 1, 3}, {1, 2, 1}, {1, 1, 1, 1}, {2, 1, 1, 2}};

}  // namespace

TEST_CASE("H-system series") {
  auto one = h_system_series(std::vector<int>{1}, 10);
  auto z = TruncatedSeries::monomial(1, 1, 10);
  CHECK((one.M * one.M - one.M + z).is_zero());

  auto fat = h_system_series(std::vector<int>{2, 1}, 4);
  CHECK(fat.M == TruncatedSeries(Coeffs{0, 3, 8, 44, 304}));

  auto stair = h_system_series(std::vector<int>{1, 1}, 6);
  const auto& H = stair.H;
  CHECK((H[1] - (TruncatedSeries::monomial(1, 1, 6) + H[1] * H[0])).is_zero());
  CHECK(stair.M == TruncatedSeries(Coeffs{0, 2, 3, 10, 42, 198, 1001}));

  for (const auto& a : kSamples) {
    const int r = static_cast<int>(a.size());
    auto sys = h_system_series(a, 12);
    auto zz = TruncatedSeries::monomial(1, 1, 12);
    for (int j = 1; j <= r; ++j) {
      TruncatedSeries s(12);
      for (int q = 1; q <= r + 1 - j; ++q) s = s + Rational(a[q - 1]) * sys.H[q - 1];
      CHECK((sys.H[j - 1] - zz - sys.H[j - 1] * s).is_zero());
    }
    CHECK(sys.M == counts_series(self_conjugate_from_heights(a), 12));
  }
}

TEST_CASE("elimination examples") {
  auto P = eliminate_moment_equation(std::vector<int>{1});
  BivariatePoly expected(BivariatePoly::Terms{{{2, 0}, 1}, {{1, 0}, -1}, {{0, 1}, 1}});
  CHECK((P == expected.normalized()));

  auto L = eliminate(std::vector<int>{1, 1});
  BivariatePoly stair(BivariatePoly::Terms{{{3, 2}, 8}, {{2, 2}, -8}, {{1, 1}, 4}, {{1, 2}, 2},
                                           {{0, 0}, 1}, {{0, 1}, -2}});
  CHECK((L == stair.normalized()));

  auto L21 = eliminate(std::vector<int>{2, 1});
  CHECK(L21.coefficient(3, 2) == 27);
  CHECK(L21.coefficient(0, 0) == 4);
  CHECK(L21.coefficient(0, 1) == -3);
  CHECK((L21 == fat_hook_cubic(2, 1)));
  CHECK(fat_hook_cubic(2, 1).coefficient(3, 2) == 27);

  CHECK_THROWS_AS(eliminate(std::vector<int>(kMaxEliminationBlocks + 1, 1)), UsageError);
}

TEST_CASE("elimination matches the fat hook cubic") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> pick(1, 5);
  for (int n = 0; n < 10; ++n) {
    const int a1 = pick(rng), a2 = pick(rng);
    CHECK((eliminate(std::vector<int>{a1, a2}) == fat_hook_cubic(a1, a2).normalized()));
  }
}

TEST_CASE("degrees and formal residuals") {
  const int K = 16;
  for (const auto& a : kSamples) {
    const int r = static_cast<int>(a.size());
    auto p = self_conjugate_from_heights(a);
    auto P = eliminate_moment_equation(a);
    const bool coincident = a == std::vector<int>{2, 1, 3};
    CHECK(P.degree_x() == (coincident ? r : r + 1));
    CHECK(P.degree_z() == (coincident ? r - 1 : r));
    CHECK(P.evaluate(counts_series(p, K)).is_zero());

    auto L = eliminate(a);
    CHECK(L.degree_x() == P.degree_x());
    CHECK(L.degree_z() == P.degree_z());
    CHECK((L == cauchy_equation(P, p.length())));
    auto G = moments_to_G(moments(p, K), K);
    CHECK(cauchy_residual(L, G).is_zero());

    auto R = r_transform_from_moments(a, K);
    CHECK(R == G_to_R(moments_to_G(moments(p, K + 1), K + 2)));
    CHECK(r_equation_residual(L, R).is_zero());
  }
}

TEST_CASE("degree drops when denominators coincide") {
  // a3 = a1 + a2 (r = 3), or a4 = a1 + a2 or a2 = a3 + a4 (r = 4), make two
  // of the substitution denominators equal, and the common factor cancels.
  const std::vector<std::pair<std::vector<int>, std::pair<int, int>>> cases{
      {{1, 1, 2}, {3, 2}}, {{1, 2, 3}, {3, 2}}, {{1, 1, 1, 2}, {3, 3}}, {{1, 2, 1, 1}, {4, 3}},
      {{1, 1, 3}, {4, 3}}, {{2, 1, 1, 1}, {5, 4}}};
  for (const auto& [a, degrees] : cases) {
    auto P = eliminate_moment_equation(a);
    CHECK(P.degree_x() == degrees.first);
    CHECK(P.degree_z() == degrees.second);
    CHECK(P.evaluate(counts_series(self_conjugate_from_heights(a), 14)).is_zero());
  }
}

TEST_CASE("degree is (r+1, r) exactly off the coincidence set") {
  for (const auto& a : oracle::height_vectors(12)) {
    const int r = static_cast<int>(a.size());
    if (r < 3 || r > 4 || *std::max_element(a.begin(), a.end()) > 4) continue;
    const bool coincident = r == 3 ? a[2] == a[0] + a[1] : (a[3] == a[0] + a[1] || a[1] == a[2] + a[3]);
    const auto P = eliminate_moment_equation(a);
    CHECK((P.degree_x() == r + 1 && P.degree_z() == r) == !coincident);
  }
}

TEST_CASE("fat hook R-transform") {
  auto R11 = fat_hook_R_series(1, 1, 12);
  CHECK(R11[0] == Rational(3, 2));
  for (auto [a1, a2] : {std::pair{1, 3}, {1, 1}, {2, 1}, {3, 2}}) {
    auto p = self_conjugate_from_heights(std::vector<int>{a1, a2});
    auto R = G_to_R(moments_to_G(moments(p, 14), 14));
    CHECK(fat_hook_R_series(a1, a2, 12) == R);
    // Near 0 the closed form matches the truncated series numerically.
    const cd z(0.01, 0.003);
    cd partial = 0, power = 1;
    for (int n = 0; n <= 12; ++n, power *= z) partial += to_double(R[n]) * power;
    CHECK(std::abs(fat_hook_R(a1, a2, z) - partial) < 1e-9);
  }
  for (int a : {1, 2, 3}) {
    const double ell = 2 * a;
    for (cd z : {cd(-0.3, 0.1), cd(0.05, 0.2), cd(-1.0, 0.0)}) {
      const cd expected = double(a) / (1.0 - ell * z) + (1.0 / (2.0 * z)) * (1.0 / std::sqrt(1.0 - ell * z) - 1.0);
      CHECK(std::abs(fat_hook_R(a, a, z) - expected) < 1e-12);
    }
  }
  CHECK_THROWS_AS(fat_hook_R(1, 2, cd(1.0 / 3.0, 0.0)), std::domain_error);
}

TEST_CASE("fat hook support edges") {
  auto s11 = fat_hook_support(1, 1);
  CHECK(s11.atom_mass == 0);
  CHECK(s11.support_min() == doctest::Approx(0.0));
  // 4z² − 27z has roots 0 and 27/4, the growth rate of binom(3k, k).
  CHECK(s11.z_plus.value() == doctest::Approx(27.0 / 4.0).epsilon(1e-14));
  CHECK(s11.z_minus.value() == doctest::Approx(0.0));

  auto s12 = fat_hook_support(1, 2);
  CHECK(s12.atom_mass == Rational(1, 3));
  CHECK(s12.z_plus.p == Rational(71, 16));
  CHECK(s12.z_plus.q == Rational(17, 16));
  CHECK(s12.z_plus.s == 17);
  CHECK(s12.z_minus.p == Rational(71, 16));
  CHECK(s12.z_minus.q == Rational(-17, 16));
  CHECK(s12.support_min() == doctest::Approx((71 - 17 * std::sqrt(17.0)) / 16).epsilon(1e-14));

  for (int a1 = 1; a1 <= 5; ++a1)
    for (int a2 = 1; a2 <= 5; ++a2) {
      auto s = fat_hook_support(a1, a2);
      CHECK(s.atom_mass == Rational(std::max(a2 - a1, 0), a1 + a2));
      // Edge quadratic 4 a2 z² + (a1² − 20 a1 a2 − 8 a2²) z − 4 (a1 − a2)³, up to a factor.
      const Integer A = 4 * a2, B = a1 * a1 - 20 * a1 * a2 - 8 * a2 * a2,
                    C = -4 * Integer(a1 - a2) * (a1 - a2) * (a1 - a2);
      const auto& q = s.edge_quadratic;
      CHECK(q[0] * B == q[1] * A);
      CHECK(q[0] * C == q[2] * A);
      // Edges are sign changes of the cubic's discriminant in G.
      auto L = fat_hook_cubic(a1, a2);
      auto disc = [&](double z) {
        auto c = L.coefficients_at(cd(z, 0));
        return oracle::cubic_discriminant(c[3].real(), c[2].real(), c[1].real(), c[0].real());
      };
      auto roots = oracle::scan_roots(disc, 1e-9, 2.0 * s.support_max() + 1, 20000);
      REQUIRE(!roots.empty());
      CHECK(roots.back() == doctest::Approx(s.support_max()).epsilon(1e-9));
      if (s.support_min() > 1e-9) CHECK(roots.front() == doctest::Approx(s.support_min()).epsilon(1e-9));
      // Exact discriminant agrees with the numeric formula.
      auto D = L.discriminant();
      for (double z : {0.3, 1.7, 4.2}) {
        double value = 0, power = 1;
        for (const auto& c : D) {
          value += c.convert_to<double>() * power;
          power *= z;
        }
        CHECK(value == doctest::Approx(disc(z)).epsilon(1e-10));
      }
    }
}

TEST_CASE("polynomial roots") {
  // (x − 1)(x − 2)(x + 3i) = x³ + (−3 + 3i)x² + (2 − 9i)x + 6i
  auto roots = polynomial_roots({cd(0, 6), cd(2, -9), cd(-3, 3), cd(1, 0)});
  REQUIRE(roots.size() == 3);
  for (cd expected : {cd(1, 0), cd(2, 0), cd(0, -3)}) {
    double best = 1e300;
    for (cd r : roots) best = std::min(best, std::abs(r - expected));
    CHECK(best < 1e-12);
  }
  auto tiny = polynomial_roots({cd(1e-30, 0), cd(-1, 0), cd(1e10, 0)});
  REQUIRE(tiny.size() == 2);
}

TEST_CASE("bivariate evaluation and content") {
  BivariatePoly p(BivariatePoly::Terms{{{1, 0}, 6}, {{0, 1}, -4}, {{2, 2}, 2}});
  auto n = p.normalized();
  CHECK(n.coefficient(1, 0) == 3);
  CHECK(n.coefficient(2, 2) == 1);
  CHECK(integer_content({6, -4, 2}) == 2);
  CHECK(std::abs(p.evaluate(cd(2, 0), cd(3, 0)) - cd(12 - 12 + 2 * 4 * 9, 0)) < 1e-12);
}

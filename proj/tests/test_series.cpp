#include <doctest.h>

#include <random>

#include "lspec/enumeration.hpp"
#include "lspec/series.hpp"
#include "oracles.hpp"

using namespace lspec;

namespace {

using Coeffs = std::vector<Rational>;

// Equality on the common known prefix; both sides must reach `order`.
bool agree(const TruncatedSeries& a, const TruncatedSeries& b, int order) {
  if (a.order() < order || b.order() < order) return false;
  for (int n = 0; n <= order; ++n)
    if (a[n] != b[n]) return false;
  return true;
}

TruncatedSeries geometric(const Rational& lead, const Rational& ratio, int order) {
  Coeffs c(order + 1);
  Rational term = lead;
  for (int n = 0; n <= order; ++n, term *= ratio) c[n] = term;
  return TruncatedSeries(c);
}

TruncatedSeries polynomial(Coeffs c, int order) {
  c.resize(order + 1, 0);
  return TruncatedSeries(c);
}

TruncatedSeries random_series(std::mt19937& rng, int order, bool zero_constant) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  Coeffs c(order + 1);
  for (auto& x : c) x = Rational(num(rng), den(rng));
  if (zero_constant) c[0] = 0;
  return TruncatedSeries(c);
}

std::vector<Rational> mp_moments(const Rational& alpha, const Rational& beta, int count) {
  std::vector<Rational> m;
  for (int k = 0; k < count; ++k) m.push_back(oracle::mp_moment(alpha, beta, k));
  return m;
}

}  // namespace

TEST_CASE("arithmetic examples") {
  auto f = TruncatedSeries(Coeffs{0, 1, -1, 0, 0});
  CHECK(reversion(f) == TruncatedSeries(Coeffs{0, 1, 1, 2, 5}));
  auto g = TruncatedSeries(Coeffs{1, 1, 0, 0});
  CHECK(sqrt(g) == TruncatedSeries(Coeffs{1, Rational(1, 2), Rational(-1, 8), Rational(1, 16)}));
  auto h = TruncatedSeries(Coeffs{3, 1, 4, 1, 5});
  CHECK(compose(h, TruncatedSeries(4)) == TruncatedSeries::constant(3, 4));
  CHECK(sqrt(TruncatedSeries(Coeffs{4, 4, 1})) == TruncatedSeries(Coeffs{2, 1, 0}));
}

TEST_CASE("precondition failures") {
  using K = SeriesError::Kind;
  auto kind = [](auto&& fn) {
    try {
      fn();
    } catch (const SeriesError& e) {
      return e.kind();
    }
    FAIL("no SeriesError");
    return K::transform_precondition;
  };
  CHECK(kind([] { reciprocal(TruncatedSeries(Coeffs{0, 1})); }) == K::zero_divisor_constant);
  CHECK(kind([] { sqrt(TruncatedSeries(Coeffs{2, 1})); }) == K::sqrt_constant_not_square);
  CHECK(kind([] { reversion(TruncatedSeries(Coeffs{1, 1})); }) == K::reversion_needs_zero_constant);
  CHECK(kind([] { reversion(TruncatedSeries(Coeffs{0, 0, 1})); }) == K::reversion_needs_linear_term);
  CHECK(kind([] {
          compose(TruncatedSeries(Coeffs{1, 1}), TruncatedSeries(Coeffs{1, 1}));
        }) == K::compose_inner_constant);
  CHECK(kind([] { TruncatedSeries(Coeffs{1, 1}).over_z(); }) == K::shift_nonzero_constant);
}

TEST_CASE("orders follow the shorter operand") {
  TruncatedSeries a(Coeffs{1, 2, 3, 4, 5}), b(Coeffs{1, 1, 1});
  CHECK((a + b).order() == 2);
  CHECK((a * b).order() == 2);
  CHECK((a / b).order() == 2);
  CHECK(a.times_z().order() == 5);
  CHECK(TruncatedSeries(Coeffs{0, 1, 2}).over_z().order() == 1);
}

TEST_CASE("reciprocal and sqrt are inverses of multiplication") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    auto f = random_series(rng, 10, false);
    if (f[0] == 0) continue;
    CHECK(agree(f * reciprocal(f), TruncatedSeries::constant(1, 10), 10));
    auto sq = f * f;
    auto root = sqrt(sq);
    CHECK((root == f || root == -f));
  }
}

TEST_CASE("reversion is a two-sided compositional inverse") {
  std::mt19937 rng(5);
  const auto z = TruncatedSeries::monomial(1, 1, 12);
  for (int trial = 0; trial < 30; ++trial) {
    auto f = random_series(rng, 12, true);
    if (f[1] == 0) continue;
    auto g = reversion(f);
    CHECK(agree(compose(f, g), z, 12));
    CHECK(agree(compose(g, f), z, 12));
  }
}

TEST_CASE("moment generating series") {
  std::vector<Rational> catalan_m;
  for (int k = 0; k < 6; ++k) catalan_m.push_back(Rational(catalan(k)));
  CHECK(moments_to_G(catalan_m, 5) == TruncatedSeries(Coeffs{0, 1, 1, 2, 5, 14}));
  auto lam = moments(parse_partition("2,1"), 4);
  CHECK(moments_to_G(lam, 5) == TruncatedSeries(Coeffs{0, 1, Rational(3, 2), 5, 21, 99}));
  std::vector<Rational> point{1, 0, 0, 0};
  CHECK(moments_to_G(point, 4) == TruncatedSeries::monomial(1, 1, 4));
  CHECK(G_to_moments(moments_to_G(lam, 5)) == lam);
}

TEST_CASE("R-transform examples") {
  std::vector<Rational> point{1, 0, 0, 0, 0, 0};
  CHECK(G_to_R(moments_to_G(point, 6)).is_zero());
  for (auto [alpha, beta] : {std::pair<Rational, Rational>{1, 1}, {Rational(1, 3), 3}, {Rational(2, 5), 5}}) {
    auto R = G_to_R(moments_to_G(mp_moments(alpha, beta, 14), 14));
    CHECK(R.order() == 12);
    CHECK(agree(R, geometric(alpha * beta, beta, 12), 12));
    CHECK(agree(R, marchenko_pastur_R(alpha, beta, 12), 12));
  }
}

TEST_CASE("S-transform examples") {
  for (auto [alpha, beta] : {std::pair<Rational, Rational>{1, 1}, {Rational(1, 3), 3}, {Rational(3, 4), 4}}) {
    auto S = R_to_S(marchenko_pastur_R(alpha, beta, 12));
    CHECK(agree(S, geometric(1 / (alpha * beta), -1 / alpha, 12), 12));
    CHECK(agree(S, marchenko_pastur_S(alpha, beta, 12), 12));
  }
  for (Rational p : {Rational(1, 2), Rational(1, 3), Rational(2, 3), Rational(1)}) {
    std::vector<Rational> m(16, p);
    m[0] = 1;
    auto R = G_to_R(moments_to_G(m, 16));
    CHECK(agree(R, bernoulli_R(p, 12), 12));
    auto S = R_to_S(R);
    // (1 + z) / (p + z)
    auto closed = polynomial({1, 1}, 12) * geometric(1 / p, -1 / p, 12);
    CHECK(agree(S, closed, 12));
    CHECK(agree(S, bernoulli_S(p, 12), 12));
  }
  CHECK(R_to_S(TruncatedSeries::constant(Rational(5, 2), 8)) == TruncatedSeries::constant(Rational(2, 5), 8));
}

TEST_CASE("transform identities hold exactly") {
  for (const auto& a : oracle::height_vectors(5)) {
    auto p = self_conjugate_from_heights(a);
    auto G = moments_to_G(moments(p, 15), 16);
    auto R = G_to_R(G);
    CHECK(R_identity_residual(G, R).is_zero());
    auto S = R_to_S(R);
    CHECK(S_identity_residual(R, S).is_zero());
    CHECK(agree(S_to_R(S), R, S_to_R(S).order()));
    CHECK(S_to_R(S).order() >= 12);
  }
}

TEST_CASE("free convolution identities") {
  auto R = marchenko_pastur_R(Rational(1, 2), 2, 10);
  CHECK(free_add(R, TruncatedSeries(10)) == R);
  auto S = marchenko_pastur_S(Rational(1, 2), 2, 10);
  CHECK(free_mul(bernoulli_S(1, 10), S) == S);
}

TEST_CASE("fat hook decompositions as series identities") {
  for (auto [a1, a2] : {std::pair{1, 1}, {2, 1}, {1, 3}, {3, 2}}) {
    const int ell = a1 + a2;
    auto p = self_conjugate_from_heights(std::vector<int>{a1, a2});
    auto R = G_to_R(moments_to_G(moments(p, 15), 16));
    const int K = 12;
    auto first = free_add(marchenko_pastur_R(Rational(a1, ell), ell, K),
                          S_to_R(free_mul(marchenko_pastur_S(Rational(a1, ell), ell, K + 2),
                                          bernoulli_S(Rational(a2, ell), K + 2))));
    auto second = free_add(marchenko_pastur_R(Rational(a1, ell), ell, K),
                           S_to_R(free_mul(marchenko_pastur_S(Rational(a2, ell), ell, K + 2),
                                           bernoulli_S(Rational(a1, ell), K + 2))));
    CHECK(agree(R, first, K));
    CHECK(agree(R, second, K));
    // S-product in closed form: ℓ(1+z) / (a1 a2 + ℓ² z + ℓ² z²).
    auto product = free_mul(marchenko_pastur_S(Rational(a1, ell), ell, K),
                            bernoulli_S(Rational(a2, ell), K));
    auto denominator = polynomial({a1 * a2, ell * ell, ell * ell}, K);
    CHECK(agree(product * denominator, polynomial({ell, ell}, K), K));
  }
}

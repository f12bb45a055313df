#include "lspec/numeric.hpp"

#include "lspec/errors.hpp"

namespace lspec {

Integer binomial(long n, long m) {
  if (m < 0) return 0;
  if (m == 0) return 1;
  if (n < m) return 0;
  if (m > n - m) m = n - m;
  Integer result = 1;
  for (long i = 1; i <= m; ++i) {
    result *= n - m + i;
    result /= i;
  }
  return result;
}

Integer catalan(long k) { return binomial(2 * k, k) / (k + 1); }

Integer ipow(const Integer& base, unsigned long exponent) {
  return boost::multiprecision::pow(base, static_cast<unsigned>(exponent));
}

std::string to_fraction_string(const Rational& q) {
  const Integer num = boost::multiprecision::numerator(q);
  const Integer den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

Rational parse_rational(const std::string& text) {
  try {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(Integer(text));
    Integer num(text.substr(0, slash));
    Integer den(text.substr(slash + 1));
    if (den == 0) throw UsageError("zero denominator in '" + text + "'");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw UsageError("not a rational number: '" + text + "'");
  }
}

}  // namespace lspec

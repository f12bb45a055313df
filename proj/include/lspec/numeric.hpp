#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/gmp.hpp>

namespace lspec {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Binomial coefficient with the convention used by the tree-count formulas:
/// binom(n, 0) = 1 for every n, and binom(n, m) = 0 when m < 0 or when m > 0
/// and n < m (this includes every n < 0 with m > 0).
Integer binomial(long n, long m);

/// k-th Catalan number.
Integer catalan(long k);

Integer ipow(const Integer& base, unsigned long exponent);

/// "num/den" (or "num" when the denominator is 1).
std::string to_fraction_string(const Rational& q);

double to_double(const Rational& q);

Rational parse_rational(const std::string& text);

}  // namespace lspec

#ifndef CONTAINERKIT_RATIONAL_HPP
#define CONTAINERKIT_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace containerkit {

// All thresholds, measures and co-degree values are exact rationals so that
// runs are bit-reproducible and set equalities can be tested exactly.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "num/den" or a bare integer; throws ParseError on anything else
// (including den <= 0). No decimal forms: exact parameters only.
Rational parse_rational(const std::string& text);

// Canonical text form: "num/den", or "num" when den == 1.
std::string rational_str(const Rational& value);

// value^exp for any integer exp (value != 0 required when exp < 0).
Rational rational_pow(const Rational& value, long exp);

BigInt binomial(long n, long k);
BigInt factorial(long n);

// floor(a^(1/p)) for a >= 0, p >= 1.
BigInt floor_nth_root(const BigInt& a, unsigned p);

// A rational q with base^(-num/den) * (1 - 1e-12) <= q <= base^(-num/den),
// i.e. an approximation from below (the conservative direction for
// co-degree bound checks). Requires base >= 1, num, den >= 1.
Rational rational_neg_pow_lower(long base, const BigInt& num, const BigInt& den);

// Smallest prime strictly greater than n (trial division; desk scale).
long long next_prime_above(long long n);

double rational_to_double(const Rational& value);

} // namespace containerkit

#endif

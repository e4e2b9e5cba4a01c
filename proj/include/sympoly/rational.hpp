#pragma once

// Exact scalar layer: GMP-backed big integers and rationals, plus the
// combinatorial constants (factorials, binomials, Bernoulli numbers) the
// rest of the library is written against.

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sympoly {

using BigInt = mpz_class;

/// Exact rational in lowest terms with a positive denominator. gmpxx
/// canonicalizes the result of every arithmetic operation; values built
/// from a raw numerator/denominator pair must go through make_rational().
using Rational = mpq_class;

/// An ordered tuple of coordinates: an evaluation point x^m or a generator
/// tuple d^m.
using PointTuple = std::vector<Rational>;

Rational make_rational(const BigInt& num, const BigInt& den);

/// x^e by repeated squaring on numerator and denominator.
Rational pow(const Rational& x, unsigned long e);
BigInt pow(const BigInt& x, unsigned long e);

/// "p/q" in lowest terms, "p" when q = 1, leading '-' for negatives.
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

/// Parses the canonical text form, also accepting non-reduced input such as
/// "4/6" (which is reduced). Rejects whitespace, empty parts, zero
/// denominators and anything that is not an optionally signed integer or
/// integer fraction. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Comma-separated list of rationals, e.g. "1,2,-3/4".
PointTuple parse_point(std::string_view text);

std::string to_string(std::span<const Rational> point);

BigInt factorial(unsigned long a);

/// C(a, b); zero when b < 0 or b > a.
BigInt binomial(unsigned long a, long b);

/// k-th Bernoulli number with B_1 = -1/2. Memoized; safe to call from
/// multiple threads.
Rational bernoulli(unsigned long k);

bool is_integer(const Rational& q);

Rational product(std::span<const Rational> xs);
Rational sum(std::span<const Rational> xs);

}  // namespace sympoly

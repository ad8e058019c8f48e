#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace flowvol {

using Integer = mpz_class;
using Rational = mpq_class;

// Bad caller input: malformed text, rank mismatches, points outside a
// required region, too few interpolation samples.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A mathematical claim that was checked on a concrete instance and did not
// hold. Never raised for ordinary bad input.
class FalsificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// "p/q" for non-integers, "p" otherwise. Always canonical (reduced, positive
// denominator).
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

// Accepts "p", "-p", "p/q". Throws ValidationError on anything else or on a
// zero denominator.
Rational parse_rational(std::string_view text);

// Comma separated list of rationals; surrounding whitespace is ignored.
std::vector<Rational> parse_rational_list(std::string_view text);

bool is_integer(const Rational& r);

// num/den in lowest terms; den must be nonzero.
Rational ratio(const Integer& num, const Integer& den);

Integer factorial(unsigned n);
Integer binomial(long n, long k);

}  // namespace flowvol

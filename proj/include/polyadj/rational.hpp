#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace polyadj {

// GMP keeps mpq values canonical after every arithmetic operation, so
// structural equality is value equality. The two-argument mpq_class
// constructor does not reduce; build fractions through ratio().
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

/// num/den in lowest terms. Throws InvalidArgument on a zero denominator.
Rational ratio(long num, long den);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

std::string to_string(const RationalVector& v);

Rational dot(const RationalVector& a, const RationalVector& b);

}  // namespace polyadj

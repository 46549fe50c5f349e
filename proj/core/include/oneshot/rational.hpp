#pragma once

#include <gmpxx.h>

#include <string>

namespace oneshot {

// Exact rational scalar. GMP keeps values canonical after arithmetic;
// direct num/den construction goes through make_rational which canonicalizes.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

// Accepts "num/den", "num", or a decimal-free integer string. Throws InputError.
Rational parse_rational(const std::string& text);

// "num/den" when den != 1, plain "num" otherwise.
std::string to_fraction_string(const Rational& q);

double to_double(const Rational& q);

}  // namespace oneshot

#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace rgcalc
{

// Exact rational scalar. Always kept in canonical (reduced) form.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);

// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input
// or a zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational &q);

Integer factorial(unsigned n);

// 1/n!
Rational inverse_factorial(unsigned n);
Integer binomial(long n, long k);

} // namespace rgcalc

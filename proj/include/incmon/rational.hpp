#pragma once

#include <gmpxx.h>

#include <string>

namespace incmon {

// Exact rational scalar. Arithmetic is arbitrary precision; equality is exact.
using Rational = mpq_class;

// Parses "p", "-p" or "p/q" (q != 0) into canonical form.
Rational parse_rational(const std::string& text);

// Canonical text form: "p" when the denominator is 1, else "p/q".
std::string rational_str(const Rational& r);

Rational rational_of(long num, long den = 1);

}  // namespace incmon

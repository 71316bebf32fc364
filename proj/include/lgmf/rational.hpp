#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace lgmf {

using Rational = mpq_class;

// Parses "p", "-p" or "p/q" into canonical form. Throws ParseError.
Rational parse_rational(std::string_view text);

// Canonical text: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

Rational make_rational(long num, long den = 1);

// Floor of a rational as a long. Throws DomainError if it does not fit.
long floor_to_long(const Rational& q);

}  // namespace lgmf

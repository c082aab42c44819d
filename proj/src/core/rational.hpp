#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hilbworst {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Canonical "p/q" text, with "/1" omitted.
std::string to_string(const Rational& q);

/// Parses "p", "-p", "p/q". Throws Error(Parse) on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

}  // namespace hilbworst

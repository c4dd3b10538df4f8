#pragma once

#include <gmpxx.h>

#include <string>

namespace hf {

using Int = mpz_class;
using Rational = mpq_class;

/// binom(a, b) with the conventions used throughout: 0 when a < b or a < 0.
/// (Makes the eps_i = -1 tail terms of Macaulay expansions vanish.)
Int binomial(const Int& a, unsigned long b);

inline Int binomial(long a, unsigned long b) { return binomial(Int(a), b); }

/// Reduced rational with positive denominator.
Rational make_rational(const Int& num, const Int& den);

/// Parses "p", "-p" or "p/q". Throws InputError on malformed input.
Rational parse_rational(const std::string& s);

/// Canonical text form: "p" or "p/q".
std::string format_rational(const Rational& q);

}  // namespace hf

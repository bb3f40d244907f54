#pragma once

#include <gmpxx.h>

#include <string>

namespace pitail {

// Exact arithmetic carriers. mpq_class keeps values canonical (reduced,
// positive denominator, zero as 0/1), which is exactly the Rational contract.
using Integer = mpz_class;
using Rational = mpq_class;

/// Parse "num/den" or "num" (optional sign, arbitrary size). Throws
/// std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(const std::string& text);

/// Canonical rendering: "num/den", or just "num" when the denominator is 1.
std::string to_string(const Rational& x);

/// Exact binomial coefficient C(n, k); 0 for k > n.
Integer binomial(unsigned long n, unsigned long k);

/// x^e for integral e (negative e inverts; throws std::domain_error on 0^negative).
Rational pow_int(const Rational& x, long e);

/// 2^e as an exact rational, e may be negative.
Rational pow2(long e);

/// floor(log2 |x|) within +-1, for guard-bit budgeting. Requires x != 0.
long approx_exponent(const Rational& x);

} // namespace pitail

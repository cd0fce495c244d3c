#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

#include "frobchi/errors.hpp"

namespace frobchi {

// All coefficient arithmetic is exact. Rational is GMP's canonicalized
// big rational; Integer its big integer.
using Rational = mpq_class;
using Integer = mpz_class;

// num/den in canonical form. The two-argument mpq_class constructor skips
// canonicalization, so use this instead whenever the fraction might reduce.
inline Rational frac(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Parses "num/den" or "num" (optional sign, base 10). Rejects zero
// denominators and anything with stray characters.
Rational parse_rational(std::string_view text);

// Always "num/den", den > 0, canonical form. The serialization format.
std::string fraction_string(const Rational& r);

// Human-facing form: "3", "-1/2".
std::string display_string(const Rational& r);

// q^k for possibly negative k; q must be nonzero when k < 0.
Rational rational_pow(const Rational& q, long k);

bool is_integer(const Rational& r);

// Numerator of an integral rational; throws InconsistencyError otherwise,
// prefixing `context` to the message.
Integer require_integer(const Rational& r, const std::string& context);

// C(n, k) as an exact integer, 0 when k > n.
Integer binomial(unsigned long n, unsigned long k);

Integer integer_pow(const Integer& base, unsigned long k);

// Deterministic trial division; fine for the single-word primes used here.
bool is_prime(long p);

} // namespace frobchi


#ifndef SPHEREDIV_RATIONAL_HPP
#define SPHEREDIV_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace spherediv {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q" or "p" (optional sign, surrounding blanks ignored). Throws InputError.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form; integers print without a denominator.
std::string to_string(const Rational& q);

/// p/q in lowest terms (q != 0).
Rational ratio(long p, long q);

/// Fractional part in [0, 1).
Rational frac(const Rational& q);

/// max(|numerator|, denominator) of a reduced rational.
Integer height(const Rational& q);

std::int64_t to_int64(const Integer& z);

Integer binomial(long n, long k);

} // namespace spherediv

#endif

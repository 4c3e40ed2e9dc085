#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace kuwalls {

/// Exact rational number. Every value is kept in canonical (reduced) form.
using Rational = mpq_class;
using Integer = mpz_class;

/// Builds num/den in canonical form. Throws std::domain_error on den == 0.
Rational make_rational(long num, long den = 1);

/// Parses "p", "-p", "p/q". Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p/q" in lowest terms with positive q, or "p" when q == 1.
std::string to_string(const Rational& q);

bool is_integer(const Rational& q);

/// Largest integer <= q.
Integer floor(const Rational& q);
/// Smallest integer >= q.
Integer ceil(const Rational& q);

std::int64_t to_int64(const Integer& z);

/// For display only; never feeds back into exact computation.
double to_double(const Rational& q);

}  // namespace kuwalls

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace fockjordan {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Always "num/den", e.g. "1/1", "-3/7", "0/1".
std::string to_fraction_string(const Rational& value);

/// Accepts "num/den" or a bare integer, optional sign, surrounding blanks.
/// Throws DomainError on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

} // namespace fockjordan

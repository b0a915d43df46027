#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qeuler {

// Arbitrary precision integers and rationals. mpq_class keeps numerator and
// denominator coprime with a positive denominator, so equality is structural.
using BigInt = mpz_class;
using Rational = mpq_class;

// Parses "a", "-a" or "a/b". Throws DomainError on malformed input and
// DivisionByZero on a zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& r);
std::string to_string(const BigInt& z);

// r^e for e >= 0; negative e inverts (throws DivisionByZero on 0^-e).
Rational pow(const Rational& r, long e);

BigInt factorial(unsigned long n);

}  // namespace qeuler

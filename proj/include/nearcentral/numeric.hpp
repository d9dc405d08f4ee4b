#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace nearcentral {

using Integer = mpz_class;
using Rational = mpq_class;

/// Invalid partition, mark, or argument combination (CLI exit code 1).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An enumeration or size guard was exceeded (CLI exit code 2).
class GuardExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A closed-form table was asked for a pattern it does not cover.
class UnsupportedPattern : public DomainError {
public:
    using DomainError::DomainError;
};

Integer factorial(int n);
Integer binomial(int n, int k);

/// Integer power; pow(0, 0) == 1.
Integer ipow(const Integer& base, unsigned exponent);
Rational rpow(const Rational& base, unsigned exponent);

inline int sign_power(long k) { return (k % 2 == 0) ? 1 : -1; }

/// "p" when the denominator is 1, else "p/q".
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Throws std::logic_error when q is not an integer; `what` names the formula.
Integer require_integer(const Rational& q, const char* what);

/// Global enumeration guard on n; NEARCENTRAL_MAX_N overrides the default of 9.
int default_max_n();

}  // namespace nearcentral

#pragma once

// Exact integer and rational arithmetic used throughout the library.
// Backed by GMP's C++ bindings.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace blockchar {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Thrown when an exhaustive computation would exceed its configured size bound.
class BoundError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

BigInt factorial(unsigned n);

/// binom(n, k) for integer n >= 0; zero when k < 0 or k > n.
BigInt binomial(long n, long k);

/// Generalized binomial top*(top-1)*...*(top-k+1)/k! for a rational top.
Rational binomial(const Rational& top, unsigned k);

BigInt power(const BigInt& base, unsigned exponent);
Rational power(const Rational& base, unsigned exponent);

/// Canonical text form: "p" for integers, "p/q" otherwise (q > 0, reduced).
std::string to_string(const Rational& value);

/// Accepts "p", "-p", "p/q"; rejects zero denominators and junk.
Rational parse_rational(std::string_view text);

inline int sign(const Rational& value) { return sgn(value); }

}  // namespace blockchar

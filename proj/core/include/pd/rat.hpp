#pragma once
// Exact rational scalars.  Rat is GMP's mpq_class; every value produced by the
// helpers below is canonical (lowest terms, positive denominator).

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace pd {

using Rat = mpq_class;

// Canonical p/q.  Throws std::invalid_argument when q == 0.
Rat make_rat(long p, long q = 1);

// Serialize as "p/q" in lowest terms (integers are rendered "p/1").
std::string to_string(const Rat& x);

// Parse "p/q" or "p".
Rat parse_rat(const std::string& s);

// Falling-factorial binomial polynomial binom(T, k) = T(T-1)...(T-k+1)/k!
// evaluated at T = t.  binom_at(t, 0) == 1.
Rat binom_at(const Rat& t, unsigned k);

Rat factorial(unsigned n);

// (-1)^n as a Rat.
inline Rat sign_pow(long n) { return (n % 2 == 0) ? Rat(1) : Rat(-1); }

}  // namespace pd

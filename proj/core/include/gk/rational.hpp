#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gk {

using Integer = mpz_class;

/// Exact rational number. Arithmetic keeps values canonical; the two-argument
/// mpq_class constructor does not, so build fractions with make_rational.
using Rational = mpq_class;

inline Rational make_rational(long num, long den)
{
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// "p/q" in lowest terms, or "p" when q == 1.
std::string to_string(const Rational& q);

/// Inverse of to_string. Accepts non-reduced input ("4/6") and canonicalizes it;
/// rejects empty strings, zero denominators and trailing garbage.
Rational parse_rational(std::string_view text);

Rational factorial(int k);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

} // namespace gk

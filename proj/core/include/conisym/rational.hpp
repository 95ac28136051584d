// Exact rational coefficients on top of GMP. mpq_class values are kept
// canonical (reduced, positive denominator) by every helper here.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace conisym {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "p", "-p", "p/q". Throws std::invalid_argument on anything else.
Rational rational_from_string(std::string_view text);

// "p" when the denominator is 1, otherwise "p/q" with q > 0.
std::string to_string(const Rational& r);

bool is_integer(const Rational& r);

// Requires an integral value that fits in long.
long to_long(const Rational& r);

} // namespace conisym

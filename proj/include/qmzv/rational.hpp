#pragma once
#include <gmpxx.h>
#include <string>

namespace qmzv {

using Integer = mpz_class;
using Rational = mpq_class;

// mpq_class's two-argument constructor stores numerator and denominator
// verbatim, and non-canonical fractions break mpq equality (10/5 != 2).
// Fractions built from variable parts must go through here.
inline Rational make_rational(const Integer& num, const Integer& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

// Parses "p" or "p/q"; throws std::invalid_argument on garbage.
Rational parse_rational(const std::string& text);

}  // namespace qmzv

#pragma once
#include "qmzv/poly.hpp"
#include "qmzv/series.hpp"

#include <iosfwd>
#include <string>

namespace qmzv {

// Exact ratio of polynomials in q over Q. Canonical form: the denominator is
// monic and shares no power of q with the numerator. Beyond that, fractions
// are not kept reduced; equality is decided by cross-multiplication, and a
// gcd reduction runs only when a degree exceeds reduce_threshold (an
// integer-evaluation filter skips provably useless gcd attempts).
// Denominators with zero constant term are legal intermediates (Laurent
// values inside nabla_q); series_expand rejects them.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(Rational(1)) {}
    RationalFunction(const Rational& c) : num_(c), den_(Rational(1)) {}
    RationalFunction(const Poly& p) : num_(p), den_(Rational(1)) {}
    RationalFunction(Poly num, Poly den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    // Cross-multiplication equality: num1*den2 == num2*den1.
    bool operator==(const RationalFunction& o) const;

    // Degree past which arithmetic attempts gcd reduction.
    static int reduce_threshold;
    // Unconditional gcd reduction to lowest terms.
    void reduce();

    std::string to_string() const;

private:
    Poly num_, den_;
    void normalize();
    void maybe_reduce();
};

// Power-series expansion at q = 0 through order q^{P-1}; requires the value
// to be q-adically regular (unit constant term in the reduced denominator).
Series series_expand(const RationalFunction& f, int precision);

std::ostream& operator<<(std::ostream& os, const RationalFunction& f);

}  // namespace qmzv

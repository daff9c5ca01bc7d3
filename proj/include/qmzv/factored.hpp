#pragma once
#include "qmzv/poly.hpp"
#include "qmzv/q_basics.hpp"
#include "qmzv/rational_fn.hpp"

#include <map>

namespace qmzv {

// Exact scalar in the form
//
//     num * q^qexp / ( (1-q)^hexp * prod_m [m]^gexp[m] )
//
// with hexp, gexp >= 0 and qexp of either sign. Every denominator arising
// from the harmonic series, nabla_q weights, and Newton basis values is a
// product of these factors, so sums can use the exponent-wise max as an
// exact common denominator. This avoids the degree blowup of repeated
// cross-multiplication while never reducing away a factor.
class FactoredFraction {
public:
    FactoredFraction() = default;  // zero
    static FactoredFraction one() { return from_poly(Poly(Rational(1))); }
    static FactoredFraction from_poly(const Poly& p);

    bool is_zero() const { return num_.is_zero(); }

    void mul_poly(const Poly& p);
    void mul_rational(const Rational& c);
    void mul_qpow(int k);           // by q^k, k of either sign
    void div_h(int e = 1);          // by (1-q)^e
    void mul_h(int e = 1);          // by (1-q)^e, cancelling against hexp first
    void div_qint(int m, int e = 1);  // by [m]^e; [1] = 1 is a no-op
    void mul_qint(int m, int e = 1);
    void negate();

    FactoredFraction& operator+=(const FactoredFraction& o);
    FactoredFraction& operator-=(const FactoredFraction& o);
    friend FactoredFraction operator*(const FactoredFraction& a, const FactoredFraction& b);
    FactoredFraction& operator*=(const FactoredFraction& o) { return *this = *this * o; }

    RationalFunction to_rational_function() const;

private:
    Poly num_;
    int qexp_ = 0;
    int hexp_ = 0;
    std::map<int, int> gexp_;  // keys m >= 2, values >= 1

    void clear_if_zero();
};

}  // namespace qmzv

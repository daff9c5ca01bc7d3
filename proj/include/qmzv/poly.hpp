#pragma once
#include "qmzv/rational.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace qmzv {

// Dense univariate polynomial over Q. The variable is anonymous: the same
// type serves polynomials in q and coefficient polynomials in h, with the
// variable name supplied only at print/parse time. Zero is the empty
// coefficient vector; otherwise the last stored coefficient is nonzero.
class Poly {
public:
    Poly() = default;
    explicit Poly(const Rational& c);
    explicit Poly(long c);
    explicit Poly(std::vector<Rational> coeffs);

    static Poly monomial(int exp, const Rational& c = Rational(1));
    static Poly variable();

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Rational coeff(int k) const;
    // Index of the lowest nonzero coefficient; -1 for the zero polynomial.
    int valuation() const;
    Rational leading_coeff() const;
    bool is_constant() const { return coeffs_.size() <= 1; }
    // True when the polynomial is a single monomial c*x^k.
    bool is_monomial() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly& operator*=(const Rational& c);
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
    bool operator==(const Poly& o) const = default;

    Poly shifted(int k) const;   // multiply by x^k, k >= 0
    Poly stripped(int k) const;  // divide by x^k; requires valuation() >= k
    Poly pow(int e) const;
    Rational eval(const Rational& x) const;
    Poly substitute(const Poly& v) const;  // p(v), by Horner

    // Exact division; throws std::domain_error when b does not divide a.
    static Poly div_exact(const Poly& a, const Poly& b);
    // Monic gcd over Q, via primitive PRS on integer-cleared polynomials.
    static Poly gcd(const Poly& a, const Poly& b);

    std::string to_string(const std::string& var) const;
    static Poly parse(const std::string& text, const std::string& var);

private:
    std::vector<Rational> coeffs_;
    void normalize();
};

std::ostream& operator<<(std::ostream& os, const Poly& p);  // prints in var "q"

}  // namespace qmzv

#pragma once
#include "qmzv/poly.hpp"
#include "qmzv/rational.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qmzv {

// Truncated power series in q over Q: a residue class mod q^P with explicit
// precision P >= 1. Arithmetic never claims coefficients at order >= P;
// combining operands of different precisions truncates to the smaller one.
class Series {
public:
    explicit Series(int precision);
    Series(const Poly& p, int precision);
    static Series constant(const Rational& c, int precision);

    int precision() const { return static_cast<int>(coeffs_.size()); }
    Rational coeff(int k) const;
    void set_coeff(int k, const Rational& c);

    Series operator-() const;
    friend Series operator+(const Series& a, const Series& b);
    friend Series operator-(const Series& a, const Series& b);
    friend Series operator*(const Series& a, const Series& b);
    Series& operator+=(const Series& o) { return *this = *this + o; }
    Series& operator-=(const Series& o) { return *this = *this - o; }
    Series& operator*=(const Series& o) { return *this = *this * o; }
    Series& operator*=(const Rational& c);
    bool operator==(const Series& o) const = default;

    // Multiplicative inverse; requires a unit constant term.
    Series inverse() const;
    Series shifted(int k) const;  // multiply by q^k, k >= 0
    Series truncated(int precision) const;
    // Index of the first nonzero coefficient; nullopt when all stored
    // coefficients vanish (truncation cannot certify an exact zero).
    std::optional<int> valuation() const;
    bool is_zero() const { return !valuation().has_value(); }

    std::string to_string() const;

private:
    std::vector<Rational> coeffs_;  // size == precision
};

// "7" or "at-least-P".
std::string valuation_text(const Series& s);

std::ostream& operator<<(std::ostream& os, const Series& s);

}  // namespace qmzv

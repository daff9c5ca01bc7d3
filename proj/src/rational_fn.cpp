#include "qmzv/rational_fn.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace qmzv {

int RationalFunction::reduce_threshold = 64;

RationalFunction::RationalFunction(Poly num, Poly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("division by zero");
    normalize();
    maybe_reduce();
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = Poly(Rational(1));
        return;
    }
    int v = std::min(num_.valuation(), den_.valuation());
    if (v > 0) {
        num_ = num_.stripped(v);
        den_ = den_.stripped(v);
    }
    Rational lead = den_.leading_coeff();
    if (lead != 1) {
        Rational inv = Rational(1) / lead;
        num_ *= inv;
        den_ *= inv;
    }
}

namespace {

// True when the fraction might have a nontrivial common factor: evaluates
// the integer-cleared numerator and denominator at q = 2 and q = 3 and
// checks the integer gcds. A gcd of 1 proves no common content at that
// point; passing both filters makes a polynomial gcd run pointless often
// enough to be worth the two evaluations. Never affects values, only
// whether a reduction is attempted.
bool reduction_plausible(const Poly& num, const Poly& den) {
    for (long x : {2L, 3L}) {
        Rational a = num.eval(Rational(x));
        Rational b = den.eval(Rational(x));
        Integer ai = a.get_num() * b.get_den();
        Integer bi = b.get_num() * a.get_den();
        Integer g;
        mpz_gcd(g.get_mpz_t(), ai.get_mpz_t(), bi.get_mpz_t());
        if (g == 1) return false;
    }
    return true;
}

}  // namespace

void RationalFunction::maybe_reduce() {
    if (den_.degree() <= reduce_threshold && num_.degree() <= reduce_threshold) return;
    if (den_.is_constant() || num_.is_zero()) return;
    if (!reduction_plausible(num_, den_)) return;
    reduce();
}

void RationalFunction::reduce() {
    if (num_.is_zero() || den_.is_constant()) return;
    Poly g = Poly::gcd(num_, den_);
    if (g.degree() >= 1) {
        num_ = Poly::div_exact(num_, g);
        den_ = Poly::div_exact(den_, g);
    }
    normalize();
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r(*this);
    r.num_ = -r.num_;
    return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return RationalFunction(a.num_ - b.num_, a.den_);
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

bool RationalFunction::operator==(const RationalFunction& o) const {
    return num_ * o.den_ == o.num_ * den_;
}

std::string RationalFunction::to_string() const {
    if (den_ == Poly(Rational(1))) return num_.to_string("q");
    auto wrap = [](const Poly& p) {
        std::string s = p.to_string("q");
        if (p.is_monomial() && p.leading_coeff() > 0) return s;
        return "(" + s + ")";
    };
    return wrap(num_) + "/" + wrap(den_);
}

Series series_expand(const RationalFunction& f, int precision) {
    // Normalization strips common q-powers, so a vanishing constant term in
    // the denominator here means a genuine pole at q = 0.
    if (f.den().coeff(0) == 0) throw std::domain_error("not q-adically regular");
    Series n(f.num(), precision);
    if (f.den() == Poly(Rational(1))) return n;
    return n * Series(f.den(), precision).inverse();
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& f) {
    return os << f.to_string();
}

}  // namespace qmzv

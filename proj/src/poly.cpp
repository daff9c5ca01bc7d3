#include "qmzv/poly.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace qmzv {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("parse error: empty number");
    for (char ch : text) {
        if (!std::isdigit(static_cast<unsigned char>(ch)) && ch != '-' && ch != '/')
            throw std::invalid_argument("parse error: bad number '" + text + "'");
    }
    Rational r;
    if (r.set_str(text, 10) != 0)
        throw std::invalid_argument("parse error: bad number '" + text + "'");
    r.canonicalize();
    return r;
}

Poly::Poly(const Rational& c) {
    if (c != 0) coeffs_.push_back(c);
}

Poly::Poly(long c) : Poly(Rational(c)) {}

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Poly Poly::monomial(int exp, const Rational& c) {
    Poly p;
    if (c != 0) {
        p.coeffs_.assign(exp + 1, Rational(0));
        p.coeffs_[exp] = c;
    }
    return p;
}

Poly Poly::variable() { return monomial(1); }

void Poly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[k];
}

int Poly::valuation() const {
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return static_cast<int>(i);
    return -1;
}

Rational Poly::leading_coeff() const {
    return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

bool Poly::is_monomial() const {
    if (coeffs_.empty()) return false;
    for (size_t i = 0; i + 1 < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    Poly r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j] == 0) continue;
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    r.normalize();
    return r;
}

Poly& Poly::operator*=(const Rational& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

Poly Poly::shifted(int k) const {
    if (k < 0) throw std::domain_error("out of range");
    if (is_zero() || k == 0) return *this;
    Poly r;
    r.coeffs_.assign(coeffs_.size() + k, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i + k] = coeffs_[i];
    return r;
}

Poly Poly::stripped(int k) const {
    if (k == 0) return *this;
    if (is_zero()) return *this;
    if (valuation() < k) throw std::domain_error("out of range");
    Poly r;
    r.coeffs_.assign(coeffs_.begin() + k, coeffs_.end());
    return r;
}

Poly Poly::pow(int e) const {
    if (e < 0) throw std::domain_error("out of range");
    Poly r(Rational(1));
    Poly base(*this);
    while (e > 0) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

Rational Poly::eval(const Rational& x) const {
    Rational r(0);
    for (size_t i = coeffs_.size(); i-- > 0;) r = r * x + coeffs_[i];
    return r;
}

Poly Poly::substitute(const Poly& v) const {
    Poly r;
    for (size_t i = coeffs_.size(); i-- > 0;) r = r * v + Poly(coeffs_[i]);
    return r;
}

Poly Poly::div_exact(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    if (a.is_zero()) return Poly();
    if (a.degree() < b.degree()) throw std::domain_error("not divisible");
    std::vector<Rational> rem = a.coeffs_;
    std::vector<Rational> quot(a.degree() - b.degree() + 1, Rational(0));
    const Rational lead = b.leading_coeff();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        Rational c = rem[k + b.degree()] / lead;
        quot[k] = c;
        if (c == 0) continue;
        for (int j = 0; j <= b.degree(); ++j) rem[k + j] -= c * b.coeffs_[j];
    }
    for (const auto& c : rem)
        if (c != 0) throw std::domain_error("not divisible");
    return Poly(std::move(quot));
}

namespace {

using ZPoly = std::vector<Integer>;

int zdeg(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

void znormalize(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Integer zcontent(const ZPoly& p) {
    Integer g(0);
    for (const auto& c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

void zprimitive(ZPoly& p) {
    Integer g = zcontent(p);
    if (g > 1)
        for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    if (!p.empty() && p.back() < 0)
        for (auto& c : p) c = -c;
}

// Pseudo-remainder of a by b (deg a >= deg b >= 0): repeatedly scale a by
// lc(b) and cancel the top term. Result degree < deg b.
ZPoly zprem(ZPoly a, const ZPoly& b) {
    const Integer lead = b.back();
    while (zdeg(a) >= zdeg(b) && !a.empty()) {
        Integer top = a.back();
        int shift = zdeg(a) - zdeg(b);
        for (auto& c : a) c *= lead;
        for (int j = 0; j <= zdeg(b); ++j) a[shift + j] -= top * b[j];
        znormalize(a);
    }
    return a;
}

ZPoly to_zpoly(const Poly& p) {
    Integer den_lcm(1);
    for (int i = 0; i <= p.degree(); ++i) {
        Rational c = p.coeff(i);
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    ZPoly z(p.degree() + 1);
    for (int i = 0; i <= p.degree(); ++i) {
        Rational c = p.coeff(i) * Rational(den_lcm);
        c.canonicalize();
        z[i] = c.get_num();
    }
    znormalize(z);
    return z;
}

}  // namespace

Poly Poly::gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) return Poly();
    if (a.is_zero() || b.is_zero()) {
        Poly g = a.is_zero() ? b : a;
        g *= Rational(1) / g.leading_coeff();
        return g;
    }
    ZPoly x = to_zpoly(a), y = to_zpoly(b);
    zprimitive(x);
    zprimitive(y);
    if (zdeg(x) < zdeg(y)) std::swap(x, y);
    while (!y.empty()) {
        ZPoly r = zprem(x, y);
        zprimitive(r);
        x = std::move(y);
        y = std::move(r);
    }
    std::vector<Rational> coeffs(x.size());
    for (size_t i = 0; i < x.size(); ++i) coeffs[i] = Rational(x[i]);
    Poly g(std::move(coeffs));
    g *= Rational(1) / g.leading_coeff();
    return g;
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int k = 0; k <= degree(); ++k) {
        Rational c = coeffs_[k];
        if (c == 0) continue;
        bool neg = c < 0;
        Rational a = neg ? Rational(-c) : c;
        std::string mono;
        if (k == 0) {
            mono = a.get_str();
        } else {
            std::string base = (k == 1) ? var : var + "^" + std::to_string(k);
            mono = (a == 1) ? base : a.get_str() + "*" + base;
        }
        if (first) {
            out = (neg ? "-" : "") + mono;
            first = false;
        } else {
            out += (neg ? " - " : " + ") + mono;
        }
    }
    return out;
}

namespace {

struct PolyParser {
    const std::string& s;
    const std::string& var;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail() {
        throw std::invalid_argument("parse error: bad polynomial '" + s + "'");
    }
    Rational number() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() &&
               (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/'))
            ++pos;
        if (start == pos) fail();
        return parse_rational(s.substr(start, pos - start));
    }
    int exponent() {
        if (!eat('^')) return 1;
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) fail();
        return std::stoi(s.substr(start, pos - start));
    }
    bool at_var() {
        skip_ws();
        return s.compare(pos, var.size(), var) == 0;
    }
    // mono := number ('*' var exp?)? | var exp?
    Poly mono() {
        skip_ws();
        if (at_var()) {
            pos += var.size();
            return Poly::monomial(exponent());
        }
        Rational c = number();
        if (eat('*')) {
            if (!at_var()) fail();
            pos += var.size();
            return Poly::monomial(exponent(), c);
        }
        return Poly(c);
    }
    Poly parse() {
        Poly out;
        bool neg = eat('-');
        if (!neg) eat('+');
        while (true) {
            Poly m = mono();
            out += neg ? -m : m;
            skip_ws();
            if (pos >= s.size()) break;
            if (eat('+'))
                neg = false;
            else if (eat('-'))
                neg = true;
            else
                fail();
        }
        return out;
    }
};

}  // namespace

Poly Poly::parse(const std::string& text, const std::string& var) {
    PolyParser p{text, var};
    Poly out = p.parse();
    p.skip_ws();
    if (p.pos != text.size()) p.fail();
    return out;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string("q"); }

}  // namespace qmzv

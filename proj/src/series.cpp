#include "qmzv/series.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace qmzv {

Series::Series(int precision) {
    if (precision < 1) throw std::domain_error("out of range");
    coeffs_.assign(precision, Rational(0));
}

Series::Series(const Poly& p, int precision) : Series(precision) {
    int top = std::min(p.degree(), precision - 1);
    for (int k = 0; k <= top; ++k) coeffs_[k] = p.coeff(k);
}

Series Series::constant(const Rational& c, int precision) {
    Series s(precision);
    s.coeffs_[0] = c;
    return s;
}

Rational Series::coeff(int k) const {
    if (k < 0 || k >= precision()) throw std::domain_error("out of range");
    return coeffs_[k];
}

void Series::set_coeff(int k, const Rational& c) {
    if (k < 0 || k >= precision()) throw std::domain_error("out of range");
    coeffs_[k] = c;
}

Series Series::operator-() const {
    Series r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Series operator+(const Series& a, const Series& b) {
    Series r(std::min(a.precision(), b.precision()));
    for (int k = 0; k < r.precision(); ++k) r.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
    return r;
}

Series operator-(const Series& a, const Series& b) {
    Series r(std::min(a.precision(), b.precision()));
    for (int k = 0; k < r.precision(); ++k) r.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
    return r;
}

Series operator*(const Series& a, const Series& b) {
    Series r(std::min(a.precision(), b.precision()));
    for (int i = 0; i < r.precision(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (int j = 0; i + j < r.precision(); ++j) {
            if (b.coeffs_[j] == 0) continue;
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return r;
}

Series& Series::operator*=(const Rational& c) {
    for (auto& x : coeffs_) x *= c;
    return *this;
}

Series Series::inverse() const {
    if (coeffs_[0] == 0) throw std::domain_error("not q-adically regular");
    Series r(precision());
    r.coeffs_[0] = Rational(1) / coeffs_[0];
    for (int k = 1; k < precision(); ++k) {
        Rational acc(0);
        for (int j = 1; j <= k; ++j) acc += coeffs_[j] * r.coeffs_[k - j];
        r.coeffs_[k] = -acc / coeffs_[0];
    }
    return r;
}

Series Series::shifted(int k) const {
    if (k < 0) throw std::domain_error("out of range");
    Series r(precision());
    for (int i = 0; i + k < precision(); ++i) r.coeffs_[i + k] = coeffs_[i];
    return r;
}

Series Series::truncated(int precision) const {
    if (precision < 1 || precision > this->precision())
        throw std::domain_error("out of range");
    Series r(precision);
    for (int k = 0; k < precision; ++k) r.coeffs_[k] = coeffs_[k];
    return r;
}

std::optional<int> Series::valuation() const {
    for (int k = 0; k < precision(); ++k)
        if (coeffs_[k] != 0) return k;
    return std::nullopt;
}

std::string Series::to_string() const {
    std::string out;
    bool first = true;
    for (int k = 0; k < precision(); ++k) {
        const Rational& c = coeffs_[k];
        if (c == 0) continue;
        bool neg = c < 0;
        Rational a = neg ? Rational(-c) : c;
        std::string mono;
        if (k == 0) {
            mono = a.get_str();
        } else {
            std::string base = (k == 1) ? "q" : "q^" + std::to_string(k);
            if (a == 1)
                mono = base;
            else if (a.get_den() == 1)
                mono = a.get_str() + base;
            else
                mono = "(" + a.get_str() + ")" + base;
        }
        if (first) {
            out = (neg ? "-" : "") + mono;
            first = false;
        } else {
            out += (neg ? " - " : " + ") + mono;
        }
    }
    if (first) out = "0";
    out += " + O(q^" + std::to_string(precision()) + ")";
    return out;
}

std::string valuation_text(const Series& s) {
    auto v = s.valuation();
    if (v) return std::to_string(*v);
    return "at-least-" + std::to_string(s.precision());
}

std::ostream& operator<<(std::ostream& os, const Series& s) { return os << s.to_string(); }

}  // namespace qmzv

#include "qmzv/factored.hpp"

#include <algorithm>

namespace qmzv {

FactoredFraction FactoredFraction::from_poly(const Poly& p) {
    FactoredFraction f;
    f.num_ = p;
    return f;
}

void FactoredFraction::clear_if_zero() {
    if (num_.is_zero()) {
        qexp_ = 0;
        hexp_ = 0;
        gexp_.clear();
    }
}

void FactoredFraction::mul_poly(const Poly& p) {
    num_ = num_ * p;
    clear_if_zero();
}

void FactoredFraction::mul_rational(const Rational& c) {
    num_ *= c;
    clear_if_zero();
}

void FactoredFraction::mul_qpow(int k) {
    if (!is_zero()) qexp_ += k;
}

void FactoredFraction::div_h(int e) {
    if (!is_zero()) hexp_ += e;
}

void FactoredFraction::mul_h(int e) {
    if (is_zero()) return;
    int cancel = std::min(e, hexp_);
    hexp_ -= cancel;
    e -= cancel;
    if (e > 0) num_ = num_ * one_minus_q().pow(e);
}

void FactoredFraction::div_qint(int m, int e) {
    if (m == 1 || is_zero()) return;
    gexp_[m] += e;
}

void FactoredFraction::mul_qint(int m, int e) {
    if (m == 1 || is_zero()) return;
    auto it = gexp_.find(m);
    if (it != gexp_.end()) {
        int cancel = std::min(e, it->second);
        it->second -= cancel;
        e -= cancel;
        if (it->second == 0) gexp_.erase(it);
    }
    if (e > 0) num_ = num_ * q_integer(m).pow(e);
}

void FactoredFraction::negate() { num_ = -num_; }

FactoredFraction& FactoredFraction::operator+=(const FactoredFraction& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    // Common denominator by exponent-wise max; each numerator picks up the
    // factors its side is missing.
    int q_common = std::min(qexp_, o.qexp_);
    int h_common = std::max(hexp_, o.hexp_);
    Poly lhs = num_.shifted(qexp_ - q_common);
    Poly rhs = o.num_.shifted(o.qexp_ - q_common);
    if (h_common > hexp_) lhs = lhs * one_minus_q().pow(h_common - hexp_);
    if (h_common > o.hexp_) rhs = rhs * one_minus_q().pow(h_common - o.hexp_);
    std::map<int, int> g_common = gexp_;
    for (const auto& [m, e] : o.gexp_) {
        int& cur = g_common[m];
        cur = std::max(cur, e);
    }
    for (const auto& [m, e] : g_common) {
        auto mine = gexp_.find(m);
        int have = (mine == gexp_.end()) ? 0 : mine->second;
        if (e > have) lhs = lhs * q_integer(m).pow(e - have);
        auto theirs = o.gexp_.find(m);
        int ohave = (theirs == o.gexp_.end()) ? 0 : theirs->second;
        if (e > ohave) rhs = rhs * q_integer(m).pow(e - ohave);
    }
    num_ = lhs + rhs;
    qexp_ = q_common;
    hexp_ = h_common;
    gexp_ = std::move(g_common);
    clear_if_zero();
    return *this;
}

FactoredFraction& FactoredFraction::operator-=(const FactoredFraction& o) {
    FactoredFraction n(o);
    n.negate();
    return *this += n;
}

FactoredFraction operator*(const FactoredFraction& a, const FactoredFraction& b) {
    FactoredFraction r;
    if (a.is_zero() || b.is_zero()) return r;
    r.num_ = a.num_ * b.num_;
    r.qexp_ = a.qexp_ + b.qexp_;
    r.hexp_ = a.hexp_ + b.hexp_;
    r.gexp_ = a.gexp_;
    for (const auto& [m, e] : b.gexp_) r.gexp_[m] += e;
    return r;
}

RationalFunction FactoredFraction::to_rational_function() const {
    if (is_zero()) return RationalFunction();
    Poly num = num_;
    if (qexp_ > 0) num = num.shifted(qexp_);
    Poly den(Rational(1));
    if (qexp_ < 0) den = den.shifted(-qexp_);
    if (hexp_ > 0) den = den * one_minus_q().pow(hexp_);
    for (const auto& [m, e] : gexp_) den = den * q_integer(m).pow(e);
    return RationalFunction(std::move(num), std::move(den));
}

}  // namespace qmzv

#include "qmzv/zeta.hpp"

#include "qmzv/check.hpp"
#include "qmzv/word_ops.hpp"

#include <stdexcept>

namespace qmzv {

namespace {

void require_nonconstant(const WordSum& w) {
    if (w.has_constant_term())
        throw std::domain_error("requires non-constant argument");
}

}  // namespace

SeriesEvaluator::SeriesEvaluator(int precision) : precision_(precision) {
    if (precision < 1)
        throw std::domain_error("out of range: precision must be positive");
}

void SeriesEvaluator::guard(int n) const {
    if (n < 0 || n > precision_)
        throw std::domain_error("out of range: sequence index exceeds evaluator limit");
}

Series SeriesEvaluator::qpow(int e) const {
    Series out = zero();
    if (e < precision_) out.set_coeff(e, Rational(1));
    return out;
}

const Series& SeriesEvaluator::inv_qint(int m) {
    while (static_cast<int>(inv_qint_.size()) < m)
        inv_qint_.push_back(
            Series(q_integer(static_cast<int>(inv_qint_.size()) + 1), precision_)
                .inverse());
    return inv_qint_[static_cast<size_t>(m) - 1];
}

Series SeriesEvaluator::word_S(const Word& w, int n) {
    if (w.empty()) return Series::constant(Rational(1), precision_);
    if (n == 0) return zero();
    auto key = std::make_pair(w, n);
    if (auto it = cache_S_.find(key); it != cache_S_.end()) return it->second;
    // S_w(n) = S_w(n-1) + q^n/[n]^{k1} S_{w'}(n)
    Series head = word_S(w.tail(), n) * qpow(n);
    for (int e = 0; e < w.front(); ++e) head *= inv_qint(n);
    Series out = word_S(w, n - 1) + head;
    cache_S_.emplace(std::move(key), out);
    return out;
}

Series SeriesEvaluator::word_A(const Word& w, int n) {
    if (w.empty()) return Series::constant(Rational(1), precision_);
    if (n == 0) return zero();
    auto key = std::make_pair(w, n);
    if (auto it = cache_A_.find(key); it != cache_A_.end()) return it->second;
    // A_w(n) = A_w(n-1) + q^{(k1-1)n}/[n]^{k1} A_{w'}(n-1)
    Series head = word_A(w.tail(), n - 1) * qpow((w.front() - 1) * n);
    for (int e = 0; e < w.front(); ++e) head *= inv_qint(n);
    Series out = word_A(w, n - 1) + head;
    cache_A_.emplace(std::move(key), out);
    return out;
}

Series SeriesEvaluator::word_A_star(const Word& w, int n) {
    if (w.empty()) return Series::constant(Rational(1), precision_);
    if (n == 0) return zero();
    auto key = std::make_pair(w, n);
    if (auto it = cache_Astar_.find(key); it != cache_Astar_.end()) return it->second;
    // A*_w(n) = A*_w(n-1) + q^{(k1-1)n}/[n]^{k1} A*_{w'}(n)
    Series head = word_A_star(w.tail(), n) * qpow((w.front() - 1) * n);
    for (int e = 0; e < w.front(); ++e) head *= inv_qint(n);
    Series out = word_A_star(w, n - 1) + head;
    cache_Astar_.emplace(std::move(key), out);
    return out;
}

Series SeriesEvaluator::word_a(const Word& w, int n) {
    // a_w(n) = q^{(k1-1)(n+1)}/[n+1]^{k1} A_{w'}(n)
    Series out = word_A(w.tail(), n) * qpow((w.front() - 1) * (n + 1));
    for (int e = 0; e < w.front(); ++e) out *= inv_qint(n + 1);
    return out;
}

Series SeriesEvaluator::word_s(const Word& w, int n) {
    // s_w(n) = q^{k1(n+1)}/[n+1]^{k1} A*_{w'}(n+1)
    Series out = word_A_star(w.tail(), n + 1) * qpow(w.front() * (n + 1));
    for (int e = 0; e < w.front(); ++e) out *= inv_qint(n + 1);
    return out;
}

const Series& SeriesEvaluator::word_zeta(const Word& w) {
    if (auto it = cache_zeta_.find(w); it != cache_zeta_.end()) return it->second;
    Series out = zero();
    if (w.empty()) {
        out = Series::constant(Rational(1), precision_);
    } else {
        // zeta(w) = sum_{n >= 0} a_w(n); the term at index n has valuation
        // at least n+1, so indices >= precision contribute nothing
        for (int n = 0; n + 1 <= precision_; ++n) {
            Series term = word_a(w, n);
            auto v = term.valuation();
            check(!v.has_value() || *v >= n + 1,
                  "zeta tail bound violated: term valuation below index");
            out += term;
        }
    }
    return cache_zeta_.emplace(w, std::move(out)).first->second;
}

const Series& SeriesEvaluator::word_zeta_star(const Word& w) {
    if (auto it = cache_zeta_star_.find(w); it != cache_zeta_star_.end())
        return it->second;
    Series out = zero();
    if (w.empty()) {
        out = Series::constant(Rational(1), precision_);
    } else {
        // zeta_star(w) = sum_{n >= 1} q^{(k1-1)n}/[n]^{k1} A*_{w'}(n); with
        // k1 >= 2 the term at n has valuation at least n
        for (int n = 1; n <= precision_ - 1; ++n) {
            Series term = word_A_star(w.tail(), n) * qpow((w.front() - 1) * n);
            for (int e = 0; e < w.front(); ++e) term *= inv_qint(n);
            auto v = term.valuation();
            check(!v.has_value() || *v >= n,
                  "zeta_star tail bound violated: term valuation below index");
            out += term;
        }
    }
    return cache_zeta_star_.emplace(w, std::move(out)).first->second;
}

Series SeriesEvaluator::zeta_q(const WordSum& w) {
    Series acc = zero();
    for (const auto& [word, c] : w.terms()) {
        if (!word.admissible()) throw std::domain_error("non-admissible argument");
        acc += Series(hbar_eval(c), precision_) * word_zeta(word);
    }
    return acc;
}

Series SeriesEvaluator::zeta_star_q(const WordSum& w) {
    Series acc = zero();
    for (const auto& [word, c] : w.terms()) {
        if (!word.admissible()) throw std::domain_error("non-admissible argument");
        acc += Series(hbar_eval(c), precision_) * word_zeta_star(word);
    }
    return acc;
}

Series SeriesEvaluator::F_expansion_coeff(const WordSum& w, int m) {
    require_nonconstant(w);
    WordSum arg = circledast_q(d_q(phi(w)), WordSum(Word::z1_power(m)));
    return -zeta_q(arg);
}

Series SeriesEvaluator::combine(const WordSum& w, int n,
                                Series (SeriesEvaluator::*word_fn)(const Word&, int)) {
    Series acc = zero();
    for (const auto& [word, c] : w.terms())
        acc += Series(hbar_eval(c), precision_) * (this->*word_fn)(word, n);
    return acc;
}

Series SeriesEvaluator::S_series(const WordSum& w, int n) {
    guard(n);
    return combine(w, n, &SeriesEvaluator::word_S);
}

Series SeriesEvaluator::A_series(const WordSum& w, int n) {
    guard(n);
    return combine(w, n, &SeriesEvaluator::word_A);
}

Series SeriesEvaluator::A_star_series(const WordSum& w, int n) {
    guard(n);
    return combine(w, n, &SeriesEvaluator::word_A_star);
}

Series SeriesEvaluator::s_series(const WordSum& w, int n) {
    require_nonconstant(w);
    guard(n);
    guard(n + 1);
    return combine(w, n, &SeriesEvaluator::word_s);
}

Series SeriesEvaluator::a_series(const WordSum& w, int n) {
    require_nonconstant(w);
    guard(n);
    guard(n + 1);
    return combine(w, n, &SeriesEvaluator::word_a);
}

}  // namespace qmzv

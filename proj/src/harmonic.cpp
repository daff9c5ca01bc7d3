#include "qmzv/harmonic.hpp"

#include <map>
#include <memory>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qmzv {

namespace {

void require_nonconstant(const WordSum& w) {
    if (w.has_constant_term())
        throw std::domain_error("requires non-constant argument");
}

}  // namespace

// q^i (q^{-n})_i / (q)_i with the (1-q) powers cancelled:
// (q^{-n})_i = (-1)^i q^{i(i-1)/2 - ni} (1-q)^i [n][n-1]...[n-i+1]
// (q)_i      = (1-q)^i [1][2]...[i]
FactoredFraction nabla_weight_factored(int i, int n) {
    if (i < 0 || n < 0 || i > n)
        throw std::domain_error("out of range: nabla weight index");
    FactoredFraction wt = FactoredFraction::one();
    for (int j = 0; j < i; ++j) wt.mul_poly(q_integer(n - j));
    if (i % 2 != 0) wt.negate();
    wt.mul_qpow(i + i * (i - 1) / 2 - n * i);
    for (int j = 2; j <= i; ++j) wt.div_qint(j);
    return wt;
}

void HarmonicEvaluator::guard(int n) const {
    if (n < 0 || n > max_n_)
        throw std::domain_error("out of range: sequence index exceeds evaluator limit");
}

FactoredFraction HarmonicEvaluator::S_word(const Word& w, int n) {
    guard(n);
    if (w.empty()) return FactoredFraction::one();
    if (n == 0) return FactoredFraction();
    auto key = std::make_pair(w, n);
    if (auto it = cache_S_.find(key); it != cache_S_.end()) return it->second;
    // S_w(n) = S_w(n-1) + q^n/[n]^{k1} S_{w'}(n)
    FactoredFraction head = S_word(w.tail(), n);
    head.mul_qpow(n);
    head.div_qint(n, w.front());
    FactoredFraction out = S_word(w, n - 1);
    out += head;
    cache_S_.emplace(std::move(key), out);
    return out;
}

FactoredFraction HarmonicEvaluator::A_word(const Word& w, int n) {
    guard(n);
    if (w.empty()) return FactoredFraction::one();
    if (n == 0) return FactoredFraction();
    auto key = std::make_pair(w, n);
    if (auto it = cache_A_.find(key); it != cache_A_.end()) return it->second;
    // A_w(n) = A_w(n-1) + q^{(k1-1)n}/[n]^{k1} A_{w'}(n-1)
    FactoredFraction head = A_word(w.tail(), n - 1);
    head.mul_qpow((w.front() - 1) * n);
    head.div_qint(n, w.front());
    FactoredFraction out = A_word(w, n - 1);
    out += head;
    cache_A_.emplace(std::move(key), out);
    return out;
}

FactoredFraction HarmonicEvaluator::A_star_word(const Word& w, int n) {
    guard(n);
    if (w.empty()) return FactoredFraction::one();
    if (n == 0) return FactoredFraction();
    auto key = std::make_pair(w, n);
    if (auto it = cache_Astar_.find(key); it != cache_Astar_.end()) return it->second;
    // A*_w(n) = A*_w(n-1) + q^{(k1-1)n}/[n]^{k1} A*_{w'}(n)
    FactoredFraction head = A_star_word(w.tail(), n);
    head.mul_qpow((w.front() - 1) * n);
    head.div_qint(n, w.front());
    FactoredFraction out = A_star_word(w, n - 1);
    out += head;
    cache_Astar_.emplace(std::move(key), out);
    return out;
}

FactoredFraction HarmonicEvaluator::s_word(const Word& w, int n) {
    // s_w(n) = q^{k1(n+1)}/[n+1]^{k1} A*_{w'}(n+1)
    FactoredFraction out = A_star_word(w.tail(), n + 1);
    out.mul_qpow(w.front() * (n + 1));
    out.div_qint(n + 1, w.front());
    return out;
}

FactoredFraction HarmonicEvaluator::a_word(const Word& w, int n) {
    // a_w(n) = q^{(k1-1)(n+1)}/[n+1]^{k1} A_{w'}(n)
    FactoredFraction out = A_word(w.tail(), n);
    out.mul_qpow((w.front() - 1) * (n + 1));
    out.div_qint(n + 1, w.front());
    return out;
}

RationalFunction HarmonicEvaluator::combine(
    const WordSum& w, int n,
    FactoredFraction (HarmonicEvaluator::*word_fn)(const Word&, int)) {
    FactoredFraction acc;
    for (const auto& [word, c] : w.terms()) {
        FactoredFraction v = (this->*word_fn)(word, n);
        v.mul_poly(hbar_eval(c));
        acc += v;
    }
    return acc.to_rational_function();
}

RationalFunction HarmonicEvaluator::S_eval(const WordSum& w, int n) {
    return combine(w, n, &HarmonicEvaluator::S_word);
}

RationalFunction HarmonicEvaluator::A_eval(const WordSum& w, int n) {
    return combine(w, n, &HarmonicEvaluator::A_word);
}

RationalFunction HarmonicEvaluator::A_star_eval(const WordSum& w, int n) {
    return combine(w, n, &HarmonicEvaluator::A_star_word);
}

RationalFunction HarmonicEvaluator::s_eval(const WordSum& w, int n) {
    require_nonconstant(w);
    guard(n);
    guard(n + 1);
    return combine(w, n, &HarmonicEvaluator::s_word);
}

RationalFunction HarmonicEvaluator::a_eval(const WordSum& w, int n) {
    require_nonconstant(w);
    guard(n);
    guard(n + 1);
    return combine(w, n, &HarmonicEvaluator::a_word);
}

FactoredFraction HarmonicEvaluator::nabla_S_word(const Word& w, int n) {
    guard(n);
    FactoredFraction acc;
    for (int i = 0; i <= n; ++i) acc += nabla_weight_factored(i, n) * S_word(w, i);
    return acc;
}

RationalFunction HarmonicEvaluator::nabla_S(const WordSum& w, int n) {
    guard(n);
    FactoredFraction acc;
    for (const auto& [word, c] : w.terms()) {
        FactoredFraction v = nabla_S_word(word, n);
        v.mul_poly(hbar_eval(c));
        acc += v;
    }
    return acc.to_rational_function();
}

RationalFunction nabla_q(const SequenceFn& b, int n) {
    if (n < 0) throw std::domain_error("out of range: negative sequence index");
    RationalFunction q_pow_minus_n(Poly(Rational(1)), Poly::monomial(n));
    RationalFunction acc;
    for (int i = 0; i <= n; ++i) {
        RationalFunction wt = RationalFunction(Poly::monomial(i)) *
                              q_shifted_factorial(q_pow_minus_n, i) /
                              q_shifted_factorial(RationalFunction(Poly::variable()), i);
        acc += wt * b(i);
    }
    return acc;
}

RationalFunction delta_t_tower(const SequenceFn& b, int n) {
    if (n < 0) throw std::domain_error("out of range: negative sequence index");
    std::vector<RationalFunction> v(static_cast<size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) v[static_cast<size_t>(j)] = b(j);
    for (int k = 0; k < n; ++k) {
        RationalFunction t(Poly(Rational(1)), Poly::monomial(k));
        for (int j = 0; j + k + 1 <= n; ++j)
            v[static_cast<size_t>(j)] =
                v[static_cast<size_t>(j)] - t * v[static_cast<size_t>(j) + 1];
    }
    return v[0];
}

SequenceFn sequence_S(HarmonicEvaluator& ev, const WordSum& w) {
    return [&ev, w](int n) { return ev.S_eval(w, n); };
}

SequenceFn memoized(SequenceFn b) {
    auto cache = std::make_shared<std::map<int, RationalFunction>>();
    return [cache, b = std::move(b)](int n) {
        if (auto it = cache->find(n); it != cache->end()) return it->second;
        RationalFunction v = b(n);
        cache->emplace(n, v);
        return v;
    };
}

}  // namespace qmzv

#pragma once
#include "qmzv/factored.hpp"
#include "qmzv/rational_fn.hpp"
#include "qmzv/word.hpp"

#include <functional>
#include <map>
#include <utility>

namespace qmzv {

// A sequence of exact values indexed by non-negative integers.
using SequenceFn = std::function<RationalFunction(int)>;

// Exact evaluation of the finite multiple harmonic q-series attached to a
// word z_{k1}...z_{kr}, with hbar in coefficients acting as 1-q:
//
//   S_w(n)  : sum over n >= m1 >= ... >= mr >= 1 of prod_i q^{m_i} / [m_i]^{k_i}
//   A_w(n)  : sum over n >= m1 >  ... >  mr >= 1 of prod_i q^{(k_i-1)m_i} / [m_i]^{k_i}
//   A*_w(n) : as A_w but with weak inequalities
//   s_w(n)  : the A*-type sum with m1 = n+1 fixed and exponent k1*m1 on the front
//   a_w(n)  : the A-type sum with m1 = n+1 fixed
//
// The empty word evaluates to the constant sequence 1; non-empty words
// vanish at n = 0. Values are computed in factored form and cached per
// (word, n); use one evaluator per thread. Indices are capped by max_n to
// bound degree growth.
class HarmonicEvaluator {
public:
    explicit HarmonicEvaluator(int max_n = 64) : max_n_(max_n) {}

    RationalFunction S_eval(const WordSum& w, int n);
    RationalFunction A_eval(const WordSum& w, int n);
    RationalFunction A_star_eval(const WordSum& w, int n);
    // the fixed-top-index sums; both require a non-constant argument
    RationalFunction s_eval(const WordSum& w, int n);
    RationalFunction a_eval(const WordSum& w, int n);

    // nabla_q(S_w)(n) computed entirely in factored form; agrees with
    // nabla_q applied to the S_eval sequence
    RationalFunction nabla_S(const WordSum& w, int n);
    FactoredFraction nabla_S_word(const Word& w, int n);

    // single-word values in the internal factored representation
    FactoredFraction S_word(const Word& w, int n);
    FactoredFraction A_word(const Word& w, int n);
    FactoredFraction A_star_word(const Word& w, int n);
    FactoredFraction s_word(const Word& w, int n);
    FactoredFraction a_word(const Word& w, int n);

    int max_n() const { return max_n_; }

private:
    int max_n_;
    std::map<std::pair<Word, int>, FactoredFraction> cache_S_, cache_A_, cache_Astar_;

    void guard(int n) const;
    RationalFunction combine(const WordSum& w, int n,
                             FactoredFraction (HarmonicEvaluator::*word_fn)(const Word&, int));
};

// nabla_q(b)(n) = sum_{i=0}^{n} q^i (q^{-n})_i / (q)_i * b(i), exact;
// the weights pass through Laurent intermediates.
RationalFunction nabla_q(const SequenceFn& b, int n);

// The i-th nabla weight q^i (q^{-n})_i / (q)_i in factored form,
// (-1)^i q^{i + i(i-1)/2 - n i} [n][n-1]...[n-i+1] / ([2]...[i]).
FactoredFraction nabla_weight_factored(int i, int n);

// Memoizing wrapper; safe to copy, the cache is shared.
SequenceFn memoized(SequenceFn b);

// The finite-difference tower (Delta_{q^{-(n-1)}} o ... o Delta_{q^{-1}} o
// Delta_1)(b)(0) with Delta_t(b)(m) = b(m) - t b(m+1); the innermost step
// is t = 1, and n = 0 returns b(0). Equals nabla_q(b)(n).
RationalFunction delta_t_tower(const SequenceFn& b, int n);

// View of S_w as a sequence; the evaluator must outlive the result.
SequenceFn sequence_S(HarmonicEvaluator& ev, const WordSum& w);

}  // namespace qmzv

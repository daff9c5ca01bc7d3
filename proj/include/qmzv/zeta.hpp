#pragma once
#include "qmzv/q_basics.hpp"
#include "qmzv/series.hpp"
#include "qmzv/word.hpp"

#include <map>
#include <utility>
#include <vector>

namespace qmzv {

// Evaluates multiple q-zeta values and the finite sums feeding them as
// truncated power series in q at a fixed precision. Caches are private to
// the instance; use one evaluator per thread.
//
// zeta(w)      = sum over m1 > ... > mr > 0 of
//                q^{(k1-1)m1 + ... + (kr-1)mr} / ([m1]^{k1} ... [mr]^{kr})
// zeta_star(w) = the same sum over m1 >= ... >= mr >= 1.
// Both require every word of the argument admissible (empty, or first
// letter >= 2); otherwise the series diverges coefficient-wise.
class SeriesEvaluator {
public:
    explicit SeriesEvaluator(int precision);

    int precision() const { return precision_; }

    Series zeta_q(const WordSum& w);
    Series zeta_star_q(const WordSum& w);

    // Coefficient m >= 1 of the Newton-basis expansion of the generating
    // sequence attached to w: -zeta_q(d_q(phi(w)) circledast_q z1^m).
    // Requires w non-constant.
    Series F_expansion_coeff(const WordSum& w, int m);

    // Truncated series of the finite sums, n limited to [0, precision].
    Series S_series(const WordSum& w, int n);
    Series A_series(const WordSum& w, int n);
    Series A_star_series(const WordSum& w, int n);
    Series s_series(const WordSum& w, int n);  // non-constant argument
    Series a_series(const WordSum& w, int n);  // non-constant argument

private:
    Series zero() const { return Series(precision_); }
    Series qpow(int e) const;
    const Series& inv_qint(int m);

    Series word_S(const Word& w, int n);
    Series word_A(const Word& w, int n);
    Series word_A_star(const Word& w, int n);
    Series word_a(const Word& w, int n);
    Series word_s(const Word& w, int n);
    const Series& word_zeta(const Word& w);
    const Series& word_zeta_star(const Word& w);
    Series combine(const WordSum& w, int n,
                   Series (SeriesEvaluator::*word_fn)(const Word&, int));
    void guard(int n) const;

    int precision_;
    std::vector<Series> inv_qint_;  // slot m-1 holds the series of 1/[m]
    std::map<std::pair<Word, int>, Series> cache_S_, cache_A_, cache_Astar_;
    std::map<Word, Series> cache_zeta_, cache_zeta_star_;
};

}  // namespace qmzv

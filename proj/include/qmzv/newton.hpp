#pragma once
#include "qmzv/factored.hpp"
#include "qmzv/harmonic.hpp"
#include "qmzv/rational_fn.hpp"
#include "qmzv/series.hpp"
#include "qmzv/word.hpp"

#include <functional>
#include <vector>

namespace qmzv {

class SeriesEvaluator;

// Newton basis polynomial B_n(z) = prod_{j=1}^{n} (z - q^{j-1})/(1 - q^j),
// so B_0 = 1 and B_n vanishes at z = q^m for 0 <= m < n.
RationalFunction B_at(int n, const RationalFunction& zval);

// B_n(q^m) in factored form,
// (-1)^n q^{n(n-1)/2} [m][m-1]...[m-n+1] / ([1][2]...[n]); zero for m < n.
FactoredFraction B_at_q_power(int n, int m);

// Interpolation identity with shift l >= 0:
//   sum_{n=0}^{m} nabla_q(b)(l+n) B_n(q^m)
//     = q^{-lm} sum_{j=0}^{l} q^j (q^{-l})_j/(q)_j b(j+m).
// The generic form evaluates b through exact rational functions; the S-form
// takes b = S_w and stays in factored form throughout.
bool interpolation_check(const SequenceFn& b, int m, int l);
bool interpolation_check_S(HarmonicEvaluator& ev, const WordSum& w, int m, int l);

// (1/(q)_j) sum_{n=0}^{m} q^{mn} (q^{-m})_n (tq^{-n})_j / (q)_n; vanishes
// for j < m and equals key_sum_closed for j >= m.
RationalFunction key_sum_lhs(int m, int j, const RationalFunction& t);
// (q^{-1}t)^m (t)_{j-m} / (q)_{j-m} for j >= m, zero otherwise.
RationalFunction key_sum_closed(int m, int j, const RationalFunction& t);

// Coefficients of an expansion c(0) + sum_{m=1}^{order} coeff_m X^m with
// X = (z-1)/(1-q), all entries truncated mod q^{q_precision}.
struct NewtonExpansion {
    std::vector<Series> coefficients;  // indices 0..order
    int order = 0;
    int q_precision = 0;
};

// coefficient_0 = c(0); coefficient_m = sum_{n=1}^{n_terms} c(n) a_{z1^m}(n-1)
// mod q^{q_precision} for 1 <= m <= order. Requires the convergence
// condition v(c(n)) >= n, checked on every evaluated term; the bound makes
// the result independent of n_terms >= q_precision.
NewtonExpansion newton_expand(const SequenceFn& c, int order, int q_precision,
                              int n_terms);

// The same expansion for a sequence already truncated mod q^{q_precision}.
using SeriesSequenceFn = std::function<Series(int)>;
NewtonExpansion newton_expand(const SeriesSequenceFn& c, int order,
                              int q_precision, int n_terms);

// Change of base point for the Newton basis:
//   B_n(z) = y^n sum_{j=0}^{n} (y^{-1})_{n-j}/(q)_{n-j} B_j(y^{-1}z).
bool b_connect_check(int n, const RationalFunction& yval,
                     const RationalFunction& zval);
// The same identity with z left symbolic, compared coefficient-wise in z.
bool b_connect_check_symbolic_z(int n, const RationalFunction& yval);

// c3(n) = sum_{k=0}^{n} qbinom(n,k) c1(k) sum_{j=0}^{k} c2(n-k+j) B_j(q^k);
// the Newton expansion of c3 is the Cauchy product of those of c1, c2.
SequenceFn newton_product_c3(SequenceFn c1, SequenceFn c2);
SeriesSequenceFn newton_product_c3(SeriesSequenceFn c1, SeriesSequenceFn c2,
                                   int q_precision);

// View of nabla_q(S_w) as a truncated-series sequence mod q^{q_precision};
// the evaluator must outlive the result.
SeriesSequenceFn sequence_nabla_S(HarmonicEvaluator& ev, const WordSum& w,
                                  int q_precision);

// The same sequence through the dual closed form -s_{phi(w)}(n-1), far
// cheaper at large n; w must be non-constant. The evaluator (which fixes
// the precision) must outlive the result.
SeriesSequenceFn sequence_nabla_S_dual(SeriesEvaluator& ev, const WordSum& w);

}  // namespace qmzv

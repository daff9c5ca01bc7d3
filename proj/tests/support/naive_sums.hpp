#pragma once
// Brute-force oracles: every value is assembled by direct enumeration of the
// defining index tuples, sharing no code with the library's recurrences.
#include "qmzv/q_basics.hpp"
#include "qmzv/rational_fn.hpp"
#include "qmzv/series.hpp"
#include "qmzv/word.hpp"

#include <vector>

namespace qmzv_test {

using namespace qmzv;

inline void descend(int r, int upper, bool strict, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
    if (r == 0) {
        out.push_back(cur);
        return;
    }
    for (int m = upper; m >= 1; --m) {
        cur.push_back(m);
        descend(r - 1, strict ? m - 1 : m, strict, cur, out);
        cur.pop_back();
    }
}

// all (m_1,...,m_depth) with bound >= m_1 >= m_2 >= ... >= 1 (or strict >)
inline std::vector<std::vector<int>> index_tuples(int depth, int bound, bool strict) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    descend(depth, bound, strict, cur, out);
    return out;
}

// sum over index tuples of q^{sum_i e_i m_i} / prod_i [m_i]^{k_i},
// accumulated over the common denominator prod_{m<=bound} [m]^{weight}
inline RationalFunction enumerate_sum(const Word& w, int bound, bool strict,
                                      const std::vector<int>& qexp) {
    if (w.empty()) return RationalFunction(Rational(1));
    if (bound <= 0) return RationalFunction();
    int weight = w.weight();
    Poly den(Rational(1));
    for (int m = 1; m <= bound; ++m)
        for (int e = 0; e < weight; ++e) den = den * q_integer(m);
    Poly num;
    for (const auto& tuple : index_tuples(w.depth(), bound, strict)) {
        std::vector<int> used(static_cast<size_t>(bound) + 1, 0);
        int qpow = 0;
        for (size_t i = 0; i < tuple.size(); ++i) {
            used[static_cast<size_t>(tuple[i])] += w.letters()[i];
            qpow += qexp[i] * tuple[i];
        }
        Poly term = Poly::monomial(qpow);
        for (int m = 1; m <= bound; ++m)
            for (int e = used[static_cast<size_t>(m)]; e < weight; ++e)
                term = term * q_integer(m);
        num += term;
    }
    return RationalFunction(num, den);
}

inline RationalFunction naive_S(const Word& w, int n) {
    return enumerate_sum(w, n, false, std::vector<int>(w.letters().size(), 1));
}

inline std::vector<int> letters_minus_one(const Word& w) {
    std::vector<int> e;
    for (int k : w.letters()) e.push_back(k - 1);
    return e;
}

inline RationalFunction naive_A(const Word& w, int n) {
    return enumerate_sum(w, n, true, letters_minus_one(w));
}

inline RationalFunction naive_A_star(const Word& w, int n) {
    return enumerate_sum(w, n, false, letters_minus_one(w));
}

// m_1 = n+1 fixed with exponent k_1 m_1, weak tail bounded by m_1
inline RationalFunction naive_s(const Word& w, int n) {
    RationalFunction front(Poly::monomial(w.front() * (n + 1)));
    for (int e = 0; e < w.front(); ++e) front /= RationalFunction(q_integer(n + 1));
    return front * enumerate_sum(w.tail(), n + 1, false, letters_minus_one(w.tail()));
}

// m_1 = n+1 fixed with exponent (k_1-1) m_1, strict tail below m_1
inline RationalFunction naive_a(const Word& w, int n) {
    RationalFunction front(Poly::monomial((w.front() - 1) * (n + 1)));
    for (int e = 0; e < w.front(); ++e) front /= RationalFunction(q_integer(n + 1));
    return front * enumerate_sum(w.tail(), n, true, letters_minus_one(w.tail()));
}

// truncated zeta values by direct summation: terms with m_1 > P vanish
// mod q^P because the exponent (k_1-1)m_1 + ... is at least m_1 for k_1 >= 2
inline Series zeta_sum_naive(const Word& w, int P, bool strict) {
    Series total(Poly(Rational(1)), P);
    if (w.empty()) return total;
    std::vector<Series> inv_qint;
    inv_qint.reserve(static_cast<size_t>(P) + 1);
    inv_qint.emplace_back(P);
    for (int m = 1; m <= P; ++m) inv_qint.push_back(Series(q_integer(m), P).inverse());
    total = Series(P);
    for (const auto& tuple : index_tuples(w.depth(), P, strict)) {
        int qpow = 0;
        for (size_t i = 0; i < tuple.size(); ++i) qpow += (w.letters()[i] - 1) * tuple[i];
        Series term(Poly::monomial(qpow), P);
        for (size_t i = 0; i < tuple.size(); ++i)
            for (int e = 0; e < w.letters()[i]; ++e)
                term = term * inv_qint[static_cast<size_t>(tuple[i])];
        total = total + term;
    }
    return total;
}

inline Series zeta_naive(const Word& w, int P) { return zeta_sum_naive(w, P, true); }
inline Series zeta_star_naive(const Word& w, int P) { return zeta_sum_naive(w, P, false); }

}  // namespace qmzv_test

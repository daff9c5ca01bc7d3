#include "qmzv/q_basics.hpp"

#include <stdexcept>
#include <vector>

namespace qmzv {

Poly q_integer(int n) {
    if (n < 0) throw std::domain_error("out of range");
    std::vector<Rational> coeffs(n, Rational(1));
    return Poly(std::move(coeffs));
}

Poly one_minus_q() {
    return Poly(Rational(1)) - Poly::variable();
}

RationalFunction q_shifted_factorial(const RationalFunction& x, int n) {
    if (n < 0) throw std::domain_error("out of range");
    RationalFunction r(Rational(1));
    RationalFunction qpow(Rational(1));
    const RationalFunction q{Poly::variable()};
    for (int j = 0; j < n; ++j) {
        r *= RationalFunction(Rational(1)) - x * qpow;
        qpow *= q;
    }
    return r;
}

Poly q_binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n) throw std::domain_error("out of range");
    std::vector<Poly> row{Poly(Rational(1))};
    for (int m = 1; m <= n; ++m) {
        std::vector<Poly> next(std::min(m, k) + 1);
        next[0] = Poly(Rational(1));
        for (int j = 1; j < static_cast<int>(next.size()); ++j) {
            Poly upper = (j < static_cast<int>(row.size())) ? row[j] : Poly();
            next[j] = row[j - 1] + upper.shifted(j);
        }
        row = std::move(next);
    }
    return row[k];
}

Poly hbar_eval(const HbarPolynomial& c) { return c.substitute(one_minus_q()); }

}  // namespace qmzv

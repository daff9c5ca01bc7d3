#pragma once
#include "qmzv/poly.hpp"
#include "qmzv/rational_fn.hpp"

namespace qmzv {

// The coefficient ring of the word algebra is Q[h]; an HbarPolynomial is a
// Poly printed/parsed in the variable "h", and hbar_eval maps h to 1 - q.
using HbarPolynomial = Poly;

// [n] = 1 + q + ... + q^{n-1}; [0] = 0.
Poly q_integer(int n);

// 1 - q.
Poly one_minus_q();

// (x)_n = prod_{j=0}^{n-1} (1 - x q^j).
RationalFunction q_shifted_factorial(const RationalFunction& x, int n);

// (q)_n / ((q)_k (q)_{n-k}) as a polynomial, via the Pascal recurrence
// C(n,k) = C(n-1,k-1) + q^k C(n-1,k). Throws "out of range" for k > n.
Poly q_binomial(int n, int k);

// Substitutes h -> 1 - q.
Poly hbar_eval(const HbarPolynomial& c);

}  // namespace qmzv

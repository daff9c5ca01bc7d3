#pragma once
#include "qmzv/word.hpp"

namespace qmzv {

// Reading of the hbar-free circledast product: the harmonic product used on
// the tails is either *_+ with hbar set to 0 (default) or the bar product.
enum class CircledastVariant { plus_hbar0, bar };

// Action of the letter z_i: z_i (z_j w) = z_{i+j} w, z_i 1 = 0 for i >= 1;
// z_0 kills constants and fixes non-constant words.
WordSum circ(int i, const WordSum& w);
// z_i with the deformed letter products z_i z_j = ±z_{i+j} + h z_{i+j-1}.
WordSum circ_plus(int i, const WordSum& w);
WordSum circ_minus(int i, const WordSum& w);

// Commutative quasi-shuffle products with unit 1, defined by
// (z_i w1) * (z_j w2) = z_i(w1 * z_j w2) + z_j(z_i w1 * w2) + (z_i z_j)(w1 * w2)
// where the letter product is -z_{i+j} + h z_{i+j-1} for *_- (stuffle_minus),
// +z_{i+j} + h z_{i+j-1} for *_+ (stuffle_plus), -z_{i+j} for the bar product,
// and +z_{i+j} for the hbar-free limit of *_+.
WordSum stuffle_minus(const WordSum& a, const WordSum& b);
WordSum stuffle_plus(const WordSum& a, const WordSum& b);
WordSum stuffle_bar(const WordSum& a, const WordSum& b);
WordSum stuffle_plus_hbar0(const WordSum& a, const WordSum& b);

// (z_i w1) (z_j w2) = z_{i+j}(w1 *_+ w2) on non-constant elements.
WordSum circledast_q(const WordSum& a, const WordSum& b);
// hbar-free variant: the tail product is chosen by the variant switch.
WordSum circledast(const WordSum& a, const WordSum& b,
                   CircledastVariant variant = CircledastVariant::plus_hbar0);

// Duality involution: a word of weight W maps to the word whose proper
// partial sums are the complement in {1,...,W-1} of the original ones.
WordSum phi(const WordSum& w);

// d_q(z_i w) = z_i d_q(w) + z_i o+ d_q(w) with d_q(1) = 1, and its inverse.
WordSum d_q(const WordSum& w);
WordSum d_q_inv(const WordSum& w);
// hbar-free analogue: d(z_i w) = z_i d(w) + z_i o d(w).
WordSum d(const WordSum& w);

// xi_i = sum_{k=0}^{i-1} binom(i-1,k) (-h)^{i-1-k} z_{k+1}.
WordSum xi(int i);
// psi(z_{k1}...z_{kr}) = xi_{k1} ... xi_{kr} (concatenation), psi(1) = 1.
WordSum psi(const WordSum& w);
// Same map as the composite phi . d_q_inv . d . phi; retained as an oracle.
WordSum psi_composite(const WordSum& w);

// (z_i w') tri w'' = z_i (w' *_+ w''), first argument non-constant.
WordSum triangle(const WordSum& a, const WordSum& b);

// Substitute h = 0 in every coefficient.
WordSum set_hbar_zero(const WordSum& w);

}  // namespace qmzv

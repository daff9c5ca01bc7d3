#include "qmzv/word_ops.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace qmzv {

namespace {

const HbarPolynomial& hbar() {
    static const HbarPolynomial h = Poly::monomial(1);
    return h;
}

void require_nonconstant(const WordSum& w) {
    if (w.has_constant_term())
        throw std::domain_error("requires non-constant argument");
}

// letter product z_i z_j = alpha z_{i+j} + (with_hbar ? h z_{i+j-1} : 0),
// applied to the front of a tail product
WordSum letter_product(int i, int j, int alpha, bool with_hbar, const WordSum& tails) {
    WordSum out = prepend(i + j, tails);
    if (alpha < 0) out = -out;
    if (with_hbar) out += hbar() * prepend(i + j - 1, tails);
    return out;
}

using PairMemo = std::map<std::pair<Word, Word>, WordSum>;

WordSum stuffle_words(const Word& a, const Word& b, int alpha, bool with_hbar,
                      PairMemo& memo) {
    if (a.empty()) return WordSum(b);
    if (b.empty()) return WordSum(a);
    auto key = std::make_pair(a, b);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    int i = a.front();
    int j = b.front();
    Word ta = a.tail();
    Word tb = b.tail();
    WordSum out = prepend(i, stuffle_words(ta, b, alpha, with_hbar, memo));
    out += prepend(j, stuffle_words(a, tb, alpha, with_hbar, memo));
    out += letter_product(i, j, alpha, with_hbar,
                          stuffle_words(ta, tb, alpha, with_hbar, memo));
    memo.emplace(std::move(key), out);
    return out;
}

WordSum stuffle(const WordSum& a, const WordSum& b, int alpha, bool with_hbar) {
    PairMemo memo;
    WordSum out;
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms())
            out += stuffle_words(wa, wb, alpha, with_hbar, memo) * (ca * cb);
    return out;
}

WordSum circledast_impl(const WordSum& a, const WordSum& b, int alpha, bool with_hbar) {
    require_nonconstant(a);
    require_nonconstant(b);
    PairMemo memo;
    WordSum out;
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) {
            WordSum tails = stuffle_words(wa.tail(), wb.tail(), alpha, with_hbar, memo);
            out += prepend(wa.front() + wb.front(), tails) * (ca * cb);
        }
    return out;
}

Word phi_word(const Word& w) {
    int W = w.weight();
    // proper partial sums of w, as a membership mask over 1..W-1
    std::vector<bool> partial(static_cast<size_t>(W) + 1, false);
    int s = 0;
    for (size_t i = 0; i + 1 < w.letters().size(); ++i) {
        s += w.letters()[i];
        partial[static_cast<size_t>(s)] = true;
    }
    // complement within {1..W}; successive gaps are the dual letters
    std::vector<int> letters;
    int prev = 0;
    for (int x = 1; x <= W; ++x) {
        if (partial[static_cast<size_t>(x)]) continue;
        letters.push_back(x - prev);
        prev = x;
    }
    return Word(std::move(letters));
}

using WordMemo = std::map<Word, WordSum>;

// shared shape of d_q, d_q_inv and d: image of z_i w assembled from the
// image of w by concatenation plus a signed deformed action
template <typename Step>
WordSum derivation_word(const Word& w, WordMemo& memo, const Step& step) {
    if (w.empty()) return WordSum::unit();
    if (auto it = memo.find(w); it != memo.end()) return it->second;
    WordSum sub = derivation_word(w.tail(), memo, step);
    WordSum out = prepend(w.front(), sub) + step(w.front(), sub);
    memo.emplace(w, out);
    return out;
}

template <typename Step>
WordSum derivation(const WordSum& w, const Step& step) {
    WordMemo memo;
    WordSum out;
    for (const auto& [word, c] : w.terms()) out += derivation_word(word, memo, step) * c;
    return out;
}

}  // namespace

WordSum circ(int i, const WordSum& w) {
    if (i < 0) throw std::domain_error("out of range: circ index must be non-negative");
    WordSum out;
    for (const auto& [word, c] : w.terms()) {
        if (word.empty()) continue;
        if (i == 0) out.add_term(word, c);
        else out.add_term(word.tail().prepended(word.front() + i), c);
    }
    return out;
}

WordSum circ_plus(int i, const WordSum& w) {
    if (i < 1) throw std::domain_error("out of range: circ index must be positive");
    return circ(i, w) + hbar() * circ(i - 1, w);
}

WordSum circ_minus(int i, const WordSum& w) {
    if (i < 1) throw std::domain_error("out of range: circ index must be positive");
    return -circ(i, w) + hbar() * circ(i - 1, w);
}

WordSum stuffle_minus(const WordSum& a, const WordSum& b) { return stuffle(a, b, -1, true); }
WordSum stuffle_plus(const WordSum& a, const WordSum& b) { return stuffle(a, b, +1, true); }
WordSum stuffle_bar(const WordSum& a, const WordSum& b) { return stuffle(a, b, -1, false); }
WordSum stuffle_plus_hbar0(const WordSum& a, const WordSum& b) {
    return stuffle(a, b, +1, false);
}

WordSum circledast_q(const WordSum& a, const WordSum& b) {
    return circledast_impl(a, b, +1, true);
}

WordSum circledast(const WordSum& a, const WordSum& b, CircledastVariant variant) {
    return variant == CircledastVariant::plus_hbar0 ? circledast_impl(a, b, +1, false)
                                                    : circledast_impl(a, b, -1, false);
}

WordSum phi(const WordSum& w) {
    require_nonconstant(w);
    WordSum out;
    for (const auto& [word, c] : w.terms()) out.add_term(phi_word(word), c);
    return out;
}

WordSum d_q(const WordSum& w) {
    return derivation(w, [](int i, const WordSum& sub) { return circ_plus(i, sub); });
}

WordSum d_q_inv(const WordSum& w) {
    return derivation(w, [](int i, const WordSum& sub) { return -circ_plus(i, sub); });
}

WordSum d(const WordSum& w) {
    return derivation(w, [](int i, const WordSum& sub) { return circ(i, sub); });
}

WordSum xi(int i) {
    if (i < 1) throw std::domain_error("out of range: xi index must be positive");
    WordSum out;
    for (int k = 0; k < i; ++k) {
        mpz_class binom;
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(i - 1),
                     static_cast<unsigned long>(k));
        if ((i - 1 - k) % 2 != 0) binom = -binom;
        out.add_term(Word({k + 1}), Poly::monomial(i - 1 - k, Rational(binom)));
    }
    return out;
}

namespace {

WordSum psi_word(const Word& w, WordMemo& memo) {
    if (w.empty()) return WordSum::unit();
    if (auto it = memo.find(w); it != memo.end()) return it->second;
    WordSum out = concat(xi(w.front()), psi_word(w.tail(), memo));
    memo.emplace(w, out);
    return out;
}

// split off the coefficient of the empty word, which both psi variants fix
std::pair<HbarPolynomial, WordSum> split_constant(const WordSum& w) {
    HbarPolynomial c = w.coeff(Word());
    WordSum rest = w;
    rest.add_term(Word(), -c);
    return {c, rest};
}

}  // namespace

WordSum psi(const WordSum& w) {
    auto [c, rest] = split_constant(w);
    WordMemo memo;
    WordSum out;
    for (const auto& [word, coeff] : rest.terms()) out += psi_word(word, memo) * coeff;
    out.add_term(Word(), c);
    return out;
}

WordSum psi_composite(const WordSum& w) {
    auto [c, rest] = split_constant(w);
    WordSum out = rest.is_zero() ? WordSum() : phi(d_q_inv(d(phi(rest))));
    out.add_term(Word(), c);
    return out;
}

WordSum triangle(const WordSum& a, const WordSum& b) {
    require_nonconstant(a);
    WordSum out;
    for (const auto& [wa, ca] : a.terms())
        out += prepend(wa.front(), stuffle_plus(WordSum(wa.tail()), b)) * ca;
    return out;
}

WordSum set_hbar_zero(const WordSum& w) {
    WordSum out;
    for (const auto& [word, c] : w.terms()) out.add_term(word, Poly(c.coeff(0)));
    return out;
}

}  // namespace qmzv

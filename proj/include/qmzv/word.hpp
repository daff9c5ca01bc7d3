#pragma once
#include "qmzv/poly.hpp"
#include "qmzv/q_basics.hpp"

#include <compare>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace qmzv {

// A word z_{k1}...z_{kr} over the letters z_1, z_2, ...: a finite sequence
// of positive integers. The empty word is the algebra unit 1. Words order
// graded lexicographically: by weight, then depth, then letter sequence.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<int> letters);
    static Word z1_power(int n);

    const std::vector<int>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    int depth() const { return static_cast<int>(letters_.size()); }
    int weight() const { return weight_; }
    // k1 >= 2 or empty: the words on which zeta_q converges.
    bool admissible() const { return letters_.empty() || letters_.front() >= 2; }
    int front() const;
    Word tail() const;
    Word prepended(int letter) const;
    friend Word concat(const Word& a, const Word& b);

    std::strong_ordering operator<=>(const Word& o) const;
    bool operator==(const Word& o) const { return letters_ == o.letters_; }

    std::string to_string() const;  // "[2,1]"; "[]" for the unit
    static Word parse(const std::string& text);

private:
    std::vector<int> letters_;
    int weight_ = 0;
};

// A finite Q[h]-linear combination of words: an element of the word algebra.
// No zero coefficients are stored; iteration follows the canonical word
// order. Elements without constant term form the submodule of non-constant
// elements; sums of admissible words (and 1) are the zeta-convergent part.
class WordSum {
public:
    WordSum() = default;
    explicit WordSum(const Word& w) { terms_.emplace(w, Poly(Rational(1))); }
    WordSum(const Word& w, const HbarPolynomial& c) { add_term(w, c); }
    static WordSum unit() { return WordSum(Word()); }

    const std::map<Word, HbarPolynomial>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return static_cast<int>(terms_.size()); }
    bool has_constant_term() const { return terms_.count(Word()) > 0; }
    // Lies in the non-constant submodule (zero counts as non-constant).
    bool nonconstant() const { return !has_constant_term(); }
    bool admissible() const;
    HbarPolynomial coeff(const Word& w) const;

    void add_term(const Word& w, const HbarPolynomial& c);

    WordSum operator-() const;
    WordSum& operator+=(const WordSum& o);
    WordSum& operator-=(const WordSum& o);
    friend WordSum operator+(WordSum a, const WordSum& b) { return a += b; }
    friend WordSum operator-(WordSum a, const WordSum& b) { return a -= b; }
    WordSum& operator*=(const HbarPolynomial& c);
    friend WordSum operator*(WordSum a, const HbarPolynomial& c) { return a *= c; }
    friend WordSum operator*(const HbarPolynomial& c, WordSum a) { return a *= c; }
    bool operator==(const WordSum& o) const { return terms_ == o.terms_; }

    std::string to_string() const;
    static WordSum parse(const std::string& text);

private:
    std::map<Word, HbarPolynomial> terms_;
};

// All words of the given weight in canonical order; weight 0 gives the
// empty word, weight k >= 1 the 2^{k-1} letter compositions of k.
std::vector<Word> words_of_weight(int weight);
// All non-empty words of weight 1..max_weight in canonical order.
std::vector<Word> words_up_to_weight(int max_weight);

// z_i w for every word w of the sum (word concatenation, not the circ action).
WordSum prepend(int letter, const WordSum& w);
// Concatenation product extended bilinearly.
WordSum concat(const WordSum& a, const WordSum& b);

std::ostream& operator<<(std::ostream& os, const Word& w);
std::ostream& operator<<(std::ostream& os, const WordSum& w);

}  // namespace qmzv

#include "qmzv/word.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace qmzv {

Word::Word(std::vector<int> letters) : letters_(std::move(letters)) {
    for (int k : letters_) {
        if (k < 1) throw std::domain_error("out of range: word letters must be positive");
        weight_ += k;
    }
}

Word Word::z1_power(int n) {
    if (n < 0) throw std::domain_error("out of range: negative power of z_1");
    return Word(std::vector<int>(static_cast<size_t>(n), 1));
}

int Word::front() const {
    if (letters_.empty()) throw std::domain_error("out of range: empty word has no letters");
    return letters_.front();
}

Word Word::tail() const {
    if (letters_.empty()) throw std::domain_error("out of range: empty word has no letters");
    return Word(std::vector<int>(letters_.begin() + 1, letters_.end()));
}

Word Word::prepended(int letter) const {
    std::vector<int> ls;
    ls.reserve(letters_.size() + 1);
    ls.push_back(letter);
    ls.insert(ls.end(), letters_.begin(), letters_.end());
    return Word(std::move(ls));
}

Word concat(const Word& a, const Word& b) {
    std::vector<int> ls = a.letters_;
    ls.insert(ls.end(), b.letters_.begin(), b.letters_.end());
    return Word(std::move(ls));
}

std::strong_ordering Word::operator<=>(const Word& o) const {
    if (auto c = weight_ <=> o.weight_; c != 0) return c;
    if (auto c = letters_.size() <=> o.letters_.size(); c != 0) return c;
    return letters_ <=> o.letters_;
}

std::string Word::to_string() const {
    std::string out = "[";
    for (size_t i = 0; i < letters_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(letters_[i]);
    }
    out += ']';
    return out;
}

namespace {

struct Cursor {
    const std::string& text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    }
    bool done() const { return pos >= text.size(); }
    char peek() const { return pos < text.size() ? text[pos] : '\0'; }
    void expect(char c) {
        if (peek() != c)
            throw std::invalid_argument(std::string("parse error: expected '") + c + "'");
        ++pos;
    }
    int integer() {
        size_t start = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
        if (pos == start) throw std::invalid_argument("parse error: expected an integer");
        return std::stoi(text.substr(start, pos - start));
    }
};

Word parse_word_at(Cursor& c) {
    c.skip_ws();
    c.expect('[');
    std::vector<int> letters;
    c.skip_ws();
    if (c.peek() != ']') {
        for (;;) {
            c.skip_ws();
            int k = c.integer();
            if (k < 1) throw std::invalid_argument("parse error: word letters must be positive");
            letters.push_back(k);
            c.skip_ws();
            if (c.peek() == ',') { ++c.pos; continue; }
            break;
        }
    }
    c.expect(']');
    return Word(std::move(letters));
}

Rational parse_fraction_at(Cursor& c) {
    size_t start = c.pos;
    while (c.pos < c.text.size() &&
           ((c.text[c.pos] >= '0' && c.text[c.pos] <= '9') || c.text[c.pos] == '/'))
        ++c.pos;
    if (c.pos == start) throw std::invalid_argument("parse error: expected a number");
    return parse_rational(c.text.substr(start, c.pos - start));
}

// coefficient-and-word term, sign already consumed by the caller
std::pair<Word, HbarPolynomial> parse_term_at(Cursor& c) {
    c.skip_ws();
    if (c.peek() == '(') {
        size_t close = c.text.find(')', c.pos);
        if (close == std::string::npos)
            throw std::invalid_argument("parse error: unbalanced parenthesis");
        HbarPolynomial coeff = Poly::parse(c.text.substr(c.pos + 1, close - c.pos - 1), "h");
        c.pos = close + 1;
        c.skip_ws();
        c.expect('*');
        return {parse_word_at(c), coeff};
    }
    Rational num(1);
    int hexp = 0;
    if (c.peek() >= '0' && c.peek() <= '9') {
        num = parse_fraction_at(c);
        c.skip_ws();
        if (c.peek() == '[') return {parse_word_at(c), Poly(num)};
        c.expect('*');
        c.skip_ws();
    }
    if (c.peek() == 'h') {
        ++c.pos;
        hexp = 1;
        if (c.peek() == '^') {
            ++c.pos;
            hexp = c.integer();
        }
        c.skip_ws();
        c.expect('*');
        c.skip_ws();
    }
    return {parse_word_at(c), Poly::monomial(hexp, num)};
}

// coefficient text without sign; the caller supplies the separator
std::string term_text(const Word& w, const HbarPolynomial& c, bool& negative) {
    negative = false;
    if (!c.is_monomial()) return "(" + c.to_string("h") + ")*" + w.to_string();
    int e = c.degree();
    Rational a = c.coeff(e);
    if (a < 0) {
        negative = true;
        a = -a;
    }
    std::string body;
    if (a != 1) body = to_string(a);
    if (e >= 1) {
        if (!body.empty()) body += '*';
        body += 'h';
        if (e >= 2) body += '^' + std::to_string(e);
    }
    if (body.empty()) return w.to_string();
    return body + '*' + w.to_string();
}

}  // namespace

Word Word::parse(const std::string& text) {
    Cursor c{text};
    Word w = parse_word_at(c);
    c.skip_ws();
    if (!c.done()) throw std::invalid_argument("parse error: trailing characters after word");
    return w;
}

bool WordSum::admissible() const {
    for (const auto& [w, _] : terms_)
        if (!w.admissible()) return false;
    return true;
}

HbarPolynomial WordSum::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Poly() : it->second;
}

void WordSum::add_term(const Word& w, const HbarPolynomial& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

WordSum WordSum::operator-() const {
    WordSum out;
    for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
    return out;
}

WordSum& WordSum::operator+=(const WordSum& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

WordSum& WordSum::operator-=(const WordSum& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

WordSum& WordSum::operator*=(const HbarPolynomial& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, coeff] : terms_) coeff *= c;
    return *this;
}

std::string WordSum::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        bool negative = false;
        std::string body = term_text(w, c, negative);
        if (first) {
            if (negative) out += '-';
            out += body;
            first = false;
        } else {
            out += negative ? " - " : " + ";
            out += body;
        }
    }
    return out;
}

WordSum WordSum::parse(const std::string& text) {
    Cursor c{text};
    c.skip_ws();
    if (c.peek() == '0') {
        ++c.pos;
        c.skip_ws();
        if (c.done()) return WordSum();
        throw std::invalid_argument("parse error: trailing characters after zero");
    }
    WordSum out;
    bool negative = false;
    if (c.peek() == '-') {
        negative = true;
        ++c.pos;
    }
    for (;;) {
        auto [w, coeff] = parse_term_at(c);
        out.add_term(w, negative ? -coeff : coeff);
        c.skip_ws();
        if (c.done()) break;
        if (c.peek() == '+') negative = false;
        else if (c.peek() == '-') negative = true;
        else throw std::invalid_argument("parse error: expected '+' or '-' between terms");
        ++c.pos;
    }
    return out;
}

std::vector<Word> words_of_weight(int weight) {
    if (weight < 0) throw std::domain_error("out of range: weight must be non-negative");
    if (weight == 0) return {Word()};
    std::vector<Word> out;
    out.reserve(1u << (weight - 1));
    // compositions of weight, one per placement of part boundaries
    for (unsigned mask = 0; mask < (1u << (weight - 1)); ++mask) {
        std::vector<int> letters;
        int part = 1;
        for (int b = 0; b + 1 < weight; ++b) {
            if (mask & (1u << b)) {
                letters.push_back(part);
                part = 1;
            } else {
                ++part;
            }
        }
        letters.push_back(part);
        out.emplace_back(std::move(letters));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Word> words_up_to_weight(int max_weight) {
    std::vector<Word> out;
    for (int s = 1; s <= max_weight; ++s)
        for (auto& w : words_of_weight(s)) out.push_back(std::move(w));
    return out;
}

WordSum prepend(int letter, const WordSum& w) {
    WordSum out;
    for (const auto& [word, c] : w.terms()) out.add_term(word.prepended(letter), c);
    return out;
}

WordSum concat(const WordSum& a, const WordSum& b) {
    WordSum out;
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) out.add_term(concat(wa, wb), ca * cb);
    return out;
}

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.to_string(); }
std::ostream& operator<<(std::ostream& os, const WordSum& w) { return os << w.to_string(); }

}  // namespace qmzv

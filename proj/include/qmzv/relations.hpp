#pragma once
#include "qmzv/series.hpp"
#include "qmzv/word.hpp"
#include "qmzv/zeta.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qmzv {

// Two readings of one relation family: the q-deformed reading keeps the
// hbar-corrected product *_- and derivation d_q in the arguments; the
// modified reading uses the bar product and plain d. Both keep the
// circledast_q product against z1 powers.
enum class RelationVariant { q_deformed, modified };

std::string to_string(RelationVariant v);

struct QuadraticTerm {
    WordSum left, right;
    int sign = 1;
};

// One instance of the quadratic relation family: the zeta value of
// linear_arg plus the signed sum of zeta(left)*zeta(right) over the
// quadratic terms vanishes. residual_valuation is the valuation of the
// evaluated residual when a nonzero coefficient appears below q^precision;
// nullopt reports at-least-precision.
struct Relation {
    Word w1, w2;
    int n = 1;
    RelationVariant variant = RelationVariant::modified;
    WordSum linear_arg;
    std::vector<QuadraticTerm> quadratic_terms;
    int precision = 0;
    std::optional<int> residual_valuation;
};

std::string residual_text(const Relation& r);  // "7" or "at-least-30"

// z1 o d(phi(w1 bar* w2)): admissible argument with vanishing zeta value.
WordSum linear_relation_arg(const WordSum& w1, const WordSum& w2);
// z1 o phi(w1 *_- w2): admissible argument with vanishing zeta_star value.
WordSum star_relation_arg(const WordSum& w1, const WordSum& w2);

// Builds the argument data of one relation instance without evaluating it.
// Every generated zeta argument is asserted admissible.
Relation build_relation(const Word& w1, const Word& w2, int n, RelationVariant v);

// zeta(linear_arg) + sum of sign * zeta(left) * zeta(right).
Series relation_residual(SeriesEvaluator& ev, const Relation& r);

// Left-hand side of the relation with arguments built from d_q and *_-;
// vanishes mod q^precision.
Series kawashima_q(SeriesEvaluator& ev, const WordSum& w1, const WordSum& w2, int n);
// Left-hand side with arguments built from d and the bar product; computed
// along with the psi-substitution path through kawashima_q and compared.
Series kawashima_modified(SeriesEvaluator& ev, const WordSum& w1, const WordSum& w2, int n);

// All relation instances for non-constant word pairs with
// weight(w1) + weight(w2) <= max_total_weight and 1 <= n <= max_n,
// evaluated at the shared precision. Output order is canonical (total
// weight, unordered pair, orientation, n) and independent of the worker
// count; workers <= 0 selects the hardware concurrency.
std::vector<Relation> enumerate_relations(int max_total_weight, int max_n,
                                          int precision,
                                          RelationVariant variant = RelationVariant::modified,
                                          int workers = 0);

// One-line JSON document / human-readable line for a relation.
std::string relation_json(const Relation& r);
std::string relation_text(const Relation& r);

// Coefficient rendering with hbar evaluated to 1-q: terms "poly*[word]"
// joined by " + ", coefficient polynomials printed in q.
std::string wordsum_q_text(const WordSum& w);

}  // namespace qmzv

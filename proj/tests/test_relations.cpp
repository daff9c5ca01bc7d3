#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qmzv/harmonic.hpp"
#include "qmzv/relations.hpp"
#include "qmzv/word_ops.hpp"
#include "qmzv/zeta.hpp"
#include "support/naive_sums.hpp"

#include <json.hpp>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

using namespace qmzv;
using namespace qmzv_test;

namespace {

WordSum ws(std::initializer_list<int> letters) { return WordSum(Word(letters)); }

const HbarPolynomial h = Poly::monomial(1);

WordSum hbar_evaluated(const WordSum& w) {
    WordSum out;
    for (const auto& [word, c] : w.terms()) out += WordSum(word, hbar_eval(c));
    return out;
}

}  // namespace

TEST_CASE("zeta series examples") {
    SeriesEvaluator ev(5);
    Series z2 = ev.zeta_q(ws({2}));
    CHECK(z2.coeff(0) == 0);
    CHECK(z2.coeff(1) == 1);
    CHECK(z2.coeff(2) == 1);
    CHECK(z2.coeff(3) == -1);
    CHECK(z2.coeff(4) == 2);
    CHECK(z2.to_string() == "q + q^2 - q^3 + 2q^4 + O(q^5)");

    SeriesEvaluator ev3(3);
    CHECK(ev3.zeta_q(WordSum::unit()).to_string() == "1 + O(q^3)");
    CHECK(ev3.zeta_star_q(WordSum::unit()) == Series(Poly(Rational(1)), 3));
    CHECK(ev3.zeta_q(WordSum()).is_zero());

    CHECK_THROWS_WITH_AS(ev3.zeta_q(ws({1})), "non-admissible argument", std::domain_error);
    CHECK_THROWS_WITH_AS(ev3.zeta_q(ws({1, 2})), "non-admissible argument", std::domain_error);
    CHECK_THROWS_WITH_AS(ev3.zeta_star_q(ws({1})), "non-admissible argument", std::domain_error);
    CHECK_THROWS_WITH_AS(SeriesEvaluator(0), "out of range: precision must be positive",
                         std::domain_error);

    // linearity with hbar evaluated to 1 - q in the coefficients
    const int P = 20;
    SeriesEvaluator evl(P);
    WordSum combo = WordSum(Word({2}), h) + ws({3}) + ws({3});
    Series expect = Series(one_minus_q(), P) * evl.zeta_q(ws({2})) +
                    Series(Poly(Rational(2)), P) * evl.zeta_q(ws({3}));
    CHECK(evl.zeta_q(combo) == expect);
}

TEST_CASE("zeta values match direct enumeration") {
    const int P = 12;
    SeriesEvaluator ev(P);
    for (const char* t : {"[2]", "[3]", "[2,1]", "[2,2]", "[2,1,1]", "[3,1]"}) {
        Word w = Word::parse(t);
        INFO("w = ", t);
        CHECK(ev.zeta_q(WordSum(w)) == zeta_naive(w, P));
        CHECK(ev.zeta_star_q(WordSum(w)) == zeta_star_naive(w, P));
    }
}

TEST_CASE("zeta star agrees with zeta after d_q") {
    const int P = 20;
    SeriesEvaluator ev(P);
    CHECK(ev.zeta_star_q(WordSum::unit()) == ev.zeta_q(d_q(WordSum::unit())));
    for (const Word& w : words_up_to_weight(4)) {
        if (!w.admissible()) continue;
        WordSum sw(w);
        INFO("w = ", w.to_string());
        CHECK(ev.zeta_star_q(sw) == ev.zeta_q(d_q(sw)));
    }
    // splitting the weak sum of [2,1] along its diagonal by hand
    Series diag = Series(one_minus_q(), P) * ev.zeta_q(ws({2}));
    CHECK(ev.zeta_star_q(ws({2, 1})) == ev.zeta_q(ws({2, 1})) + ev.zeta_q(ws({3})) + diag);
}

TEST_CASE("series finite sums match the exact evaluations") {
    const int P = 16;
    SeriesEvaluator sev(P);
    HarmonicEvaluator hev;
    for (const Word& w : words_up_to_weight(3)) {
        WordSum sw(w);
        for (int n = 0; n <= 5; ++n) {
            INFO("w = ", w.to_string(), ", n = ", n);
            CHECK(sev.S_series(sw, n) == series_expand(hev.S_eval(sw, n), P));
            CHECK(sev.A_series(sw, n) == series_expand(hev.A_eval(sw, n), P));
            CHECK(sev.A_star_series(sw, n) == series_expand(hev.A_star_eval(sw, n), P));
            CHECK(sev.a_series(sw, n) == series_expand(hev.a_eval(sw, n), P));
            CHECK(sev.s_series(sw, n) == series_expand(hev.s_eval(sw, n), P));
        }
    }
    // hbar-linear arguments
    WordSum mix = WordSum(Word({2}), h) + ws({1, 1});
    CHECK(sev.S_series(mix, 4) == series_expand(hev.S_eval(mix, 4), P));
    CHECK_THROWS_WITH_AS(sev.S_series(ws({1}), P + 1),
                         "out of range: sequence index exceeds evaluator limit",
                         std::domain_error);
}

TEST_CASE("tail valuations grow with the summation index") {
    const int P = 14;
    SeriesEvaluator ev(P);
    for (const Word& w : words_up_to_weight(3)) {
        WordSum sw(w);
        for (int n = 0; n <= 8; ++n) {
            INFO("w = ", w.to_string(), ", n = ", n);
            // s_w(n) always carries the factor q^{k1 (n+1)}
            auto vs = ev.s_series(sw, n).valuation();
            CHECK((!vs.has_value() || *vs >= n + 1));
            // a_w(n) carries q^{(k1-1)(n+1)}, so admissible words gain a power per step
            if (w.admissible()) {
                auto va = ev.a_series(sw, n).valuation();
                CHECK((!va.has_value() || *va >= n + 1));
            }
        }
    }
}

TEST_CASE("newton coefficients of the zeta generating sequence") {
    const int P = 20;
    SeriesEvaluator ev(P);

    // depth-one base case: the first coefficient for [1] is -zeta([2])
    CHECK(ev.F_expansion_coeff(ws({1}), 1) == -ev.zeta_q(ws({2})));
    // documented case for [2]: -zeta([2,1] + [3] + (1-q)[2])
    WordSum arg = ws({2, 1}) + ws({3}) + WordSum(Word({2}), h);
    CHECK(ev.F_expansion_coeff(ws({2}), 1) == -ev.zeta_q(arg));
    CHECK_THROWS_AS(ev.F_expansion_coeff(WordSum::unit(), 1), std::logic_error);

    // independent path: -sum_n s_{phi(w)}(n-1) a_{z1^m}(n-1), each term
    // contributing valuation >= n so the sum stabilizes within precision
    for (const char* t : {"[1]", "[2]", "[1,1]", "[2,1]"}) {
        WordSum w(Word::parse(t));
        WordSum pw = phi(w);
        for (int m = 1; m <= 3; ++m) {
            INFO("w = ", t, ", m = ", m);
            WordSum zm{Word::z1_power(m)};
            Series sum(P);
            for (int n = 1; n <= P; ++n)
                sum = sum + ev.s_series(pw, n - 1) * ev.a_series(zm, n - 1);
            CHECK(ev.F_expansion_coeff(w, m) == -sum);
        }
    }
}

TEST_CASE("linear relation arguments and vanishing zeta values") {
    // z1 o d(phi(w1 bar* w2)) collapses to [3] - [2,1] for w1 = w2 = [1]
    CHECK(linear_relation_arg(ws({1}), ws({1})) == ws({3}) - ws({2, 1}));

    const int P = 30;
    SeriesEvaluator ev(P);
    CHECK(ev.zeta_q(ws({3}) - ws({2, 1})).is_zero());

    for (const Word& w1 : words_up_to_weight(2)) {
        for (const Word& w2 : words_up_to_weight(2)) {
            INFO("w1 = ", w1.to_string(), ", w2 = ", w2.to_string());
            WordSum lin = linear_relation_arg(WordSum(w1), WordSum(w2));
            CHECK(lin.admissible());
            CHECK(ev.zeta_q(lin).is_zero());
            WordSum star = star_relation_arg(WordSum(w1), WordSum(w2));
            CHECK(star.admissible());
            CHECK(ev.zeta_star_q(star).is_zero());
        }
    }
}

TEST_CASE("quadratic relation left-hand sides vanish") {
    const int P = 30;
    SeriesEvaluator ev(P);
    CHECK(kawashima_q(ev, ws({1}), ws({1}), 1).is_zero());
    CHECK(kawashima_q(ev, ws({1}), ws({2}), 1).is_zero());
    CHECK(kawashima_q(ev, ws({1}), ws({1}), 2).is_zero());
    CHECK(kawashima_modified(ev, ws({2}), ws({1}), 1).is_zero());
    CHECK(kawashima_modified(ev, ws({1}), ws({1}), 2).is_zero());

    SeriesEvaluator ev40(40);
    CHECK(kawashima_modified(ev40, ws({1}), ws({1}), 1).is_zero());

    // the modified evaluation equals its psi substitution path
    CHECK(kawashima_modified(ev, ws({1}), ws({2}), 1) ==
          kawashima_q(ev, psi(ws({1})), psi(ws({2})), 1));

    // the pair ([1],[1]) at n = 2 rearranges to
    // zeta([2])^2 = 2 zeta([2,1,1]) + zeta([2,2]) + (1-q) zeta([2,1]) - zeta([3,1])
    WordSum rhs = ws({2, 1, 1}) + ws({2, 1, 1}) + ws({2, 2}) + WordSum(Word({2, 1}), h) -
                  ws({3, 1});
    CHECK(ev.zeta_q(ws({2})) * ev.zeta_q(ws({2})) == ev.zeta_q(rhs));
}

TEST_CASE("relation instances carry their argument data") {
    Relation r1 = build_relation(Word({1}), Word({1}), 1, RelationVariant::modified);
    CHECK(r1.linear_arg == ws({3}) - ws({2, 1}));
    CHECK(r1.quadratic_terms.empty());

    Relation r2 = build_relation(Word({1}), Word({1}), 2, RelationVariant::modified);
    REQUIRE(r2.quadratic_terms.size() == 1);
    CHECK(r2.quadratic_terms[0].left == ws({2}));
    CHECK(r2.quadratic_terms[0].right == ws({2}));
    CHECK(r2.quadratic_terms[0].sign == 1);
    CHECK(r2.linear_arg ==
          ws({3, 1}) - ws({2, 2}) - WordSum(Word({2, 1}), h) - ws({2, 1, 1}) - ws({2, 1, 1}));

    // the deformed variant happens to produce the same depth-one instance
    Relation rq = build_relation(Word({1}), Word({1}), 1, RelationVariant::q_deformed);
    CHECK(rq.linear_arg == ws({3}) - ws({2, 1}));
    CHECK(to_string(RelationVariant::q_deformed) == "q-deformed");
    CHECK(to_string(RelationVariant::modified) == "modified");

    SeriesEvaluator ev(25);
    Relation r3 = build_relation(Word({2}), Word({1}), 3, RelationVariant::modified);
    REQUIRE(r3.quadratic_terms.size() == 2);
    for (const auto& t : r3.quadratic_terms) {
        CHECK(t.left.admissible());
        CHECK(t.right.admissible());
    }
    r3.precision = 25;
    CHECK(relation_residual(ev, r3).is_zero());
}

TEST_CASE("relation enumeration order and completeness") {
    auto rel21 = enumerate_relations(2, 1, 30);
    REQUIRE(rel21.size() == 1);
    CHECK(rel21[0].w1 == Word({1}));
    CHECK(rel21[0].w2 == Word({1}));
    CHECK(rel21[0].n == 1);
    CHECK(rel21[0].precision == 30);
    CHECK(rel21[0].variant == RelationVariant::modified);
    CHECK(!rel21[0].residual_valuation.has_value());
    CHECK(residual_text(rel21[0]) == "at-least-30");

    auto rel31 = enumerate_relations(3, 1, 30);
    REQUIRE(rel31.size() == 5);
    std::vector<std::pair<std::string, std::string>> expect = {
        {"[1]", "[1]"}, {"[1]", "[2]"}, {"[2]", "[1]"}, {"[1]", "[1,1]"}, {"[1,1]", "[1]"}};
    for (size_t i = 0; i < expect.size(); ++i) {
        INFO("i = ", i);
        CHECK(rel31[i].w1.to_string() == expect[i].first);
        CHECK(rel31[i].w2.to_string() == expect[i].second);
        CHECK(rel31[i].n == 1);
        CHECK(!rel31[i].residual_valuation.has_value());
    }

    auto rel22 = enumerate_relations(2, 2, 30);
    REQUIRE(rel22.size() == 2);
    CHECK(rel22[0].n == 1);
    CHECK(rel22[1].n == 2);
    REQUIRE(rel22[1].quadratic_terms.size() == 1);
    CHECK(!rel22[1].residual_valuation.has_value());

    auto relq = enumerate_relations(2, 1, 30, RelationVariant::q_deformed);
    REQUIRE(relq.size() == 1);
    CHECK(relq[0].variant == RelationVariant::q_deformed);
    CHECK(!relq[0].residual_valuation.has_value());

    CHECK_THROWS_AS(enumerate_relations(0, 1, 10), std::domain_error);
    CHECK_THROWS_AS(enumerate_relations(2, 0, 10), std::domain_error);
    CHECK_THROWS_AS(enumerate_relations(2, 1, 0), std::domain_error);
}

TEST_CASE("relation enumeration is deterministic across worker counts") {
    auto one = enumerate_relations(3, 1, 20, RelationVariant::modified, 1);
    auto four = enumerate_relations(3, 1, 20, RelationVariant::modified, 4);
    auto dflt = enumerate_relations(3, 1, 20, RelationVariant::modified, 0);
    auto again = enumerate_relations(3, 1, 20, RelationVariant::modified, 4);
    REQUIRE(one.size() == four.size());
    REQUIRE(one.size() == dflt.size());
    for (size_t i = 0; i < one.size(); ++i) {
        CHECK(relation_json(one[i]) == relation_json(four[i]));
        CHECK(relation_json(one[i]) == relation_json(dflt[i]));
        CHECK(relation_json(one[i]) == relation_json(again[i]));
    }
}

TEST_CASE("relation serialization round trip") {
    auto rels = enumerate_relations(2, 2, 30);
    REQUIRE(rels.size() == 2);
    const Relation& r = rels[1];

    auto j = nlohmann::json::parse(relation_json(r));
    CHECK(j["w1"] == "[1]");
    CHECK(j["w2"] == "[1]");
    CHECK(j["n"] == 2);
    CHECK(j["variant"] == "modified");
    CHECK(j["precision"] == 30);
    CHECK(j["residual_valuation"] == "at-least-30");
    REQUIRE(j["quadratic_terms"].size() == 1);
    CHECK(j["quadratic_terms"][0]["sign"] == 1);
    CHECK(j["quadratic_terms"][0]["left"][0]["word"] == "[2]");
    CHECK(j["quadratic_terms"][0]["right"][0]["coeff"] == "1");

    // the serialized coefficients rebuild the hbar-evaluated linear argument
    WordSum rebuilt;
    for (const auto& t : j["linear_arg"])
        rebuilt += WordSum(Word::parse(t["word"].get<std::string>()),
                           Poly::parse(t["coeff"].get<std::string>(), "q"));
    CHECK(rebuilt == hbar_evaluated(r.linear_arg));

    // a deliberately unbalanced relation reports the residual valuation
    Relation broken;
    broken.w1 = Word({1});
    broken.w2 = Word({1});
    broken.linear_arg = ws({2});
    broken.precision = 10;
    SeriesEvaluator ev(10);
    broken.residual_valuation = relation_residual(ev, broken).valuation();
    REQUIRE(broken.residual_valuation.has_value());
    CHECK(*broken.residual_valuation == 1);
    CHECK(residual_text(broken) == "1");
    auto jb = nlohmann::json::parse(relation_json(broken));
    CHECK(jb["residual_valuation"] == 1);
}

TEST_CASE("relation text rendering") {
    CHECK(wordsum_q_text(WordSum()) == "0");
    CHECK(wordsum_q_text(ws({3}) - ws({2, 1})) == "[3] + (-1)*[2,1]");
    CHECK(wordsum_q_text(WordSum(Word({2}), h)) == "(1 - q)*[2]");

    auto rels = enumerate_relations(2, 1, 30);
    REQUIRE(rels.size() == 1);
    std::string line = relation_text(rels[0]);
    CHECK(line.find("w1=[1]") != std::string::npos);
    CHECK(line.find("w2=[1]") != std::string::npos);
    CHECK(line.find("n=1") != std::string::npos);
    CHECK(line.find("variant=modified") != std::string::npos);
    CHECK(line.find("linear_arg=[3] + (-1)*[2,1]") != std::string::npos);
    CHECK(line.find("quadratic_terms=0") != std::string::npos);
    CHECK(line.find("precision=30") != std::string::npos);
    CHECK(line.find("residual_valuation=at-least-30") != std::string::npos);
}

TEST_CASE("evaluations are stable under precision increase") {
    const int lo = 18, hi = 28;
    SeriesEvaluator evlo(lo), evhi(hi);
    for (const char* t : {"[2]", "[2,1]", "[3,1]"}) {
        WordSum w(Word::parse(t));
        INFO("w = ", t);
        CHECK(evhi.zeta_q(w).truncated(lo) == evlo.zeta_q(w));
        CHECK(evhi.zeta_star_q(w).truncated(lo) == evlo.zeta_star_q(w));
    }
    CHECK(evhi.F_expansion_coeff(ws({2}), 2).truncated(lo) ==
          evlo.F_expansion_coeff(ws({2}), 2));

    auto rlo = enumerate_relations(3, 1, lo);
    auto rhi = enumerate_relations(3, 1, hi);
    REQUIRE(rlo.size() == rhi.size());
    for (size_t i = 0; i < rlo.size(); ++i) {
        CHECK(rlo[i].linear_arg == rhi[i].linear_arg);
        CHECK(!rlo[i].residual_valuation.has_value());
        CHECK(!rhi[i].residual_valuation.has_value());
    }
}

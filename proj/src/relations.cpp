#include "qmzv/relations.hpp"

#include "qmzv/check.hpp"
#include "qmzv/word_ops.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <tuple>
#include <utility>

namespace qmzv {

namespace {

void require_nonconstant(const WordSum& w) {
    if (w.has_constant_term())
        throw std::domain_error("requires non-constant argument");
}

struct KawArgs {
    WordSum linear;
    std::vector<QuadraticTerm> quad;
};

// Relation arguments: the linear term pairs the product of w1 and w2
// against z1^n, the quadratic terms split the z1 power between the factors.
KawArgs kaw_args(const WordSum& w1, const WordSum& w2, int n, RelationVariant v) {
    require_nonconstant(w1);
    require_nonconstant(w2);
    if (n < 1) throw std::domain_error("out of range: relation index must be positive");
    const bool deformed = v == RelationVariant::q_deformed;
    auto derive = [&](const WordSum& w) { return deformed ? d_q(w) : d(w); };
    WordSum product = deformed ? stuffle_minus(w1, w2) : stuffle_bar(w1, w2);
    KawArgs out;
    out.linear = circledast_q(derive(phi(product)), WordSum(Word::z1_power(n)));
    check(out.linear.admissible(), "relation argument not admissible");
    if (w1.is_zero() || w2.is_zero()) return out;
    WordSum left_base = derive(phi(w1));
    WordSum right_base = derive(phi(w2));
    for (int k = 1; k <= n - 1; ++k) {
        QuadraticTerm t;
        t.left = circledast_q(left_base, WordSum(Word::z1_power(k)));
        t.right = circledast_q(right_base, WordSum(Word::z1_power(n - k)));
        t.sign = 1;
        check(t.left.admissible() && t.right.admissible(),
              "relation argument not admissible");
        out.quad.push_back(std::move(t));
    }
    return out;
}

Series eval_args(SeriesEvaluator& ev, const KawArgs& args) {
    Series out = ev.zeta_q(args.linear);
    for (const auto& t : args.quad) {
        Series prod = ev.zeta_q(t.left) * ev.zeta_q(t.right);
        if (t.sign < 0) out -= prod;
        else out += prod;
    }
    return out;
}

}  // namespace

std::string to_string(RelationVariant v) {
    return v == RelationVariant::q_deformed ? "q-deformed" : "modified";
}

std::string residual_text(const Relation& r) {
    if (r.residual_valuation.has_value())
        return std::to_string(*r.residual_valuation);
    return "at-least-" + std::to_string(r.precision);
}

WordSum linear_relation_arg(const WordSum& w1, const WordSum& w2) {
    require_nonconstant(w1);
    require_nonconstant(w2);
    return circ(1, d(phi(stuffle_bar(w1, w2))));
}

WordSum star_relation_arg(const WordSum& w1, const WordSum& w2) {
    require_nonconstant(w1);
    require_nonconstant(w2);
    return circ(1, phi(stuffle_minus(w1, w2)));
}

Relation build_relation(const Word& w1, const Word& w2, int n, RelationVariant v) {
    KawArgs args = kaw_args(WordSum(w1), WordSum(w2), n, v);
    Relation r;
    r.w1 = w1;
    r.w2 = w2;
    r.n = n;
    r.variant = v;
    r.linear_arg = std::move(args.linear);
    r.quadratic_terms = std::move(args.quad);
    return r;
}

Series relation_residual(SeriesEvaluator& ev, const Relation& r) {
    KawArgs args;
    args.linear = r.linear_arg;
    args.quad = r.quadratic_terms;
    return eval_args(ev, args);
}

Series kawashima_q(SeriesEvaluator& ev, const WordSum& w1, const WordSum& w2, int n) {
    return eval_args(ev, kaw_args(w1, w2, n, RelationVariant::q_deformed));
}

Series kawashima_modified(SeriesEvaluator& ev, const WordSum& w1, const WordSum& w2,
                          int n) {
    Series direct = eval_args(ev, kaw_args(w1, w2, n, RelationVariant::modified));
    Series via_psi = kawashima_q(ev, psi(w1), psi(w2), n);
    check(direct == via_psi,
          "modified relation disagrees with its psi substitution path");
    return direct;
}

std::vector<Relation> enumerate_relations(int max_total_weight, int max_n,
                                          int precision, RelationVariant variant,
                                          int workers) {
    if (max_total_weight < 1 || max_n < 1)
        throw std::domain_error("out of range: bounds must be positive");
    if (precision < 1)
        throw std::domain_error("out of range: precision must be positive");

    std::vector<Word> words = words_up_to_weight(max_total_weight - 1);

    struct Task {
        Word w1, w2;
        int n;
    };
    std::vector<Task> tasks;
    for (const Word& u : words)
        for (const Word& v : words) {
            if (u.weight() + v.weight() > max_total_weight) continue;
            for (int n = 1; n <= max_n; ++n) tasks.push_back({u, v, n});
        }
    auto key = [](const Task& t) {
        const Word& lo = t.w1 <= t.w2 ? t.w1 : t.w2;
        const Word& hi = t.w1 <= t.w2 ? t.w2 : t.w1;
        return std::make_tuple(t.w1.weight() + t.w2.weight(), lo, hi, t.w1, t.n);
    };
    std::sort(tasks.begin(), tasks.end(),
              [&](const Task& a, const Task& b) { return key(a) < key(b); });

    std::vector<Relation> results(tasks.size());
    std::atomic<size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto run = [&]() {
        SeriesEvaluator ev(precision);
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= tasks.size()) break;
            try {
                const Task& t = tasks[i];
                Relation r = build_relation(t.w1, t.w2, t.n, variant);
                r.precision = precision;
                r.residual_valuation = relation_residual(ev, r).valuation();
                results[i] = std::move(r);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        }
    };
    unsigned hw = std::thread::hardware_concurrency();
    size_t count = workers > 0 ? static_cast<size_t>(workers)
                               : static_cast<size_t>(hw > 0 ? hw : 1);
    if (count > tasks.size()) count = tasks.size() > 0 ? tasks.size() : 1;
    if (count <= 1) {
        run();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(count);
        for (size_t i = 0; i < count; ++i) pool.emplace_back(run);
        for (auto& th : pool) th.join();
    }
    if (first_error) std::rethrow_exception(first_error);
    return results;
}

std::string wordsum_q_text(const WordSum& w) {
    if (w.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [word, c] : w.terms()) {
        if (!first) out += " + ";
        first = false;
        Poly p = hbar_eval(c);
        if (p == Poly(Rational(1))) {
            out += word.to_string();
        } else {
            out += "(" + p.to_string("q") + ")*" + word.to_string();
        }
    }
    return out;
}

namespace {

nlohmann::ordered_json wordsum_json(const WordSum& w) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& [word, c] : w.terms())
        arr.push_back({{"word", word.to_string()},
                       {"coeff", hbar_eval(c).to_string("q")}});
    return arr;
}

}  // namespace

std::string relation_json(const Relation& r) {
    nlohmann::ordered_json doc;
    doc["w1"] = r.w1.to_string();
    doc["w2"] = r.w2.to_string();
    doc["n"] = r.n;
    doc["variant"] = to_string(r.variant);
    doc["linear_arg"] = wordsum_json(r.linear_arg);
    auto quads = nlohmann::ordered_json::array();
    for (const auto& t : r.quadratic_terms)
        quads.push_back({{"left", wordsum_json(t.left)},
                         {"right", wordsum_json(t.right)},
                         {"sign", t.sign}});
    doc["quadratic_terms"] = quads;
    doc["precision"] = r.precision;
    if (r.residual_valuation.has_value())
        doc["residual_valuation"] = *r.residual_valuation;
    else
        doc["residual_valuation"] = residual_text(r);
    return doc.dump();
}

std::string relation_text(const Relation& r) {
    std::string out = "w1=" + r.w1.to_string() + " w2=" + r.w2.to_string() +
                      " n=" + std::to_string(r.n) + " variant=" + to_string(r.variant);
    out += " linear_arg=" + wordsum_q_text(r.linear_arg);
    out += " quadratic_terms=" + std::to_string(r.quadratic_terms.size());
    out += " precision=" + std::to_string(r.precision);
    out += " residual_valuation=" + residual_text(r);
    return out;
}

}  // namespace qmzv

#include "qmzv/verify.hpp"

#include "qmzv/harmonic.hpp"
#include "qmzv/newton.hpp"
#include "qmzv/q_basics.hpp"
#include "qmzv/zeta.hpp"

#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qmzv {

namespace {

// Collects named pass/fail cases for one suite.
class Recorder {
public:
    explicit Recorder(std::string suite) { result_.suite = std::move(suite); }

    void record(std::string name, bool ok, std::string detail = "") {
        CaseResult c;
        c.name = std::move(name);
        c.passed = ok;
        if (!ok) c.detail = std::move(detail);
        ++(ok ? result_.passed : result_.failed);
        result_.cases.push_back(std::move(c));
    }

    SuiteResult take() { return std::move(result_); }

private:
    SuiteResult result_;
};

// One case that sweeps an index range; the detail names the first failure.
template <class F>
void sweep(Recorder& rec, std::string name, int lo, int hi, F&& holds_at) {
    for (int n = lo; n <= hi; ++n) {
        if (!holds_at(n)) {
            rec.record(std::move(name), false, "fails at index " + std::to_string(n));
            return;
        }
    }
    rec.record(std::move(name), true);
}

RationalFunction qpow_rf(int e) {
    if (e >= 0) return RationalFunction(Poly::monomial(e));
    return RationalFunction(Poly(Rational(1)), Poly::monomial(-e));
}

RationalFunction qint_pow(int m, int e) {
    RationalFunction out{Rational(1)};
    for (int i = 0; i < e; ++i) out *= RationalFunction(q_integer(m));
    return out;
}

std::string pair_tag(const Word& a, const Word& b) {
    return a.to_string() + " x " + b.to_string();
}

SuiteResult suite_scalars(const RunConfig& cfg) {
    Recorder rec("scalars");
    std::mt19937_64 rng(static_cast<unsigned long long>(cfg.seed));
    std::uniform_int_distribution<int> num_d(-9, 9), den_d(1, 5), deg_d(0, 5);
    auto rnd_rational = [&] { return make_rational(num_d(rng), den_d(rng)); };
    auto rnd_poly = [&] {
        std::vector<Rational> cs(static_cast<size_t>(deg_d(rng)) + 1);
        for (auto& c : cs) c = rnd_rational();
        return Poly(cs);
    };
    auto rnd_nonzero_poly = [&] {
        Poly p = rnd_poly();
        while (p.is_zero()) p = rnd_poly();
        return p;
    };

    sweep(rec, "q-integer telescoping", 1, 12, [&](int n) {
        return q_integer(n) * one_minus_q() == Poly(Rational(1)) - Poly::monomial(n);
    });
    sweep(rec, "q-binomial symmetry", 0, 12, [&](int n) {
        for (int k = 0; k <= n; ++k)
            if (q_binomial(n, k) != q_binomial(n, n - k)) return false;
        return true;
    });
    sweep(rec, "polynomial ring laws", 1, 8, [&](int) {
        Poly a = rnd_poly(), b = rnd_poly(), c = rnd_poly();
        return (a + b) * c == a * c + b * c && a * b == b * a;
    });
    sweep(rec, "rational function field laws", 1, 8, [&](int) {
        RationalFunction f(rnd_poly(), rnd_nonzero_poly());
        RationalFunction g(rnd_poly(), rnd_nonzero_poly());
        RationalFunction h(rnd_nonzero_poly(), rnd_nonzero_poly());
        return (f + g) * h == f * h + g * h && (f / h) * h == f;
    });
    sweep(rec, "cross-multiplication equality", 1, 8, [&](int) {
        Poly n = rnd_poly(), d = rnd_nonzero_poly(), m = rnd_nonzero_poly();
        return RationalFunction(n, d) == RationalFunction(n * m, d * m);
    });
    sweep(rec, "series expansion ring map", 1, 8, [&](int) {
        Poly unit_den1 = Poly(Rational(1)) + Poly::monomial(1) * rnd_poly();
        Poly unit_den2 = Poly(Rational(1)) + Poly::monomial(1) * rnd_poly();
        RationalFunction f(rnd_poly(), unit_den1), g(rnd_poly(), unit_den2);
        int P = cfg.precision;
        return series_expand(f * g, P) == series_expand(f, P) * series_expand(g, P) &&
               series_expand(f + g, P) == series_expand(f, P) + series_expand(g, P);
    });
    sweep(rec, "series inversion", 1, 8, [&](int) {
        Poly p = Poly(Rational(1)) + Poly::monomial(1) * rnd_poly();
        Series s(p, cfg.precision);
        return s * s.inverse() == Series(Poly(Rational(1)), cfg.precision);
    });
    return rec.take();
}

SuiteResult suite_duality(const RunConfig& cfg) {
    Recorder rec("duality");
    HarmonicEvaluator ev;
    for (const Word& w : words_up_to_weight(cfg.max_weight)) {
        WordSum x(w);
        std::string tag = " w=" + w.to_string();
        WordSum img = phi(x);
        bool weights_ok = true;
        for (const auto& [iw, c] : img.terms())
            if (iw.weight() != w.weight()) weights_ok = false;
        rec.record("phi involution" + tag, phi(img) == x && weights_ok);
        rec.record("nabla vanishes at 0" + tag, ev.nabla_S(x, 0) == RationalFunction());
        sweep(rec, "nabla duality" + tag, 1, cfg.max_n,
              [&](int n) { return ev.nabla_S(x, n) == -ev.s_eval(img, n - 1); });
    }
    for (const Word& w : words_up_to_weight(std::min(cfg.max_weight, 4))) {
        WordSum x(w);
        SequenceFn b = memoized(sequence_S(ev, x));
        sweep(rec, "difference tower w=" + w.to_string(), 0, std::min(cfg.max_n, 6),
              [&](int n) { return delta_t_tower(b, n) == nabla_q(b, n); });
    }
    return rec.take();
}

SuiteResult suite_products(const RunConfig& cfg) {
    Recorder rec("products");
    HarmonicEvaluator ev;
    auto words = words_up_to_weight(cfg.max_weight);
    for (const Word& w1 : words) {
        for (const Word& w2 : words) {
            if (w1.weight() + w2.weight() > cfg.max_weight) continue;
            WordSum x1(w1), x2(w2);
            std::string tag = " " + pair_tag(w1, w2);
            sweep(rec, "weak sum product" + tag, 0, cfg.max_n, [&](int n) {
                return ev.S_eval(x1, n) * ev.S_eval(x2, n) ==
                       ev.S_eval(stuffle_minus(x1, x2), n);
            });
            sweep(rec, "strict sum product" + tag, 0, cfg.max_n, [&](int n) {
                return ev.A_eval(x1, n) * ev.A_eval(x2, n) ==
                       ev.A_eval(stuffle_plus(x1, x2), n);
            });
            sweep(rec, "top-index product" + tag, 0, cfg.max_n, [&](int n) {
                return ev.s_eval(x1, n) * ev.a_eval(x2, n) ==
                       ev.a_eval(circledast_q(d_q(x1), x2), n);
            });
        }
    }
    for (const Word& w : words) {
        WordSum x(w);
        sweep(rec, "weak-to-strict reduction w=" + w.to_string(), 0, cfg.max_n,
              [&](int n) { return ev.A_star_eval(x, n) == ev.A_eval(d_q(x), n); });
    }
    for (int i = 1; i <= 3; ++i) {
        for (const Word& w : words) {
            WordSum x(w);
            sweep(rec, "strict sum lift i=" + std::to_string(i) + " w=" + w.to_string(),
                  0, cfg.max_n, [&](int n) {
                      RationalFunction lhs = qpow_rf((i - 1) * (n + 1)) /
                                             qint_pow(n + 1, i) * ev.A_eval(x, n + 1);
                      return lhs == ev.a_eval(prepend(i, x) + circ_plus(i, x), n);
                  });
        }
    }
    int wcap = std::min(cfg.max_weight, 3);
    for (int i = 1; i <= 3; ++i) {
        for (int j = 1; j <= 3; ++j) {
            bool ok = true;
            std::string where;
            for (const Word& w1 : words_up_to_weight(wcap)) {
                for (const Word& w2 : words_up_to_weight(wcap)) {
                    WordSum a(w1), b(w2);
                    if (triangle(d_q(prepend(i + j, a)), b) !=
                        circledast_q(d_q(prepend(i, a)), prepend(j, b))) {
                        ok = false;
                        where = pair_tag(w1, w2);
                    }
                }
            }
            rec.record("triangle lift i=" + std::to_string(i) + " j=" + std::to_string(j),
                       ok, ok ? "" : "fails at " + where);
        }
    }
    return rec.take();
}

SuiteResult suite_interpolation(const RunConfig& cfg) {
    Recorder rec("interpolation");
    HarmonicEvaluator ev;
    for (const Word& w : words_up_to_weight(cfg.max_weight)) {
        WordSum x(w);
        for (int l = 0; l <= 3; ++l) {
            sweep(rec,
                  "interpolation w=" + w.to_string() + " shift=" + std::to_string(l), 0,
                  cfg.max_n, [&](int m) { return interpolation_check_S(ev, x, m, l); });
        }
    }
    for (int l = 0; l <= 3; ++l) {
        RationalFunction t = qpow_rf(-l);
        bool ok = true;
        std::string where;
        for (int m = 0; m <= cfg.max_n && ok; ++m)
            for (int j = 0; j <= cfg.max_n && ok; ++j)
                if (key_sum_lhs(m, j, t) != key_sum_closed(m, j, t)) {
                    ok = false;
                    where = "m=" + std::to_string(m) + " j=" + std::to_string(j);
                }
        rec.record("key sum t=q^-" + std::to_string(l), ok, ok ? "" : "fails at " + where);
    }
    return rec.take();
}

SuiteResult suite_newton(const RunConfig& cfg) {
    Recorder rec("newton");
    int bound = std::max(cfg.max_n, 2);
    bool tri = true;
    for (int n = 0; n <= bound && tri; ++n) {
        for (int m = 0; m < n; ++m)
            if (!B_at(n, qpow_rf(m)).is_zero()) tri = false;
        if (B_at(n, qpow_rf(n)).is_zero()) tri = false;
    }
    rec.record("basis triangularity", tri);
    sweep(rec, "factored basis values", 0, bound, [&](int n) {
        for (int m = 0; m <= bound; ++m)
            if (B_at_q_power(n, m).to_rational_function() != B_at(n, qpow_rf(m)))
                return false;
        return true;
    });

    HarmonicEvaluator ev;
    auto words = words_up_to_weight(std::min(cfg.max_weight, 3));
    for (const Word& w1 : words) {
        for (const Word& w2 : words) {
            WordSum a(w1), b(w2);
            SequenceFn c1 = memoized([&ev, a](int n) { return ev.nabla_S(a, n); });
            SequenceFn c2 = memoized([&ev, b](int n) { return ev.nabla_S(b, n); });
            SequenceFn c3 = newton_product_c3(c1, c2);
            WordSum prod = stuffle_minus(a, b);
            sweep(rec, "coefficient product " + pair_tag(w1, w2), 0, cfg.max_n,
                  [&](int n) { return c3(n) == ev.nabla_S(prod, n); });
        }
    }

    SeriesEvaluator sev(cfg.precision);
    int order = std::min(cfg.max_n, 4);
    std::vector<std::pair<Word, Word>> pairs{{Word({1}), Word({1})},
                                             {Word({2}), Word({1})},
                                             {Word({1, 1}), Word({2})}};
    for (const auto& [w1, w2] : pairs) {
        WordSum a(w1), b(w2);
        SeriesSequenceFn c1 = sequence_nabla_S_dual(sev, a);
        SeriesSequenceFn c2 = sequence_nabla_S_dual(sev, b);
        SeriesSequenceFn d1 = sequence_nabla_S(ev, a, cfg.precision);
        SeriesSequenceFn d2 = sequence_nabla_S(ev, b, cfg.precision);
        sweep(rec, "dual coefficient sequence " + pair_tag(w1, w2), 0,
              std::min(cfg.max_n, 8),
              [&](int n) { return c1(n) == d1(n) && c2(n) == d2(n); });
        NewtonExpansion e1 = newton_expand(c1, order, cfg.precision, cfg.precision);
        NewtonExpansion e2 = newton_expand(c2, order, cfg.precision, cfg.precision);
        NewtonExpansion e3 = newton_expand(newton_product_c3(c1, c2, cfg.precision),
                                           order, cfg.precision, cfg.precision);
        sweep(rec, "expansion Cauchy product " + pair_tag(w1, w2), 0, order,
              [&](int m) {
                  Series conv(cfg.precision);
                  for (int k = 0; k <= m; ++k)
                      conv += e1.coefficients[static_cast<size_t>(k)] *
                              e2.coefficients[static_cast<size_t>(m - k)];
                  return e3.coefficients[static_cast<size_t>(m)] == conv;
              });
    }

    sweep(rec, "base point change", 0, std::min(cfg.max_n, 4), [&](int n) {
        for (int m = 1; m <= 3; ++m)
            if (!b_connect_check(n, qpow_rf(m), qpow_rf(m + 2))) return false;
        return b_connect_check_symbolic_z(n, qpow_rf(2));
    });
    return rec.take();
}

SuiteResult suite_psi(const RunConfig& cfg) {
    Recorder rec("psi");
    auto words = words_up_to_weight(cfg.max_weight);
    for (const Word& w : words) {
        WordSum x(w);
        rec.record("psi composite w=" + w.to_string(), psi(x) == psi_composite(x));
    }
    for (const Word& w : words) {
        WordSum x(w);
        rec.record("psi fixes a leading z1 w=" + w.to_string(),
                   psi(prepend(1, x)) == prepend(1, psi(x)));
    }
    for (int i = 1; i <= 4; ++i) {
        bool ok = true;
        std::string where;
        for (const Word& w : words) {
            WordSum x(w);
            if (psi(prepend(i, x)) != concat(xi(i), psi(x))) {
                ok = false;
                where = w.to_string();
            }
        }
        rec.record("psi letter recursion i=" + std::to_string(i), ok,
                   ok ? "" : "fails at w=" + where);
    }
    for (const Word& w1 : words) {
        for (const Word& w2 : words) {
            if (w1.weight() + w2.weight() > cfg.max_weight) continue;
            WordSum a(w1), b(w2);
            rec.record("psi product compatibility " + pair_tag(w1, w2),
                       stuffle_minus(psi(a), psi(b)) == psi(stuffle_bar(a, b)));
        }
    }
    // xi_i o_- xi_j collapses to -xi_{i+j}; both sides are depth-one sums
    bool collapse = true;
    std::string where;
    for (int i = 1; i <= 7 && collapse; ++i) {
        for (int j = 1; i + j <= 8 && collapse; ++j) {
            WordSum lhs;
            WordSum xi_i = xi(i);
            for (const auto& [lw, c] : xi_i.terms()) lhs += c * circ_minus(lw.front(), xi(j));
            if (lhs != -xi(i + j)) {
                collapse = false;
                where = "i=" + std::to_string(i) + " j=" + std::to_string(j);
            }
        }
    }
    rec.record("xi letter product collapse", collapse, collapse ? "" : "fails at " + where);
    sweep(rec, "xi ladder", 1, 7, [&](int i) {
        WordSum lhs = circ(1, xi(i)) - Poly::monomial(1) * circ(0, xi(i));
        return lhs == xi(i + 1);
    });
    return rec.take();
}

SuiteResult suite_degeneration(const RunConfig& cfg) {
    Recorder rec("hbar-degeneration");
    auto words = words_up_to_weight(cfg.max_weight);
    for (const Word& w : words) {
        WordSum x(w);
        rec.record("derivation degeneration w=" + w.to_string(),
                   set_hbar_zero(d_q(x)) == d(set_hbar_zero(x)));
    }
    for (const Word& w1 : words) {
        WordSum a(w1);
        bool st_ok = true, ca_ok = true;
        std::string st_where, ca_where;
        for (const Word& w2 : words) {
            WordSum b(w2);
            if (set_hbar_zero(stuffle_minus(a, b)) !=
                stuffle_bar(set_hbar_zero(a), set_hbar_zero(b))) {
                st_ok = false;
                st_where = w2.to_string();
            }
            if (set_hbar_zero(circledast_q(a, b)) !=
                circledast(a, b, cfg.circledast_variant)) {
                ca_ok = false;
                ca_where = w2.to_string();
            }
        }
        rec.record("product degeneration w=" + w1.to_string(), st_ok,
                   st_ok ? "" : "fails against w=" + st_where);
        rec.record("circledast degeneration w=" + w1.to_string(), ca_ok,
                   ca_ok ? "" : "fails against w=" + ca_where);
    }
    return rec.take();
}

using SuiteFn = SuiteResult (*)(const RunConfig&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> reg{
        {"scalars", suite_scalars},
        {"duality", suite_duality},
        {"products", suite_products},
        {"interpolation", suite_interpolation},
        {"newton", suite_newton},
        {"psi", suite_psi},
        {"hbar-degeneration", suite_degeneration},
    };
    return reg;
}

}  // namespace

void validate(const RunConfig& cfg) {
    if (cfg.precision < 2)
        throw std::domain_error("out of range: precision must be at least 2");
    if (cfg.max_weight < 1 || cfg.max_n < 1)
        throw std::domain_error("out of range: bounds must be positive");
}

const std::vector<std::string>& verify_suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [n, fn] : registry()) out.push_back(n);
        out.emplace_back("all");
        return out;
    }();
    return names;
}

std::vector<SuiteResult> run_suites(const std::string& name, const RunConfig& cfg) {
    validate(cfg);
    std::vector<SuiteResult> out;
    if (name == "all") {
        for (const auto& [n, fn] : registry()) out.push_back(fn(cfg));
        return out;
    }
    for (const auto& [n, fn] : registry()) {
        if (n == name) {
            out.push_back(fn(cfg));
            return out;
        }
    }
    std::string msg = "unknown suite \"" + name + "\"; valid suites:";
    for (const auto& n : verify_suite_names()) msg += " " + n;
    throw std::invalid_argument(msg);
}

}  // namespace qmzv

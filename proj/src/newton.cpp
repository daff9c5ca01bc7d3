#include "qmzv/newton.hpp"

#include "qmzv/check.hpp"
#include "qmzv/word_ops.hpp"
#include "qmzv/zeta.hpp"

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>

namespace qmzv {

namespace {

RationalFunction rf_pow(const RationalFunction& x, int e) {
    RationalFunction out{Rational(1)};
    for (int i = 0; i < e; ++i) out *= x;
    return out;
}

RationalFunction q_power(int e) {
    // q^e for e of either sign
    if (e >= 0) return RationalFunction(Poly::monomial(e));
    return RationalFunction(Poly(Rational(1)), Poly::monomial(-e));
}

void require_positive(int v, const char* what) {
    if (v < 1) throw std::domain_error(std::string("out of range: ") + what);
}

}  // namespace

RationalFunction B_at(int n, const RationalFunction& zval) {
    if (n < 0) throw std::domain_error("out of range: basis index must be non-negative");
    RationalFunction out{Rational(1)};
    for (int j = 1; j <= n; ++j) {
        Poly den = Poly(Rational(1)) - Poly::monomial(j);
        out *= (zval - RationalFunction(Poly::monomial(j - 1))) / RationalFunction(den);
    }
    return out;
}

FactoredFraction B_at_q_power(int n, int m) {
    if (n < 0 || m < 0) throw std::domain_error("out of range: basis index must be non-negative");
    if (m < n) return FactoredFraction();
    // prod_{j=1}^{n} (q^m - q^{j-1})/(1-q^j)
    //   = (-1)^n q^{n(n-1)/2} [m][m-1]...[m-n+1] / ([1][2]...[n])
    FactoredFraction out = FactoredFraction::one();
    for (int j = 1; j <= n; ++j) out.mul_qint(m - j + 1);
    for (int j = 2; j <= n; ++j) out.div_qint(j);
    if (n % 2 != 0) out.negate();
    out.mul_qpow(n * (n - 1) / 2);
    return out;
}

bool interpolation_check(const SequenceFn& b, int m, int l) {
    if (m < 0 || l < 0) throw std::domain_error("out of range: interpolation indices");
    RationalFunction qm(Poly::monomial(m));
    RationalFunction lhs;
    for (int n = 0; n <= m; ++n) lhs += nabla_q(b, l + n) * B_at(n, qm);
    RationalFunction rhs;
    for (int j = 0; j <= l; ++j)
        rhs += nabla_weight_factored(j, l).to_rational_function() * b(j + m);
    rhs *= q_power(-l * m);
    return lhs == rhs;
}

bool interpolation_check_S(HarmonicEvaluator& ev, const WordSum& w, int m, int l) {
    if (m < 0 || l < 0) throw std::domain_error("out of range: interpolation indices");
    auto value_S = [&](int n) {
        FactoredFraction acc;
        for (const auto& [word, c] : w.terms()) {
            FactoredFraction v = ev.S_word(word, n);
            v.mul_poly(hbar_eval(c));
            acc += v;
        }
        return acc;
    };
    auto value_nabla = [&](int n) {
        FactoredFraction acc;
        for (const auto& [word, c] : w.terms()) {
            FactoredFraction v = ev.nabla_S_word(word, n);
            v.mul_poly(hbar_eval(c));
            acc += v;
        }
        return acc;
    };
    FactoredFraction lhs;
    for (int n = 0; n <= m; ++n) lhs += value_nabla(l + n) * B_at_q_power(n, m);
    FactoredFraction rhs;
    for (int j = 0; j <= l; ++j) rhs += nabla_weight_factored(j, l) * value_S(j + m);
    rhs.mul_qpow(-l * m);
    return lhs.to_rational_function() == rhs.to_rational_function();
}

RationalFunction key_sum_lhs(int m, int j, const RationalFunction& t) {
    if (m < 0 || j < 0) throw std::domain_error("out of range: key sum indices");
    RationalFunction q_rf(Poly::variable());
    RationalFunction acc;
    for (int n = 0; n <= m; ++n) {
        RationalFunction term = q_power(m * n);
        term *= q_shifted_factorial(q_power(-m), n);
        term *= q_shifted_factorial(t * q_power(-n), j);
        term /= q_shifted_factorial(q_rf, n);
        acc += term;
    }
    return acc / q_shifted_factorial(q_rf, j);
}

RationalFunction key_sum_closed(int m, int j, const RationalFunction& t) {
    if (m < 0 || j < 0) throw std::domain_error("out of range: key sum indices");
    if (j < m) return RationalFunction();
    RationalFunction q_rf(Poly::variable());
    RationalFunction out = rf_pow(t * q_power(-1), m);
    out *= q_shifted_factorial(t, j - m);
    return out / q_shifted_factorial(q_rf, j - m);
}

namespace {

NewtonExpansion expand_impl(const std::function<Series(int)>& c_series, int order,
                            int q_precision, int n_terms) {
    require_positive(order, "expansion order must be positive");
    require_positive(q_precision, "precision must be positive");
    require_positive(n_terms, "term count must be positive");
    NewtonExpansion out;
    out.order = order;
    out.q_precision = q_precision;
    out.coefficients.assign(static_cast<size_t>(order) + 1, Series(q_precision));
    out.coefficients[0] = c_series(0);
    SeriesEvaluator ev(q_precision);
    for (int n = 1; n <= n_terms; ++n) {
        Series cn = c_series(n);
        auto v = cn.valuation();
        if (v.has_value() && *v < n)
            throw std::domain_error("convergence condition violated at n=" +
                                    std::to_string(n));
        if (!v.has_value()) continue;
        // nonzero terms satisfy n <= v < q_precision, so n-1 stays in range
        for (int m = 1; m <= order; ++m) {
            Series af = ev.a_series(WordSum(Word::z1_power(m)), n - 1);
            out.coefficients[static_cast<size_t>(m)] += cn * af;
        }
    }
    return out;
}

}  // namespace

NewtonExpansion newton_expand(const SequenceFn& c, int order, int q_precision,
                              int n_terms) {
    return expand_impl(
        [&](int n) { return series_expand(c(n), q_precision); }, order,
        q_precision, n_terms);
}

NewtonExpansion newton_expand(const SeriesSequenceFn& c, int order,
                              int q_precision, int n_terms) {
    return expand_impl(
        [&](int n) {
            Series s = c(n);
            check(s.precision() >= q_precision,
                  "newton expansion input below requested precision");
            return s.truncated(q_precision);
        },
        order, q_precision, n_terms);
}

bool b_connect_check(int n, const RationalFunction& yval,
                     const RationalFunction& zval) {
    if (n < 0) throw std::domain_error("out of range: basis index must be non-negative");
    RationalFunction q_rf(Poly::variable());
    RationalFunction y_inv = RationalFunction{Rational(1)} / yval;
    RationalFunction rhs;
    for (int j = 0; j <= n; ++j)
        rhs += q_shifted_factorial(y_inv, n - j) /
               q_shifted_factorial(q_rf, n - j) * B_at(j, y_inv * zval);
    rhs *= rf_pow(yval, n);
    return B_at(n, zval) == rhs;
}

bool b_connect_check_symbolic_z(int n, const RationalFunction& yval) {
    if (n < 0) throw std::domain_error("out of range: basis index must be non-negative");
    // polynomials in z with rational-function coefficients, index = z power
    using ZPoly = std::vector<RationalFunction>;
    auto b_poly = [](int deg) {
        ZPoly v{RationalFunction{Rational(1)}};
        for (int j = 1; j <= deg; ++j) {
            ZPoly next(v.size() + 1);
            RationalFunction shift(Poly::monomial(j - 1));
            RationalFunction scale =
                RationalFunction{Rational(1)} /
                RationalFunction(Poly(Rational(1)) - Poly::monomial(j));
            for (size_t k = 0; k < next.size(); ++k) {
                RationalFunction c;
                if (k > 0) c += v[k - 1];
                if (k < v.size()) c -= shift * v[k];
                next[k] = scale * c;
            }
            v = std::move(next);
        }
        return v;
    };
    RationalFunction q_rf(Poly::variable());
    RationalFunction y_inv = RationalFunction{Rational(1)} / yval;
    ZPoly lhs = b_poly(n);
    ZPoly rhs(static_cast<size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) {
        RationalFunction outer = rf_pow(yval, n) *
                                 q_shifted_factorial(y_inv, n - j) /
                                 q_shifted_factorial(q_rf, n - j);
        ZPoly bj = b_poly(j);
        // substitute z -> y^{-1} z: the z^k coefficient picks up y^{-k}
        for (size_t k = 0; k < bj.size(); ++k)
            rhs[k] += outer * bj[k] * rf_pow(y_inv, static_cast<int>(k));
    }
    for (size_t k = 0; k <= static_cast<size_t>(n); ++k)
        if (!(lhs[k] == rhs[k])) return false;
    return true;
}

SequenceFn newton_product_c3(SequenceFn c1, SequenceFn c2) {
    SequenceFn m1 = memoized(std::move(c1));
    SequenceFn m2 = memoized(std::move(c2));
    return [m1, m2](int n) {
        RationalFunction acc;
        for (int k = 0; k <= n; ++k) {
            RationalFunction inner;
            for (int j = 0; j <= k; ++j)
                inner += m2(n - k + j) * B_at_q_power(j, k).to_rational_function();
            acc += RationalFunction(q_binomial(n, k)) * m1(k) * inner;
        }
        return acc;
    };
}

SeriesSequenceFn newton_product_c3(SeriesSequenceFn c1, SeriesSequenceFn c2,
                                   int q_precision) {
    require_positive(q_precision, "precision must be positive");
    auto memo_series = [](SeriesSequenceFn f) {
        auto cache = std::make_shared<std::map<int, Series>>();
        return SeriesSequenceFn([cache, f = std::move(f)](int n) {
            if (auto it = cache->find(n); it != cache->end()) return it->second;
            Series v = f(n);
            cache->emplace(n, v);
            return v;
        });
    };
    SeriesSequenceFn m1 = memo_series(std::move(c1));
    SeriesSequenceFn m2 = memo_series(std::move(c2));
    // Row-by-row tables keep the per-term factors at O(P) amortized cost:
    // [n,k]_q by the Pascal recurrence, B_j(q^k) by the ratio
    // B_j/B_{j-1} = -q^{j-1}[k-j+1]/[j].
    struct Tables {
        int P;
        std::vector<std::vector<Series>> qbin, b;
        std::vector<Series> inv;
        explicit Tables(int p) : P(p) {}
        const Series& inv_qint(int m) {
            while (static_cast<int>(inv.size()) < m)
                inv.push_back(Series(q_integer(static_cast<int>(inv.size()) + 1), P).inverse());
            return inv[static_cast<size_t>(m) - 1];
        }
        const Series& qbinom(int n, int k) {
            while (static_cast<int>(qbin.size()) <= n) {
                int r = static_cast<int>(qbin.size());
                std::vector<Series> row(static_cast<size_t>(r) + 1,
                                        Series(Poly(Rational(1)), P));
                for (int i = 1; i < r; ++i)
                    row[static_cast<size_t>(i)] =
                        qbin[static_cast<size_t>(r) - 1][static_cast<size_t>(i) - 1] +
                        qbin[static_cast<size_t>(r) - 1][static_cast<size_t>(i)].shifted(i);
                qbin.push_back(std::move(row));
            }
            return qbin[static_cast<size_t>(n)][static_cast<size_t>(k)];
        }
        const Series& b_at(int j, int k) {
            while (static_cast<int>(b.size()) <= k) {
                int r = static_cast<int>(b.size());
                std::vector<Series> row{Series(Poly(Rational(1)), P)};
                for (int i = 1; i <= r; ++i)
                    row.push_back(-(row.back() * Series(q_integer(r - i + 1), P) *
                                    inv_qint(i))
                                       .shifted(i - 1));
                b.push_back(std::move(row));
            }
            return b[static_cast<size_t>(k)][static_cast<size_t>(j)];
        }
    };
    auto tab = std::make_shared<Tables>(q_precision);
    return [m1, m2, tab](int n) {
        Series acc(tab->P);
        for (int k = 0; k <= n; ++k) {
            Series inner(tab->P);
            for (int j = 0; j <= k; ++j) inner += m2(n - k + j) * tab->b_at(j, k);
            acc += tab->qbinom(n, k) * m1(k) * inner;
        }
        return acc;
    };
}

SeriesSequenceFn sequence_nabla_S(HarmonicEvaluator& ev, const WordSum& w,
                                  int q_precision) {
    return [&ev, w, q_precision](int n) {
        return series_expand(ev.nabla_S(w, n), q_precision);
    };
}

SeriesSequenceFn sequence_nabla_S_dual(SeriesEvaluator& ev, const WordSum& w) {
    WordSum pw = phi(w);
    return [&ev, w, pw](int n) {
        if (n == 0) return ev.S_series(w, 0);
        return -ev.s_series(pw, n - 1);
    };
}

}  // namespace qmzv

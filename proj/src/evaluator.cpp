#include "qmzv/evaluator.hpp"

#include <cmath>
#include <sstream>

namespace qmzv {

Pathway pathway_from_string(std::string_view s) {
    if (s == "sum" || s == "direct_sum" || s == "direct-sum") return Pathway::direct_sum;
    if (s == "jackson") return Pathway::jackson;
    if (s == "both") return Pathway::both;
    throw std::invalid_argument("unknown pathway: " + std::string(s));
}

Model model_from_string(std::string_view s) {
    if (s == "modified") return Model::modified;
    if (s == "nonmodified" || s == "non-modified") return Model::nonmodified;
    if (s == "schlesinger") return Model::schlesinger;
    throw std::invalid_argument("unknown model: " + std::string(s));
}

void EvalConfig::validate() const {
    if (order < 0) throw std::invalid_argument("EvalConfig: order must be >= 0");
    if (term_cap < 1) throw std::invalid_argument("EvalConfig: term_cap must be >= 1");
    if (!(tolerance > 0)) throw std::invalid_argument("EvalConfig: tolerance must be > 0");
}

QSeries zbar_series_direct(const Composition& w, int order) {
    const int k = w.depth();
    const QSeries one = QSeries::constant(Rational(1), order);
    if (k == 0) return one;

    // G[M] = sum over chains M >= m_j > ... > m_k > 0 of the inner factors,
    // built level by level from the innermost index outward.
    std::vector<QSeries> G(static_cast<size_t>(order) + 1, one);
    for (int j = k; j >= 2; --j) {
        std::vector<QSeries> next(static_cast<size_t>(order) + 1, QSeries(order));
        QSeries acc(order);
        for (int m = 1; m <= order; ++m) {
            acc += QSeries::expand_factor(m, w.e[static_cast<size_t>(j - 1)], order) * G[static_cast<size_t>(m - 1)];
            next[static_cast<size_t>(m)] = acc;
        }
        G = std::move(next);
    }

    QSeries total(order);
    for (int m1 = 1; m1 <= order; ++m1) {
        QSeries t = QSeries::expand_factor(m1, w.e[0], order) * G[static_cast<size_t>(m1 - 1)];
        total += t.shifted(m1);  // the q^{m_1} numerator
    }
    return total;
}

QSeries zbar_series_jackson(const Composition& w, int order) {
    return subst_diag(calZ(w, order));
}

QSeries zbar_series(const Composition& w, const EvalConfig& cfg) {
    cfg.validate();
    switch (cfg.pathway) {
        case Pathway::direct_sum: return zbar_series_direct(w, cfg.order);
        case Pathway::jackson: return zbar_series_jackson(w, cfg.order);
        case Pathway::both: break;
    }
    QSeries a = zbar_series_direct(w, cfg.order);
    QSeries b = zbar_series_jackson(w, cfg.order);
    if (auto d = QSeries::first_mismatch(a, b)) {
        std::ostringstream os;
        os << "zbar_series: pathway disagreement for " << format_ytilde(w) << " at degree " << *d << ": direct "
           << a.coeff(*d).str() << " vs jackson " << b.coeff(*d).str();
        throw std::logic_error(os.str());
    }
    return a;
}

QSeries z_series(const Composition& w, const EvalConfig& cfg) {
    return QSeries::pow_one_minus_q(weight(w), cfg.order) * zbar_series(w, cfg);
}

const QSeries& SeriesCache::zbar(const Composition& w, int order) {
    auto key = std::make_pair(w, order);
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(std::move(key), zbar_series_direct(w, order)).first;
    return it->second;
}

namespace {

QSeries eval_word(const Composition& w, const EvalConfig& cfg, SeriesCache* cache) {
    QSeries base = cache ? cache->zbar(w, cfg.order) : zbar_series(w, cfg);
    if (cfg.model == Model::modified) return base;
    if (cfg.model == Model::nonmodified) return QSeries::pow_one_minus_q(weight(w), cfg.order) * base;
    throw std::invalid_argument("eval_lincomb: no q-series mode for the Schlesinger model");
}

}  // namespace

QSeries eval_lincomb(const QLinComb& l, const EvalConfig& cfg, SeriesCache* cache) {
    QSeries acc(cfg.order);
    for (const auto& [w, c] : l.terms()) acc += eval_word(w, cfg, cache).scaled(c);
    return acc;
}

QSeries eval_lincomb(const HLinComb& l, const EvalConfig& cfg, SeriesCache* cache) {
    QSeries acc(cfg.order);
    const QSeries one_minus_q = QSeries::pow_one_minus_q(1, cfg.order);
    for (const auto& [w, c] : l.terms()) {
        QSeries coeff = substitute_h(c, one_minus_q, cfg.order);
        acc += coeff * eval_word(w, cfg, cache);
    }
    return acc;
}

namespace {

Rational abs_r(const Rational& x) { return x.abs(); }

// sum_{m=1}^{cap} C(m-1, k-1) x^m, exact.
Rational chain_partial_sum(int k, const Rational& x, long cap) {
    Rational acc(0), xp(1);
    for (long m = 1; m <= cap; ++m) {
        xp *= x;
        acc += binomial(m - 1, k - 1) * xp;
    }
    return acc;
}

// Tail sum_{m>cap} C(m-1, k-1) x^m for 0 <= x < 1, via the closed form
// x^k / (1-x)^k of the full sum.
Rational chain_tail(int k, const Rational& x, long cap) {
    Rational full = x.pow(k) * (Rational(1) - x).pow(-k);
    Rational tail = full - chain_partial_sum(k, x, cap);
    return tail.sign() < 0 ? Rational(0) : tail;
}

struct Guards {
    bool q_below_one;
    bool q_above_one;
};

Guards domain_guard(const Composition& w, Model model, const Rational& q0) {
    Rational a = q0.abs();
    bool below = a < Rational(1);
    bool above = a > Rational(1);
    switch (model) {
        case Model::modified:
            if (!below) throw std::domain_error("numeric_eval: modified model requires |q0| < 1");
            break;
        case Model::nonmodified:
            if (!below) {
                if (!(q0 > Rational(1)))
                    throw std::domain_error("numeric_eval: nonmodified model requires |q0| < 1 (or rational q0 > 1 with a convergent word)");
                if (w.depth() == 0 || w.e[0] < 2)
                    throw std::domain_error("numeric_eval: nonmodified model at q0 > 1 requires a leading exponent >= 2");
                for (int n : w.e)
                    if (n < 1) throw std::domain_error("numeric_eval: nonmodified model at q0 > 1 requires exponents >= 1");
            }
            break;
        case Model::schlesinger:
            if (!above) throw std::domain_error("numeric_eval: schlesinger model requires |q0| > 1");
            if (!(q0 > Rational(1))) throw std::domain_error("numeric_eval: schlesinger model requires q0 > 1");
            for (int n : w.e)
                if (n < 1) throw std::domain_error("numeric_eval: schlesinger model requires exponents >= 1");
            break;
    }
    return Guards{below, above};
}

Rational tail_bound_exact(const Composition& w, Model model, const Rational& q0, long cap, bool below_one) {
    const int k = w.depth();
    if (k == 0) return Rational(0);
    if (model == Model::schlesinger) {
        Rational x = q0.pow(-static_cast<long>(w.e[0]));
        return chain_tail(k, x, cap) / x;  // sum C(m-1,k-1) x^{m-1}
    }
    if (model == Model::nonmodified && !below_one) {
        // |q^m / prod [m_i]^{n_i}| <= q0 * x^{m-1}, x = q0^{1-n1}
        Rational x = q0.pow(1 - static_cast<long>(w.e[0]));
        return q0 * (chain_tail(k, x, cap) / x);
    }
    // modified bound; nonmodified below one scales by (1-q0)^w termwise
    Rational a = abs_r(q0);
    long wt = 0;
    for (int n : w.e) wt += n > 0 ? n : 0;
    Rational tail = (Rational(1) - a).pow(-wt) * chain_tail(k, a, cap);
    if (model == Model::nonmodified) tail *= abs_r(Rational(1) - q0).pow(weight(w));
    return tail;
}

}  // namespace

ExactNumeric numeric_eval_exact(const Composition& w, Model model, const Rational& q0, long cap) {
    if (cap < 1) throw std::invalid_argument("numeric_eval: cap must be >= 1");
    Guards g = domain_guard(w, model, q0);
    const int k = w.depth();
    if (k == 0) return {Rational(1), Rational(0)};

    const bool schles = model == Model::schlesinger;
    const bool nonmod_above = model == Model::nonmodified && !g.q_below_one;
    const Rational one(1);
    const Rational inv_one_minus_q0 = schles || nonmod_above ? one / (one - q0) : Rational(0);

    // S[j] accumulates the inner chain sums over indices processed so far;
    // S[k+1] is identically 1.
    std::vector<Rational> S(static_cast<size_t>(k) + 2, Rational(0));
    S[static_cast<size_t>(k) + 1] = one;
    Rational total(0), q_pow(1);
    for (long m = 1; m <= cap; ++m) {
        q_pow *= q0;
        Rational base = one - q_pow;  // 1 - q0^m, never zero in the guarded domains
        auto factor = [&](int n) {
            Rational f = base.pow(-static_cast<long>(n));
            if (schles || nonmod_above) f *= inv_one_minus_q0.pow(-static_cast<long>(n));  // [m]^{-n}
            return f;
        };
        Rational lead = factor(w.e[0]);
        if (!schles) lead *= q_pow;  // the q^{m_1} numerator
        total += lead * S[2];
        for (int j = 2; j <= k; ++j) S[static_cast<size_t>(j)] += factor(w.e[static_cast<size_t>(j - 1)]) * S[static_cast<size_t>(j) + 1];
    }
    if (model == Model::nonmodified && g.q_below_one) total *= (one - q0).pow(weight(w));
    return {total, tail_bound_exact(w, model, q0, cap, g.q_below_one)};
}

ExactNumeric numeric_eval_exact(const HLinComb& l, Model model, const Rational& q0, long cap) {
    Rational value(0), tail(0);
    const Rational h = Rational(1) - q0;
    for (const auto& [w, c] : l.terms()) {
        Rational coeff(0);
        for (const auto& [e, r] : c.terms()) coeff += r * h.pow(e);
        ExactNumeric t = numeric_eval_exact(w, model, q0, cap);
        value += coeff * t.value;
        tail += coeff.abs() * t.tail;
    }
    return {value, tail};
}

double numeric_eval_double(const Composition& w, Model model, double q0, long cap) {
    const int k = w.depth();
    if (k == 0) return 1.0;
    const bool schles = model == Model::schlesinger;
    std::vector<double> S(static_cast<size_t>(k) + 2, 0.0);
    S[static_cast<size_t>(k) + 1] = 1.0;
    double total = 0.0;
    for (long m = 1; m <= cap; ++m) {
        double q_pow = std::pow(q0, static_cast<double>(m));
        double base = 1.0 - q_pow;
        auto factor = [&](int n) {
            double f = std::pow(base, -static_cast<double>(n));
            if (schles || (model == Model::nonmodified && std::abs(q0) > 1))
                f *= std::pow(1.0 - q0, static_cast<double>(n));
            return f;
        };
        double lead = factor(w.e[0]);
        if (!schles) lead *= q_pow;
        total += lead * S[2];
        for (int j = 2; j <= k; ++j) S[static_cast<size_t>(j)] += factor(w.e[static_cast<size_t>(j - 1)]) * S[static_cast<size_t>(j) + 1];
    }
    if (model == Model::nonmodified && std::abs(q0) < 1)
        total *= std::pow(1.0 - q0, static_cast<double>(weight(w)));
    return total;
}

NumericResult numeric_eval(const Composition& w, const EvalConfig& cfg) {
    cfg.validate();
    domain_guard(w, cfg.model, cfg.q0);
    double value = numeric_eval_double(w, cfg.model, cfg.q0.to_double(), cfg.term_cap);
    Rational a = cfg.q0.abs();
    bool below = a < Rational(1);
    double tail = tail_bound_exact(w, cfg.model, cfg.q0, cfg.term_cap, below).to_double();
    return {value, tail};
}

NumericResult zeta_numeric(const YWord& u, long cap) {
    const int k = u.length();
    if (k == 0) return {1.0, 0.0};
    if (u.n[0] < 2) throw std::domain_error("zeta_numeric: divergent word (leading exponent must be >= 2)");
    for (int n : u.n)
        if (n < 1) throw std::domain_error("zeta_numeric: exponents must be >= 1");

    std::vector<double> S(static_cast<size_t>(k) + 2, 0.0);
    S[static_cast<size_t>(k) + 1] = 1.0;
    double total = 0.0;
    for (long m = 1; m <= cap; ++m) {
        double dm = static_cast<double>(m);
        total += std::pow(dm, -static_cast<double>(u.n[0])) * S[2];
        for (int j = 2; j <= k; ++j)
            S[static_cast<size_t>(j)] += std::pow(dm, -static_cast<double>(u.n[static_cast<size_t>(j - 1)])) * S[static_cast<size_t>(j) + 1];
    }

    // Integral-test tail: the inner chains are bounded by (1 + ln m)^{k-1},
    // and I_j = int_M^inf (1+ln x)^j x^{-s-1} dx satisfies
    // I_j = (1+ln M)^j / (s M^s) + (j/s) I_{j-1}.
    double s = static_cast<double>(u.n[0] - 1);
    double M = static_cast<double>(cap);
    double base = 1.0 / (s * std::pow(M, s));
    double I = base;  // j = 0
    double lterm = 1.0 + std::log(M);
    for (int j = 1; j <= k - 1; ++j) I = std::pow(lterm, j) * base + (static_cast<double>(j) / s) * I;
    return {total, I};
}

NumericResult zeta_numeric(const LinComb<YWord, Rational>& l, long cap) {
    double value = 0.0, tail = 0.0;
    for (const auto& [w, c] : l.terms()) {
        NumericResult r = zeta_numeric(w, cap);
        double cd = c.to_double();
        value += cd * r.value;
        tail += std::abs(cd) * r.tail;
    }
    return {value, tail};
}

Rational zbar_abs_bound(const Composition& w, const Rational& q0) {
    Rational a = q0.abs();
    if (!(a < Rational(1))) throw std::domain_error("zbar_abs_bound: requires |q0| < 1");
    long wt = 0;
    for (int n : w.e) wt += n > 0 ? n : 0;
    long k = w.depth();
    return a.pow(k) * (Rational(1) - a).pow(-(wt + k));
}

}  // namespace qmzv

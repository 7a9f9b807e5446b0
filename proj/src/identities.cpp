#include "qmzv/identities.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace qmzv {

namespace {
using ojson = nlohmann::ordered_json;

Rational sgn_pow(long s) { return (s % 2 + 2) % 2 == 0 ? Rational(1) : Rational(-1); }

}  // namespace

std::string CheckReport::to_json() const {
    ojson j;
    j["name"] = name;
    j["params"] = params;
    j["pass"] = pass;
    if (witness) {
        ojson w;
        w["degree"] = witness->degree;
        w["lhs"] = witness->lhs;
        w["rhs"] = witness->rhs;
        j["witness"] = std::move(w);
    } else {
        j["witness"] = nullptr;
    }
    ojson n = ojson::array();
    for (const auto& s : notes) n.push_back(s);
    if (advisory) n.push_back("advisory: mismatch reported as erratum candidate, never a suite failure");
    j["notes"] = std::move(n);
    return j.dump();
}

std::string CheckReport::to_text() const {
    std::ostringstream os;
    os << (pass ? "[PASS] " : (advisory ? "[ERRATUM] " : "[FAIL] ")) << name;
    if (!params.empty()) os << "  (" << params << ")";
    if (!pass && witness)
        os << "\n        witness @" << witness->degree << ": lhs = " << witness->lhs << "   rhs = " << witness->rhs;
    for (const auto& s : notes) os << "\n        note: " << s;
    return os.str();
}

CheckReport make_series_check(std::string name, std::string params, const QSeries& lhs, const QSeries& rhs) {
    CheckReport rep;
    rep.name = std::move(name);
    rep.params = std::move(params);
    auto d = QSeries::first_mismatch(lhs, rhs);
    rep.pass = !d.has_value();
    if (d) rep.witness = Witness{*d, lhs.coeff(*d).str(), rhs.coeff(*d).str()};
    return rep;
}

namespace {

template <class R, class Fmt>
CheckReport lincomb_check(std::string name, std::string params, const LinComb<Composition, R>& lhs,
                          const LinComb<Composition, R>& rhs, Fmt&& fmt) {
    CheckReport rep;
    rep.name = std::move(name);
    rep.params = std::move(params);
    LinComb<Composition, R> diff = lhs;
    diff -= rhs;
    rep.pass = diff.is_zero();
    if (!rep.pass) {
        const auto& [w, c] = *diff.terms().begin();
        R zero(0);
        auto lit = lhs.terms().find(w);
        auto rit = rhs.terms().find(w);
        rep.witness = Witness{0, format_ytilde(w) + ": " + fmt(lit == lhs.terms().end() ? zero : lit->second),
                              format_ytilde(w) + ": " + fmt(rit == rhs.terms().end() ? zero : rit->second)};
        (void)c;
    }
    return rep;
}

CheckReport make_qlincomb_check(std::string name, std::string params, const QLinComb& lhs, const QLinComb& rhs) {
    return lincomb_check(std::move(name), std::move(params), lhs, rhs, [](const Rational& c) { return c.str(); });
}

CheckReport make_hlincomb_check(std::string name, std::string params, const HLinComb& lhs, const HLinComb& rhs) {
    return lincomb_check(std::move(name), std::move(params), lhs, rhs, [](const LaurentPoly& c) { return c.str(); });
}

std::optional<Witness> tq_witness(const TQSeries& a, const TQSeries& b) {
    int n = std::min(a.order(), b.order());
    std::map<std::pair<int, int>, std::pair<Rational, Rational>> joined;
    for (const auto& [ij, c] : a.terms())
        if (ij.first + ij.second <= n) joined[ij].first = c;
    for (const auto& [ij, c] : b.terms())
        if (ij.first + ij.second <= n) joined[ij].second = c;
    for (const auto& [ij, cc] : joined) {
        if (cc.first != cc.second) {
            std::ostringstream l, r;
            l << "t^" << ij.first << " q^" << ij.second << ": " << cc.first.str();
            r << "t^" << ij.first << " q^" << ij.second << ": " << cc.second.str();
            return Witness{ij.first + ij.second, l.str(), r.str()};
        }
    }
    return std::nullopt;
}

/// Running aggregation of many sub-cases into one report.
struct Aggregator {
    CheckReport rep;
    int total = 0;
    int failed = 0;

    Aggregator(std::string name, std::string params) {
        rep.name = std::move(name);
        rep.params = std::move(params);
    }
    void add(const std::string& label, const CheckReport& sub) {
        ++total;
        if (!sub.pass) {
            ++failed;
            if (!rep.witness) {
                rep.witness = sub.witness ? sub.witness : Witness{total - 1, "nonzero residual", "0"};
                rep.notes.push_back("first failing case: " + label);
            }
        }
    }
    void add(const std::string& label, bool ok) {
        ++total;
        if (!ok) {
            ++failed;
            if (!rep.witness) {
                rep.witness = Witness{total - 1, "violated", "expected"};
                rep.notes.push_back("first failing case: " + label);
            }
        }
    }
    CheckReport finish() {
        rep.pass = failed == 0;
        std::ostringstream os;
        os << rep.params << (rep.params.empty() ? "" : "; ") << total - failed << "/" << total << " cases";
        rep.params = os.str();
        return rep;
    }
};

}  // namespace

EulerCoefficients::EulerCoefficients(int a_, int b_) : a(a_), b(b_) {
    if (!(1 < a && a <= b)) throw std::invalid_argument("EulerCoefficients: requires 1 < a <= b");
    for (int j = 0; j <= a - 1; ++j)
        beta[j] = sgn_pow(a - j) * multinomial3(j + b - 1, j, j + b - a, a - j - 1);
    for (int k = b; k <= a + b - 2; ++k) {
        Rational acc(0);
        for (int j = b; j <= k; ++j)
            acc += sgn_pow(a + b - j) * multinomial3(j - 1, j - b, j - a, a + b - j - 1) / Rational(1 - j);
        alpha[k] = acc;
    }
}

namespace {

using GKey = std::tuple<GammaShape, int, int>;
using GMap = std::map<GKey, Rational>;

void gmap_add(GMap& m, GammaShape s, int i, int j, const Rational& c) {
    if (c.is_zero()) return;
    auto key = GKey{s, i, j};
    auto it = m.find(key);
    if (it == m.end()) {
        m.emplace(key, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) m.erase(it);
    }
}

// D^a f D^b g = D^{a-1}f D^b g + D^a f D^{b-1} g - D[D^{a-1} f D^{b-1} g]
void dd_acc(int a, int b, int j, const Rational& c, GMap& out) {
    if (a == 0 && b == 0) return gmap_add(out, GammaShape::both_zero, 0, j, c);
    if (a == 0) return gmap_add(out, GammaShape::left_zero, b, j, c);
    if (b == 0) return gmap_add(out, GammaShape::right_zero, a, j, c);
    dd_acc(a - 1, b, j, c, out);
    dd_acc(a, b - 1, j, c, out);
    dd_acc(a - 1, b - 1, j + 1, -c, out);
}

// D^a f P^b g = D[D^{a-1} f P^b g] + D^a f P^{b-1} g - D^{a-1} f P^{b-1} g
void dp_acc(int a, int b, int j, const Rational& c, GMap& out) {
    if (a == 0 && b == 0) return gmap_add(out, GammaShape::both_zero, 0, j, c);
    if (a == 0) return gmap_add(out, GammaShape::left_zero, b, j, c);
    if (b == 0) return gmap_add(out, GammaShape::right_zero, a, j, c);
    dp_acc(a - 1, b, j + 1, c, out);
    dp_acc(a, b - 1, j, c, out);
    dp_acc(a - 1, b - 1, j, -c, out);
}

// P^a f P^b g = P[P^{a-1} f P^b g] + P[P^a f P^{b-1} g] - P[P^{a-1} f P^{b-1} g]
void pp_acc(int a, int b, int j, const Rational& c, GMap& out) {
    if (a == 0 && b == 0) return gmap_add(out, GammaShape::both_zero, 0, j, c);
    if (a == 0) return gmap_add(out, GammaShape::left_zero, b, j, c);
    if (b == 0) return gmap_add(out, GammaShape::right_zero, a, j, c);
    pp_acc(a - 1, b, j + 1, c, out);
    pp_acc(a, b - 1, j + 1, c, out);
    pp_acc(a - 1, b - 1, j + 1, -c, out);
}

GammaExpansion gmap_to_expansion(GMap m, GammaExpansion::Kind kind, int a, int b) {
    GammaExpansion g;
    g.kind = kind;
    g.a = a;
    g.b = b;
    for (const auto& [key, c] : m) g.terms.push_back(GammaTerm{std::get<0>(key), std::get<1>(key), std::get<2>(key), c});
    return g;
}

std::string shape_str(GammaShape s, int i, int j, GammaExpansion::Kind kind) {
    const bool all_p = kind == GammaExpansion::Kind::PP;
    std::ostringstream os;
    auto op = [&os](char name, int n) {
        os << name;
        if (n != 1) os << "^" << n;
    };
    if (j > 0) {
        op(all_p ? 'P' : 'D', j);
        os << "[";
    }
    switch (s) {
        case GammaShape::left_zero:
            os << "f ";
            op(kind == GammaExpansion::Kind::DD ? 'D' : 'P', i);
            os << "[g]";
            break;
        case GammaShape::right_zero:
            op(all_p ? 'P' : 'D', i);
            os << "[f] g";
            break;
        case GammaShape::both_zero: os << "f g"; break;
    }
    if (j > 0) os << "]";
    return os.str();
}

}  // namespace

GammaExpansion build_elimination_expansion(int a, int b, GammaExpansion::Kind kind) {
    if (a < 0 || b < 0) throw std::invalid_argument("build_elimination_expansion: negative exponent");
    GMap m;
    switch (kind) {
        case GammaExpansion::Kind::DD: dd_acc(a, b, 0, Rational(1), m); break;
        case GammaExpansion::Kind::DP: dp_acc(a, b, 0, Rational(1), m); break;
        case GammaExpansion::Kind::PP: pp_acc(a, b, 0, Rational(1), m); break;
    }
    return gmap_to_expansion(std::move(m), kind, a, b);
}

namespace {
TQSeries Dpow(const TQSeries& x, int n) { return apply_Pq_pow(x, -n); }
}

TQSeries instantiate_gamma_term(const GammaTerm& t, GammaExpansion::Kind kind, const TQSeries& f, const TQSeries& g) {
    TQSeries inner(std::min(f.order(), g.order()));
    switch (t.shape) {
        case GammaShape::left_zero:
            inner = f * (kind == GammaExpansion::Kind::DP ? apply_Pq_pow(g, t.i) : Dpow(g, t.i));
            break;
        case GammaShape::right_zero: inner = Dpow(f, t.i) * g; break;
        case GammaShape::both_zero: inner = f * g; break;
    }
    return Dpow(inner, t.j).scaled(t.coeff);
}

TQSeries instantiate_gamma(const GammaExpansion& g_exp, const TQSeries& f, const TQSeries& g) {
    TQSeries acc(std::min(f.order(), g.order()));
    for (const auto& t : g_exp.terms) acc += instantiate_gamma_term(t, g_exp.kind, f, g);
    return acc;
}

TQSeries instantiate_gamma_as_P(const GammaExpansion& g_exp, const TQSeries& f, const TQSeries& g) {
    TQSeries acc(std::min(f.order(), g.order()));
    for (const auto& t : g_exp.terms) {
        TQSeries inner(acc.order());
        switch (t.shape) {
            case GammaShape::left_zero: inner = f * apply_Pq_pow(g, t.i); break;
            case GammaShape::right_zero: inner = apply_Pq_pow(f, t.i) * g; break;
            case GammaShape::both_zero: inner = f * g; break;
        }
        acc += apply_Pq_pow(inner, t.j).scaled(t.coeff);
    }
    return acc;
}

QLinComb gamma_to_words(const GammaExpansion& g_exp) {
    const bool all_p = g_exp.kind == GammaExpansion::Kind::PP;
    QLinComb out;
    for (const auto& t : g_exp.terms) {
        int second = 0;
        switch (t.shape) {
            case GammaShape::left_zero:
                second = g_exp.kind == GammaExpansion::Kind::DD ? -t.i : t.i;
                break;
            case GammaShape::right_zero: second = all_p ? t.i : -t.i; break;
            case GammaShape::both_zero: second = 0; break;
        }
        out.add(Composition{all_p ? t.j : -t.j, second}, t.coeff);
    }
    return out;
}

TQSeries random_A_element(std::mt19937_64& rng, int order) {
    TQSeries f(order);
    for (int i = 1; i <= order; ++i)
        for (int j = 0; i + j <= order; ++j) {
            if (rng() % 2 == 0) continue;
            long c = static_cast<long>(rng() % 9) - 4;
            f.add_term(i, j, Rational(c));
        }
    return f;
}

namespace {

// The printed closed forms, collected coefficient-by-coefficient at shape
// level. Each is compared against the elimination expansion.

GMap closed_dd_theorem(int a, int b) {
    GMap m;
    for (int j = 0; j <= a - 1; ++j)
        for (int i = 1; i <= b - j; ++i)
            gmap_add(m, GammaShape::left_zero, i, j, sgn_pow(j) * multinomial3(a + b - 1 - i - j, j, a - 1 - j, b - i - j));
    for (int j = 1; j <= a; ++j)
        for (int i = 1; i <= b - j; ++i)
            gmap_add(m, GammaShape::left_zero, i, j, sgn_pow(j) * multinomial3(a + b - 1 - i - j, j - 1, a - j, b - i - j));
    for (int j = 0; j <= b - 1; ++j)
        for (int i = 1; i <= a - j; ++i)
            gmap_add(m, GammaShape::right_zero, i, j, sgn_pow(j) * multinomial3(a + b - 1 - i - j, j, b - 1 - j, a - i - j));
    for (int j = 1; j <= b; ++j)
        for (int i = 1; i <= a - j; ++i)
            gmap_add(m, GammaShape::right_zero, i, j, sgn_pow(j) * multinomial3(a + b - 1 - i - j, j - 1, b - j, a - i - j));
    for (int j = 1; j <= a; ++j)
        gmap_add(m, GammaShape::both_zero, 0, j, sgn_pow(j) * multinomial3(a + b - 1 - j, j - 1, a - j, b - j));
    return m;
}

GMap closed_dd_slim(int a, int b) {
    GMap m;
    for (int j = 0; j <= a; ++j)
        for (int i = 1; i <= b - j; ++i)
            gmap_add(m, GammaShape::left_zero, i, j, sgn_pow(j) * binomial(a + b - 1 - i - j, a - 1) * binomial(a, j));
    for (int j = 0; j <= b; ++j)
        for (int i = 1; i <= std::max(1, a - j); ++i)
            gmap_add(m, GammaShape::right_zero, i, j, sgn_pow(j) * binomial(a + b - 1 - i - j, b - 1) * binomial(b, j));
    for (int j = 1; j <= a; ++j)
        gmap_add(m, GammaShape::both_zero, 0, j, sgn_pow(j) * multinomial3(a + b - 1 - j, j - 1, a - j, b - j));
    return m;
}

GMap closed_dp_slim(int a, int b) {
    GMap m;
    for (int j = 0; j <= a; ++j)
        for (int i = 1; i <= b - a + j; ++i)
            gmap_add(m, GammaShape::left_zero, i, j, sgn_pow(a - j) * binomial(b - 1 - i + j, a - 1) * binomial(a, j));
    for (int k = 1; k <= a; ++k)
        for (int i = 1; i <= k; ++i)
            gmap_add(m, GammaShape::right_zero, i, k - i, sgn_pow(a - k) * binomial(b - 1 - i + k, b - 1) * binomial(b, a - k));
    for (int j = 0; j <= a - 1; ++j)
        gmap_add(m, GammaShape::both_zero, 0, j, sgn_pow(a - j) * multinomial3(b - 1 + j, j, a - 1 - j, b - a + j));
    return m;
}

GMap expansion_to_gmap(const GammaExpansion& g) {
    GMap m;
    for (const auto& t : g.terms) gmap_add(m, t.shape, t.i, t.j, t.coeff);
    return m;
}

/// Compares a printed closed form against the elimination oracle at shape
/// level; on mismatch the notes name the first discrepant term.
CheckReport scan_closed_form(const std::string& name, int a, int b, const GMap& printed, const GammaExpansion& oracle) {
    CheckReport rep;
    rep.name = name;
    {
        std::ostringstream os;
        os << "a=" << a << " b=" << b;
        rep.params = os.str();
    }
    rep.advisory = true;
    GMap om = expansion_to_gmap(oracle);
    rep.pass = printed == om;
    if (!rep.pass) {
        std::map<GKey, std::pair<Rational, Rational>> joined;
        for (const auto& [k, c] : printed) joined[k].first = c;
        for (const auto& [k, c] : om) joined[k].second = c;
        for (const auto& [k, cc] : joined) {
            if (cc.first != cc.second) {
                std::string term = shape_str(std::get<0>(k), std::get<1>(k), std::get<2>(k), oracle.kind);
                rep.witness = Witness{std::get<2>(k), term + ": " + cc.first.str(), term + ": " + cc.second.str()};
                rep.notes.push_back("erratum-candidate: printed coefficient of " + term + " is " + cc.first.str() +
                                    ", elimination oracle gives " + cc.second.str());
                break;
            }
        }
    }
    return rep;
}

}  // namespace

std::vector<CheckReport> verify_operator_laws(int a, int b, int order, unsigned seed, int samples, bool include_basic) {
    std::vector<CheckReport> out;
    std::mt19937_64 rng(seed);
    std::vector<std::pair<TQSeries, TQSeries>> fg;
    fg.reserve(static_cast<size_t>(samples));
    for (int s = 0; s < samples; ++s) fg.emplace_back(random_A_element(rng, order), random_A_element(rng, order));

    std::ostringstream ps;
    ps << "a=" << a << " b=" << b << " order=" << order << " seed=" << seed << " samples=" << samples;
    const std::string params = ps.str();

    auto sample_check = [&](const std::string& name, auto&& lhs_fn, auto&& rhs_fn) {
        Aggregator agg(name, params);
        for (size_t s = 0; s < fg.size(); ++s) {
            TQSeries lhs = lhs_fn(fg[s].first, fg[s].second);
            TQSeries rhs = rhs_fn(fg[s].first, fg[s].second);
            CheckReport sub;
            sub.pass = lhs == rhs;
            if (!sub.pass) sub.witness = tq_witness(lhs, rhs);
            agg.add("sample " + std::to_string(s), sub);
        }
        out.push_back(agg.finish());
    };

    if (include_basic) {
        sample_check(
            "operator-laws/rota-baxter",
            [](const TQSeries& f, const TQSeries& g) { return apply_Pq(f) * apply_Pq(g); },
            [](const TQSeries& f, const TQSeries& g) {
                return apply_Pq(apply_Pq(f) * g) + apply_Pq(f * apply_Pq(g)) - apply_Pq(f * g);
            });
        sample_check(
            "operator-laws/leibniz",
            [](const TQSeries& f, const TQSeries& g) { return apply_Dq(f * g); },
            [](const TQSeries& f, const TQSeries& g) {
                return apply_Dq(f) * g + f * apply_Dq(g) - apply_Dq(f) * apply_Dq(g);
            });
        sample_check(
            "operator-laws/mixed-dp",
            [](const TQSeries& f, const TQSeries& g) { return apply_Dq(f) * apply_Pq(g); },
            [](const TQSeries& f, const TQSeries& g) {
                return apply_Dq(f * apply_Pq(g)) + apply_Dq(f) * g - f * g;
            });
    }

    GammaExpansion dd = build_elimination_expansion(a, b, GammaExpansion::Kind::DD);
    GammaExpansion dp = build_elimination_expansion(a, b, GammaExpansion::Kind::DP);
    GammaExpansion pp = build_elimination_expansion(a, b, GammaExpansion::Kind::PP);

    sample_check(
        "operator-laws/elimination-dd",
        [&](const TQSeries& f, const TQSeries& g) { return Dpow(f, a) * Dpow(g, b); },
        [&](const TQSeries& f, const TQSeries& g) { return instantiate_gamma(dd, f, g); });
    sample_check(
        "operator-laws/elimination-dp",
        [&](const TQSeries& f, const TQSeries& g) { return Dpow(f, a) * apply_Pq_pow(g, b); },
        [&](const TQSeries& f, const TQSeries& g) { return instantiate_gamma(dp, f, g); });
    sample_check(
        "operator-laws/rota-baxter-expansion",
        [&](const TQSeries& f, const TQSeries& g) { return apply_Pq_pow(f, a) * apply_Pq_pow(g, b); },
        [&](const TQSeries& f, const TQSeries& g) { return instantiate_gamma_as_P(pp, f, g); });

    if (1 < a && a <= b) {
        out.push_back(scan_closed_form("operator-laws/closed-form-dd-theorem", a, b, closed_dd_theorem(a, b), dd));
        out.push_back(scan_closed_form("operator-laws/closed-form-dd-slim", a, b, closed_dd_slim(a, b), dd));
        out.push_back(scan_closed_form("operator-laws/closed-form-dp-slim", a, b, closed_dp_slim(a, b), dp));
    }
    return out;
}

std::vector<CheckReport> verify_word_laws(ProductKind kind, const std::vector<Composition>& words,
                                          const std::vector<std::array<Composition, 3>>& triples, ProductEngine& eng) {
    std::vector<CheckReport> out;
    const std::string kname = product_kind_name(kind);

    {
        Aggregator agg("word-laws/" + kname + "/commutativity", std::to_string(words.size()) + " words");
        for (size_t i = 0; i < words.size(); ++i)
            for (size_t j = i; j < words.size(); ++j) {
                HLinComb uv = eng.product(kind, words[i], words[j]);
                HLinComb vu = eng.product(kind, words[j], words[i]);
                agg.add(format_ytilde(words[i]) + " , " + format_ytilde(words[j]),
                        make_hlincomb_check("", "", uv, vu));
            }
        out.push_back(agg.finish());
    }

    {
        auto bilinear = [&](const HLinComb& x, const HLinComb& y) {
            HLinComb r;
            for (const auto& [wu, cu] : x.terms())
                for (const auto& [wv, cv] : y.terms()) r += eng.product(kind, wu, wv).scaled(cu * cv);
            return r;
        };
        Aggregator agg("word-laws/" + kname + "/associativity", std::to_string(triples.size()) + " triples");
        for (const auto& t : triples) {
            HLinComb left = bilinear(eng.product(kind, t[0], t[1]), HLinComb::single(t[2]));
            HLinComb right = bilinear(HLinComb::single(t[0]), eng.product(kind, t[1], t[2]));
            agg.add(format_ytilde(t[0]) + " , " + format_ytilde(t[1]) + " , " + format_ytilde(t[2]),
                    make_hlincomb_check("", "", left, right));
        }
        out.push_back(agg.finish());
    }
    return out;
}

std::vector<CheckReport> verify_shuffle_word_laws(int pair_len, int triple_len) {
    std::vector<XWord> words;
    std::function<void(XWord, int)> gen = [&](XWord w, int remaining) {
        words.push_back(w);
        if (remaining == 0) return;
        for (uint8_t l : {0, 1}) {
            XWord w2 = w;
            w2.letters.push_back(l);
            gen(std::move(w2), remaining - 1);
        }
    };
    gen(XWord{}, pair_len);

    std::vector<CheckReport> out;
    {
        Aggregator agg("word-laws/shuffle/commutativity", std::to_string(words.size()) + " words");
        Aggregator mass("word-laws/shuffle/coefficient-mass", "sum of coefficients = C(|u|+|v|, |u|)");
        for (size_t i = 0; i < words.size(); ++i)
            for (size_t j = i; j < words.size(); ++j) {
                auto uv = shuffle(words[i], words[j]);
                auto vu = shuffle(words[j], words[i]);
                agg.add(format_x(words[i]) + "," + format_x(words[j]), uv == vu);
                Rational total(0);
                for (const auto& [w, c] : uv.terms()) total += c;
                mass.add(format_x(words[i]) + "," + format_x(words[j]),
                         total == binomial(words[i].length() + words[j].length(), words[i].length()));
            }
        out.push_back(agg.finish());
        out.push_back(mass.finish());
    }
    {
        std::vector<XWord> small;
        for (const auto& w : words)
            if (w.length() <= triple_len) small.push_back(w);
        Aggregator agg("word-laws/shuffle/associativity", std::to_string(small.size()) + "^3 triples");
        for (const auto& u : small)
            for (const auto& v : small)
                for (const auto& w : small) {
                    auto left = shuffle(shuffle(u, v), LinComb<XWord, Rational>::single(w));
                    auto right = shuffle(LinComb<XWord, Rational>::single(u), shuffle(v, w));
                    agg.add(format_x(u) + "," + format_x(v) + "," + format_x(w), left == right);
                }
        out.push_back(agg.finish());
    }
    return out;
}

CheckReport verify_homomorphism(ProductKind kind, const Composition& u, const Composition& v, const EvalConfig& cfg,
                                ProductEngine& eng, SeriesCache& cache) {
    std::ostringstream ps;
    ps << "u=" << format_ytilde(u) << " v=" << format_ytilde(v) << " order=" << cfg.order;
    const bool graded = kind == ProductKind::q_shuffle_graded || kind == ProductKind::q_quasi_shuffle_graded;
    if (kind != ProductKind::q_shuffle && kind != ProductKind::q_quasi_shuffle && !graded)
        throw std::invalid_argument("verify_homomorphism: only the q-products carry the evaluation homomorphism");

    EvalConfig ecfg = cfg;
    ecfg.model = graded ? Model::nonmodified : Model::modified;
    HLinComb expansion = eng.product(kind, u, v);
    QSeries lhs = eval_lincomb(HLinComb::single(u), ecfg, &cache) * eval_lincomb(HLinComb::single(v), ecfg, &cache);
    QSeries rhs = eval_lincomb(expansion, ecfg, &cache);
    return make_series_check(std::string("homomorphism/") + product_kind_name(kind), ps.str(), lhs, rhs);
}

CheckReport verify_cross_relation(const Composition& u, const Composition& v, const EvalConfig& cfg, ProductEngine& eng,
                                  SeriesCache& cache) {
    std::ostringstream ps;
    ps << "u=" << format_ytilde(u) << " v=" << format_ytilde(v) << " order=" << cfg.order;
    QLinComb diff = eng.q_shuffle_h1(u, v);
    diff -= eng.q_quasi_shuffle_h1(u, v);
    EvalConfig ecfg = cfg;
    ecfg.model = Model::modified;
    QSeries residual = eval_lincomb(diff, ecfg, &cache);
    return make_series_check("homomorphism/cross-relation", ps.str(), residual, QSeries(cfg.order));
}

namespace {

struct ZEulerRhs {
    QLinComb words;
    std::map<int, Rational> delta_terms;  // argument -> coefficient of delta zbar(arg)
};

ZEulerRhs z_euler_rhs(int a, int b) {
    ZEulerRhs rhs;
    EulerCoefficients coeffs(a, b);
    for (int l = 0; l <= a - 1; ++l)
        for (int k = 0; k <= a - 1 - l; ++k)
            rhs.words.add(Composition{b + l, a - l - k}, sgn_pow(k) * binomial(l + b - 1, b - 1) * binomial(b, k));
    for (int l = 0; l <= b - 1; ++l)
        for (int k = 0; k <= std::min(a, b - 1 - l); ++k)
            rhs.words.add(Composition{a + l, b - l - k}, sgn_pow(k) * binomial(l + a - 1, a - 1) * binomial(a, k));
    for (int k = 1; k <= a; ++k) rhs.words.add(Composition{a + b - k}, -coeffs.beta.at(a - k));
    for (int j = 1; j <= a - 1; ++j) {
        int arg = a + b - 1 - j;
        rhs.delta_terms[arg] += coeffs.alpha.at(arg);
    }
    return rhs;
}

QLinComb display_neg_neg(int a, int b) {
    QLinComb out;
    for (int j = 0; j <= a; ++j)
        for (int i = 1; i <= b - j; ++i)
            out.add(Composition{-j, -i}, sgn_pow(j) * binomial(a + b - 1 - i - j, a - 1) * binomial(a, j));
    for (int j = 0; j <= b; ++j)
        for (int i = 1; i <= std::max(1, a - j); ++i)
            out.add(Composition{-j, -i}, sgn_pow(j) * binomial(a + b - 1 - i - j, b - 1) * binomial(b, j));
    for (int j = 1; j <= a; ++j)
        out.add(Composition{-j, 0}, sgn_pow(j) * multinomial3(a + b - 1 - j, j - 1, a - j, b - j));
    return out;
}

QLinComb display_neg_pos(int a, int b, std::vector<std::string>& notes) {
    QLinComb out;
    for (int j = 0; j <= a; ++j)
        for (int i = 1; i <= b - a + j; ++i)
            out.add(Composition{-j, i}, sgn_pow(a - j) * binomial(b - 1 - i + j, a - 1) * binomial(a, j));
    for (int k = 1; k <= a; ++k)
        for (int i = 1; i <= k; ++i)
            out.add(Composition{-k + 1, -i}, sgn_pow(a - k) * binomial(b - 1 - i + k, b - 1) * binomial(b, a - k));
    for (int j = 0; j <= std::min(a - 1, b - a + 1); ++j) {
        try {
            out.add(Composition{-j, 0}, sgn_pow(a - j) * multinomial3(b - 1 + j, j, a - 1 - j, b - a - j));
        } catch (const std::invalid_argument&) {
            std::ostringstream os;
            os << "erratum-candidate: third-sum multinomial (" << b - 1 + j << "; " << j << "," << a - 1 - j << ","
               << b - a - j << ") at j=" << j << " is ill-formed (slots sum to " << b - 1 - j
               << "); treated as zero";
            notes.push_back(os.str());
        }
    }
    return out;
}

}  // namespace

std::vector<CheckReport> verify_euler(int a, int b, EulerCase which, const EvalConfig& cfg, SeriesCache& cache) {
    if (!(1 < a && a <= b)) throw std::invalid_argument("verify_euler: requires 1 < a <= b");
    std::vector<CheckReport> out;
    std::ostringstream ps;
    ps << "a=" << a << " b=" << b << " order=" << cfg.order;
    EvalConfig mcfg = cfg;
    mcfg.model = Model::modified;
    mcfg.pathway = Pathway::direct_sum;

    switch (which) {
        case EulerCase::pos_pos: {
            ZEulerRhs rhs = z_euler_rhs(a, b);
            QSeries rhs_series = eval_lincomb(rhs.words, mcfg, &cache);
            for (const auto& [arg, c] : rhs.delta_terms)
                rhs_series += cache.zbar(Composition{arg}, cfg.order).delta().scaled(c);
            QSeries lhs = cache.zbar(Composition{a}, cfg.order) * cache.zbar(Composition{b}, cfg.order);
            CheckReport rep = make_series_check("euler/pos-pos-as-printed", ps.str(), lhs, rhs_series);
            rep.advisory = true;
            if (!rep.pass) rep.notes.push_back("erratum-candidate: printed weight-(a+b) decomposition disagrees with the series product");
            out.push_back(std::move(rep));
            break;
        }
        case EulerCase::neg_neg: {
            QSeries lhs = cache.zbar(Composition{-a}, cfg.order) * cache.zbar(Composition{-b}, cfg.order);
            GammaExpansion dd = build_elimination_expansion(a, b, GammaExpansion::Kind::DD);
            out.push_back(make_series_check("euler/neg-neg-oracle", ps.str(), lhs,
                                            eval_lincomb(gamma_to_words(dd), mcfg, &cache)));
            CheckReport rep = make_series_check("euler/neg-neg-as-printed", ps.str(), lhs,
                                                eval_lincomb(display_neg_neg(a, b), mcfg, &cache));
            rep.advisory = true;
            if (!rep.pass) rep.notes.push_back("erratum-candidate: printed display disagrees with the series product");
            out.push_back(std::move(rep));
            break;
        }
        case EulerCase::neg_pos: {
            QSeries lhs = cache.zbar(Composition{-a}, cfg.order) * cache.zbar(Composition{b}, cfg.order);
            GammaExpansion dp = build_elimination_expansion(a, b, GammaExpansion::Kind::DP);
            out.push_back(make_series_check("euler/neg-pos-oracle", ps.str(), lhs,
                                            eval_lincomb(gamma_to_words(dp), mcfg, &cache)));
            std::vector<std::string> notes;
            QLinComb printed = display_neg_pos(a, b, notes);
            CheckReport rep = make_series_check("euler/neg-pos-as-printed", ps.str(), lhs,
                                                eval_lincomb(printed, mcfg, &cache));
            rep.advisory = true;
            rep.notes = std::move(notes);
            if (!rep.pass)
                rep.notes.push_back(
                    "erratum-candidate: printed display disagrees with the series product (second sum argument "
                    "(-k+1,-i) vs oracle (-k+i,-i); see also the third-sum bound)");
            out.push_back(std::move(rep));
            break;
        }
    }
    return out;
}

namespace {

QLinComb delta_rhs_general(const Composition& args) {
    const int k = args.depth();
    QLinComb rhs;
    long lead = k;
    for (int r = 1; r <= k; ++r) lead -= static_cast<long>(args.e[static_cast<size_t>(r - 1)]) * (k - r + 1);
    rhs.add(args, Rational(lead));
    for (int r = 1; r <= k; ++r) {
        Composition w = args;
        w.e[static_cast<size_t>(r - 1)] += 1;
        rhs.add(w, Rational(static_cast<long>(args.e[static_cast<size_t>(r - 1)]) * (k - r + 1)));
    }
    for (int s = 1; s <= k; ++s) {
        long c = 1;
        for (int r = 1; r <= s; ++r) c -= args.e[static_cast<size_t>(r - 1)];
        Composition w = args;
        w.e.insert(w.e.begin() + s, 0);
        rhs.add(w, Rational(c));
    }
    for (int r = 1; r <= k; ++r)
        for (int s = r; s <= k; ++s) {
            Composition w = args;
            w.e[static_cast<size_t>(r - 1)] += 1;
            w.e.insert(w.e.begin() + s, 0);
            rhs.add(w, Rational(args.e[static_cast<size_t>(r - 1)]));
        }
    return rhs;
}

QLinComb delta_double_shuffle_rhs(int b) {
    QLinComb rhs;
    rhs.add(Composition{b + 1}, Rational(b + 1));
    rhs.add(Composition{b}, Rational(1 - b));
    rhs.add(Composition{b + 2}, Rational(-1));
    rhs.add(Composition{b + 1, 1}, Rational(2L * b));
    rhs.add(Composition{b, 1}, Rational(1 - b));
    rhs.add(Composition{2, b - 1}, Rational(-1));
    rhs.add(Composition{2, b - 2}, Rational(1));
    for (int l = 1; l <= b - 2; ++l)
        for (int k = 0; k <= std::min(2, b - 1 - l); ++k)
            rhs.add(Composition{2 + l, b - l - k}, sgn_pow(k) * Rational(l + 1) * binomial(2, k));
    return rhs;
}

}  // namespace

CheckReport verify_derivation(const Composition& args, const EvalConfig& cfg, DerivationKind which, SeriesCache& cache,
                              const std::vector<Rational>& kappa) {
    EvalConfig mcfg = cfg;
    mcfg.model = Model::modified;
    mcfg.pathway = Pathway::direct_sum;
    const int N = cfg.order;
    auto zb = [&](const Composition& w) { return cache.zbar(w, N); };

    switch (which) {
        case DerivationKind::single: {
            if (args.depth() != 1) throw std::invalid_argument("verify_derivation(single): expects one argument");
            int a = args.e[0];
            QSeries lhs = zb(Composition{a}).delta();
            QSeries rhs = (zb(Composition{a, 0}) + zb(Composition{a})).scaled(Rational(1 - a)) +
                          (zb(Composition{a + 1, 0}) + zb(Composition{a + 1})).scaled(Rational(a));
            return make_series_check("derivation/single", "a=" + std::to_string(a) + " order=" + std::to_string(N), lhs,
                                     rhs);
        }
        case DerivationKind::telescoped: {
            if (args.depth() != 1) throw std::invalid_argument("verify_derivation(telescoped): expects one argument");
            int a = args.e[0];
            if (a >= 2) {
                QSeries lhs = zb(Composition{a, 0}) + zb(Composition{a});
                QSeries rhs = zb(Composition{2, 0}) + zb(Composition{2});
                for (int j = 2; j <= a - 1; ++j) rhs += zb(Composition{j}).delta();
                rhs = rhs.scaled(Rational(1, a - 1));
                return make_series_check("derivation/telescoped-positive",
                                         "a=" + std::to_string(a) + " order=" + std::to_string(N), lhs, rhs);
            }
            if (a <= 0) {
                int ap = -a;
                QSeries lhs = zb(Composition{-ap, 0}) + zb(Composition{-ap});
                QSeries rhs = zb(Composition{0, 0}) + zb(Composition{0});
                for (int j = 1; j <= ap; ++j) rhs += zb(Composition{-j}).delta();
                rhs = rhs.scaled(Rational(1, ap + 1));
                return make_series_check("derivation/telescoped-negative",
                                         "a=" + std::to_string(a) + " order=" + std::to_string(N), lhs, rhs);
            }
            throw std::invalid_argument("verify_derivation(telescoped): requires a >= 2 or a <= 0");
        }
        case DerivationKind::general: {
            QSeries lhs = zb(args).delta();
            QSeries rhs = eval_lincomb(delta_rhs_general(args), mcfg, &cache);
            return make_series_check("derivation/general",
                                     "args=" + format_ytilde(args) + " order=" + std::to_string(N), lhs, rhs);
        }
        case DerivationKind::kappa: {
            const int n = static_cast<int>(kappa.size());
            if (n < 1) throw std::invalid_argument("verify_derivation(kappa): empty coefficient list");
            QSeries lhs(N);
            for (int i = 1; i <= n; ++i) lhs += zb(Composition{-i, 0}).scaled(kappa[static_cast<size_t>(i - 1)]);
            QSeries rhs(N);
            for (int i = 1; i <= n; ++i) {
                Rational c(0);
                for (int j = 1; j <= n - i + 1; ++j) c += kappa[static_cast<size_t>(n - j)] / Rational(n + 2 - j);
                rhs += zb(Composition{-i}).delta().scaled(c);
                rhs -= zb(Composition{-i}).scaled(kappa[static_cast<size_t>(i - 1)]);
            }
            Rational c0(0);
            for (int i = 1; i <= n; ++i) c0 += kappa[static_cast<size_t>(i - 1)] / Rational(i + 1);
            rhs += (zb(Composition{0, 0}) + zb(Composition{0})).scaled(c0);
            std::ostringstream ps;
            ps << "kappa=(";
            for (int i = 0; i < n; ++i) ps << (i ? "," : "") << kappa[static_cast<size_t>(i)].str();
            ps << ") order=" << N;
            return make_series_check("derivation/kappa", ps.str(), lhs, rhs);
        }
        case DerivationKind::delta_via_double_shuffle: {
            if (args.depth() != 1 || args.e[0] <= 2)
                throw std::invalid_argument("verify_derivation(delta_via_double_shuffle): requires b > 2");
            int b = args.e[0];
            QSeries lhs = zb(Composition{b}).delta();
            QSeries rhs = eval_lincomb(delta_double_shuffle_rhs(b), mcfg, &cache);
            return make_series_check("derivation/delta-of-single",
                                     "b=" + std::to_string(b) + " order=" + std::to_string(N), lhs, rhs);
        }
    }
    throw std::logic_error("verify_derivation: unreachable");
}

CheckReport verify_regularization(const Composition& v, const EvalConfig& cfg, ProductEngine& eng, SeriesCache& cache) {
    if (v.depth() == 0 || v.e[0] < 2)
        throw std::invalid_argument("verify_regularization: v must be convergent (leading entry >= 2)");
    for (int n : v.e)
        if (n < 1) throw std::invalid_argument("verify_regularization: v must have entries >= 1");
    EvalConfig mcfg = cfg;
    mcfg.model = Model::modified;
    mcfg.pathway = Pathway::direct_sum;
    QLinComb diff = eng.q_shuffle_h1(Composition{1}, v);
    diff -= eng.q_quasi_shuffle_h1(Composition{1}, v);
    QSeries residual = eval_lincomb(diff, mcfg, &cache);
    return make_series_check("regularization/q-hoffman", "v=" + format_ytilde(v) + " order=" + std::to_string(cfg.order),
                             residual, QSeries(cfg.order));
}

CheckReport verify_regularization_classical(const YWord& u, long cap, double tail_budget) {
    if (u.length() == 0 || u.n[0] < 2)
        throw std::invalid_argument("verify_regularization_classical: u must be convergent");
    // x1 shuffle s(u) - s(y1 x- u), a combination of convergent X-words.
    LinComb<XWord, Rational> lhs = shuffle(XWord{1}, s_map(u));
    LinComb<YWord, Rational> stuffle = quasi_shuffle(YWord{1}, u);
    LinComb<XWord, Rational> rhs;
    for (const auto& [w, c] : stuffle.terms()) rhs.add(s_map(w), c);
    LinComb<XWord, Rational> comb = lhs - rhs;

    // Back to Y-words for the iterated-sum numerics: every word is x0 u' x1.
    LinComb<YWord, Rational> numeric;
    for (const auto& [w, c] : comb.terms()) {
        YWord y;
        int run = 0;
        for (uint8_t l : w.letters) {
            if (l == 0) {
                ++run;
            } else {
                y.n.push_back(run + 1);
                run = 0;
            }
        }
        if (run != 0) throw std::logic_error("regularization: divergent tail word");
        numeric.add(y, c);
    }
    NumericResult r = zeta_numeric(numeric, cap);
    CheckReport rep;
    rep.name = "regularization/classical";
    std::ostringstream ps;
    ps << "u=" << format_y(u) << " cap=" << cap << " tail=" << r.tail;
    rep.params = ps.str();
    rep.pass = std::abs(r.value) <= r.tail && r.tail <= tail_budget;
    if (!rep.pass) rep.witness = Witness{0, std::to_string(r.value), "0 within " + std::to_string(r.tail)};
    rep.notes.push_back("residual combination: " + format_lincomb(comb));
    return rep;
}

CheckReport verify_schlesinger(const Composition& w, const Rational& q0, long cap, int rel_bits) {
    if (w.depth() == 0 || w.e[0] < 2)
        throw std::invalid_argument("verify_schlesinger: w must have leading entry >= 2");
    for (int n : w.e)
        if (n < 1) throw std::invalid_argument("verify_schlesinger: w must have entries >= 1");
    CheckReport rep;
    rep.name = "schlesinger/diagram";
    std::ostringstream ps;
    ps << "w=" << format_ytilde(w) << " q0=" << q0.str() << " cap=" << cap;
    rep.params = ps.str();

    // Per-term identity 1 - (1-q0)[m] = q0^m, exact for every m up to cap.
    Rational qm(1), qsum(0);
    const Rational one(1);
    for (long m = 1; m <= cap; ++m) {
        qsum += qm;  // [m] = 1 + q0 + ... + q0^{m-1}
        qm *= q0;
        if (one - (one - q0) * qsum != qm) {
            rep.pass = false;
            rep.witness = Witness{static_cast<int>(m), (one - (one - q0) * qsum).str(), qm.str()};
            rep.notes.push_back("per-term identity 1 - (1-q)[m] = q^m failed");
            return rep;
        }
    }

    ExactNumeric lhs = numeric_eval_exact(apply_Tq(HLinComb::single(w)), Model::schlesinger, q0, cap);
    ExactNumeric rhs = numeric_eval_exact(w, Model::nonmodified, q0, cap);
    Rational diff = (lhs.value - rhs.value).abs();
    Rational budget = lhs.tail + rhs.tail;
    Rational rel_cap = rhs.value.abs();
    Rational two_pow = Rational(2).pow(rel_bits);
    bool close = diff <= budget;
    bool tight = budget * two_pow <= rel_cap;
    rep.pass = close && tight;
    if (!close) {
        rep.witness = Witness{0, lhs.value.str(), rhs.value.str()};
        rep.notes.push_back("legs differ by more than the combined truncation tails (" + budget.str() + ")");
    } else if (!tight) {
        rep.witness = Witness{0, budget.str(), (rel_cap / two_pow).str()};
        rep.notes.push_back("combined tails exceed the relative budget 2^-" + std::to_string(rel_bits));
    }
    return rep;
}

CheckReport verify_limit(const LimitSpec& spec, long cap) {
    CheckReport rep;
    rep.name = "limits/" + spec.label;
    std::ostringstream ps;
    ps << "target=" << spec.target << " tol=" << spec.tol;
    rep.params = ps.str();

    double prev_err = 0.0;
    bool first = true;
    rep.pass = true;
    for (double q : spec.grid) {
        long local_cap = std::max(cap, static_cast<long>(60.0 / (1.0 - q)));
        double value = 0.0;
        for (const auto& [w, c] : spec.combination.terms())
            value += c.to_double() * numeric_eval_double(w, Model::nonmodified, q, local_cap);
        value *= std::pow(1.0 - q, spec.extra_one_minus_q);
        double err = std::abs(value - spec.target);
        std::ostringstream note;
        note << "q=" << q << " value=" << value << " err=" << err;
        rep.notes.push_back(note.str());
        if (!first && spec.require_monotone && !(err < prev_err)) {
            rep.pass = false;
            rep.witness = Witness{0, "error " + std::to_string(err) + " at q=" + std::to_string(q),
                                  "strictly below " + std::to_string(prev_err)};
        }
        prev_err = err;
        first = false;
    }
    if (rep.pass && !(prev_err < spec.tol)) {
        rep.pass = false;
        rep.witness = Witness{0, "final error " + std::to_string(prev_err), "tol " + std::to_string(spec.tol)};
    }
    return rep;
}

CheckReport verify_convergence_bound(const Composition& w, const Rational& q0, long cap) {
    CheckReport rep;
    rep.name = "convergence/bound";
    rep.params = "w=" + format_ytilde(w) + " q0=" + q0.str();
    ExactNumeric v = numeric_eval_exact(w, Model::modified, q0, cap);
    Rational bound = zbar_abs_bound(w, q0);
    // All summands are positive for 0 < q0 < 1, so truncation + tail bounds
    // the true value from above.
    rep.pass = v.value.abs() + v.tail <= bound;
    if (!rep.pass) rep.witness = Witness{0, (v.value.abs() + v.tail).str(), bound.str()};
    return rep;
}

// ---------------------------------------------------------------------------
// Suites

std::vector<Composition> words_up_to(int max_depth, int lo, int hi) {
    std::vector<Composition> out;
    out.emplace_back();
    std::vector<Composition> frontier = out;
    for (int d = 1; d <= max_depth; ++d) {
        std::vector<Composition> next;
        for (const auto& w : frontier)
            for (int n = lo; n <= hi; ++n) {
                Composition w2 = w;
                w2.e.push_back(n);
                next.push_back(std::move(w2));
            }
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return out;
}

namespace {

int word_length(const Composition& w) { return word_stats(w).length; }

std::vector<std::array<Composition, 3>> seeded_triples(const SuiteConfig& cfg) {
    std::vector<Composition> pool;
    for (const auto& w : words_up_to(cfg.max_depth, cfg.lo, cfg.hi))
        if (word_length(w) <= 4) pool.push_back(w);
    std::mt19937_64 rng(cfg.seed);
    std::vector<std::array<Composition, 3>> triples;
    while (static_cast<int>(triples.size()) < cfg.triples) {
        const Composition& u = pool[rng() % pool.size()];
        const Composition& v = pool[rng() % pool.size()];
        const Composition& w = pool[rng() % pool.size()];
        if (word_length(u) + word_length(v) + word_length(w) > 9) continue;
        triples.push_back({u, v, w});
    }
    return triples;
}

}  // namespace

std::vector<CheckReport> suite_word_laws(const SuiteConfig& cfg) {
    std::vector<CheckReport> out;
    std::vector<Composition> words = words_up_to(cfg.max_depth, cfg.lo, cfg.hi);
    auto triples = seeded_triples(cfg);
    ProductEngine eng(/*canonicalize=*/false);

    for (ProductKind kind : {ProductKind::q_shuffle, ProductKind::q_quasi_shuffle, ProductKind::quasi_shuffle}) {
        auto reports = verify_word_laws(kind, words, triples, eng);
        out.insert(out.end(), reports.begin(), reports.end());
    }
    {
        auto reports = verify_shuffle_word_laws(4, 3);
        out.insert(out.end(), reports.begin(), reports.end());
    }

    // Structural links between the products: the T twist, the weight
    // grading, and the h = 1 degeneration implicit in both.
    ProductEngine ceng;
    const LaurentPoly h = LaurentPoly::h_power(1);
    Aggregator t_agg("word-laws/t-compatibility", "T(u x- v) = T(u) * T(v)");
    Aggregator tq_agg("word-laws/tq-compatibility", "T_q(u x-_q v) = T_q(u) * T_q(v)");
    Aggregator hsh_agg("word-laws/h-compatibility-shuffle", "H(u x_q v) = H(u) x H(v)");
    Aggregator hqsh_agg("word-laws/h-compatibility-quasi", "H(u x-_q v) = H(u) x- H(v)");
    for (size_t i = 0; i < words.size(); ++i)
        for (size_t j = i; j < words.size(); ++j) {
            const Composition& u = words[i];
            const Composition& v = words[j];
            const std::string label = format_ytilde(u) + " , " + format_ytilde(v);

            QLinComb t_lhs = apply_T(ceng.q_quasi_shuffle_h1(u, v));
            QLinComb t_rhs = ceng.star(apply_T(QLinComb::single(u)), apply_T(QLinComb::single(v)));
            t_agg.add(label, make_qlincomb_check("", "", t_lhs, t_rhs));

            HLinComb tq_lhs = apply_Tq(ceng.q_quasi_shuffle(u, v));
            HLinComb tq_rhs = ceng.star(apply_Tq(HLinComb::single(u)), apply_Tq(HLinComb::single(v)));
            tq_agg.add(label, make_hlincomb_check("", "", tq_lhs, tq_rhs));

            LaurentPoly scale = LaurentPoly::h_power(weight(u) + weight(v));
            HLinComb hsh_lhs = apply_H(ceng.q_shuffle(u, v), HDirection::forward);
            HLinComb hsh_rhs = to_h(ceng.q_shuffle_h1(u, v)).scaled(scale);
            hsh_agg.add(label, make_hlincomb_check("", "", hsh_lhs, hsh_rhs));

            HLinComb hq_lhs = apply_H(ceng.q_quasi_shuffle(u, v), HDirection::forward);
            HLinComb hq_rhs = to_h(ceng.q_quasi_shuffle_h1(u, v)).scaled(scale);
            hqsh_agg.add(label, make_hlincomb_check("", "", hq_lhs, hq_rhs));
        }
    out.push_back(t_agg.finish());
    out.push_back(tq_agg.finish());
    out.push_back(hsh_agg.finish());
    out.push_back(hqsh_agg.finish());

    // Weight filtration. The quasi-shuffle side holds for any letters (hard
    // check). The shuffle side is scanned as printed: the d-d rule raises
    // weight, so mismatches are reported as erratum candidates.
    {
        Aggregator agg("word-laws/weight-filtration-quasi", "w(term) <= w(u) + w(v)");
        CheckReport sh_scan;
        sh_scan.name = "word-laws/weight-filtration-shuffle-as-claimed";
        sh_scan.params = "w(term) <= w(u) + w(v)";
        sh_scan.advisory = true;
        sh_scan.pass = true;
        for (size_t i = 0; i < words.size(); ++i)
            for (size_t j = i; j < words.size(); ++j) {
                const Composition& u = words[i];
                const Composition& v = words[j];
                int total = weight(u) + weight(v);
                bool ok = true;
                QLinComb qq = ceng.q_quasi_shuffle_h1(u, v);
                for (const auto& [w, c] : qq.terms()) ok = ok && weight(w) <= total;
                agg.add(format_ytilde(u) + " , " + format_ytilde(v), ok);

                if (sh_scan.pass) {
                    QLinComb sh = ceng.q_shuffle_h1(u, v);
                    for (const auto& [w, c] : sh.terms())
                        if (weight(w) > total) {
                            sh_scan.pass = false;
                            sh_scan.witness = Witness{weight(w), format_ytilde(u) + " x " + format_ytilde(v) +
                                                                     " contains " + format_ytilde(w),
                                                      "weight <= " + std::to_string(total)};
                            sh_scan.notes.push_back(
                                "erratum-candidate: the filtration claim fails for the q-shuffle once negative "
                                "letters appear; the finite-difference rule raises weight");
                            break;
                        }
                }
            }
        out.push_back(agg.finish());
        out.push_back(sh_scan);
    }
    return out;
}

std::vector<CheckReport> suite_homomorphism(const SuiteConfig& cfg) {
    std::vector<CheckReport> out;
    std::vector<Composition> words = words_up_to(cfg.max_depth, cfg.lo, cfg.hi);
    ProductEngine eng;
    SeriesCache cache;
    EvalConfig ecfg;
    ecfg.order = cfg.order;

    {
        Aggregator agg("evaluator/dual-pathway", std::to_string(words.size()) + " words, order=" + std::to_string(cfg.order));
        for (const auto& w : words)
            agg.add(format_ytilde(w), make_series_check("", "", zbar_series_direct(w, cfg.order),
                                                        zbar_series_jackson(w, cfg.order)));
        out.push_back(agg.finish());
    }

    for (ProductKind kind : {ProductKind::q_shuffle, ProductKind::q_quasi_shuffle, ProductKind::q_shuffle_graded,
                             ProductKind::q_quasi_shuffle_graded}) {
        Aggregator agg(std::string("homomorphism/") + product_kind_name(kind),
                       std::to_string(words.size()) + " words, order=" + std::to_string(cfg.order));
        for (size_t i = 0; i < words.size(); ++i)
            for (size_t j = i; j < words.size(); ++j)
                agg.add(format_ytilde(words[i]) + " , " + format_ytilde(words[j]),
                        verify_homomorphism(kind, words[i], words[j], ecfg, eng, cache));
        out.push_back(agg.finish());
    }

    {
        Aggregator agg("homomorphism/cross-relation", std::to_string(words.size()) + " words");
        for (size_t i = 0; i < words.size(); ++i)
            for (size_t j = i; j < words.size(); ++j)
                agg.add(format_ytilde(words[i]) + " , " + format_ytilde(words[j]),
                        verify_cross_relation(words[i], words[j], ecfg, eng, cache));
        out.push_back(agg.finish());
    }

    // Named consequences of the double q-shuffle relations.
    const int N = cfg.order;
    {
        QSeries lhs = cache.zbar(Composition{3}, N) - cache.zbar(Composition{2}, N);
        out.push_back(make_series_check("homomorphism/q-euler-relation", "order=" + std::to_string(N), lhs,
                                        cache.zbar(Composition{2, 1}, N)));
    }
    {
        QSeries rhs = cache.zbar(Composition{1, 0}, N) + cache.zbar(Composition{1}, N);
        out.push_back(
            make_series_check("homomorphism/weight-two-relation", "order=" + std::to_string(N),
                              cache.zbar(Composition{2}, N), rhs));
    }
    {
        Aggregator agg("homomorphism/quasi-shuffle-display", "2 <= a <= b <= 5, order=" + std::to_string(N));
        for (int a = 2; a <= 5; ++a)
            for (int b = a; b <= 5; ++b) {
                QSeries lhs = cache.zbar(Composition{a}, N) * cache.zbar(Composition{b}, N);
                QSeries rhs = cache.zbar(Composition{a, b}, N) + cache.zbar(Composition{b, a}, N) +
                              cache.zbar(Composition{a + b}, N) - cache.zbar(Composition{a, b - 1}, N) -
                              cache.zbar(Composition{b, a - 1}, N) - cache.zbar(Composition{a + b - 1}, N);
                agg.add("a=" + std::to_string(a) + " b=" + std::to_string(b), make_series_check("", "", lhs, rhs));
            }
        out.push_back(agg.finish());
    }
    return out;
}

std::vector<CheckReport> suite_operator_laws(const SuiteConfig& cfg) {
    std::vector<CheckReport> out;
    bool first = true;
    for (int a = 2; a <= 4; ++a)
        for (int b = a; b <= 4; ++b) {
            auto reports = verify_operator_laws(a, b, cfg.op_order, cfg.seed + static_cast<unsigned>(16 * a + b),
                                                cfg.op_samples, first);
            out.insert(out.end(), reports.begin(), reports.end());
            first = false;
        }
    return out;
}

std::vector<CheckReport> suite_euler(const SuiteConfig& cfg) {
    std::vector<CheckReport> out;
    SeriesCache cache;
    EvalConfig ecfg;
    ecfg.order = cfg.order;
    for (int a = 2; a <= 4; ++a)
        for (int b = a; b <= 4; ++b)
            for (EulerCase c : {EulerCase::pos_pos, EulerCase::neg_neg, EulerCase::neg_pos}) {
                auto reports = verify_euler(a, b, c, ecfg, cache);
                out.insert(out.end(), reports.begin(), reports.end());
            }

    const int N = cfg.order;
    {
        // delta zbar(2) expressed through the double q-shuffle relations.
        QSeries lhs = cache.zbar(Composition{2}, N).delta();
        QSeries rhs = cache.zbar(Composition{3, 1}, N).scaled(Rational(4)) -
                      cache.zbar(Composition{2, 1}, N).scaled(Rational(2)) - cache.zbar(Composition{2}, N) +
                      cache.zbar(Composition{3}, N).scaled(Rational(3)) - cache.zbar(Composition{4}, N);
        out.push_back(make_series_check("euler/delta-weight-two", "order=" + std::to_string(N), lhs, rhs));
    }
    {
        // Consistency of the Euler decomposition with the derivation family:
        // eliminating the delta term leaves a pure relation.
        QSeries lhs = cache.zbar(Composition{3, 1}, N).scaled(Rational(4)) -
                      cache.zbar(Composition{2, 1}, N).scaled(Rational(2)) -
                      cache.zbar(Composition{3, 0}, N).scaled(Rational(2)) + cache.zbar(Composition{2, 0}, N);
        QSeries rhs = cache.zbar(Composition{4}, N) - cache.zbar(Composition{3}, N);
        out.push_back(make_series_check("euler/derivation-consistency", "order=" + std::to_string(N), lhs, rhs));
    }
    return out;
}

std::vector<CheckReport> suite_derivation(const SuiteConfig& cfg) {
    std::vector<CheckReport> out;
    SeriesCache cache;
    EvalConfig ecfg;
    ecfg.order = cfg.order;

    for (int a : {2, 1, 0, -1, -2}) {
        CheckReport rep = verify_derivation(Composition{a}, ecfg, DerivationKind::single, cache);
        rep.name = "derivation/example-a=" + std::to_string(a);
        out.push_back(std::move(rep));
    }
    {
        Aggregator agg("derivation/single-range", "a in [-3,4]");
        for (int a = -3; a <= 4; ++a)
            agg.add("a=" + std::to_string(a), verify_derivation(Composition{a}, ecfg, DerivationKind::single, cache));
        out.push_back(agg.finish());
    }
    {
        Aggregator agg("derivation/telescoped", "positive a in [2,5], negative a in [-3,0]");
        for (int a = 2; a <= 5; ++a)
            agg.add("a=" + std::to_string(a), verify_derivation(Composition{a}, ecfg, DerivationKind::telescoped, cache));
        for (int a = 0; a >= -3; --a)
            agg.add("a=" + std::to_string(a), verify_derivation(Composition{a}, ecfg, DerivationKind::telescoped, cache));
        out.push_back(agg.finish());
    }
    {
        Aggregator agg("derivation/general", "depth <= 3, entries in [-2,3], order=" + std::to_string(cfg.order));
        for (int d = 1; d <= 3; ++d) {
            std::vector<Composition> words;
            std::function<void(Composition)> gen = [&](Composition w) {
                if (w.depth() == d) {
                    words.push_back(w);
                    return;
                }
                for (int n = -2; n <= 3; ++n) {
                    Composition w2 = w;
                    w2.e.push_back(n);
                    gen(std::move(w2));
                }
            };
            gen(Composition{});
            for (const auto& w : words)
                agg.add(format_ytilde(w), verify_derivation(w, ecfg, DerivationKind::general, cache));
        }
        out.push_back(agg.finish());
    }
    for (const auto& kappa : std::vector<std::vector<Rational>>{
             {Rational(1)}, {Rational(1), Rational(1)}, {Rational(2), Rational(-1)}}) {
        out.push_back(verify_derivation(Composition{}, ecfg, DerivationKind::kappa, cache, kappa));
    }
    for (int b : {3, 4, 5})
        out.push_back(verify_derivation(Composition{b}, ecfg, DerivationKind::delta_via_double_shuffle, cache));
    return out;
}

std::vector<CheckReport> suite_regularization(const SuiteConfig& cfg) {
    std::vector<CheckReport> out;
    ProductEngine eng;
    SeriesCache cache;
    EvalConfig ecfg;
    ecfg.order = cfg.order;
    const std::vector<Composition> vs = {Composition{2}, Composition{3}, Composition{2, 1}, Composition{3, 1}};
    for (const auto& v : vs) {
        out.push_back(verify_regularization(v, ecfg, eng, cache));

        // Non-modified variant: the graded relation with h sent to 1 - q.
        HLinComb diff = eng.q_shuffle(Composition{1}, v);
        diff -= eng.q_quasi_shuffle(Composition{1}, v);
        EvalConfig ncfg = ecfg;
        ncfg.model = Model::nonmodified;
        out.push_back(make_series_check("regularization/q-hoffman-nonmodified",
                                        "v=" + format_ytilde(v) + " order=" + std::to_string(cfg.order),
                                        eval_lincomb(diff, ncfg, &cache), QSeries(cfg.order)));

        // As printed, the non-modified relation uses the ungraded products;
        // that reading fails and is reported as an erratum candidate.
        QLinComb udiff = eng.q_shuffle_h1(Composition{1}, v);
        udiff -= eng.q_quasi_shuffle_h1(Composition{1}, v);
        CheckReport rep = make_series_check("regularization/q-hoffman-nonmodified-as-printed",
                                            "v=" + format_ytilde(v) + " order=" + std::to_string(cfg.order),
                                            eval_lincomb(udiff, ncfg, &cache), QSeries(cfg.order));
        rep.advisory = true;
        if (!rep.pass)
            rep.notes.push_back(
                "erratum-candidate: the printed non-modified relation uses the ungraded products; it holds with "
                "the weight-graded products under h = 1 - q (see q-hoffman-nonmodified)");
        out.push_back(std::move(rep));
    }
    out.push_back(verify_regularization_classical(YWord{2}, 1L << 25, 1e-6));
    return out;
}

std::vector<CheckReport> suite_schlesinger(const SuiteConfig& cfg) {
    std::vector<CheckReport> out;
    long cap = std::max<long>(cfg.term_cap, 80);
    std::vector<Rational> points = {Rational(2), Rational(3)};
    if (cfg.q0) points = {*cfg.q0};
    for (const Rational& q0 : points)
        for (const auto& w : {Composition{2}, Composition{3}, Composition{2, 1}})
            out.push_back(verify_schlesinger(w, q0, cap, 60));
    return out;
}

std::vector<CheckReport> suite_limits(const SuiteConfig& cfg) {
    const double pi2_6 = 1.6449340668482264;
    const double zeta3 = 1.2020569031595943;
    std::vector<CheckReport> out;
    {
        LimitSpec s;
        s.combination = QLinComb::single(Composition{2});
        s.grid = {0.9, 0.99, 0.999};
        s.target = pi2_6;
        s.tol = cfg.tol;
        s.label = "weight-two";
        out.push_back(verify_limit(s, cfg.term_cap));
    }
    {
        LimitSpec s;
        s.combination = QLinComb::single(Composition{3});
        s.grid = {0.9, 0.99, 0.999};
        s.target = zeta3;
        s.tol = cfg.tol;
        s.label = "weight-three";
        out.push_back(verify_limit(s, cfg.term_cap));
    }
    {
        LimitSpec s;
        s.combination = QLinComb::single(Composition{1, 0});
        s.combination.add(Composition{1}, Rational(1));
        s.extra_one_minus_q = 1;
        s.grid = {0.9, 0.99, 0.999};
        s.target = pi2_6;
        s.tol = cfg.tol;
        s.label = "weight-two-via-relation";
        out.push_back(verify_limit(s, cfg.term_cap));
    }
    {
        LimitSpec s;
        s.combination = QLinComb::single(Composition{2, 1});
        s.combination.add(Composition{3}, Rational(-1));
        s.grid = {0.9, 0.99, 0.999};
        s.target = 0.0;
        s.tol = 2 * cfg.tol;
        s.require_monotone = false;
        s.label = "euler-pair";
        out.push_back(verify_limit(s, cfg.term_cap));
    }
    return out;
}

std::vector<CheckReport> run_suite(const std::string& name, const SuiteConfig& cfg) {
    if (name == "word-laws") return suite_word_laws(cfg);
    if (name == "homomorphism") return suite_homomorphism(cfg);
    if (name == "operator-laws") return suite_operator_laws(cfg);
    if (name == "euler") return suite_euler(cfg);
    if (name == "derivation") return suite_derivation(cfg);
    if (name == "regularization") return suite_regularization(cfg);
    if (name == "schlesinger") return suite_schlesinger(cfg);
    if (name == "limits") return suite_limits(cfg);
    if (name == "all") {
        std::vector<CheckReport> out;
        for (const char* s : {"word-laws", "homomorphism", "operator-laws", "euler", "derivation", "regularization",
                              "schlesinger", "limits"}) {
            auto r = run_suite(s, cfg);
            out.insert(out.end(), r.begin(), r.end());
        }
        return out;
    }
    throw std::invalid_argument("unknown suite: " + name);
}

bool all_passed(const std::vector<CheckReport>& reports) {
    return std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.pass || r.advisory; });
}

}  // namespace qmzv

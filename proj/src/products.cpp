#include "qmzv/products.hpp"

namespace qmzv {

const char* product_kind_name(ProductKind k) {
    switch (k) {
        case ProductKind::shuffle_X: return "shuffle";
        case ProductKind::quasi_shuffle: return "quasi-shuffle";
        case ProductKind::q_shuffle: return "q-shuffle";
        case ProductKind::q_quasi_shuffle: return "q-quasi-shuffle";
        case ProductKind::q_shuffle_graded: return "q-shuffle-graded";
        case ProductKind::q_quasi_shuffle_graded: return "q-quasi-shuffle-graded";
    }
    return "?";
}

LinComb<XWord, Rational> shuffle(const XWord& u, const XWord& v) {
    if (u.empty()) return LinComb<XWord, Rational>::single(v);
    if (v.empty()) return LinComb<XWord, Rational>::single(u);
    XWord ut{}, vt{};
    ut.letters.assign(u.letters.begin() + 1, u.letters.end());
    vt.letters.assign(v.letters.begin() + 1, v.letters.end());
    auto prefix = [](uint8_t a, const LinComb<XWord, Rational>& l) {
        return l.map_words([a](const XWord& w) {
            XWord r;
            r.letters.reserve(w.letters.size() + 1);
            r.letters.push_back(a);
            r.letters.insert(r.letters.end(), w.letters.begin(), w.letters.end());
            return r;
        });
    };
    auto left = prefix(u.letters[0], shuffle(ut, v));
    auto right = prefix(v.letters[0], shuffle(u, vt));
    return left + right;
}

LinComb<XWord, Rational> shuffle(const LinComb<XWord, Rational>& u, const LinComb<XWord, Rational>& v) {
    LinComb<XWord, Rational> r;
    for (const auto& [wu, cu] : u.terms())
        for (const auto& [wv, cv] : v.terms()) r += shuffle(wu, wv).scaled(cu * cv);
    return r;
}

namespace {

Composition z_tail(const Composition& w) {
    Composition t;
    t.e.assign(w.e.begin() + 1, w.e.end());
    return t;
}

Composition z_prefixed(int n, const Composition& w) {
    Composition r;
    r.e.reserve(w.e.size() + 1);
    r.e.push_back(n);
    r.e.insert(r.e.end(), w.e.begin(), w.e.end());
    return r;
}

}  // namespace

QLinComb quasi_shuffle(const Composition& u, const Composition& v) {
    if (u.empty()) return QLinComb::single(v);
    if (v.empty()) return QLinComb::single(u);
    int a = u.e.front(), b = v.e.front();
    Composition ut = z_tail(u), vt = z_tail(v);
    auto prefix = [](int n, const QLinComb& l) {
        return l.map_words([n](const Composition& w) { return z_prefixed(n, w); });
    };
    return prefix(a, quasi_shuffle(ut, v)) + prefix(b, quasi_shuffle(u, vt)) +
           prefix(a + b, quasi_shuffle(ut, vt));
}

LinComb<YWord, Rational> quasi_shuffle(const YWord& u, const YWord& v) {
    QLinComb z = quasi_shuffle(Composition(u.n), Composition(v.n));
    LinComb<YWord, Rational> r;
    for (const auto& [w, c] : z.terms()) {
        YWord y;
        y.n = w.e;
        r.add(y, c);
    }
    return r;
}

LinComb<YWord, Rational> quasi_shuffle(const LinComb<YWord, Rational>& u, const LinComb<YWord, Rational>& v) {
    LinComb<YWord, Rational> r;
    for (const auto& [wu, cu] : u.terms())
        for (const auto& [wv, cv] : v.terms()) r += quasi_shuffle(wu, wv).scaled(cu * cv);
    return r;
}

QLinComb apply_T(const QLinComb& l) {
    QLinComb r;
    for (const auto& [w, c] : l.terms()) {
        r.add(w, c);
        if (!w.empty()) {
            Composition w2 = w;
            w2.e.front() -= 1;
            r.add(w2, -c);
        }
    }
    return r;
}

HLinComb apply_Tq(const HLinComb& l) {
    const LaurentPoly h = LaurentPoly::h_power(1);
    HLinComb r;
    for (const auto& [w, c] : l.terms()) {
        r.add(w, c);
        if (!w.empty()) {
            Composition w2 = w;
            w2.e.front() -= 1;
            r.add(w2, LaurentPoly() - h * c);
        }
    }
    return r;
}

HLinComb apply_H(const HLinComb& l, HDirection dir) {
    HLinComb r;
    for (const auto& [w, c] : l.terms()) {
        int e = weight(w);
        if (dir == HDirection::inverse) e = -e;
        r.add(w, LaurentPoly::h_power(e) * c);
    }
    return r;
}

namespace {

enum class Lead { p, d, y };

Lead lead_letter(const Composition& w) {
    int n = w.e.front();
    return n > 0 ? Lead::p : (n < 0 ? Lead::d : Lead::y);
}

// Drops the leading letter of the normal-form word over {p, d, y}.
Composition w_tail(const Composition& w) {
    Composition t = w;
    int n = w.e.front();
    if (n > 0) {
        t.e.front() = n - 1;
    } else if (n < 0) {
        t.e.front() = n + 1;
    } else {
        t.e.erase(t.e.begin());
    }
    return t;
}

// Letter prefixes in the dp = pd = 1 normalization. p and d only ever apply
// to non-empty words here (every word in a product of non-empty words ends
// with y).
Composition w_prefix_p(const Composition& w) {
    Composition r = w;
    r.e.front() += 1;
    return r;
}
Composition w_prefix_d(const Composition& w) {
    Composition r = w;
    r.e.front() -= 1;
    return r;
}
Composition w_prefix_y(const Composition& w) { return z_prefixed(0, w); }

HLinComb map_p(const HLinComb& l) { return l.map_words(w_prefix_p); }
HLinComb map_d(const HLinComb& l) { return l.map_words(w_prefix_d); }
HLinComb map_y(const HLinComb& l) { return l.map_words(w_prefix_y); }

}  // namespace

ProductEngine::Key ProductEngine::make_key(const Composition& u, const Composition& v) const {
    if (canonicalize_ && WordOrder<Composition>{}(v, u)) return Key{v, u};
    return Key{u, v};
}

HLinComb ProductEngine::q_shuffle(const Composition& u, const Composition& v) {
    if (u.empty()) return HLinComb::single(v);
    if (v.empty()) return HLinComb::single(u);
    Key key = make_key(u, v);
    if (auto it = qsh_memo_.find(key); it != qsh_memo_.end()) return it->second;

    const Composition& a = key.first;
    const Composition& b = key.second;
    Lead la = lead_letter(a), lb = lead_letter(b);
    HLinComb result;
    const LaurentPoly h = LaurentPoly::h_power(1);
    const LaurentPoly hinv = LaurentPoly::h_power(-1);

    if (la == Lead::y) {
        result = map_y(q_shuffle(w_tail(a), b));
    } else if (lb == Lead::y) {
        result = map_y(q_shuffle(a, w_tail(b)));
    } else if (la == Lead::p && lb == Lead::p) {
        // pa' x pb' = p(a' x pb') + p(pa' x b') - h p(a' x b')
        result = map_p(q_shuffle(w_tail(a), b)) + map_p(q_shuffle(a, w_tail(b))) -
                 map_p(q_shuffle(w_tail(a), w_tail(b))).scaled(h);
    } else if (la == Lead::d && lb == Lead::d) {
        // h (da' x db') = a' x db' + da' x b' - d(a' x b')
        result = (q_shuffle(w_tail(a), b) + q_shuffle(a, w_tail(b)) -
                  map_d(q_shuffle(w_tail(a), w_tail(b))))
                     .scaled(hinv);
    } else {
        // One d and one p; arrange as da' x pb'.
        const Composition& dw = la == Lead::d ? a : b;
        const Composition& pw = la == Lead::d ? b : a;
        // da' x pb' = d(a' x pb') - a' x b' + h (da' x b')
        result = map_d(q_shuffle(w_tail(dw), pw)) - q_shuffle(w_tail(dw), w_tail(pw)) +
                 q_shuffle(dw, w_tail(pw)).scaled(h);
    }

    return qsh_memo_.emplace(std::move(key), std::move(result)).first->second;
}

QLinComb ProductEngine::star(const Composition& u, const Composition& v) {
    if (u.empty()) return QLinComb::single(v);
    if (v.empty()) return QLinComb::single(u);
    Key key = make_key(u, v);
    if (auto it = star_memo_.find(key); it != star_memo_.end()) return it->second;

    const Composition& a = key.first;
    const Composition& b = key.second;
    int m = a.e.front(), n = b.e.front();
    Composition at = z_tail(a), bt = z_tail(b);
    auto prefix = [](int k, const QLinComb& l) {
        return l.map_words([k](const Composition& w) { return z_prefixed(k, w); });
    };
    QLinComb result = prefix(m, star(at, b)) + prefix(n, star(a, bt)) + prefix(m + n, star(at, bt));
    return star_memo_.emplace(std::move(key), std::move(result)).first->second;
}

HLinComb ProductEngine::q_quasi_shuffle(const Composition& u, const Composition& v) {
    if (u.empty()) return HLinComb::single(v);
    if (v.empty()) return HLinComb::single(u);
    Key key = make_key(u, v);
    if (auto it = qqsh_memo_.find(key); it != qqsh_memo_.end()) return it->second;

    const Composition& a = key.first;
    const Composition& b = key.second;
    int m = a.e.front(), n = b.e.front();
    Composition at = z_tail(a), bt = z_tail(b);

    auto prefix = [](int k, const HLinComb& l) {
        return l.map_words([k](const Composition& w) { return z_prefixed(k, w); });
    };
    // z_m a' qx z_n b' = z_m(a' * T_q(z_n b')) + z_n(T_q(z_m a') * b')
    //                    + T_q(z_{m+n}(a' * b'))
    HLinComb ab = to_h(star(at, bt));
    HLinComb t1 = prefix(m, star(HLinComb::single(at), apply_Tq(HLinComb::single(b))));
    HLinComb t2 = prefix(n, star(apply_Tq(HLinComb::single(a)), HLinComb::single(bt)));
    HLinComb t3 = apply_Tq(prefix(m + n, ab));
    HLinComb result = t1 + t2 + t3;
    return qqsh_memo_.emplace(std::move(key), std::move(result)).first->second;
}

QLinComb ProductEngine::q_shuffle_h1(const Composition& u, const Composition& v) {
    return at_h_one(q_shuffle(u, v));
}

QLinComb ProductEngine::q_quasi_shuffle_h1(const Composition& u, const Composition& v) {
    return at_h_one(q_quasi_shuffle(u, v));
}

HLinComb ProductEngine::q_shuffle(const HLinComb& u, const HLinComb& v) {
    HLinComb r;
    for (const auto& [wu, cu] : u.terms())
        for (const auto& [wv, cv] : v.terms()) r += q_shuffle(wu, wv).scaled(cu * cv);
    return r;
}

HLinComb ProductEngine::q_quasi_shuffle(const HLinComb& u, const HLinComb& v) {
    HLinComb r;
    for (const auto& [wu, cu] : u.terms())
        for (const auto& [wv, cv] : v.terms()) r += q_quasi_shuffle(wu, wv).scaled(cu * cv);
    return r;
}

QLinComb ProductEngine::q_shuffle_h1(const QLinComb& u, const QLinComb& v) {
    QLinComb r;
    for (const auto& [wu, cu] : u.terms())
        for (const auto& [wv, cv] : v.terms()) r += q_shuffle_h1(wu, wv).scaled(cu * cv);
    return r;
}

QLinComb ProductEngine::q_quasi_shuffle_h1(const QLinComb& u, const QLinComb& v) {
    QLinComb r;
    for (const auto& [wu, cu] : u.terms())
        for (const auto& [wv, cv] : v.terms()) r += q_quasi_shuffle_h1(wu, wv).scaled(cu * cv);
    return r;
}

QLinComb ProductEngine::star(const QLinComb& u, const QLinComb& v) {
    QLinComb r;
    for (const auto& [wu, cu] : u.terms())
        for (const auto& [wv, cv] : v.terms()) r += star(wu, wv).scaled(cu * cv);
    return r;
}

HLinComb ProductEngine::star(const HLinComb& u, const HLinComb& v) {
    HLinComb r;
    for (const auto& [wu, cu] : u.terms())
        for (const auto& [wv, cv] : v.terms()) r += to_h(star(wu, wv)).scaled(cu * cv);
    return r;
}

HLinComb ProductEngine::product(ProductKind kind, const Composition& u, const Composition& v) {
    switch (kind) {
        case ProductKind::quasi_shuffle: return to_h(star(u, v));
        case ProductKind::q_shuffle: return to_h(q_shuffle_h1(u, v));
        case ProductKind::q_quasi_shuffle: return to_h(q_quasi_shuffle_h1(u, v));
        case ProductKind::q_shuffle_graded: return q_shuffle(u, v);
        case ProductKind::q_quasi_shuffle_graded: return q_quasi_shuffle(u, v);
        case ProductKind::shuffle_X: break;
    }
    throw std::invalid_argument("product: the X-alphabet shuffle takes XWord arguments");
}

}  // namespace qmzv

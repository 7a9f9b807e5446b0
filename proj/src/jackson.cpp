#include "qmzv/jackson.hpp"

#include <algorithm>
#include <sstream>

namespace qmzv {

TQSeries TQSeries::monomial(int i, int j, const Rational& c, int order) {
    TQSeries f(order);
    if (i < 0 || j < 0) throw std::invalid_argument("TQSeries: negative exponent");
    f.add_term(i, j, c);
    return f;
}

bool TQSeries::in_A() const {
    for (const auto& [ij, c] : terms_)
        if (ij.first == 0) return false;
    return true;
}

void TQSeries::add_term(int i, int j, const Rational& c) {
    if (c.is_zero() || i + j > order_) return;
    auto key = std::make_pair(i, j);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TQSeries operator+(const TQSeries& a, const TQSeries& b) {
    TQSeries r(std::min(a.order_, b.order_));
    for (const auto& [ij, c] : a.terms_) r.add_term(ij.first, ij.second, c);
    for (const auto& [ij, c] : b.terms_) r.add_term(ij.first, ij.second, c);
    return r;
}

TQSeries operator-(const TQSeries& a, const TQSeries& b) {
    TQSeries r(std::min(a.order_, b.order_));
    for (const auto& [ij, c] : a.terms_) r.add_term(ij.first, ij.second, c);
    for (const auto& [ij, c] : b.terms_) r.add_term(ij.first, ij.second, -c);
    return r;
}

TQSeries operator*(const TQSeries& a, const TQSeries& b) {
    TQSeries r(std::min(a.order_, b.order_));
    for (const auto& [ij, c] : a.terms_) {
        if (ij.first + ij.second > r.order_) continue;
        for (const auto& [kl, d] : b.terms_) r.add_term(ij.first + kl.first, ij.second + kl.second, c * d);
    }
    return r;
}

TQSeries TQSeries::operator-() const {
    TQSeries r(order_);
    for (const auto& [ij, c] : terms_) r.terms_[ij] = -c;
    return r;
}

TQSeries TQSeries::scaled(const Rational& c) const {
    TQSeries r(order_);
    if (c.is_zero()) return r;
    for (const auto& [ij, v] : terms_) r.terms_[ij] = v * c;
    return r;
}

TQSeries TQSeries::t_shifted(int k) const {
    if (k < 0) throw std::invalid_argument("TQSeries: negative t-shift");
    TQSeries r(order_);
    for (const auto& [ij, c] : terms_) r.add_term(ij.first + k, ij.second, c);
    return r;
}

TQSeries TQSeries::times_one_minus_q() const {
    TQSeries r(order_);
    for (const auto& [ij, c] : terms_) {
        r.add_term(ij.first, ij.second, c);
        r.add_term(ij.first, ij.second + 1, -c);
    }
    return r;
}

bool operator==(const TQSeries& a, const TQSeries& b) {
    // Compare up to the common total-degree order.
    int n = std::min(a.order_, b.order_);
    auto within = [n](const std::pair<int, int>& ij) { return ij.first + ij.second <= n; };
    for (const auto& [ij, c] : a.terms_) {
        if (!within(ij)) continue;
        auto it = b.terms_.find(ij);
        if (it == b.terms_.end() || it->second != c) return false;
    }
    for (const auto& [ij, c] : b.terms_) {
        if (!within(ij)) continue;
        if (a.terms_.find(ij) == a.terms_.end()) return false;
    }
    return true;
}

std::string TQSeries::debug_string() const {
    std::ostringstream os;
    for (const auto& [ij, c] : terms_) os << "(" << ij.first << "," << ij.second << "): " << c.str() << "\n";
    return os.str();
}

TQSeries apply_Eq(const TQSeries& f) {
    TQSeries r(f.order());
    for (const auto& [ij, c] : f.terms()) r.add_term(ij.first, ij.second + ij.first, c);
    return r;
}

TQSeries apply_Dq(const TQSeries& f) {
    return f - apply_Eq(f);
}

TQSeries apply_Pq(const TQSeries& f) {
    if (!f.in_A())
        throw std::domain_error("apply_Pq: input has t-valuation 0; the q-summation diverges termwise");
    TQSeries r(f.order());
    for (const auto& [ij, c] : f.terms()) {
        // t^i q^j * (1 + q^i + q^{2i} + ...) under the total-degree bound
        int i = ij.first, j = ij.second;
        for (int deg = i + j; deg <= f.order(); deg += i) {
            r.add_term(i, deg - i, c);
        }
    }
    return r;
}

TQSeries apply_Pq_pow(const TQSeries& f, int n) {
    TQSeries r = f;
    for (int k = 0; k < n; ++k) r = apply_Pq(r);
    for (int k = 0; k < -n; ++k) r = apply_Dq(r);
    return r;
}

TQSeries apply_J(const TQSeries& f) {
    return apply_Pq(f.t_shifted(1)).times_one_minus_q();
}

TQSeries gen_ybar(int order) {
    TQSeries f(order);
    for (int i = 1; i <= order; ++i) f.add_term(i, 0, Rational(1));
    return f;
}

TQSeries gen_y(int order) {
    TQSeries f(order);
    for (int i = 0; i <= order; ++i) f.add_term(i, 0, Rational(1));
    return f;
}

TQSeries gen_function(GenFunction which, int order) {
    switch (which) {
        case GenFunction::ybar: return gen_ybar(order);
        case GenFunction::y: return gen_y(order);
        case GenFunction::x: break;
    }
    throw std::invalid_argument("gen_function: x = 1/t is not representable as a power series");
}

TQSeries calZ(const Composition& w, int order) {
    if (w.empty()) return TQSeries::unit(order);
    TQSeries g = apply_Pq_pow(gen_ybar(order), w.e.back());
    for (int r = w.depth() - 2; r >= 0; --r) {
        g = apply_Pq_pow(gen_ybar(order) * g, w.e[static_cast<size_t>(r)]);
    }
    return g;
}

TQSeries calZ(const QLinComb& l, int order) {
    TQSeries acc(order);
    for (const auto& [w, c] : l.terms()) acc += calZ(w, order).scaled(c);
    return acc;
}

QSeries subst_diag(const TQSeries& f) {
    QSeries s(f.order());
    for (const auto& [ij, c] : f.terms()) s.add_coeff(ij.first + ij.second, c);
    return s;
}

}  // namespace qmzv

#include "qmzv/powerseries.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <sstream>

namespace qmzv {

namespace {
using ojson = nlohmann::ordered_json;
}

QSeries QSeries::constant(const Rational& c, int order) {
    QSeries s(order);
    s.c_[0] = c;
    return s;
}

QSeries QSeries::monomial(int k, const Rational& c, int order) {
    QSeries s(order);
    if (k < 0) throw std::invalid_argument("QSeries: negative exponent");
    if (k <= order) s.c_[static_cast<size_t>(k)] = c;
    return s;
}

bool QSeries::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x.is_zero(); });
}

std::optional<int> QSeries::first_mismatch(const QSeries& a, const QSeries& b) {
    int n = std::min(a.order(), b.order());
    for (int k = 0; k <= n; ++k)
        if (a.c_[static_cast<size_t>(k)] != b.c_[static_cast<size_t>(k)]) return k;
    return std::nullopt;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
    QSeries r(std::min(a.order(), b.order()));
    for (int k = 0; k <= r.order(); ++k) r.c_[k] = a.c_[k] + b.c_[k];
    return r;
}

QSeries operator-(const QSeries& a, const QSeries& b) {
    QSeries r(std::min(a.order(), b.order()));
    for (int k = 0; k <= r.order(); ++k) r.c_[k] = a.c_[k] - b.c_[k];
    return r;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
    QSeries r(std::min(a.order(), b.order()));
    int n = r.order();
    for (int i = 0; i <= n; ++i) {
        if (a.c_[static_cast<size_t>(i)].is_zero()) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (b.c_[static_cast<size_t>(j)].is_zero()) continue;
            r.c_[static_cast<size_t>(i + j)] += a.c_[static_cast<size_t>(i)] * b.c_[static_cast<size_t>(j)];
        }
    }
    return r;
}

QSeries QSeries::operator-() const {
    QSeries r(order());
    for (int k = 0; k <= order(); ++k) r.c_[k] = -c_[k];
    return r;
}

QSeries QSeries::scaled(const Rational& c) const {
    QSeries r(order());
    if (c.is_zero()) return r;
    for (int k = 0; k <= order(); ++k) r.c_[k] = c_[k] * c;
    return r;
}

QSeries QSeries::shifted(int k) const {
    if (k < 0) throw std::invalid_argument("QSeries: negative shift");
    QSeries r(order());
    for (int j = 0; j + k <= order(); ++j) r.c_[static_cast<size_t>(j + k)] = c_[static_cast<size_t>(j)];
    return r;
}

QSeries QSeries::delta() const {
    QSeries r(order());
    for (int k = 1; k <= order(); ++k) r.c_[k] = c_[k] * Rational(k);
    return r;
}

QSeries QSeries::expand_factor(int m, long n, int order) {
    if (m < 1) throw std::invalid_argument("expand_factor: m must be >= 1");
    QSeries r(order);
    if (n >= 0) {
        // (1-q^m)^(-n) = sum_j C(n-1+j, j) q^(mj); n = 0 gives 1.
        Rational c(1);
        r.c_[0] = c;
        if (n == 0) return r;
        for (long j = 1; m * j <= order; ++j) {
            // C(n-1+j, j) = C(n-2+j, j-1) * (n-1+j) / j
            c = c * Rational(n - 1 + j) / Rational(j);
            r.c_[static_cast<size_t>(m * j)] = c;
        }
        return r;
    }
    long p = -n;
    for (long j = 0; j <= p && m * j <= order; ++j) {
        Rational c = binomial(p, j);
        if (j % 2 == 1) c = -c;
        r.c_[static_cast<size_t>(m * j)] = c;
    }
    return r;
}

Rational QSeries::eval_at(const Rational& q0) const {
    Rational acc(0);
    for (int k = order(); k >= 0; --k) acc = acc * q0 + c_[static_cast<size_t>(k)];
    return acc;
}

std::string QSeries::to_json() const {
    ojson j;
    j["var"] = "q";
    j["order"] = order();
    ojson coeffs = ojson::array();
    for (const auto& c : c_) coeffs.push_back(c.str());
    j["coeffs"] = coeffs;
    return j.dump();
}

QSeries QSeries::from_json(std::string_view text) {
    ojson j = ojson::parse(text);
    if (j.at("var").get<std::string>() != "q") throw std::invalid_argument("QSeries: expected var q");
    int order = j.at("order").get<int>();
    QSeries s(order);
    const auto& coeffs = j.at("coeffs");
    if (static_cast<int>(coeffs.size()) != order + 1)
        throw std::invalid_argument("QSeries: coeffs length does not match order");
    for (int k = 0; k <= order; ++k) s.c_[static_cast<size_t>(k)] = Rational::from_string(coeffs.at(k).get<std::string>());
    return s;
}

std::string QSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= order(); ++k) {
        const Rational& c = c_[static_cast<size_t>(k)];
        if (c.is_zero()) continue;
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        Rational a = c.abs();
        if (k == 0) {
            os << a.str();
        } else {
            if (a != Rational(1)) os << a.str() << "*";
            os << "q";
            if (k != 1) os << "^" << k;
        }
    }
    if (first) os << "0";
    os << " + O(q^" << order() + 1 << ")";
    return os.str();
}

QSeries series_inverse(const QSeries& s, int order) {
    if (s.coeff(0).is_zero()) throw std::domain_error("series_inverse: constant term is zero");
    QSeries r(order);
    Rational c0inv = Rational(1) / s.coeff(0);
    r.set_coeff(0, c0inv);
    for (int n = 1; n <= order; ++n) {
        Rational acc(0);
        for (int k = 1; k <= n && k <= s.order(); ++k) acc += s.coeff(k) * r.coeff(n - k);
        r.set_coeff(n, -acc * c0inv);
    }
    return r;
}

QSeries substitute_h(const LaurentPoly& p, const QSeries& s, int order) {
    QSeries result(order);
    if (p.is_zero()) return result;
    int min_e = p.terms().begin()->first;
    int max_e = p.terms().rbegin()->first;

    QSeries s_inv(order);
    if (min_e < 0) {
        if (s.coeff(0).is_zero())
            throw std::domain_error("substitute_h: negative h-exponent with non-invertible series");
        s_inv = series_inverse(s, order);
    }

    // Walk exponents upward from the most negative, reusing running powers.
    QSeries pow = QSeries::constant(Rational(1), order);
    if (min_e < 0) {
        for (int e = -1; e >= min_e; --e) {
            pow *= s_inv;
            if (auto it = p.terms().find(e); it != p.terms().end()) result += pow.scaled(it->second);
        }
        pow = QSeries::constant(Rational(1), order);
    }
    for (int e = 0; e <= max_e; ++e) {
        if (e > 0) pow *= s;
        if (auto it = p.terms().find(e); it != p.terms().end()) result += pow.scaled(it->second);
    }
    return result;
}

}  // namespace qmzv

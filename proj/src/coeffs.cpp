#include "qmzv/coeffs.hpp"

#include <cctype>
#include <sstream>

namespace qmzv {

Rational::Rational(long num, long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::from_string(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("Rational: empty string");
    if (s.front() == '+') s.remove_prefix(1);  // GMP rejects a leading plus
    std::string text(s);
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            mpz_class n(text);
            return Rational(mpq_class(n));
        }
        mpz_class num(text.substr(0, slash));
        mpz_class den(text.substr(slash + 1));
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        mpq_class v(num, den);
        v.canonicalize();
        return Rational(v);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("Rational: malformed input '" + text + "'");
    }
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(mpq_class(a.v_ / b.v_));
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    mpq_class base = v_;
    if (e < 0) {
        if (is_zero()) throw std::domain_error("Rational: zero to negative power");
        base = 1 / base;
        e = -e;
    }
    mpq_class acc(1);
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return Rational(acc);
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return Rational(0);
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(r);
}

Rational multinomial3(long n, long k1, long k2, long k3) {
    if (k1 < 0 || k2 < 0 || k3 < 0) return Rational(0);
    if (k1 + k2 + k3 != n)
        throw std::invalid_argument("multinomial3: slots do not sum to the upper index");
    mpz_class num, d1, d2, d3;
    mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(n));
    mpz_fac_ui(d1.get_mpz_t(), static_cast<unsigned long>(k1));
    mpz_fac_ui(d2.get_mpz_t(), static_cast<unsigned long>(k2));
    mpz_fac_ui(d3.get_mpz_t(), static_cast<unsigned long>(k3));
    return Rational(mpz_class(num / (d1 * d2 * d3)));
}

LaurentPoly::LaurentPoly(const Rational& c) {
    if (!c.is_zero()) terms_[0] = c;
}

LaurentPoly LaurentPoly::h_power(int e, const Rational& c) {
    LaurentPoly p;
    if (!c.is_zero()) p.terms_[e] = c;
    return p;
}

Rational LaurentPoly::coeff(int e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational LaurentPoly::at_one() const {
    Rational s(0);
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

void LaurentPoly::add_term(int e, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
    return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        Rational a = c.abs();
        if (e == 0) {
            os << a.str();
        } else {
            if (a != Rational(1)) os << a.str() << "*";
            os << "h";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

namespace {

// One term of the canonical text: [coeff*]h[^exp] | coeff.
void parse_laurent_term(std::string_view t, LaurentPoly& out, bool negate) {
    auto hpos = t.find('h');
    Rational c(1);
    int e = 0;
    if (hpos == std::string_view::npos) {
        c = Rational::from_string(t);
    } else {
        e = 1;
        std::string_view head = t.substr(0, hpos);
        if (!head.empty()) {
            if (head.back() != '*') throw std::invalid_argument("LaurentPoly: expected '*' before h");
            head.remove_suffix(1);
            c = Rational::from_string(head);
        }
        std::string_view tail = t.substr(hpos + 1);
        if (!tail.empty()) {
            if (tail.front() != '^') throw std::invalid_argument("LaurentPoly: expected '^' after h");
            tail.remove_prefix(1);
            e = std::stoi(std::string(tail));
        }
    }
    out.add_term(e, negate ? -c : c);
}

}  // namespace

LaurentPoly LaurentPoly::from_string(std::string_view s) {
    LaurentPoly out;
    std::string text(s);
    std::string compact;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) compact.push_back(ch);
    if (compact.empty()) throw std::invalid_argument("LaurentPoly: empty string");
    if (compact == "0") return out;

    size_t i = 0;
    bool neg = false;
    if (compact[0] == '+' || compact[0] == '-') {
        neg = compact[0] == '-';
        i = 1;
    }
    size_t start = i;
    for (; i <= compact.size(); ++i) {
        // A sign splits terms unless it follows '^' (exponent sign).
        bool split = i == compact.size() ||
                     ((compact[i] == '+' || compact[i] == '-') && i > start && compact[i - 1] != '^' && compact[i - 1] != '/');
        if (split) {
            parse_laurent_term(std::string_view(compact).substr(start, i - start), out, neg);
            if (i == compact.size()) break;
            neg = compact[i] == '-';
            start = i + 1;
        }
    }
    return out;
}

}  // namespace qmzv

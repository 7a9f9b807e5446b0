#pragma once

#include "qmzv/coeffs.hpp"

#include <optional>
#include <vector>

namespace qmzv {

/// Truncated formal power series in q over Rational.
///
/// Stores exactly order+1 coefficients for q^0 .. q^order. Truncation order
/// travels with the value: binary operations take the minimum of the two
/// orders and never extend precision. Equality compares coefficients up to
/// the smaller order only.
class QSeries {
public:
    explicit QSeries(int order) : c_(static_cast<size_t>(order) + 1) {
        if (order < 0) throw std::invalid_argument("QSeries: negative order");
    }
    static QSeries constant(const Rational& c, int order);
    static QSeries monomial(int k, const Rational& c, int order);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& coeff(int k) const { return c_.at(static_cast<size_t>(k)); }
    void set_coeff(int k, const Rational& v) { c_.at(static_cast<size_t>(k)) = v; }
    void add_coeff(int k, const Rational& v) {
        if (k >= 0 && k <= order()) c_[static_cast<size_t>(k)] += v;
    }

    bool is_zero() const;
    /// Lowest degree where the two series differ (up to the common order).
    static std::optional<int> first_mismatch(const QSeries& a, const QSeries& b);

    friend QSeries operator+(const QSeries& a, const QSeries& b);
    friend QSeries operator-(const QSeries& a, const QSeries& b);
    friend QSeries operator*(const QSeries& a, const QSeries& b);  // Cauchy product
    QSeries operator-() const;
    QSeries& operator+=(const QSeries& b) { *this = *this + b; return *this; }
    QSeries& operator-=(const QSeries& b) { *this = *this - b; return *this; }
    QSeries& operator*=(const QSeries& b) { *this = *this * b; return *this; }

    QSeries scaled(const Rational& c) const;
    /// Multiplication by q^k (coefficients shifted up, truncated).
    QSeries shifted(int k) const;

    friend bool operator==(const QSeries& a, const QSeries& b) { return !first_mismatch(a, b).has_value(); }
    friend bool operator!=(const QSeries& a, const QSeries& b) { return !(a == b); }

    /// The derivation q d/dq: coefficient of q^n maps to n times itself.
    QSeries delta() const;

    /// (1 - q^m)^(-n) truncated; for n < 0 the polynomial (1 - q^m)^|n|.
    /// Requires m >= 1.
    static QSeries expand_factor(int m, long n, int order);

    /// (1 - q)^w for any integer w.
    static QSeries pow_one_minus_q(long w, int order) { return expand_factor(1, -w, order); }

    /// Horner evaluation of the truncated polynomial at q = q0.
    Rational eval_at(const Rational& q0) const;

    /// JSON text {"var":"q","order":N,"coeffs":["c0","c1",...]}.
    std::string to_json() const;
    static QSeries from_json(std::string_view text);

    std::string str() const;  // readable polynomial text

private:
    std::vector<Rational> c_;
};

/// Substitutes the series s for h in a Laurent polynomial, truncated to
/// `order`. Negative h-exponents require s to have a nonzero constant term
/// (so that 1/s exists as a series); otherwise a std::domain_error is thrown.
QSeries substitute_h(const LaurentPoly& p, const QSeries& s, int order);

/// Truncated reciprocal of a series with nonzero constant term.
QSeries series_inverse(const QSeries& s, int order);

}  // namespace qmzv

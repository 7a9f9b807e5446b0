#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qmzv {

/// Exact arbitrary-precision rational number.
///
/// Always kept in canonical form: positive denominator, gcd(|num|, den) = 1,
/// zero stored as 0/1. Immutable value semantics; all operations are pure.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long num, long den);
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }
    explicit Rational(const mpz_class& n) : v_(n) {}

    /// Parses "p/q" or "p" with optional sign. Throws std::invalid_argument on
    /// malformed input or zero denominator.
    static Rational from_string(std::string_view s);

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }
    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    /// Integer power; e < 0 requires a nonzero base.
    Rational pow(long e) const;

    double to_double() const { return v_.get_d(); }

    /// Canonical "p/q" text, denominator omitted when it equals 1.
    std::string str() const;

    std::string numerator_str() const { return v_.get_num().get_str(); }
    std::string denominator_str() const { return v_.get_den().get_str(); }
    const mpq_class& raw() const { return v_; }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& b) { v_ += b.v_; return *this; }
    Rational& operator-=(const Rational& b) { v_ -= b.v_; return *this; }
    Rational& operator*=(const Rational& b) { v_ *= b.v_; return *this; }
    Rational& operator/=(const Rational& b) { *this = *this / b; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

private:
    mpq_class v_;
};

/// C(n, k) with the convention that the result is 0 for k < 0, n < 0 or k > n.
Rational binomial(long n, long k);

/// n! / (k1! k2! k3!) for k1 + k2 + k3 = n, all slots non-negative.
/// Returns 0 when any slot is negative. Throws std::invalid_argument when the
/// non-negative slots do not sum to n (an ill-formed symbol).
Rational multinomial3(long n, long k1, long k2, long k3);

/// Finite Laurent polynomial in the grading indeterminate h over Rational.
///
/// Sparse map from exponent to coefficient; stored coefficients are nonzero
/// and the zero polynomial has an empty map.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(const Rational& c);              // constant
    LaurentPoly(long c) : LaurentPoly(Rational(c)) {}
    static LaurentPoly h_power(int e, const Rational& c = Rational(1));

    bool is_zero() const { return terms_.empty(); }
    const std::map<int, Rational>& terms() const { return terms_; }

    /// Coefficient of h^e (zero if absent).
    Rational coeff(int e) const;

    /// Total weight contribution: value at h = 1 (sum of coefficients).
    Rational at_one() const;

    /// True iff the polynomial is the constant c.
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& b) { *this = *this + b; return *this; }
    LaurentPoly& operator-=(const LaurentPoly& b) { *this = *this - b; return *this; }
    LaurentPoly& operator*=(const LaurentPoly& b) { *this = *this * b; return *this; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    /// Canonical ascending-exponent text, e.g. "-1/2*h^-1 + 3 + 2*h".
    std::string str() const;
    static LaurentPoly from_string(std::string_view s);

    void add_term(int e, const Rational& c);

private:
    std::map<int, Rational> terms_;
};

}  // namespace qmzv

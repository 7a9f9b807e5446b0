#pragma once

#include "qmzv/powerseries.hpp"
#include "qmzv/words.hpp"

#include <map>
#include <utility>

namespace qmzv {

/// Truncated bivariate series in (t, q) over Rational, the working model of
/// t*Q[[t,q]] and its ambient unital algebra Q[[t,q]].
///
/// Truncation is by total degree: a monomial t^i q^j is kept iff i + j <= N.
/// Every operator below (E, P, D, J, multiplication) weakly increases i + j
/// on monomials, so total-degree truncation is closed and the diagonal
/// substitution t = q is exact to order N.
class TQSeries {
public:
    explicit TQSeries(int order) : order_(order) {
        if (order < 0) throw std::invalid_argument("TQSeries: negative order");
    }
    static TQSeries unit(int order) { return monomial(0, 0, Rational(1), order); }
    static TQSeries monomial(int i, int j, const Rational& c, int order);

    int order() const { return order_; }
    const std::map<std::pair<int, int>, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// True iff the element lies in t*Q[[t,q]] (no t^0 terms).
    bool in_A() const;

    void add_term(int i, int j, const Rational& c);

    friend TQSeries operator+(const TQSeries& a, const TQSeries& b);
    friend TQSeries operator-(const TQSeries& a, const TQSeries& b);
    friend TQSeries operator*(const TQSeries& a, const TQSeries& b);
    TQSeries operator-() const;
    TQSeries& operator+=(const TQSeries& b) { *this = *this + b; return *this; }
    TQSeries& operator-=(const TQSeries& b) { *this = *this - b; return *this; }
    TQSeries& operator*=(const TQSeries& b) { *this = *this * b; return *this; }
    TQSeries scaled(const Rational& c) const;

    /// Multiplication by t^k, k >= 0.
    TQSeries t_shifted(int k) const;
    /// Multiplication by the polynomial (1 - q).
    TQSeries times_one_minus_q() const;

    friend bool operator==(const TQSeries& a, const TQSeries& b);
    friend bool operator!=(const TQSeries& a, const TQSeries& b) { return !(a == b); }

    /// Sorted "(i,j): c" lines, one per stored monomial.
    std::string debug_string() const;

private:
    std::map<std::pair<int, int>, Rational> terms_;
    int order_;
};

/// q-dilation E[f](t) = f(qt): t^i q^j -> t^i q^{j+i}.
TQSeries apply_Eq(const TQSeries& f);

/// q-difference D = I - E.
TQSeries apply_Dq(const TQSeries& f);

/// q-summation P[f] = sum_{n>=0} E^n[f], in closed form on monomials:
/// t^i q^j -> t^i q^j / (1 - q^i). Requires f in t*Q[[t,q]]; a t-valuation
/// of zero makes the defining sum diverge termwise and throws.
TQSeries apply_Pq(const TQSeries& f);

/// P^n for n >= 0, D^{-n} for n < 0; n = 0 is the identity.
TQSeries apply_Pq_pow(const TQSeries& f, int n);

/// Jackson integral J[f] = (1-q) P[t f].
TQSeries apply_J(const TQSeries& f);

/// Generator functions of the evaluation pipeline. ybar = t/(1-t) lies in
/// t*Q[[t,q]]; y = 1/(1-t) does not (constant term 1) but is representable.
/// x = 1/t is not a power series and is not provided.
TQSeries gen_ybar(int order);
TQSeries gen_y(int order);

enum class GenFunction { y, ybar, x };
TQSeries gen_function(GenFunction which, int order);

/// The evaluation map from W-words into the (t, q) algebra:
///   p^{n_1} y ... p^{n_k} y -> P^{n_1}[ ybar * P^{n_2}[ ybar ... P^{n_k}[ybar] ... ] ],
/// with the empty word mapping to the multiplicative unit.
TQSeries calZ(const Composition& w, int order);

/// Linear extension of calZ to Rational-coefficient combinations.
TQSeries calZ(const QLinComb& l, int order);

/// Diagonal substitution t = q: t^i q^j contributes to q^{i+j}. Exact to the
/// total-degree order of the input.
QSeries subst_diag(const TQSeries& f);

}  // namespace qmzv

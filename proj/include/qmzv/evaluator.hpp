#pragma once

#include "qmzv/jackson.hpp"
#include "qmzv/powerseries.hpp"
#include "qmzv/words.hpp"

#include <map>

namespace qmzv {

enum class Pathway { direct_sum, jackson, both };
enum class Model { modified, nonmodified, schlesinger };

Pathway pathway_from_string(std::string_view s);
Model model_from_string(std::string_view s);

struct EvalConfig {
    int order = 20;
    Pathway pathway = Pathway::direct_sum;
    Model model = Model::modified;
    Rational q0 = Rational(1, 2);
    long term_cap = 60;
    double tolerance = 1e-9;

    void validate() const;
};

/// Modified value series by nested summation: the q^{m_1} numerator makes
/// the truncation at the series order exact (outer indices above the order
/// contribute nothing modulo q^{order+1}). Defined for any integer
/// exponents; the empty word gives the constant series 1.
QSeries zbar_series_direct(const Composition& w, int order);

/// The same series through the operator pipeline evaluated on the diagonal
/// t = q.
QSeries zbar_series_jackson(const Composition& w, int order);

/// Honors cfg.pathway. With Pathway::both the two evaluations are compared
/// coefficient-for-coefficient and a mismatch throws std::logic_error: this
/// is an internal consistency oracle, not a user error.
QSeries zbar_series(const Composition& w, const EvalConfig& cfg);

/// Non-modified series (1-q)^{w(w)} * zbar.
QSeries z_series(const Composition& w, const EvalConfig& cfg);

/// Memoizes direct-sum series by (word, order). Not thread-safe.
class SeriesCache {
public:
    const QSeries& zbar(const Composition& w, int order);

private:
    std::map<std::pair<Composition, int>, QSeries> cache_;
};

/// Evaluates a combination termwise under cfg.model (modified or
/// non-modified; there is no q-series mode for the Schlesinger model).
/// Laurent coefficients are sent through h = 1 - q first.
QSeries eval_lincomb(const QLinComb& l, const EvalConfig& cfg, SeriesCache* cache = nullptr);
QSeries eval_lincomb(const HLinComb& l, const EvalConfig& cfg, SeriesCache* cache = nullptr);

/// Truncated nested sum together with a rigorous bound on the dropped tail.
struct ExactNumeric {
    Rational value;
    Rational tail;
};

/// Exact-rational truncated evaluation at q = q0, outer index <= cap.
/// modified / nonmodified require |q0| < 1; schlesinger requires |q0| > 1
/// and all exponents >= 1. Violations throw std::domain_error naming the
/// precondition.
ExactNumeric numeric_eval_exact(const Composition& w, Model model, const Rational& q0, long cap);

/// Termwise extension; Laurent coefficients are evaluated at h = 1 - q0 and
/// tail bounds combine with absolute coefficients.
ExactNumeric numeric_eval_exact(const HLinComb& l, Model model, const Rational& q0, long cap);

struct NumericResult {
    double value;
    double tail;
};

/// Floating-point evaluation (same sums, double accumulation).
NumericResult numeric_eval(const Composition& w, const EvalConfig& cfg);
double numeric_eval_double(const Composition& w, Model model, double q0, long cap);

/// Classical multiple zeta numerics: truncated nested sum plus an
/// integral-test bound on the dropped tail. Requires a convergent word
/// (leading entry >= 2); divergent input throws.
NumericResult zeta_numeric(const YWord& u, long cap);
NumericResult zeta_numeric(const LinComb<YWord, Rational>& l, long cap);

/// The convergence bound |q0|^k (1-|q0|)^{-w~-k} with w~ the sum of the
/// positive exponent parts.
Rational zbar_abs_bound(const Composition& w, const Rational& q0);

}  // namespace qmzv

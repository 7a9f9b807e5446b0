#pragma once

#include "qmzv/evaluator.hpp"
#include "qmzv/products.hpp"

#include <array>
#include <optional>
#include <random>
#include <tuple>
#include <vector>

namespace qmzv {

/// Location of the first discrepancy backing a failed (or erratum) check.
struct Witness {
    int degree = 0;       // q-degree, word index, or sample index
    std::string lhs;
    std::string rhs;
};

/// Structured pass/fail result of one identity check. `pass` is true iff the
/// residual vanished identically (to the declared order / tolerance).
/// Advisory checks scan formulas exactly as printed in their source; their
/// failures are reported as erratum candidates and never fail a suite.
struct CheckReport {
    std::string name;
    std::string params;
    bool pass = false;
    bool advisory = false;
    std::optional<Witness> witness;
    std::vector<std::string> notes;

    std::string to_json() const;
    std::string to_text() const;
};

CheckReport make_series_check(std::string name, std::string params, const QSeries& lhs, const QSeries& rhs);

/// Coefficients of the weight-(a+b) Euler decomposition of zbar(a) zbar(b),
/// 1 < a <= b. beta is indexed j = 0..a-1, alpha is indexed k = b..a+b-2.
struct EulerCoefficients {
    int a, b;
    std::map<int, Rational> beta;
    std::map<int, Rational> alpha;

    EulerCoefficients(int a, int b);
};

/// One normal-form term of a dot-elimination expansion:
///   left_zero(i,j):  D^j [ f  op^i g ]   (op = D for DD, P for DP)
///   right_zero(i,j): D^j [ D^i f  g ]
///   both_zero(j):    D^j [ f g ]
enum class GammaShape { left_zero, right_zero, both_zero };

struct GammaTerm {
    GammaShape shape;
    int i;  // 0 for both_zero
    int j;
    Rational coeff;
};

struct GammaExpansion {
    enum class Kind { DD, DP, PP };
    Kind kind;
    int a, b;
    std::vector<GammaTerm> terms;  // deterministic (shape, i, j) order
};

/// Rewrites D^a f D^b g (kind DD) or D^a f P^b g (kind DP) into normal-form
/// terms by repeatedly moving dots upward; each move strictly reduces the
/// lower-branch dot count, so the rewriting terminates. Kind PP runs the
/// same machinery with the weight -1 Rota-Baxter move (every branch lifts
/// the dot), expanding P^a f P^b g; its shapes read P^j in place of D^j.
GammaExpansion build_elimination_expansion(int a, int b, GammaExpansion::Kind kind);

/// Applies one normal-form term to concrete series.
TQSeries instantiate_gamma_term(const GammaTerm& t, GammaExpansion::Kind kind, const TQSeries& f, const TQSeries& g);
TQSeries instantiate_gamma(const GammaExpansion& g_exp, const TQSeries& f, const TQSeries& g);

/// Instantiates an expansion with P in place of D throughout (the reading
/// used by the PP kind): left_zero(i,j) = P^j[f P^i g] and so on.
TQSeries instantiate_gamma_as_P(const GammaExpansion& g_exp, const TQSeries& f, const TQSeries& g);

/// Word instantiation at f = g = ybar: DD terms land on z(-j,-i)/z(-j,0),
/// DP terms on z(-j,i)/z(-j,-i)/z(-j,0).
QLinComb gamma_to_words(const GammaExpansion& g_exp);

/// Deterministic pseudo-random element of t*Q[[t,q]] at the given order.
TQSeries random_A_element(std::mt19937_64& rng, int order);

/// Basic operator laws plus the elimination oracle at (a, b) on seeded
/// random f, g, followed by advisory scans of the printed closed forms.
std::vector<CheckReport> verify_operator_laws(int a, int b, int order, unsigned seed, int samples,
                                              bool include_basic = true);

/// Commutativity over all pairs and associativity over the given triples.
std::vector<CheckReport> verify_word_laws(ProductKind kind, const std::vector<Composition>& words,
                                          const std::vector<std::array<Composition, 3>>& triples,
                                          ProductEngine& eng);

/// Same laws for the classical shuffle, exhaustively over {x0,x1}-words of
/// bounded length (pairs up to `pair_len`, triples up to `triple_len`).
std::vector<CheckReport> verify_shuffle_word_laws(int pair_len, int triple_len);

/// Residual of the swap relation between the two pictures:
/// eval over the q-shuffle side of (r(u) x r(v) - r(u x- v)).
CheckReport verify_cross_relation(const Composition& u, const Composition& v, const EvalConfig& cfg,
                                  ProductEngine& eng, SeriesCache& cache);

/// eval(u) eval(v) = eval(u x v) for the requested product, plus the cross
/// relation between the two pictures when kind is a q-product.
CheckReport verify_homomorphism(ProductKind kind, const Composition& u, const Composition& v, const EvalConfig& cfg,
                                ProductEngine& eng, SeriesCache& cache);

enum class EulerCase { pos_pos, neg_neg, neg_pos };

/// Euler decompositions. pos_pos instantiates the printed weight-(a+b)
/// formula with exact delta-terms (advisory scan). neg_neg / neg_pos run the
/// elimination oracle as a hard check and scan the printed displays as
/// advisories.
std::vector<CheckReport> verify_euler(int a, int b, EulerCase which, const EvalConfig& cfg, SeriesCache& cache);

enum class DerivationKind { single, telescoped, general, kappa, delta_via_double_shuffle };

/// Derivation identities for the q d/dq operator. `args` carries the word
/// (single uses args[0]; telescoped uses args[0] >= 2 resp. -args[0] <= 0;
/// delta_via_double_shuffle expresses delta zbar(b), b > 2, purely in
/// qMZVs by combining the two product expansions). kappa takes explicit
/// coefficients.
CheckReport verify_derivation(const Composition& args, const EvalConfig& cfg, DerivationKind which, SeriesCache& cache,
                              const std::vector<Rational>& kappa = {});

/// q-analog of the regularization relation for convergent v, plus (split
/// out) the classical companion check.
CheckReport verify_regularization(const Composition& v, const EvalConfig& cfg, ProductEngine& eng, SeriesCache& cache);
CheckReport verify_regularization_classical(const YWord& u, long cap, double tail_budget);

/// Exact commuting-diagram check at rational q0 > 1: the twisted evaluation
/// in the numerator-free model equals the plain evaluation, within the
/// computed truncation tails (both exact rationals, tails at most
/// 2^-rel_bits relative).
CheckReport verify_schlesinger(const Composition& w, const Rational& q0, long cap, int rel_bits);

/// Numeric limit along a grid of q values approaching 1.
struct LimitSpec {
    QLinComb combination;        // evaluated in the non-modified model
    int extra_one_minus_q = 0;   // extra (1-q)^e factor on the whole value
    std::vector<double> grid;
    double target = 0.0;
    double tol = 0.05;
    bool require_monotone = true;  // distances strictly decreasing
    std::string label;
};
CheckReport verify_limit(const LimitSpec& spec, long cap);

/// Convergence bound at rational 0 < q0 < 1 for a single word (exact).
CheckReport verify_convergence_bound(const Composition& w, const Rational& q0, long cap);

// -------------------------------------------------------------------------
// Suites. Deterministic for a fixed config; suite names match the CLI.

struct SuiteConfig {
    int order = 20;
    int max_depth = 2;
    int lo = -2;
    int hi = 2;
    unsigned seed = 0;
    long term_cap = 60;
    double tol = 0.05;
    int op_order = 12;    // bivariate order for operator-law checks
    int op_samples = 20;  // random (f, g) pairs per (a, b)
    int triples = 200;    // associativity sample size
    std::optional<Rational> q0;  // overrides the schlesinger evaluation points
};

std::vector<Composition> words_up_to(int max_depth, int lo, int hi);

std::vector<CheckReport> suite_word_laws(const SuiteConfig& cfg);
std::vector<CheckReport> suite_homomorphism(const SuiteConfig& cfg);
std::vector<CheckReport> suite_operator_laws(const SuiteConfig& cfg);
std::vector<CheckReport> suite_euler(const SuiteConfig& cfg);
std::vector<CheckReport> suite_derivation(const SuiteConfig& cfg);
std::vector<CheckReport> suite_regularization(const SuiteConfig& cfg);
std::vector<CheckReport> suite_schlesinger(const SuiteConfig& cfg);
std::vector<CheckReport> suite_limits(const SuiteConfig& cfg);
std::vector<CheckReport> run_suite(const std::string& name, const SuiteConfig& cfg);

/// True iff no non-advisory check failed.
bool all_passed(const std::vector<CheckReport>& reports);

}  // namespace qmzv

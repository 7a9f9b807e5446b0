#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qmzv/evaluator.hpp"
#include "oracles.hpp"

#include <cmath>

using namespace qmzv;

namespace {
EvalConfig at_order(int n) {
    EvalConfig cfg;
    cfg.order = n;
    return cfg;
}
}  // namespace

TEST_CASE("weight-zero series") {
    QSeries s = zbar_series_direct(Composition{0}, 5);
    for (int k = 1; k <= 5; ++k) CHECK(s.coeff(k) == Rational(1));
    CHECK(s.coeff(0) == Rational(0));

    QSeries d = zbar_series_direct(Composition({0, 0}), 5);
    CHECK(d.coeff(0) == Rational(0));
    CHECK(d.coeff(1) == Rational(0));
    CHECK(d.coeff(2) == Rational(1));
    CHECK(d.coeff(3) == Rational(2));
    CHECK(d.coeff(4) == Rational(3));
    CHECK(d.coeff(5) == Rational(4));

    CHECK(zbar_series_direct(Composition{}, 4) == QSeries::constant(Rational(1), 4));
}

TEST_CASE("divisor-sum coefficients of the weight-two value") {
    QSeries s = zbar_series_direct(Composition{2}, 12);
    for (int n = 1; n <= 12; ++n) CHECK(s.coeff(n) == Rational(oracle::sigma1(n)));
}

TEST_CASE("negative arguments expand through finite differences") {
    QSeries s = zbar_series_direct(Composition{-1}, 6);
    // sum q^m (1 - q^m) = q + q^3 + q^5 + ... up to cancellation
    CHECK(s.coeff(1) == Rational(1));
    CHECK(s.coeff(2) == Rational(0));
    CHECK(s.coeff(3) == Rational(1));
    CHECK(s.coeff(4) == Rational(0));
    CHECK(s.coeff(5) == Rational(1));
    CHECK(s.coeff(6) == Rational(0));

    // oracle: binomial expansion of sum_m q^m (1-q^m)^2
    QSeries t = zbar_series_direct(Composition{-2}, 10);
    QSeries expect(10);
    for (int m = 1; m <= 10; ++m) {
        expect.add_coeff(m, Rational(1));
        expect.add_coeff(2 * m, Rational(-2));
        expect.add_coeff(3 * m, Rational(1));
    }
    CHECK(t == expect);
}

TEST_CASE("trailing-zero word matches its closed sum") {
    // zbar(a, 0) = sum (m-1) q^m / (1-q^m)^a
    for (int a : {1, 2, 3}) {
        QSeries s = zbar_series_direct(Composition({a, 0}), 14);
        QSeries expect(14);
        for (int m = 1; m <= 14; ++m)
            expect += QSeries::expand_factor(m, a, 14).scaled(Rational(m - 1)).shifted(m);
        CHECK(s == expect);
    }
}

TEST_CASE("the two pathways agree") {
    for (int d1 = -3; d1 <= 3; ++d1) {
        CHECK(zbar_series_direct(Composition{d1}, 20) == zbar_series_jackson(Composition{d1}, 20));
        for (int d2 = -3; d2 <= 3; ++d2)
            CHECK(zbar_series_direct(Composition({d1, d2}), 14) == zbar_series_jackson(Composition({d1, d2}), 14));
    }
    EvalConfig cfg = at_order(12);
    cfg.pathway = Pathway::both;
    CHECK(zbar_series(Composition({2, 1}), cfg) == zbar_series_direct(Composition({2, 1}), 12));
}

TEST_CASE("non-modified weighting") {
    EvalConfig cfg = at_order(3);
    QSeries s = z_series(Composition{2}, cfg);
    CHECK(s.coeff(0) == Rational(0));
    CHECK(s.coeff(1) == Rational(1));
    CHECK(s.coeff(2) == Rational(1));
    CHECK(s.coeff(3) == Rational(-1));

    CHECK(z_series(Composition{0}, at_order(5)) == zbar_series(Composition{0}, at_order(5)));
    CHECK(z_series(Composition{}, at_order(4)) == QSeries::constant(Rational(1), 4));
}

TEST_CASE("combination evaluation and the h substitution") {
    EvalConfig cfg = at_order(10);
    SeriesCache cache;

    CHECK(eval_lincomb(QLinComb::single(Composition({2, 1})), cfg, &cache) ==
          zbar_series_direct(Composition({2, 1}), 10));

    HLinComb l;
    l.add(Composition{2}, LaurentPoly::h_power(1));
    CHECK(eval_lincomb(l, cfg, &cache) ==
          QSeries::pow_one_minus_q(1, 10) * zbar_series_direct(Composition{2}, 10));

    QLinComb euler;
    euler.add(Composition{3}, Rational(1));
    euler.add(Composition{2}, Rational(-1));
    euler.add(Composition({2, 1}), Rational(-1));
    CHECK(eval_lincomb(euler, cfg, &cache).is_zero());

    EvalConfig bad = cfg;
    bad.model = Model::schlesinger;
    CHECK_THROWS_AS(eval_lincomb(euler, bad, &cache), std::invalid_argument);
}

TEST_CASE("exact numeric evaluation matches the truncated series") {
    // Truncated sum at cap N vs series evaluated at the same point: both are
    // the same finite sum of rationals up to terms the series dropped.
    ExactNumeric n = numeric_eval_exact(Composition{2}, Model::modified, Rational(1, 2), 60);
    QSeries s = zbar_series_direct(Composition{2}, 60);
    Rational series_val = s.eval_at(Rational(1, 2));
    Rational diff = (n.value - series_val).abs();
    // Both truncations differ from the true value by at most their tails.
    CHECK(diff <= n.tail + Rational(1, 1000000));
    CHECK(n.tail < Rational(1).pow(1) / Rational(2).pow(50));
}

TEST_CASE("numeric domain guards") {
    CHECK_THROWS_AS(numeric_eval_exact(Composition{2}, Model::modified, Rational(2), 10), std::domain_error);
    CHECK_THROWS_AS(numeric_eval_exact(Composition{2}, Model::schlesinger, Rational(1, 2), 10), std::domain_error);
    CHECK_THROWS_AS(numeric_eval_exact(Composition({0, 1}), Model::schlesinger, Rational(2), 10), std::domain_error);
    CHECK_NOTHROW(numeric_eval_exact(Composition({1, 1}), Model::schlesinger, Rational(2), 10));
}

TEST_CASE("schlesinger values are positive and bounded") {
    ExactNumeric n = numeric_eval_exact(Composition{2}, Model::schlesinger, Rational(2), 60);
    CHECK(n.value > Rational(0));
    // 1/[1]^2 = 1 dominates; crude ceiling from the geometric bound.
    CHECK(n.value < Rational(3));
    CHECK(n.tail < Rational(1) / Rational(2).pow(60));
}

TEST_CASE("classical zeta numerics") {
    NumericResult z2 = zeta_numeric(YWord{2}, 200000);
    CHECK(std::abs(z2.value - 1.6449340668) <= z2.tail + 1e-9);
    CHECK(z2.tail < 1e-5);

    NumericResult z21 = zeta_numeric(YWord({2, 1}), 1000000);
    NumericResult z3 = zeta_numeric(YWord{3}, 1000000);
    CHECK(std::abs(z21.value - z3.value) <= z21.tail + z3.tail);

    CHECK_THROWS_AS(zeta_numeric(YWord{1}, 100), std::domain_error);
}

TEST_CASE("convergence bound holds on the desk set") {
    for (const Rational& q0 : {Rational(1, 4), Rational(1, 2), Rational(3, 4)}) {
        for (int a = -2; a <= 2; ++a) {
            ExactNumeric v = numeric_eval_exact(Composition{a}, Model::modified, q0, 40);
            CHECK(v.value.abs() + v.tail <= zbar_abs_bound(Composition{a}, q0));
        }
        ExactNumeric v = numeric_eval_exact(Composition({2, -1}), Model::modified, q0, 40);
        CHECK(v.value.abs() + v.tail <= zbar_abs_bound(Composition({2, -1}), q0));
    }
}

TEST_CASE("double-precision evaluation tracks the exact one") {
    double d = numeric_eval_double(Composition{2}, Model::modified, 0.5, 60);
    ExactNumeric e = numeric_eval_exact(Composition{2}, Model::modified, Rational(1, 2), 60);
    CHECK(std::abs(d - e.value.to_double()) < 1e-12);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qmzv/powerseries.hpp"

#include <random>

using namespace qmzv;

namespace {

QSeries from_coeffs(std::initializer_list<long> cs) {
    QSeries s(static_cast<int>(cs.size()) - 1);
    int k = 0;
    for (long c : cs) s.set_coeff(k++, Rational(c));
    return s;
}

QSeries random_series(std::mt19937_64& rng, int order) {
    QSeries s(order);
    for (int k = 0; k <= order; ++k) s.set_coeff(k, Rational(static_cast<long>(rng() % 11) - 5));
    return s;
}

}  // namespace

TEST_CASE("series arithmetic matches the spec examples") {
    QSeries q = QSeries::monomial(1, Rational(1), 5);
    CHECK(q * q == QSeries::monomial(2, Rational(1), 5));

    QSeries a = from_coeffs({1, 1, 0, 0});   // 1 + q
    QSeries b = from_coeffs({1, -1, 0, 0});  // 1 - q
    CHECK(a * b == from_coeffs({1, 0, -1, 0}));

    QSeries c = from_coeffs({0, 1, 1});
    CHECK(c + c == from_coeffs({0, 2, 2}));
}

TEST_CASE("binary operations truncate to the smaller order") {
    QSeries a = from_coeffs({1, 2, 3, 4, 5});
    QSeries b = from_coeffs({1, 1});
    CHECK((a + b).order() == 1);
    CHECK((a * b).order() == 1);
    // Equality compares up to the common order only.
    CHECK(a == from_coeffs({1, 2, 3}));
    CHECK(a != from_coeffs({1, 2, 4}));
}

TEST_CASE("delta is q d/dq") {
    CHECK(QSeries::monomial(2, Rational(1), 4).delta() == QSeries::monomial(2, Rational(2), 4));
    CHECK(QSeries::constant(Rational(5), 4).delta().is_zero());
    CHECK(from_coeffs({0, 1, 3, 4}).delta() == from_coeffs({0, 1, 6, 12}));
}

TEST_CASE("delta is a derivation") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 25; ++t) {
        QSeries a = random_series(rng, 20), b = random_series(rng, 20);
        CHECK((a * b).delta() == a.delta() * b + a * b.delta());
    }
}

TEST_CASE("expand_factor expands (1 - q^m)^(-n)") {
    CHECK(QSeries::expand_factor(1, 2, 3) == from_coeffs({1, 2, 3, 4}));
    CHECK(QSeries::expand_factor(2, -1, 4) == from_coeffs({1, 0, -1, 0, 0}));
    CHECK(QSeries::expand_factor(1, 0, 4) == QSeries::constant(Rational(1), 4));
    CHECK_THROWS_AS(QSeries::expand_factor(0, 2, 4), std::invalid_argument);
}

TEST_CASE("expand_factor inverse pairs multiply to 1") {
    for (int m = 1; m <= 5; ++m)
        for (long n = -4; n <= 4; ++n) {
            QSeries prod = QSeries::expand_factor(m, n, 16) * QSeries::expand_factor(m, -n, 16);
            CHECK(prod == QSeries::constant(Rational(1), 16));
        }
}

TEST_CASE("powers of 1 - q") {
    CHECK(QSeries::pow_one_minus_q(2, 3) == from_coeffs({1, -2, 1, 0}));
    CHECK(QSeries::pow_one_minus_q(-1, 3) == from_coeffs({1, 1, 1, 1}));
    CHECK(QSeries::pow_one_minus_q(0, 3) == QSeries::constant(Rational(1), 3));
    for (long w = -4; w <= 4; ++w)
        CHECK(QSeries::pow_one_minus_q(w, 12) * QSeries::pow_one_minus_q(-w, 12) ==
              QSeries::constant(Rational(1), 12));
}

TEST_CASE("polynomial evaluation") {
    CHECK(from_coeffs({1, 1, 1}).eval_at(Rational(1, 2)) == Rational(7, 4));
    CHECK(QSeries(4).eval_at(Rational(9, 7)) == Rational(0));
    CHECK(QSeries::monomial(1, Rational(1), 3).eval_at(Rational(2, 3)) == Rational(2, 3));
}

TEST_CASE("series JSON round-trip") {
    QSeries s = from_coeffs({0, 1, 3});
    std::string j = s.to_json();
    CHECK(j == R"({"var":"q","order":2,"coeffs":["0","1","3"]})");
    QSeries back = QSeries::from_json(j);
    CHECK(back == s);
    CHECK(back.to_json() == j);
}

TEST_CASE("series inverse") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 20; ++t) {
        QSeries s = random_series(rng, 12);
        s.set_coeff(0, Rational(static_cast<long>(rng() % 5) + 1));
        CHECK(s * series_inverse(s, 12) == QSeries::constant(Rational(1), 12));
    }
    CHECK_THROWS_AS(series_inverse(QSeries(4), 4), std::domain_error);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qmzv/words.hpp"

#include <functional>
#include <random>
#include <set>

using namespace qmzv;

TEST_CASE("letter normalization under dp = pd = 1") {
    CHECK(normalize_letters({Letter::p, Letter::d, Letter::p, Letter::y}) == Composition{1});
    CHECK(normalize_letters({Letter::d, Letter::d, Letter::y, Letter::p, Letter::y}) == Composition({-2, 1}));
    CHECK(normalize_letters({}) == Composition{});
    // p then d cancels to the empty word, which is the unit of W.
    CHECK(normalize_letters({Letter::p, Letter::d}) == Composition{});
    CHECK_THROWS_AS(normalize_letters({Letter::p}), std::invalid_argument);
    CHECK_THROWS_AS(normalize_letters({Letter::y, Letter::d}), std::invalid_argument);
}

TEST_CASE("normalization is idempotent under re-expansion") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 200; ++t) {
        Composition w;
        int depth = static_cast<int>(rng() % 4);
        for (int i = 0; i < depth; ++i) w.e.push_back(static_cast<int>(rng() % 9) - 4);
        CHECK(normalize_letters(to_letters(w)) == w);
    }
}

TEST_CASE("word statistics") {
    WordStats st = word_stats(Composition({2, 1}));
    CHECK(st.depth == 2);
    CHECK(st.length == 5);
    CHECK(st.weight == 3);

    st = word_stats(Composition{});
    CHECK(st.depth == 0);
    CHECK(st.length == 0);
    CHECK(st.weight == 0);

    st = word_stats(Composition({-2, 0, 3}));
    CHECK(st.depth == 3);
    CHECK(st.length == 8);
    CHECK(st.weight == 1);
}

TEST_CASE("s sends y_n to x0^(n-1) x1") {
    CHECK(s_map(YWord({2, 1})) == XWord({0, 1, 1}));
    CHECK(s_map(YWord{1}) == XWord{1});
    CHECK(s_map(YWord{}) == XWord{});
}

TEST_CASE("s is injective on short words") {
    std::set<std::vector<uint8_t>> seen;
    long count = 0;
    std::vector<int> stack;
    std::function<void()> rec = [&] {
        if (!stack.empty()) {
            XWord img = s_map(YWord{std::initializer_list<int>{}});
            YWord y;
            y.n = stack;
            img = s_map(y);
            CHECK(seen.insert(img.letters).second);
            ++count;
        }
        if (stack.size() == 6) return;
        for (int n = 1; n <= 5; ++n) {
            stack.push_back(n);
            rec();
            stack.pop_back();
        }
    };
    rec();
    CHECK(count == 5 + 25 + 125 + 625 + 3125 + 15625);
}

TEST_CASE("r is the identity on the exponent tuple") {
    CHECK(r_map(Composition({2, 1})) == Composition({2, 1}));
    CHECK(r_map(Composition{0}) == Composition{0});
    CHECK(r_map(Composition{}) == Composition{});
    for (const Composition& w : {Composition({2, 1}), Composition({-1, 0, 3})}) {
        WordStats a = word_stats(w), b = word_stats(r_map(w));
        CHECK(a.depth == b.depth);
        CHECK(a.length == b.length);
        CHECK(a.weight == b.weight);
    }
}

TEST_CASE("word grammars parse and format") {
    CHECK(parse_ytilde("z(2,1)") == Composition({2, 1}));
    CHECK(parse_ytilde("z(-3)") == Composition{-3});
    CHECK(parse_ytilde("z()") == Composition{});
    CHECK(format_ytilde(Composition({2, 1})) == "z(2,1)");
    CHECK(parse_ytilde(format_ytilde(Composition({-2, 0, 5}))) == Composition({-2, 0, 5}));
    CHECK_THROWS_AS(parse_ytilde("z(2,)"), ParseError);
    CHECK_THROWS_AS(parse_ytilde("z(2"), ParseError);

    CHECK(parse_w("p^-2 y p y") == Composition({-2, 1}));
    CHECK(parse_w("p d p y") == Composition{1});
    CHECK(parse_w("y") == Composition{0});
    CHECK(parse_w("") == Composition{});
    CHECK(parse_w(format_w(Composition({-2, 1}))) == Composition({-2, 1}));
    CHECK(format_w(Composition({2, 1})) == "p^2 y p y");
    CHECK_THROWS_AS(parse_w("p q"), ParseError);
    CHECK_THROWS_AS(parse_w("p"), ParseError);

    CHECK(parse_x("x0x1x1") == XWord({0, 1, 1}));
    CHECK(format_x(XWord({0, 1})) == "x0x1");
    CHECK_THROWS_AS(parse_x("x2"), ParseError);

    CHECK(parse_y("y(2,1)") == YWord({2, 1}));
    CHECK_THROWS_AS(parse_y("y(0)"), ParseError);
}

TEST_CASE("linear combinations collect and prune") {
    QLinComb l;
    l.add(Composition{2}, Rational(1));
    l.add(Composition{2}, Rational(-1));
    CHECK(l.is_zero());

    l.add(Composition({2, 1}), Rational(2));
    l.add(Composition{3}, Rational(1));
    l.add(Composition({2, 2}), Rational(1));
    // Canonical order: lower depth first, then descending exponents.
    auto it = l.terms().begin();
    CHECK(it->first == Composition{3});
    ++it;
    CHECK(it->first == Composition({2, 2}));
    ++it;
    CHECK(it->first == Composition({2, 1}));
}

TEST_CASE("lincomb rendering") {
    QLinComb l;
    l.add(Composition({1, 1}), Rational(2));
    l.add(Composition({1, 0}), Rational(-1));
    CHECK(format_lincomb(l) == "2*z(1,1) - z(1,0)");

    QLinComb unit = QLinComb::unit();
    CHECK(format_lincomb(unit) == "1");

    HLinComb h;
    h.add(Composition{2}, LaurentPoly::h_power(1) - LaurentPoly(1));
    CHECK(format_lincomb(h) == "(-1 + h)*z(2)");
}

TEST_CASE("lincomb JSON round-trips byte-identically") {
    QLinComb l;
    l.add(Composition({2, 1}), Rational(3));
    l.add(Composition{4}, Rational(-1, 2));
    std::string j = lincomb_to_json(l);
    CHECK(j == R"({"ring":"Q","terms":[{"word":[4],"coeff":"-1/2"},{"word":[2,1],"coeff":"3"}]})");
    CHECK(lincomb_to_json(lincomb_from_json(j)) == j);

    HLinComb h;
    h.add(Composition{1}, LaurentPoly::h_power(-1, Rational(1, 3)));
    std::string hj = lincomb_to_json(h);
    CHECK(lincomb_to_json(hlincomb_from_json(hj)) == hj);
}

#include "qmzv/words.hpp"

#include <nlohmann/json.hpp>

#include <cctype>
#include <sstream>

namespace qmzv {

namespace {
using ojson = nlohmann::ordered_json;
}

Composition normalize_letters(const LetterSeq& s) {
    Composition w;
    int pending = 0;
    for (Letter l : s) {
        switch (l) {
            case Letter::p: ++pending; break;
            case Letter::d: --pending; break;
            case Letter::y:
                w.e.push_back(pending);
                pending = 0;
                break;
        }
    }
    if (pending != 0)
        throw std::invalid_argument("normalize_letters: not a W-word (does not reduce to a word ending in y)");
    return w;
}

LetterSeq to_letters(const Composition& w) {
    LetterSeq s;
    for (int n : w.e) {
        for (int i = 0; i < n; ++i) s.push_back(Letter::p);
        for (int i = 0; i < -n; ++i) s.push_back(Letter::d);
        s.push_back(Letter::y);
    }
    return s;
}

WordStats word_stats(const Composition& w) {
    WordStats st{w.depth(), w.depth(), 0};
    for (int v : w.e) {
        st.length += v >= 0 ? v : -v;
        st.weight += v;
    }
    return st;
}

XWord s_map(const YWord& u) {
    XWord x;
    for (int n : u.n) {
        for (int i = 0; i < n - 1; ++i) x.letters.push_back(0);
        x.letters.push_back(1);
    }
    return x;
}

namespace {

void skip_ws(std::string_view s, size_t& i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

int parse_int(std::string_view s, size_t& i) {
    size_t start = i;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    size_t digits = 0;
    long v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        v = v * 10 + (s[i] - '0');
        ++i;
        ++digits;
    }
    if (digits == 0) throw ParseError("expected integer", start);
    if (start < s.size() && s[start] == '-') v = -v;
    return static_cast<int>(v);
}

std::vector<int> parse_int_tuple(std::string_view s, std::string_view head) {
    size_t i = 0;
    skip_ws(s, i);
    if (s.compare(i, head.size(), head) != 0) throw ParseError(std::string("expected '") + std::string(head) + "'", i);
    i += head.size();
    std::vector<int> vals;
    skip_ws(s, i);
    if (i >= s.size() || s[i] != ')') {
        while (true) {
            skip_ws(s, i);
            vals.push_back(parse_int(s, i));
            skip_ws(s, i);
            if (i < s.size() && s[i] == ',') {
                ++i;
                continue;
            }
            break;
        }
    }
    if (i >= s.size() || s[i] != ')') throw ParseError("expected ')'", i);
    ++i;
    skip_ws(s, i);
    if (i != s.size()) throw ParseError("trailing characters", i);
    return vals;
}

}  // namespace

Composition parse_ytilde(std::string_view text) {
    return Composition(parse_int_tuple(text, "z("));
}

Composition parse_w(std::string_view text) {
    LetterSeq letters;
    size_t i = 0;
    Composition w;
    int pending = 0;
    bool saw_any = false;
    while (true) {
        skip_ws(text, i);
        if (i >= text.size()) break;
        saw_any = true;
        char c = text[i];
        if (c == 'y') {
            ++i;
            w.e.push_back(pending);
            pending = 0;
        } else if (c == 'd') {
            ++i;
            --pending;
        } else if (c == 'p') {
            ++i;
            if (i < text.size() && text[i] == '^') {
                ++i;
                pending += parse_int(text, i);
            } else {
                ++pending;
            }
        } else {
            throw ParseError("expected token p, d, y or p^k", i);
        }
    }
    (void)saw_any;
    if (pending != 0) throw ParseError("word does not end with y after cancellation", i);
    return w;
}

XWord parse_x(std::string_view text) {
    XWord w;
    size_t i = 0;
    while (true) {
        skip_ws(text, i);
        if (i >= text.size()) break;
        if (text[i] != 'x') throw ParseError("expected x0 or x1", i);
        ++i;
        if (i >= text.size() || (text[i] != '0' && text[i] != '1')) throw ParseError("expected x0 or x1", i);
        w.letters.push_back(static_cast<uint8_t>(text[i] - '0'));
        ++i;
    }
    return w;
}

YWord parse_y(std::string_view text) {
    YWord w;
    w.n = parse_int_tuple(text, "y(");
    for (int v : w.n)
        if (v < 1) throw ParseError("Y-word entries must be positive", 0);
    return w;
}

std::string format_ytilde(const Composition& w) {
    std::ostringstream os;
    os << "z(";
    for (size_t i = 0; i < w.e.size(); ++i) {
        if (i) os << ",";
        os << w.e[i];
    }
    os << ")";
    return os.str();
}

std::string format_w(const Composition& w) {
    std::ostringstream os;
    bool first = true;
    for (int n : w.e) {
        if (!first) os << " ";
        first = false;
        if (n == 1) {
            os << "p ";
        } else if (n == -1) {
            os << "d ";
        } else if (n != 0) {
            os << "p^" << n << " ";
        }
        os << "y";
    }
    return os.str();
}

std::string format_x(const XWord& w) {
    std::string s;
    for (uint8_t b : w.letters) s += b ? "x1" : "x0";
    return s;
}

std::string format_y(const YWord& w) {
    std::ostringstream os;
    os << "y(";
    for (size_t i = 0; i < w.n.size(); ++i) {
        if (i) os << ",";
        os << w.n[i];
    }
    os << ")";
    return os.str();
}

HLinComb to_h(const QLinComb& l) {
    HLinComb r;
    for (const auto& [w, c] : l.terms()) r.add(w, LaurentPoly(c));
    return r;
}

QLinComb at_h_one(const HLinComb& l) {
    QLinComb r;
    for (const auto& [w, c] : l.terms()) r.add(w, c.at_one());
    return r;
}

namespace {

template <class Word, class R, class WordFmt, class CoeffFmt>
std::string render(const LinComb<Word, R>& l, WordFmt&& wf, CoeffFmt&& cf, bool coeff_may_be_composite) {
    if (l.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : l.terms()) {
        std::string coeff = cf(c);
        bool neg = coeff.size() > 0 && coeff[0] == '-' &&
                   coeff.find_first_of("+-", 1) == std::string::npos;
        if (neg) coeff = coeff.substr(1);
        bool composite = coeff_may_be_composite && coeff.find_first_of("+-", 1) != std::string::npos;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        std::string word = wf(w);
        if (word.empty()) word = "1";  // empty word is the unit
        if (composite) {
            os << "(" << coeff << ")*" << word;
        } else if (coeff == "1") {
            os << word;
        } else {
            os << coeff << "*" << word;
        }
    }
    return os.str();
}

std::string fmt_comp_word(const Composition& w) { return w.empty() ? std::string() : format_ytilde(w); }

}  // namespace

std::string format_lincomb(const QLinComb& l) {
    return render(l, fmt_comp_word, [](const Rational& c) { return c.str(); }, false);
}

std::string format_lincomb(const HLinComb& l) {
    return render(l, fmt_comp_word, [](const LaurentPoly& c) { return c.str(); }, true);
}

std::string format_lincomb(const LinComb<XWord, Rational>& l) {
    return render(l, [](const XWord& w) { return format_x(w); }, [](const Rational& c) { return c.str(); }, false);
}

std::string format_lincomb(const LinComb<YWord, Rational>& l) {
    return render(
        l, [](const YWord& w) { return w.empty() ? std::string() : format_y(w); },
        [](const Rational& c) { return c.str(); }, false);
}

namespace {

template <class R, class CoeffFmt>
std::string comp_lincomb_json(const LinComb<Composition, R>& l, const char* ring, CoeffFmt&& cf) {
    ojson j;
    j["ring"] = ring;
    ojson terms = ojson::array();
    for (const auto& [w, c] : l.terms()) {
        ojson t;
        t["word"] = w.e;
        t["coeff"] = cf(c);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j.dump();
}

}  // namespace

std::string lincomb_to_json(const QLinComb& l) {
    return comp_lincomb_json(l, "Q", [](const Rational& c) { return c.str(); });
}

std::string lincomb_to_json(const HLinComb& l) {
    return comp_lincomb_json(l, "Q[h,h^-1]", [](const LaurentPoly& c) { return c.str(); });
}

std::string lincomb_to_json(const LinComb<XWord, Rational>& l) {
    ojson j;
    j["ring"] = "Q";
    ojson terms = ojson::array();
    for (const auto& [w, c] : l.terms()) {
        ojson t;
        t["word"] = format_x(w);
        t["coeff"] = c.str();
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j.dump();
}

QLinComb lincomb_from_json(std::string_view text) {
    ojson j = ojson::parse(text);
    if (j.at("ring").get<std::string>() != "Q") throw std::invalid_argument("LinComb: expected ring Q");
    QLinComb l;
    for (const auto& t : j.at("terms"))
        l.add(Composition(t.at("word").get<std::vector<int>>()), Rational::from_string(t.at("coeff").get<std::string>()));
    return l;
}

HLinComb hlincomb_from_json(std::string_view text) {
    ojson j = ojson::parse(text);
    if (j.at("ring").get<std::string>() != "Q[h,h^-1]")
        throw std::invalid_argument("LinComb: expected ring Q[h,h^-1]");
    HLinComb l;
    for (const auto& t : j.at("terms"))
        l.add(Composition(t.at("word").get<std::vector<int>>()), LaurentPoly::from_string(t.at("coeff").get<std::string>()));
    return l;
}

}  // namespace qmzv

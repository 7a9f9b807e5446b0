#pragma once

#include "qmzv/coeffs.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace qmzv {

/// Exponent tuple (n_1, ..., n_k). One data model serves both alphabets:
/// read as z_{n_1} ... z_{n_k} over {z_n : n in Z}, or as the normal form
/// p^{n_1} y ... p^{n_k} y of a word over {p, d, y} with dp = pd = 1.
/// The bijection between the two is the identity on this representation.
struct Composition {
    std::vector<int> e;

    Composition() = default;
    Composition(std::initializer_list<int> init) : e(init) {}
    explicit Composition(std::vector<int> v) : e(std::move(v)) {}

    int depth() const { return static_cast<int>(e.size()); }
    bool empty() const { return e.empty(); }
    auto operator<=>(const Composition&) const = default;
};

/// Word over the two-letter alphabet {x0, x1}; letters stored as 0/1.
struct XWord {
    std::vector<uint8_t> letters;

    XWord() = default;
    XWord(std::initializer_list<int> init) {
        for (int v : init) letters.push_back(static_cast<uint8_t>(v));
    }
    int length() const { return static_cast<int>(letters.size()); }
    bool empty() const { return letters.empty(); }
    auto operator<=>(const XWord&) const = default;
};

/// Word over {y_1, y_2, ...}; entries are the (positive) subscripts.
struct YWord {
    std::vector<int> n;

    YWord() = default;
    YWord(std::initializer_list<int> init) : n(init) {}
    int length() const { return static_cast<int>(n.size()); }
    bool empty() const { return n.empty(); }
    auto operator<=>(const YWord&) const = default;
};

enum class Letter : uint8_t { p, d, y };
using LetterSeq = std::vector<Letter>;

struct ParseError : std::runtime_error {
    size_t pos;
    ParseError(const std::string& msg, size_t at) : std::runtime_error(msg), pos(at) {}
};

/// Reduces a letter sequence modulo dp = pd = 1 and reads off the normal
/// form p^{n_1} y ... p^{n_k} y. A residue of uncancelled p/d letters after
/// the last y means the word is not in W; that signals an error. The empty
/// word is legal (it is the unit).
Composition normalize_letters(const LetterSeq& s);

/// Expands a Composition back to its normal-form letter sequence.
LetterSeq to_letters(const Composition& w);

struct WordStats {
    int depth;
    int length;  // k + |n_1| + ... + |n_k|
    int weight;  // n_1 + ... + n_k
};
WordStats word_stats(const Composition& w);
inline int weight(const Composition& w) {
    int s = 0;
    for (int v : w.e) s += v;
    return s;
}

/// y_n -> x0^{n-1} x1, concatenated letterwise (injective monoid morphism).
XWord s_map(const YWord& u);

/// z_n -> p^n y. With the chosen normal form this is the identity on the
/// underlying exponent tuple; only the semantic reading changes.
inline Composition r_map(const Composition& u) { return u; }

// Word grammars (see format_* for the emitted form):
//   Ytilde:  z(n1,n2,...)    signed integers, z() is the empty word
//   W:       whitespace-separated tokens p, d, y, p^k (signed k); "" is empty
//   X:       string over x0|x1
//   Y:       y(n1,...)       positive integers
Composition parse_ytilde(std::string_view text);
Composition parse_w(std::string_view text);
XWord parse_x(std::string_view text);
YWord parse_y(std::string_view text);

std::string format_ytilde(const Composition& w);
std::string format_w(const Composition& w);
std::string format_x(const XWord& w);
std::string format_y(const YWord& w);

/// Canonical term order for reports: by depth/length first, then by
/// reverse-lexicographic comparison of the letters (larger entries first).
template <class Word>
struct WordOrder {
    bool operator()(const Word& a, const Word& b) const;
};

template <>
struct WordOrder<Composition> {
    bool operator()(const Composition& a, const Composition& b) const {
        if (a.depth() != b.depth()) return a.depth() < b.depth();
        return b.e < a.e;
    }
};

template <>
struct WordOrder<XWord> {
    bool operator()(const XWord& a, const XWord& b) const {
        if (a.length() != b.length()) return a.length() < b.length();
        return b.letters < a.letters;
    }
};

template <>
struct WordOrder<YWord> {
    bool operator()(const YWord& a, const YWord& b) const {
        if (a.length() != b.length()) return a.length() < b.length();
        return b.n < a.n;
    }
};

/// Finite formal linear combination of words with coefficients in R
/// (Rational or LaurentPoly). Zero coefficients are never stored.
template <class Word, class R>
class LinComb {
public:
    using Terms = std::map<Word, R, WordOrder<Word>>;

    LinComb() = default;
    static LinComb unit() { return single(Word{}, R(1)); }
    static LinComb single(const Word& w, const R& c = R(1)) {
        LinComb l;
        l.add(w, c);
        return l;
    }

    void add(const Word& w, const R& c) {
        if (c == R(0)) return;
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            terms_.emplace(w, c);
        } else {
            it->second += c;
            if (it->second == R(0)) terms_.erase(it);
        }
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    LinComb& operator+=(const LinComb& o) {
        for (const auto& [w, c] : o.terms_) add(w, c);
        return *this;
    }
    LinComb& operator-=(const LinComb& o) {
        for (const auto& [w, c] : o.terms_) add(w, R(0) - c);
        return *this;
    }
    friend LinComb operator+(LinComb a, const LinComb& b) { a += b; return a; }
    friend LinComb operator-(LinComb a, const LinComb& b) { a -= b; return a; }

    LinComb scaled(const R& c) const {
        LinComb r;
        for (const auto& [w, v] : terms_) r.add(w, v * c);
        return r;
    }

    /// Applies f : Word -> Word to every term (collecting).
    template <class F>
    LinComb map_words(F&& f) const {
        LinComb r;
        for (const auto& [w, c] : terms_) r.add(f(w), c);
        return r;
    }

    friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LinComb& a, const LinComb& b) { return !(a == b); }

private:
    Terms terms_;
};

using QLinComb = LinComb<Composition, Rational>;   // over Q
using HLinComb = LinComb<Composition, LaurentPoly>;  // over Q[h, h^-1]

/// Promotes Rational coefficients to constant Laurent polynomials.
HLinComb to_h(const QLinComb& l);
/// Substitutes h = 1 (degeneration of a graded combination).
QLinComb at_h_one(const HLinComb& l);

std::string format_lincomb(const QLinComb& l);   // Ytilde word rendering
std::string format_lincomb(const HLinComb& l);
std::string format_lincomb(const LinComb<XWord, Rational>& l);
std::string format_lincomb(const LinComb<YWord, Rational>& l);

// JSON: {"ring":"Q"|"Q[h,h^-1]","terms":[{"word":[...],"coeff":"..."},...]}
std::string lincomb_to_json(const QLinComb& l);
std::string lincomb_to_json(const HLinComb& l);
std::string lincomb_to_json(const LinComb<XWord, Rational>& l);  // word as "x0x1" string
QLinComb lincomb_from_json(std::string_view text);
HLinComb hlincomb_from_json(std::string_view text);

}  // namespace qmzv

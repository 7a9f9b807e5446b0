#pragma once

#include "qmzv/words.hpp"

#include <map>
#include <utility>

namespace qmzv {

enum class ProductKind {
    shuffle_X,
    quasi_shuffle,
    q_shuffle,
    q_quasi_shuffle,
    q_shuffle_graded,
    q_quasi_shuffle_graded,
};

const char* product_kind_name(ProductKind k);

/// Classical shuffle product on words over {x0, x1}. The empty word is the
/// unit; coefficients are non-negative integers summing to C(|u|+|v|, |u|).
LinComb<XWord, Rational> shuffle(const XWord& u, const XWord& v);
LinComb<XWord, Rational> shuffle(const LinComb<XWord, Rational>& u, const LinComb<XWord, Rational>& v);

/// Ordinary quasi-shuffle (stuffle) on integer-letter words, with the
/// internal product merging letters by addition. Serves both the classical
/// alphabet (positive letters) and the signed alphabet.
QLinComb quasi_shuffle(const Composition& u, const Composition& v);
LinComb<YWord, Rational> quasi_shuffle(const YWord& u, const YWord& v);
LinComb<YWord, Rational> quasi_shuffle(const LinComb<YWord, Rational>& u, const LinComb<YWord, Rational>& v);

/// T on leading letters: z_n v -> z_n v - z_{n-1} v, the empty word fixed.
QLinComb apply_T(const QLinComb& l);
/// Graded variant: z_n v -> z_n v - h z_{n-1} v.
HLinComb apply_Tq(const HLinComb& l);

/// Weight grading twist: each word w is scaled by h^{w(w)} (forward) or
/// h^{-w(w)} (inverse).
enum class HDirection { forward, inverse };
HLinComb apply_H(const HLinComb& l, HDirection dir);

/// Memoized engines for the recursive word products. The graded products
/// over Q[h, h^-1] are the single implementation; the ungraded ones are the
/// exact h = 1 degeneration. Instances are not thread-safe; use one engine
/// per thread of work.
class ProductEngine {
public:
    /// `canonicalize` orders memo keys by commutativity, halving the table.
    /// Law-checking code turns it off so that u*v and v*u are computed
    /// independently.
    explicit ProductEngine(bool canonicalize = true) : canonicalize_(canonicalize) {}

    /// Graded q-shuffle on normal-form words over {p, d, y}.
    HLinComb q_shuffle(const Composition& u, const Composition& v);
    /// Graded q-quasi-shuffle on words over {z_n}.
    HLinComb q_quasi_shuffle(const Composition& u, const Composition& v);
    /// Ordinary quasi-shuffle, memoized (same result as the free function).
    QLinComb star(const Composition& u, const Composition& v);

    QLinComb q_shuffle_h1(const Composition& u, const Composition& v);
    QLinComb q_quasi_shuffle_h1(const Composition& u, const Composition& v);

    // h-bilinear extensions to combinations.
    HLinComb q_shuffle(const HLinComb& u, const HLinComb& v);
    HLinComb q_quasi_shuffle(const HLinComb& u, const HLinComb& v);
    QLinComb q_shuffle_h1(const QLinComb& u, const QLinComb& v);
    QLinComb q_quasi_shuffle_h1(const QLinComb& u, const QLinComb& v);
    QLinComb star(const QLinComb& u, const QLinComb& v);
    HLinComb star(const HLinComb& u, const HLinComb& v);

    /// Dispatch by kind for word arguments on the signed alphabet. Graded
    /// kinds return Laurent coefficients, ungraded ones constants.
    HLinComb product(ProductKind kind, const Composition& u, const Composition& v);

private:
    using Key = std::pair<Composition, Composition>;
    Key make_key(const Composition& u, const Composition& v) const;

    bool canonicalize_;
    std::map<Key, HLinComb> qsh_memo_;
    std::map<Key, HLinComb> qqsh_memo_;
    std::map<Key, QLinComb> star_memo_;
};

}  // namespace qmzv

#pragma once

#include "tbcert/numeric.hpp"

#include <string>
#include <vector>

namespace tbcert {

// Classifying fraction q/D of a two-bridge link: 0 < q < D, gcd(q, D) = 1.
// D is the determinant; the link is a knot exactly when D is odd.
struct Fraction {
    Int num;
    Int den;

    Fraction(Int q, Int D);
    bool operator==(const Fraction&) const = default;
};

// Positive continued fraction [a1 ... an], all terms >= 1, read as
//     1/(a1 + 1/(a2 + ... + 1/an)),
// so the value lies in (0, 1). Canonical expansions have odd length.
struct ContinuedFraction {
    std::vector<Int> terms;
    bool operator==(const ContinuedFraction&) const = default;
};

enum class Equivalence { Same, Mirror, Distinct };

Fraction cf_value(const ContinuedFraction& cf);

// Euclidean expansion of D/q, fixed up to odd length by splitting the final
// term ([..., t] -> [..., t-1, 1]). Left inverse of cf_value on odd lists.
ContinuedFraction cf_expand_odd(const Fraction& f);

bool is_knot(const Fraction& f);

// q = +-1 (mod D), i.e. a (2,n) torus link
bool is_torus_two_bridge(const Fraction& f);

// Schubert's classification for equal determinants: Same iff q2 = q1^{+-1}
// (mod D), Mirror iff q2 = -q1^{+-1} (mod D). Amphichiral knots satisfy both;
// Same takes priority.
Equivalence equivalence(const Fraction& a, const Fraction& b);

// accepts "q/D" with optional whitespace
Fraction parse_fraction(const std::string& text);

// accepts "[6 1 7 1 2]", "6 1 7 1 2" or "6,1,7,1,2"
ContinuedFraction parse_cf(const std::string& text);

std::string to_string(const Fraction& f);
std::string to_string(const ContinuedFraction& cf);
std::string to_string(Equivalence e);

}  // namespace tbcert

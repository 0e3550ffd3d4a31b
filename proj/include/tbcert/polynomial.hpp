#pragma once

#include "tbcert/pattern.hpp"

#include <map>
#include <vector>

namespace tbcert {

// sparse Laurent polynomial over the integers
struct LaurentPolynomial {
    std::map<long long, Int> coef;  // exponent -> coefficient, zeros dropped

    Int coefficient(long long e) const;
    void add(long long e, const Int& v);
    long long min_exp() const;  // throws on the zero polynomial
    long long max_exp() const;
    Int eval_at_one() const;
    Int eval_at_minus_one() const;
    bool palindromic() const;  // coef(e) == coef(-e) for all e

    // e.g. "-2t^-2 + 5t^-1 - 5 + 5t - 2t^2", exponents ascending
    std::string to_text() const;

    bool operator==(const LaurentPolynomial&) const = default;
};

inline constexpr long long kMaxDeterminant = 2'000'000;

// Symmetrized Alexander polynomial of the two-bridge knot b(D, q) by counting
// lattice point signs: with q' the odd representative of +-q, the partial
// sums S_k of eps_i = (-1)^floor(i q' / D) give
//     Delta(t) = sum_{k=0}^{D-1} (-1)^k t^{S_k}
// up to the symmetrizing shift. Normalized so Delta(1) = 1; checks
// |Delta(-1)| = D and palindromicity before returning.
LaurentPolynomial alexander_two_bridge(const Fraction& f, long long max_det = kMaxDeterminant);

// Independent route: det(V - tV^T) for the Seifert matrix V read off the
// even continued fraction D/q'' = 2b1 - 1/(2b2 - ...), evaluated by the
// tridiagonal minor recurrence and normalized the same way.
LaurentPolynomial alexander_oracle(const Fraction& f, long long max_det = kMaxDeterminant);

// signature of V + V^T for the same Seifert matrix, computed by congruence
// diagonalization; always even for knots
Int signature_two_bridge(const Fraction& f, long long max_det = kMaxDeterminant);

// the even continued fraction underlying the two oracle routines, exposed
// for testing; entries are the half twists b_i, all nonzero, even count
std::vector<Int> even_cf(const Fraction& f, long long max_det = kMaxDeterminant);

struct HfkRow {
    long long alexander;
    Int maslov;
    Int rank;
    bool operator==(const HfkRow&) const = default;
};

struct HfkTable {
    std::vector<HfkRow> rows;  // ascending Alexander grading
    Int total_rank() const;
    Int rank_at(long long alexander) const;
};

// knot Floer homology of an alternating knot from its Alexander polynomial
// and signature: rank |a_e| in Alexander grading e, Maslov grading
// e + sigma/2
HfkTable hfk_alternating(const LaurentPolynomial& delta, const Int& signature);

// (sum c_i - 1) / 2, the Seifert surface genus visible in the pattern's
// alternating diagram; only meaningful when sum c_i is odd
struct GenusBound {
    bool integral;
    Int genus;  // valid only when integral
};

GenusBound genus_bound(const Pattern& p);

}  // namespace tbcert

#pragma once

#include "tbcert/rational.hpp"

#include <array>
#include <cstdint>
#include <utility>

namespace tbcert {

// The annular pattern of a two-bridge knot with even a1 is a chain of m
// two-strand tangles, term i carrying d_i = a_{2i} horizontal and
// c_i = a_{2i+1} vertical crossings. Strand connectivity per term only
// depends on the parities of c and d, giving a permutation of the three
// strand positions that are not fixed. S3 is presented by reduced words in
// the two transpositions a (swaps positions 2,3) and b (swaps positions
// 1,2); position 4 never moves. Words act left to right: mul(x, y) means
// "x first, then y".
enum class Perm3 : std::uint8_t { id, a, b, ab, ba, aba };

Perm3 mul(Perm3 x, Perm3 y);
int apply(Perm3 g, int pos);  // pos in 1..4
Perm3 parse_perm3(const std::string& word);
std::string to_string(Perm3 g);

struct PatternTerm {
    Int c;  // a_{2i+1}, crossings away from the cusped band
    Int d;  // a_{2i}, crossings carrying the cusps
    bool operator==(const PatternTerm&) const = default;
};

struct Pattern {
    std::vector<PatternTerm> terms;
    bool operator==(const Pattern&) const = default;
};

// requires odd length >= 3 and even leading term
Pattern pattern_from_cf(const ContinuedFraction& cf);

Perm3 term_permutation(bool c_odd, bool d_odd);
Perm3 term_permutation(const PatternTerm& t);
Perm3 total_permutation(const Pattern& p);

// winding number of the pattern in its solid torus, 0 or 2
Int winding_number(Perm3 total);
// 1 for a knot pattern, 2 for a two-component link pattern
int component_count(Perm3 total);

// Direction of each of the four strands through the outer wall of a term's
// box. Position 4 always points outward, and exactly one of positions 1..3
// does; the three realizable states are named after where that strand sits.
enum class Dir : std::uint8_t { Inward, Outward };

struct OrientationState {
    std::array<Dir, 4> at;  // positions 1..4

    static OrientationState lower_right();  // (in, out, in, out), the start box
    static OrientationState upper();        // (in, in, out, out)
    static OrientationState lower_left();   // (out, in, in, out)
    bool operator==(const OrientationState&) const = default;
};

// 0 = lower_right, 1 = upper, 2 = lower_left; throws on anything else
int box_index(const OrientationState& s);

// What one term contributes given the box its strands enter in: the signed
// crossing counts are sign_c * c + sign_d * d, the d crossings carry
// up_mult * d up cusps and (2 - up_mult) * d down cusps, and the strands
// leave in box `next`.
struct TermTransition {
    OrientationState next;
    int sign_c;
    int sign_d;
    int up_mult;
    bool operator==(const TermTransition&) const = default;
};

// indexed by [box][c odd][d odd]
struct TransitionTable {
    TermTransition entry[3][2][2];
    bool operator==(const TransitionTable&) const = default;
};

// The table the fast path runs on. Frozen by hand from orientation
// propagation in the four-strand cross-section; test_diagram_oracle
// re-derives it from explicit diagram traversals.
const TransitionTable& frozen_transition_table();

TermTransition step(const OrientationState& s, const PatternTerm& t);

struct FrontInvariants {
    Int writhe = 0;
    Int up_cusps = 0;
    Int down_cusps = 0;

    Int tb() const { return writhe - (up_cusps + down_cusps) / 2; }
    Int rot() const { return (down_cusps - up_cusps) / 2; }
    Int sl() const { return tb() - rot(); }
    bool operator==(const FrontInvariants&) const = default;
};

// Start box chosen from the total permutation: patterns with winding number
// zero start in the lower right box, everything else starts in the upper box.
OrientationState start_state(Perm3 total);

FrontInvariants front_invariants(const Pattern& p);
Int writhe(const Pattern& p);
std::pair<Int, Int> cusp_counts(const Pattern& p);  // (up, down)

}  // namespace tbcert

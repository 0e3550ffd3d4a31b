#pragma once

#include "tbcert/pattern.hpp"

#include <string>
#include <vector>

namespace tbcert {

// Brute-force reference for the pattern module. It lays the annular pattern
// out as an explicit tangle word, closes it up, walks every strand to orient
// the diagram, and reads winding number, writhe and cusp counts off the
// crossings one by one. Quadratic-ish and only meant for small inputs; the
// fast path must agree with it exactly.
//
// Geometry: four parallel tracks run from the outer boundary wall (0) to the
// inner one (N). Generator j sits between walls j and j+1. A C generator
// crosses tracks 0,1 (positions 1,2), a D generator crosses tracks 1,2
// (positions 2,3); track 3 (position 4) is never crossed. Term i contributes
// d_i D generators followed by c_i C generators. The outer closure wraps
// track 3 to track 0 and track 2 to track 1 around the annulus (each pass
// rightward counts +1 toward the winding number, leftward -1); the inner
// closure joins tracks 0,3 and tracks 1,2.
struct ClosedDiagram {
    enum class Gen : std::uint8_t { C, D };
    std::vector<Gen> gens;
    std::vector<std::pair<long long, long long>> term_cd;
};

ClosedDiagram build_diagram(const Pattern& p);

struct TermObservation {
    OrientationState entry;  // directions through the term's outer wall
    OrientationState exit;
    long long c = 0;
    long long d = 0;
    long long signed_sum = 0;  // sum of crossing signs in this term
    long long up = 0;          // cusps on the term's D crossings
    long long down = 0;
};

struct Traversal {
    int components = 0;
    Int winding = 0;
    Int writhe = 0;
    Int up_cusps = 0;
    Int down_cusps = 0;
    OrientationState start;  // directions through wall 0
    std::vector<TermObservation> terms;
};

Traversal traverse(const ClosedDiagram& d);

// Re-derives the per-term transition table by traversing every pattern with
// up to three terms and entries up to four, then fitting the affine form
// (signed sum = sign_c * c + sign_d * d, cusps proportional to d) to the
// observations of each (box, parity) cell. Throws if any cell is unobserved
// or the observations do not fit.
TransitionTable derive_transition_table();

// tangle word plus a per-term traversal trace, for eyeballing small cases
std::string debug_dump(const ClosedDiagram& d);

}  // namespace tbcert

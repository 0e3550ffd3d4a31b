#pragma once

#include "tbcert/pattern.hpp"
#include "tbcert/polynomial.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace tbcert {

// The two-bridge knot b(D, q) with q/D = [a1 a2 ... a_{2m+1}], a1 = k + l
// even, is the satellite of an unknotted twist companion (k and l odd half
// twist counts) with the annular pattern built from a2 ... a_{2m+1}. When the
// pattern winding number is zero all a1/2 companion choices share tb and rot,
// and a rank count in the knot Floer homology of the model companion knot K0
// bounds how many of them can be Legendrian isotopic. That yields at least
//     N = ceil(a1 / 2^(r+2))
// pairwise non-isotopic Legendrian representatives with equal classical
// invariants; N >= 2 certifies Legendrian (and transverse) non-simplicity.

enum class CertPath { Theorem1, GenusBound, RankBound, Inapplicable };
enum class Verdict { NonSimple, Inconclusive, Inapplicable };

std::string to_string(CertPath p);
std::string to_string(Verdict v);
int exit_code(Verdict v);

// companion unknot with k = 2a+1 positive and l = 2b+1 negative half twist
// regions (a, b >= 0); its maximal Legendrian representatives
struct UnknotCompanion {
    Int a;
    Int b;

    Int k() const { return 2 * a + 1; }
    Int l() const { return 2 * b + 1; }
    Int tb() const { return -(a + b + 1); }   // = -(k + l)/2
    Int rot() const { return k() - l(); }     // = 2(a - b)
};

// tb and rot of a satellite with framing-w pattern inside the companion's
// standard neighborhood
std::pair<Int, Int> satellite_invariants(const Int& tb_companion, const Int& rot_companion,
                                         const Int& winding, const Int& tb_pattern,
                                         const Int& rot_pattern);

// parity conditions under which the companion grading is provably above the
// Seifert genus of K0: a1 even, a2 odd, a4, a6, ... even, sum of
// a3, a5, ... odd
bool theorem1_applicable(const ContinuedFraction& cf);

// model companion knot K0 = value of [1 a2 ... a_{2m+1}]
Fraction k0_of(const ContinuedFraction& cf);

struct Certificate {
    Fraction input;        // canonical classifying fraction
    ContinuedFraction cf;  // its odd-length expansion
    Verdict verdict = Verdict::Inapplicable;
    CertPath path = CertPath::Inapplicable;
    std::string reason;  // set when inapplicable

    std::optional<Pattern> pattern;
    std::optional<Perm3> total_perm;
    std::optional<Int> winding;
    std::optional<FrontInvariants> front;
    std::optional<Int> grading;  // (tb - rot + 1) / 2
    std::optional<Fraction> k0;
    std::optional<LaurentPolynomial> delta_k0;
    std::optional<Int> rank_r;
    std::optional<Int> bound_n;
    std::vector<std::pair<Int, Int>> family;  // companion half twist splittings (k, a1 - k)
    std::vector<std::string> notes;

    Certificate(Fraction f, ContinuedFraction c) : input(std::move(f)), cf(std::move(c)) {}

    Int tb() const { return front->tb(); }
    Int rot() const { return front->rot(); }
    Int sl() const { return front->sl(); }

    // stable field order, suitable for byte comparison
    nlohmann::ordered_json to_json() const;
};

Certificate certify(const Fraction& f, long long max_det = kMaxDeterminant);
Certificate certify(const ContinuedFraction& cf, long long max_det = kMaxDeterminant);

// the same certificate seen through self-linking numbers: sl = tb - rot and
// the identical lower bound for transverse representatives
struct TransverseView {
    Int sl;
    Int bound_n;
};

TransverseView transverse_view(const Certificate& c);

}  // namespace tbcert

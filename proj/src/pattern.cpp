#include "tbcert/pattern.hpp"

#include <stdexcept>

namespace tbcert {

namespace {

// one-line images of {1,2,3}, indexed by Perm3
constexpr int kImage[6][3] = {
    {1, 2, 3},  // id
    {1, 3, 2},  // a = (2 3)
    {2, 1, 3},  // b = (1 2)
    {2, 3, 1},  // ab, a first then b
    {3, 1, 2},  // ba
    {3, 2, 1},  // aba = bab
};

constexpr const char* kWord[6] = {"id", "a", "b", "ab", "ba", "aba"};

}  // namespace

Perm3 mul(Perm3 x, Perm3 y) {
    static const auto table = [] {
        std::array<std::array<Perm3, 6>, 6> t{};
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) {
                int img[3];
                for (int p = 0; p < 3; ++p) img[p] = kImage[j][kImage[i][p] - 1];
                for (int g = 0; g < 6; ++g)
                    if (img[0] == kImage[g][0] && img[1] == kImage[g][1] && img[2] == kImage[g][2])
                        t[i][j] = static_cast<Perm3>(g);
            }
        return t;
    }();
    return table[static_cast<int>(x)][static_cast<int>(y)];
}

int apply(Perm3 g, int pos) {
    if (pos == 4) return 4;
    if (pos < 1 || pos > 4) throw std::out_of_range("apply: position must be in 1..4");
    return kImage[static_cast<int>(g)][pos - 1];
}

Perm3 parse_perm3(const std::string& word) {
    if (word == "id" || word == "e" || word == "1") return Perm3::id;
    Perm3 g = Perm3::id;
    for (char c : word) {
        if (c == 'a') g = mul(g, Perm3::a);
        else if (c == 'b') g = mul(g, Perm3::b);
        else throw std::invalid_argument("parse_perm3: bad letter in '" + word + "'");
    }
    return g;
}

std::string to_string(Perm3 g) { return kWord[static_cast<int>(g)]; }

Pattern pattern_from_cf(const ContinuedFraction& cf) {
    const auto& a = cf.terms;
    if (a.size() < 3 || a.size() % 2 == 0)
        throw std::invalid_argument("pattern_from_cf: need an odd number of terms >= 3, got " +
                                    to_string(cf));
    Pattern p;
    for (size_t i = 1; i + 1 < a.size(); i += 2) {
        if (a[i] < 1 || a[i + 1] < 1)
            throw std::invalid_argument("pattern_from_cf: terms must be positive in " + to_string(cf));
        p.terms.push_back(PatternTerm{a[i + 1], a[i]});
    }
    return p;
}

Perm3 term_permutation(bool c_odd, bool d_odd) {
    if (c_odd && d_odd) return Perm3::ab;
    if (c_odd) return Perm3::b;
    if (d_odd) return Perm3::a;
    return Perm3::id;
}

Perm3 term_permutation(const PatternTerm& t) {
    return term_permutation(t.c % 2 != 0, t.d % 2 != 0);
}

Perm3 total_permutation(const Pattern& p) {
    Perm3 g = Perm3::id;
    for (const auto& t : p.terms) g = mul(g, term_permutation(t));
    return g;
}

Int winding_number(Perm3 total) {
    return (total == Perm3::ab || total == Perm3::aba) ? 0 : 2;
}

int component_count(Perm3 total) {
    return (total == Perm3::id || total == Perm3::a) ? 2 : 1;
}

OrientationState OrientationState::lower_right() {
    return {{Dir::Inward, Dir::Outward, Dir::Inward, Dir::Outward}};
}

OrientationState OrientationState::upper() {
    return {{Dir::Inward, Dir::Inward, Dir::Outward, Dir::Outward}};
}

OrientationState OrientationState::lower_left() {
    return {{Dir::Outward, Dir::Inward, Dir::Inward, Dir::Outward}};
}

int box_index(const OrientationState& s) {
    if (s == OrientationState::lower_right()) return 0;
    if (s == OrientationState::upper()) return 1;
    if (s == OrientationState::lower_left()) return 2;
    throw std::domain_error("box_index: orientation state is not realizable");
}

const TransitionTable& frozen_transition_table() {
    static const TransitionTable table = [] {
        const OrientationState lr = OrientationState::lower_right();
        const OrientationState up = OrientationState::upper();
        const OrientationState ll = OrientationState::lower_left();
        TransitionTable t;
        // lower right box
        t.entry[0][0][0] = {lr, -1, +1, 1};
        t.entry[0][0][1] = {up, +1, +1, 1};
        t.entry[0][1][0] = {ll, -1, +1, 1};
        t.entry[0][1][1] = {up, +1, +1, 1};
        // upper box
        t.entry[1][0][0] = {up, +1, +1, 1};
        t.entry[1][0][1] = {lr, -1, +1, 1};
        t.entry[1][1][0] = {up, +1, +1, 1};
        t.entry[1][1][1] = {ll, -1, +1, 1};
        // lower left box: both strand pairs run antiparallel to the cusped
        // band's preferred direction, so both counts flip sign and every
        // cusped crossing contributes two up cusps
        t.entry[2][0][0] = {ll, -1, -1, 2};
        t.entry[2][0][1] = {ll, -1, -1, 2};
        t.entry[2][1][0] = {lr, -1, -1, 2};
        t.entry[2][1][1] = {lr, -1, -1, 2};
        return t;
    }();
    return table;
}

TermTransition step(const OrientationState& s, const PatternTerm& t) {
    int co = t.c % 2 != 0 ? 1 : 0;
    int do_ = t.d % 2 != 0 ? 1 : 0;
    return frozen_transition_table().entry[box_index(s)][co][do_];
}

OrientationState start_state(Perm3 total) {
    return winding_number(total) == 0 ? OrientationState::lower_right()
                                      : OrientationState::upper();
}

FrontInvariants front_invariants(const Pattern& p) {
    if (p.terms.empty()) throw std::invalid_argument("front_invariants: empty pattern");
    OrientationState s = start_state(total_permutation(p));
    FrontInvariants fi;
    for (const auto& t : p.terms) {
        TermTransition tr = step(s, t);
        fi.writhe += tr.sign_c * t.c + tr.sign_d * t.d;
        fi.up_cusps += tr.up_mult * t.d;
        fi.down_cusps += (2 - tr.up_mult) * t.d;
        s = tr.next;
    }
    return fi;
}

Int writhe(const Pattern& p) { return front_invariants(p).writhe; }

std::pair<Int, Int> cusp_counts(const Pattern& p) {
    auto fi = front_invariants(p);
    return {fi.up_cusps, fi.down_cusps};
}

}  // namespace tbcert

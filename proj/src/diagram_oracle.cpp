#include "tbcert/diagram_oracle.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>

namespace tbcert {

namespace {

constexpr long long kMaxGenerators = 1'000'000;

int partner_in_gen(ClosedDiagram::Gen g, int track) {
    if (g == ClosedDiagram::Gen::C) {
        if (track == 0) return 1;
        if (track == 1) return 0;
    } else {
        if (track == 1) return 2;
        if (track == 2) return 1;
    }
    return track;
}

int inner_partner(int track) {
    static constexpr int partner[4] = {3, 2, 1, 0};
    return partner[track];
}

struct Node {
    int wall;
    int track;
    int heading;  // +1 toward the inner boundary, -1 toward the outer one
    bool operator==(const Node&) const = default;
};

struct Walker {
    const ClosedDiagram& diag;
    int walls;
    std::vector<std::array<int, 4>> dir;      // per wall and track: +1 in, -1 out, 0 unset
    std::vector<std::vector<int>> visits;     // per generator: headings of its two strands

    explicit Walker(const ClosedDiagram& d)
        : diag(d),
          walls(static_cast<int>(d.gens.size()) + 1),
          dir(walls, {0, 0, 0, 0}),
          visits(d.gens.size()) {}

    void record(const Node& n) {
        int& slot = dir[n.wall][n.track];
        if (slot != 0) throw std::logic_error("traverse: arc visited twice");
        slot = n.heading;
    }

    // follows one component, returns its net number of wrap passes
    long long walk(const Node& start) {
        record(start);
        long long net = 0;
        Node cur = start;
        while (true) {
            Node nxt{};
            if (cur.heading < 0) {
                if (cur.wall == 0) {
                    // outer closure: rightward passes (3->0 upper, 2->1 lower) count +1
                    switch (cur.track) {
                        case 3: net += 1; nxt = {0, 0, +1}; break;
                        case 0: net -= 1; nxt = {0, 3, +1}; break;
                        case 2: net += 1; nxt = {0, 1, +1}; break;
                        case 1: net -= 1; nxt = {0, 2, +1}; break;
                    }
                } else {
                    int g = cur.wall - 1;
                    int t2 = partner_in_gen(diag.gens[g], cur.track);
                    if (t2 != cur.track) visits[g].push_back(-1);
                    nxt = {cur.wall - 1, t2, -1};
                }
            } else {
                if (cur.wall == walls - 1) {
                    nxt = {cur.wall, inner_partner(cur.track), -1};
                } else {
                    int g = cur.wall;
                    int t2 = partner_in_gen(diag.gens[g], cur.track);
                    if (t2 != cur.track) visits[g].push_back(+1);
                    nxt = {cur.wall + 1, t2, +1};
                }
            }
            if (nxt == start) return net;
            record(nxt);
            cur = nxt;
        }
    }

    OrientationState wall_state(int w) const {
        OrientationState s{};
        for (int t = 0; t < 4; ++t) {
            if (dir[w][t] == 0) throw std::logic_error("traverse: unoriented arc");
            s.at[t] = dir[w][t] > 0 ? Dir::Inward : Dir::Outward;
        }
        return s;
    }
};

}  // namespace

ClosedDiagram build_diagram(const Pattern& p) {
    if (p.terms.empty()) throw std::invalid_argument("build_diagram: empty pattern");
    Int total = 0;
    for (const auto& t : p.terms) {
        if (t.c < 1 || t.d < 1) throw std::invalid_argument("build_diagram: terms must be positive");
        total += t.c + t.d;
    }
    if (total > kMaxGenerators) throw std::length_error("build_diagram: diagram too large");
    ClosedDiagram d;
    d.gens.reserve(total.convert_to<size_t>());
    for (const auto& t : p.terms) {
        long long c = to_int64(t.c, "build_diagram"), dd = to_int64(t.d, "build_diagram");
        for (long long i = 0; i < dd; ++i) d.gens.push_back(ClosedDiagram::Gen::D);
        for (long long i = 0; i < c; ++i) d.gens.push_back(ClosedDiagram::Gen::C);
        d.term_cd.emplace_back(c, dd);
    }
    return d;
}

Traversal traverse(const ClosedDiagram& d) {
    Walker w(d);
    // the first component enters along the upper wrap; a second one, if any,
    // owns the lower wrap
    long long net1 = w.walk({0, 3, -1});
    Traversal out;
    out.components = 1;
    out.winding = net1 < 0 ? -net1 : net1;
    if (w.dir[0][2] == 0) {
        long long net2 = w.walk({0, 2, -1});
        out.components = 2;
        out.winding += net2 < 0 ? -net2 : net2;
    }

    for (size_t g = 0; g < d.gens.size(); ++g) {
        if (w.visits[g].size() != 2) throw std::logic_error("traverse: crossing not met twice");
    }

    size_t off = 0;
    for (auto [c, dd] : d.term_cd) {
        TermObservation o;
        o.c = c;
        o.d = dd;
        o.entry = w.wall_state(static_cast<int>(off));
        o.exit = w.wall_state(static_cast<int>(off + dd + c));
        for (size_t g = off; g < off + dd + c; ++g) {
            bool parallel = w.visits[g][0] == w.visits[g][1];
            int h = d.gens[g] == ClosedDiagram::Gen::C ? +1 : -1;
            int sign = parallel ? h : -h;
            o.signed_sum += sign;
            out.writhe += sign;
            if (d.gens[g] == ClosedDiagram::Gen::D) {
                if (!parallel) {
                    o.up += 1;
                    o.down += 1;
                } else if (w.visits[g][0] > 0) {
                    o.up += 2;
                } else {
                    o.down += 2;
                }
            }
        }
        out.up_cusps += o.up;
        out.down_cusps += o.down;
        out.terms.push_back(std::move(o));
        off += dd + c;
    }
    out.start = w.wall_state(0);
    return out;
}

TransitionTable derive_transition_table() {
    struct Obs {
        long long c, d, sum, up, down;
        int next;
    };
    std::vector<Obs> cell[3][2][2];

    for (int m = 1; m <= 3; ++m) {
        std::vector<int> idx(2 * m, 0);
        while (true) {
            Pattern p;
            for (int i = 0; i < m; ++i)
                p.terms.push_back(PatternTerm{idx[2 * i] + 1, idx[2 * i + 1] + 1});
            Traversal tr = traverse(build_diagram(p));
            for (const auto& o : tr.terms)
                cell[box_index(o.entry)][o.c % 2][o.d % 2].push_back(
                    {o.c, o.d, o.signed_sum, o.up, o.down, box_index(o.exit)});
            size_t k = 0;
            while (k < idx.size() && ++idx[k] == 4) idx[k++] = 0;
            if (k == idx.size()) break;
        }
    }

    const OrientationState boxes[3] = {OrientationState::lower_right(), OrientationState::upper(),
                                       OrientationState::lower_left()};
    TransitionTable out;
    for (int b = 0; b < 3; ++b)
        for (int co = 0; co < 2; ++co)
            for (int dp = 0; dp < 2; ++dp) {
                const auto& v = cell[b][co][dp];
                if (v.empty()) throw std::logic_error("derive_transition_table: unobserved cell");
                if (v[0].up % v[0].d != 0)
                    throw std::logic_error("derive_transition_table: cusps not proportional to d");
                long long mult = v[0].up / v[0].d;
                std::optional<long long> sc, sd;
                for (const auto& o : v) {
                    if (!sc && o.d == v[0].d && o.c != v[0].c)
                        sc = (o.sum - v[0].sum) / (o.c - v[0].c);
                    if (!sd && o.c == v[0].c && o.d != v[0].d)
                        sd = (o.sum - v[0].sum) / (o.d - v[0].d);
                }
                if (!sc || !sd)
                    throw std::logic_error("derive_transition_table: not enough variety in cell");
                for (const auto& o : v) {
                    if (o.next != v[0].next)
                        throw std::logic_error("derive_transition_table: inconsistent next state");
                    if (o.sum != *sc * o.c + *sd * o.d)
                        throw std::logic_error("derive_transition_table: signed sums are not affine");
                    if (o.up != mult * o.d || o.down != (2 - mult) * o.d)
                        throw std::logic_error("derive_transition_table: cusp counts do not fit");
                }
                if ((*sc != 1 && *sc != -1) || (*sd != 1 && *sd != -1) || mult < 0 || mult > 2)
                    throw std::logic_error("derive_transition_table: coefficients out of range");
                out.entry[b][co][dp] =
                    TermTransition{boxes[v[0].next], static_cast<int>(*sc), static_cast<int>(*sd),
                                   static_cast<int>(mult)};
            }
    return out;
}

namespace {

const char* box_name(const OrientationState& s) {
    static constexpr const char* names[3] = {"lower_right", "upper", "lower_left"};
    return names[box_index(s)];
}

}  // namespace

std::string debug_dump(const ClosedDiagram& d) {
    std::ostringstream out;
    out << "word:";
    size_t off = 0;
    for (auto [c, dd] : d.term_cd) {
        out << ' ';
        for (long long i = 0; i < dd; ++i) out << 'D';
        for (long long i = 0; i < c; ++i) out << 'C';
        off += c + dd;
    }
    out << '\n';
    Traversal tr = traverse(d);
    out << "components " << tr.components << ", winding " << tr.winding << ", writhe " << tr.writhe
        << ", cusps " << tr.up_cusps << " up / " << tr.down_cusps << " down\n";
    for (size_t i = 0; i < tr.terms.size(); ++i) {
        const auto& o = tr.terms[i];
        out << "term " << i << ": c=" << o.c << " d=" << o.d << " enter " << box_name(o.entry)
            << " exit " << box_name(o.exit) << " signed " << o.signed_sum << " cusps " << o.up
            << " up / " << o.down << " down\n";
    }
    return out.str();
}

}  // namespace tbcert

#include "tbcert/certifier.hpp"

#include <stdexcept>

namespace tbcert {

std::string to_string(CertPath p) {
    switch (p) {
        case CertPath::Theorem1: return "theorem1";
        case CertPath::GenusBound: return "genus_bound";
        case CertPath::RankBound: return "rank_bound";
        case CertPath::Inapplicable: return "inapplicable";
    }
    throw std::logic_error("unreachable");
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::NonSimple: return "non_simple";
        case Verdict::Inconclusive: return "inconclusive";
        case Verdict::Inapplicable: return "inapplicable";
    }
    throw std::logic_error("unreachable");
}

int exit_code(Verdict v) {
    switch (v) {
        case Verdict::NonSimple: return 0;
        case Verdict::Inconclusive: return 1;
        case Verdict::Inapplicable: return 2;
    }
    throw std::logic_error("unreachable");
}

std::pair<Int, Int> satellite_invariants(const Int& tb_companion, const Int& rot_companion,
                                         const Int& winding, const Int& tb_pattern,
                                         const Int& rot_pattern) {
    return {winding * winding * tb_companion + tb_pattern,
            winding * rot_companion + rot_pattern};
}

bool theorem1_applicable(const ContinuedFraction& cf) {
    const auto& a = cf.terms;
    if (a.size() < 3 || a.size() % 2 == 0) return false;
    if (a[0] % 2 != 0) return false;
    if (a[1] % 2 == 0) return false;
    for (size_t i = 3; i < a.size(); i += 2)
        if (a[i] % 2 != 0) return false;
    Int sum_c = 0;
    for (size_t i = 2; i < a.size(); i += 2) sum_c += a[i];
    return sum_c % 2 != 0;
}

Fraction k0_of(const ContinuedFraction& cf) {
    const auto& a = cf.terms;
    if (a.size() < 3 || a.size() % 2 == 0)
        throw std::invalid_argument("k0_of: need an odd number of terms >= 3");
    ContinuedFraction k0{{Int(1)}};
    k0.terms.insert(k0.terms.end(), a.begin() + 1, a.end());
    return cf_value(k0);
}

namespace {

Certificate inapplicable(Certificate cert, std::string reason) {
    cert.verdict = Verdict::Inapplicable;
    cert.path = CertPath::Inapplicable;
    cert.reason = std::move(reason);
    return cert;
}

}  // namespace

Certificate certify(const Fraction& f, long long max_det) {
    Certificate cert(f, cf_expand_odd(f));
    const auto& a = cert.cf.terms;

    if (!is_knot(f))
        return inapplicable(std::move(cert), "even determinant: a two-component link, not a knot");
    if (is_torus_two_bridge(f))
        return inapplicable(std::move(cert), "(2,n) torus knot: Legendrian simple");
    if (a[0] % 2 != 0)
        return inapplicable(std::move(cert),
                            "leading continued fraction term is odd: no half twist splitting");

    cert.pattern = pattern_from_cf(cert.cf);
    cert.total_perm = total_permutation(*cert.pattern);
    cert.winding = winding_number(*cert.total_perm);
    if (*cert.winding != 0)
        return inapplicable(std::move(cert),
                            "pattern winding number is 2: classical invariants vary with the companion");

    cert.front = front_invariants(*cert.pattern);
    Int two_grading = cert.tb() - cert.rot() + 1;
    if (two_grading % 2 != 0) throw std::logic_error("certify: tb - rot is even");
    cert.grading = two_grading / 2;

    cert.k0 = k0_of(cert.cf);
    cert.delta_k0 = alexander_two_bridge(*cert.k0, max_det);
    Int model = cert.delta_k0->coefficient(to_int64(*cert.grading, "certify: grading"));
    if (model < 0) model = -model;

    GenusBound gb = genus_bound(*cert.pattern);
    if (theorem1_applicable(cert.cf)) {
        cert.path = CertPath::Theorem1;
        cert.rank_r = 0;
        cert.notes.push_back(
            "parity conditions put the grading above the companion Seifert genus: homology vanishes there");
    } else if (gb.integral && gb.genus < *cert.grading) {
        cert.path = CertPath::GenusBound;
        cert.rank_r = 0;
        cert.notes.push_back("companion genus bound " + gb.genus.str() + " < grading " +
                             cert.grading->str() + ": homology vanishes there");
    } else {
        cert.path = CertPath::RankBound;
        cert.rank_r = model;
    }
    if (*cert.rank_r != model)
        cert.notes.push_back("model companion Alexander coefficient at the grading is " + model.str() +
                             "; the vanishing argument supersedes it");

    long long rr = to_int64(*cert.rank_r, "certify: rank");
    cert.bound_n = ceil_div(a[0], Int(1) << static_cast<unsigned>(rr + 2));

    for (Int k = 1; k < a[0]; k += 2) cert.family.emplace_back(k, a[0] - k);

    cert.verdict = *cert.bound_n >= 2 ? Verdict::NonSimple : Verdict::Inconclusive;
    if (cert.verdict == Verdict::NonSimple)
        cert.notes.push_back("at least " + cert.bound_n->str() +
                             " companion choices stay pairwise non-isotopic while sharing tb and rot");
    return cert;
}

Certificate certify(const ContinuedFraction& cf, long long max_det) {
    Certificate cert = certify(cf_value(cf), max_det);
    if (!(cert.cf == cf))
        cert.notes.push_back("input " + to_string(cf) + " canonicalized to " + to_string(cert.cf));
    return cert;
}

TransverseView transverse_view(const Certificate& c) {
    if (c.path == CertPath::Inapplicable || !c.front || !c.bound_n)
        throw std::domain_error("transverse_view: certificate is not applicable");
    return {c.sl(), *c.bound_n};
}

namespace {

nlohmann::ordered_json json_int(const Int& v) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (v >= lo && v <= hi) return v.convert_to<std::int64_t>();
    return v.str();
}

template <typename T, typename F>
nlohmann::ordered_json opt(const std::optional<T>& v, F&& f) {
    if (!v) return nullptr;
    return f(*v);
}

}  // namespace

nlohmann::ordered_json Certificate::to_json() const {
    using nlohmann::ordered_json;
    ordered_json j;
    j["input"] = to_string(input);
    j["determinant"] = json_int(input.den);
    ordered_json cfj = ordered_json::array();
    for (const Int& t : cf.terms) cfj.push_back(json_int(t));
    j["cf"] = std::move(cfj);
    j["verdict"] = tbcert::to_string(verdict);
    j["path"] = tbcert::to_string(path);
    j["reason"] = reason.empty() ? ordered_json(nullptr) : ordered_json(reason);
    j["pattern"] = opt(pattern, [](const Pattern& p) {
        ordered_json arr = ordered_json::array();
        for (const auto& t : p.terms) {
            ordered_json term;
            term["c"] = json_int(t.c);
            term["d"] = json_int(t.d);
            arr.push_back(std::move(term));
        }
        return arr;
    });
    j["total_perm"] = opt(total_perm, [](Perm3 g) { return tbcert::to_string(g); });
    j["winding"] = opt(winding, json_int);
    j["writhe"] = opt(front, [](const FrontInvariants& fi) { return json_int(fi.writhe); });
    j["up_cusps"] = opt(front, [](const FrontInvariants& fi) { return json_int(fi.up_cusps); });
    j["down_cusps"] = opt(front, [](const FrontInvariants& fi) { return json_int(fi.down_cusps); });
    j["tb"] = opt(front, [](const FrontInvariants& fi) { return json_int(fi.tb()); });
    j["rot"] = opt(front, [](const FrontInvariants& fi) { return json_int(fi.rot()); });
    j["sl"] = opt(front, [](const FrontInvariants& fi) { return json_int(fi.sl()); });
    j["grading"] = opt(grading, json_int);
    j["k0"] = opt(k0, [](const Fraction& k) { return to_string(k); });
    j["delta_k0"] = opt(delta_k0, [](const LaurentPolynomial& d) { return d.to_text(); });
    j["rank_r"] = opt(rank_r, json_int);
    j["bound_n"] = opt(bound_n, json_int);
    ordered_json fam = ordered_json::array();
    for (const auto& [k, l] : family) fam.push_back(ordered_json::array({json_int(k), json_int(l)}));
    j["family"] = std::move(fam);
    j["notes"] = notes;
    return j;
}

}  // namespace tbcert

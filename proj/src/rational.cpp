#include "tbcert/rational.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace tbcert {

Fraction::Fraction(Int q, Int D) : num(std::move(q)), den(std::move(D)) {
    if (num <= 0 || num >= den)
        throw std::invalid_argument("fraction " + num.str() + "/" + den.str() +
                                    " must satisfy 0 < numerator < denominator");
    if (boost::multiprecision::gcd(num, den) != 1)
        throw std::invalid_argument("fraction " + num.str() + "/" + den.str() + " is not reduced");
}

Fraction cf_value(const ContinuedFraction& cf) {
    if (cf.terms.empty()) throw std::invalid_argument("cf_value: empty continued fraction");
    for (const Int& a : cf.terms)
        if (a < 1) throw std::invalid_argument("cf_value: terms must be positive, got " + a.str());
    // fold from the innermost term: x = a + 1/x', kept as p/q
    Int p = cf.terms.back(), q = 1;
    for (auto it = std::next(cf.terms.rbegin()); it != cf.terms.rend(); ++it) {
        Int np = *it * p + q;
        q = p;
        p = std::move(np);
    }
    if (p == q) throw std::invalid_argument("cf_value: [1] does not define a fraction in (0,1)");
    return Fraction(q, p);
}

ContinuedFraction cf_expand_odd(const Fraction& f) {
    std::vector<Int> terms;
    Int a = f.den, b = f.num;
    while (b != 0) {
        terms.push_back(a / b);
        a %= b;
        std::swap(a, b);
    }
    // the canonical expansion ends with a term >= 2, so an even length can
    // always be fixed by splitting the last term
    if (terms.size() % 2 == 0) {
        terms.back() -= 1;
        terms.push_back(1);
    }
    return ContinuedFraction{std::move(terms)};
}

bool is_knot(const Fraction& f) { return f.den % 2 != 0; }

bool is_torus_two_bridge(const Fraction& f) { return f.num == 1 || f.num == f.den - 1; }

Equivalence equivalence(const Fraction& a, const Fraction& b) {
    if (a.den != b.den) return Equivalence::Distinct;
    const Int& d = a.den;
    Int inv = mod_inverse(a.num, d);
    if (b.num == a.num || b.num == inv) return Equivalence::Same;
    if (b.num == d - a.num || b.num == d - inv) return Equivalence::Mirror;
    return Equivalence::Distinct;
}

namespace {

std::string trim(const std::string& s) {
    auto from = s.find_first_not_of(" \t\r\n");
    if (from == std::string::npos) return "";
    auto to = s.find_last_not_of(" \t\r\n");
    return s.substr(from, to - from + 1);
}

Int parse_positive_int(const std::string& raw) {
    std::string t = trim(raw);
    if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("expected a positive integer, got '" + raw + "'");
    Int v(t);
    if (v == 0) throw std::invalid_argument("expected a positive integer, got '" + raw + "'");
    return v;
}

}  // namespace

Fraction parse_fraction(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos)
        throw std::invalid_argument("expected 'q/D', got '" + text + "'");
    Int q = parse_positive_int(text.substr(0, slash));
    Int d = parse_positive_int(text.substr(slash + 1));
    return Fraction(std::move(q), std::move(d));
}

ContinuedFraction parse_cf(const std::string& text) {
    std::string t = text;
    for (char& c : t)
        if (c == '[' || c == ']' || c == ',') c = ' ';
    std::istringstream in(t);
    std::vector<Int> terms;
    std::string token;
    while (in >> token) terms.push_back(parse_positive_int(token));
    if (terms.empty()) throw std::invalid_argument("expected continued fraction terms in '" + text + "'");
    return ContinuedFraction{std::move(terms)};
}

std::string to_string(const Fraction& f) { return f.num.str() + "/" + f.den.str(); }

std::string to_string(const ContinuedFraction& cf) {
    std::string out = "[";
    for (size_t i = 0; i < cf.terms.size(); ++i) {
        if (i) out += ' ';
        out += cf.terms[i].str();
    }
    return out + "]";
}

std::string to_string(Equivalence e) {
    switch (e) {
        case Equivalence::Same: return "same";
        case Equivalence::Mirror: return "mirror";
        case Equivalence::Distinct: return "distinct";
    }
    throw std::logic_error("unreachable");
}

}  // namespace tbcert

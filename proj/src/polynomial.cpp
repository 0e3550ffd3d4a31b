#include "tbcert/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace tbcert {

Int LaurentPolynomial::coefficient(long long e) const {
    auto it = coef.find(e);
    return it == coef.end() ? Int(0) : it->second;
}

void LaurentPolynomial::add(long long e, const Int& v) {
    auto it = coef.emplace(e, 0).first;
    it->second += v;
    if (it->second == 0) coef.erase(it);
}

long long LaurentPolynomial::min_exp() const {
    if (coef.empty()) throw std::domain_error("min_exp of the zero polynomial");
    return coef.begin()->first;
}

long long LaurentPolynomial::max_exp() const {
    if (coef.empty()) throw std::domain_error("max_exp of the zero polynomial");
    return coef.rbegin()->first;
}

Int LaurentPolynomial::eval_at_one() const {
    Int s = 0;
    for (const auto& [e, a] : coef) s += a;
    return s;
}

Int LaurentPolynomial::eval_at_minus_one() const {
    Int s = 0;
    for (const auto& [e, a] : coef) s += e % 2 == 0 ? a : -a;
    return s;
}

bool LaurentPolynomial::palindromic() const {
    for (const auto& [e, a] : coef)
        if (coefficient(-e) != a) return false;
    return true;
}

std::string LaurentPolynomial::to_text() const {
    if (coef.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, a] : coef) {
        Int mag = a < 0 ? Int(-a) : a;
        if (first) {
            if (a < 0) out << '-';
            first = false;
        } else {
            out << (a < 0 ? " - " : " + ");
        }
        if (mag != 1 || e == 0) out << mag.str();
        if (e == 1) out << 't';
        else if (e != 0) out << "t^" << e;
    }
    return out.str();
}

namespace {

void check_alexander(const LaurentPolynomial& poly, const Fraction& f, const char* who) {
    std::string w(who);
    if (poly.eval_at_one() != 1) throw std::logic_error(w + ": value at 1 is not 1");
    Int det = poly.eval_at_minus_one();
    if (det < 0) det = -det;
    if (det != f.den) throw std::logic_error(w + ": determinant mismatch");
    if (!poly.palindromic()) throw std::logic_error(w + ": not palindromic");
}

}  // namespace

LaurentPolynomial alexander_two_bridge(const Fraction& f, long long max_det) {
    if (!is_knot(f)) throw std::invalid_argument("alexander_two_bridge: even determinant, not a knot");
    if (f.den > max_det) throw std::length_error("alexander_two_bridge: determinant exceeds limit");
    long long p = to_int64(f.den, "alexander_two_bridge");
    long long q = to_int64(f.num, "alexander_two_bridge");
    if (q % 2 == 0) q = p - q;  // odd representative; the symmetrized result is mirror invariant

    // Delta(t) = sum_{k=0}^{p-1} (-1)^k t^{S_k} with S_k the partial sums of
    // (-1)^floor(k q / p), then recentered. floor(k q / p) gains one exactly
    // when k q mod p wraps past p. The partial sums stay in (-p, p), so a
    // flat array indexed by offset beats a map in the hot loop.
    std::vector<long long> acc(2 * static_cast<size_t>(p) - 1, 0);
    const long long off = p - 1;
    acc[off] = 1;
    long long s = 0, r = 0;
    int parity = 0, sign = 1;
    for (long long k = 1; k < p; ++k) {
        r += q;
        if (r >= p) {
            r -= p;
            parity ^= 1;
        }
        s += parity ? -1 : 1;
        sign = -sign;
        acc[off + s] += sign;
    }

    long long lo = 0, hi = 0;
    bool any = false;
    for (long long e = -(p - 1); e <= p - 1; ++e) {
        if (acc[off + e] == 0) continue;
        if (!any) lo = e;
        hi = e;
        any = true;
    }
    if (!any) throw std::logic_error("alexander_two_bridge: vanishing polynomial");
    if ((lo + hi) % 2 != 0) throw std::logic_error("alexander_two_bridge: asymmetric support");
    long long shift = (lo + hi) / 2;

    LaurentPolynomial out;
    for (long long e = lo; e <= hi; ++e)
        if (acc[off + e] != 0) out.coef[e - shift] = acc[off + e];
    check_alexander(out, f, "alexander_two_bridge");
    return out;
}

std::vector<Int> even_cf(const Fraction& f, long long max_det) {
    if (!is_knot(f)) throw std::invalid_argument("even_cf: even determinant, not a knot");
    if (f.den > max_det) throw std::length_error("even_cf: determinant exceeds limit");
    Int qe = f.num % 2 == 0 ? f.num : f.num - f.den;
    // componentwise construction insists on a positive denominator; dividing
    // normalizes the sign instead
    Rat x = Rat(f.den) / Rat(qe);
    std::vector<Int> bs;
    while (true) {
        Int t = rat_floor(x);
        Int twob = t % 2 == 0 ? t : t + 1;
        bs.push_back(twob / 2);
        if (x == twob) break;
        x = Rat(1) / (twob - x);
        if (static_cast<long long>(bs.size()) > max_det)
            throw std::logic_error("even_cf: expansion did not terminate");
    }
    if (bs.size() % 2 != 0) throw std::logic_error("even_cf: odd length for a knot");
    for (const Int& b : bs)
        if (b == 0) throw std::logic_error("even_cf: zero twist region");
    return bs;
}

LaurentPolynomial alexander_oracle(const Fraction& f, long long max_det) {
    auto bs = even_cf(f, max_det);
    size_t n = bs.size();
    // V has the b_i on the diagonal and ones above it, so V - tV^T is
    // tridiagonal and its leading minors satisfy
    //     M_k = b_k (1 - t) M_{k-1} + t M_{k-2}
    std::vector<Int> prev{1};
    std::vector<Int> cur{bs[0], -bs[0]};
    for (size_t k = 2; k <= n; ++k) {
        std::vector<Int> nxt(k + 1, 0);
        for (size_t i = 0; i < cur.size(); ++i) {
            nxt[i] += bs[k - 1] * cur[i];
            nxt[i + 1] -= bs[k - 1] * cur[i];
        }
        for (size_t i = 0; i < prev.size(); ++i) nxt[i + 1] += prev[i];
        prev = std::move(cur);
        cur = std::move(nxt);
    }

    LaurentPolynomial out;
    long long shift = static_cast<long long>(n) / 2;
    for (size_t i = 0; i < cur.size(); ++i)
        if (cur[i] != 0) out.coef[static_cast<long long>(i) - shift] = cur[i];
    check_alexander(out, f, "alexander_oracle");
    return out;
}

Int signature_two_bridge(const Fraction& f, long long max_det) {
    auto bs = even_cf(f, max_det);
    size_t n = bs.size();
    // V + V^T is tridiagonal with diagonal 2 b_i and unit off diagonals.
    // Congruence diagonalization: a nonzero pivot contributes its sign and
    // adds -1/pivot to the next diagonal entry; a zero pivot forms an
    // indefinite 2x2 block with its neighbor (one + and one -) whose block
    // inverse has a zero corner, so nothing propagates past it.
    std::vector<Rat> d(n);
    for (size_t i = 0; i < n; ++i) d[i] = Rat(2 * bs[i]);
    Int pos = 0, neg = 0;
    size_t k = 0;
    while (k < n) {
        if (d[k] != 0) {
            (d[k] > 0 ? pos : neg) += 1;
            if (k + 1 < n) d[k + 1] -= Rat(1) / d[k];
            k += 1;
        } else {
            if (k + 1 >= n) throw std::logic_error("signature_two_bridge: singular matrix");
            pos += 1;
            neg += 1;
            k += 2;
        }
    }
    Int sigma = pos - neg;
    if (sigma % 2 != 0) throw std::logic_error("signature_two_bridge: odd signature");
    return sigma;
}

Int HfkTable::total_rank() const {
    Int s = 0;
    for (const auto& r : rows) s += r.rank;
    return s;
}

Int HfkTable::rank_at(long long alexander) const {
    for (const auto& r : rows)
        if (r.alexander == alexander) return r.rank;
    return 0;
}

HfkTable hfk_alternating(const LaurentPolynomial& delta, const Int& signature) {
    if (signature % 2 != 0) throw std::invalid_argument("hfk_alternating: signature must be even");
    if (delta.coef.empty() || delta.eval_at_one() != 1)
        throw std::invalid_argument("hfk_alternating: polynomial is not normalized");
    Int half = signature / 2;
    HfkTable t;
    for (const auto& [e, a] : delta.coef)
        t.rows.push_back({e, e + half, a < 0 ? Int(-a) : a});
    return t;
}

GenusBound genus_bound(const Pattern& p) {
    Int sum_c = 0;
    for (const auto& t : p.terms) sum_c += t.c;
    if (sum_c % 2 == 0) return {false, 0};
    return {true, (sum_c - 1) / 2};
}

}  // namespace tbcert

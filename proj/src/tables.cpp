#include "tbcert/tables.hpp"

#include <stdexcept>

namespace tbcert {

LaurentPolynomial row_delta(const TableRow& row) {
    if (row.delta.size() % 2 == 0) throw std::logic_error("row_delta: even support length");
    long long lo = -static_cast<long long>(row.delta.size() - 1) / 2;
    LaurentPolynomial p;
    for (size_t i = 0; i < row.delta.size(); ++i)
        if (row.delta[i] != 0) p.coef[lo + static_cast<long long>(i)] = row.delta[i];
    return p;
}

std::vector<RowCheck> reproduce_table(int which) {
    if (which != 1 && which != 2) throw std::invalid_argument("reproduce_table: table must be 1 or 2");
    const auto& rows = which == 1 ? table1() : table2();
    std::vector<RowCheck> out;
    out.reserve(rows.size());
    for (const auto& row : rows) {
        ContinuedFraction cf;
        for (long long t : row.cf) cf.terms.emplace_back(t);
        Certificate cert = certify(cf);
        Fraction label = parse_fraction(row.label);
        RowCheck chk{&row,
                     std::move(cert),
                     equivalence(label, cf_value(cf)),
                     false,
                     false,
                     row.rank < 0};
        chk.delta_ok = chk.cert.delta_k0 && *chk.cert.delta_k0 == row_delta(row);
        chk.grading_ok = chk.cert.grading && *chk.cert.grading == row.grading;
        if (row.rank >= 0) chk.rank_ok = chk.cert.rank_r && *chk.cert.rank_r == row.rank;
        out.push_back(std::move(chk));
    }
    return out;
}

}  // namespace tbcert

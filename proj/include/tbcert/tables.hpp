#pragma once

#include "tbcert/certifier.hpp"

namespace tbcert {

// Expected data for the two published example tables, kept verbatim as a
// fixture: labels exactly as printed, polynomial coefficient lists from the
// lowest exponent up (support symmetric around zero), grading, and the rank
// column where the table has one. Known deviations are annotated per row
// instead of silently patched.
struct TableRow {
    const char* label;  // fraction as printed
    std::vector<long long> cf;
    std::vector<long long> delta;
    long long grading;
    int rank;  // -1 when the table has no rank column
    const char* note;
};

const std::vector<TableRow>& table1();  // 15 rows
const std::vector<TableRow>& table2();  // 14 rows

LaurentPolynomial row_delta(const TableRow& row);

struct RowCheck {
    const TableRow* row;
    Certificate cert;
    Equivalence label_vs_computed;  // printed label against the computed fraction
    bool delta_ok;
    bool grading_ok;
    bool rank_ok;  // vacuously true without a rank column

    bool pass() const {
        return delta_ok && grading_ok && rank_ok && label_vs_computed != Equivalence::Distinct;
    }
};

// certify every row's continued fraction from scratch and diff against the
// stored data
std::vector<RowCheck> reproduce_table(int which);

}  // namespace tbcert

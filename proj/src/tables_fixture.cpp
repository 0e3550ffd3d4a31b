#include "tbcert/tables.hpp"

namespace tbcert {

// Source data transcribed from the published tables. Every label except
// 14/1825 names the mirror of the fraction the continued fraction expands to
// (q versus D - q); reproduce_table reconciles that through equivalence().

const std::vector<TableRow>& table1() {
    static const std::vector<TableRow> rows = {
        {"153/179", {6, 1, 7, 1, 2}, {4, -12, 17, -12, 4}, 3, -1, nullptr},
        {"341/399", {6, 1, 7, 3, 2}, {8, -27, 39, -27, 8}, 3, -1, nullptr},
        {"529/619", {6, 1, 7, 5, 2}, {12, -42, 61, -42, 12}, 3, -1, nullptr},
        {"717/839", {6, 1, 7, 7, 2}, {16, -57, 83, -57, 16}, 3, -1, nullptr},
        {"905/1059", {6, 1, 7, 9, 2}, {20, -72, 105, -72, 20}, 3, -1, nullptr},
        {"189/221", {6, 1, 9, 1, 2}, {5, -15, 21, -15, 5}, 4, -1, nullptr},
        {"425/497", {6, 1, 9, 3, 2}, {10, -34, 49, -34, 10}, 4, -1, nullptr},
        {"661/773", {6, 1, 9, 5, 2}, {15, -53, 77, -53, 15}, 4, -1, nullptr},
        {"897/1049", {6, 1, 9, 7, 2}, {20, -72, 105, -72, 20}, 4, -1, nullptr},
        {"1133/1325", {6, 1, 9, 9, 2}, {25, -91, 133, -91, 25}, 4, -1, nullptr},
        {"107/127", {6, 2, 1, 5, 1}, {-3, 7, -7, 7, -3}, -3, -1, nullptr},
        {"139/165", {6, 2, 1, 7, 1}, {-4, 9, -9, 9, -4}, -4, -1, nullptr},
        {"171/203", {6, 2, 1, 9, 1}, {-5, 11, -11, 11, -5}, -5, -1, nullptr},
        {"293/347", {6, 2, 2, 1, 7}, {8, -19, 23, -19, 8}, 3, -1, nullptr},
        {"369/437", {6, 2, 2, 1, 9}, {10, -24, 29, -24, 10}, 4, -1, nullptr},
    };
    return rows;
}

const std::vector<TableRow>& table2() {
    static const std::vector<TableRow> rows = {
        {"14/1825",
         {130, 2, 1, 3, 1},
         {-2, 5, -5, 5, -2},
         -2,
         2,
         "printed as \"-2t^-2 + 5t^-1 -55t^1 -2t^2\", which fails palindromicity and "
         "|delta(-1)| = 19; the middle terms are a typo for \"-5 + 5t\" and the corrected "
         "coefficients are stored here"},
        {"243/257", {18, 2, 1, 3, 1}, {-2, 5, -5, 5, -2}, -2, 2, nullptr},
        {"625/661", {18, 2, 1, 3, 3}, {-2, 6, -10, 13, -10, 6, -2}, -3, 2, nullptr},
        {"279/295", {18, 2, 3, 1, 1}, {-2, 6, -7, 6, -2}, -2, 2, nullptr},
        {"593/627", {18, 2, 3, 1, 3}, {-2, 6, -10, 13, -10, 6, -2}, -3, 2, nullptr},
        {"677/697", {34, 1, 5, 1, 2}, {3, -9, 13, -9, 3}, 2, 3, nullptr},
        {"267/275", {34, 2, 1, 1, 1}, {-1, 3, -3, 3, -1}, -1, 3, nullptr},
        {"601/619", {34, 2, 1, 1, 3}, {-1, 3, -5, 7, -5, 3, -1}, -2, 3, nullptr},
        {"935/963", {34, 2, 1, 1, 5}, {-1, 3, -5, 7, -7, 7, -5, 3, -1}, -3, 3, nullptr},
        {"465/479", {34, 4, 1, 1, 1}, {-1, 3, -3, 3, -3, 3, -1}, -1, 3, nullptr},
        {"1129/1163", {34, 4, 1, 5, 1}, {-3, 7, -7, 7, -7, 7, -3}, -3, 3, nullptr},
        {"3055/3147", {34, 4, 1, 5, 3}, {-3, 9, -15, 19, -19, 19, -15, 9, -3}, -4, 3, nullptr},
        {"1529/1575", {34, 4, 5, 1, 1}, {-3, 9, -11, 11, -11, 9, -3}, -3, 3, nullptr},
        {"663/683", {34, 6, 1, 1, 1}, {-1, 3, -3, 3, -3, 3, -3, 3, -1}, -1, 3, nullptr},
    };
    return rows;
}

}  // namespace tbcert

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "tbcert/tables.hpp"

#include <doctest.h>

using namespace tbcert;

TEST_CASE("companion unknots and satellite invariants") {
    UnknotCompanion u{2, 0};  // k = 5, l = 1
    CHECK(u.k() == 5);
    CHECK(u.l() == 1);
    CHECK(u.tb() == -3);
    CHECK(u.rot() == 4);

    // winding zero: the pattern invariants pass through unchanged
    auto [tb0, rot0] = satellite_invariants(u.tb(), u.rot(), 0, 5, 0);
    CHECK(tb0 == 5);
    CHECK(rot0 == 0);

    // winding two: the companion contributes through w^2 and w
    auto [tb2, rot2] = satellite_invariants(-1, 2, 2, 3, 1);
    CHECK(tb2 == -1);
    CHECK(rot2 == 5);
}

TEST_CASE("parity conditions for the vanishing argument") {
    CHECK(theorem1_applicable(parse_cf("[4 1 3]")));
    CHECK(theorem1_applicable(parse_cf("[6 1 1]")));
    CHECK(theorem1_applicable(parse_cf("[6 1 3 2 2]")));
    CHECK_FALSE(theorem1_applicable(parse_cf("[6 1 7 1 2]")));   // a4 odd
    CHECK_FALSE(theorem1_applicable(parse_cf("[4 2 3]")));       // a2 even
    CHECK_FALSE(theorem1_applicable(parse_cf("[4 1 2]")));       // sum of odd slots even
    CHECK_FALSE(theorem1_applicable(parse_cf("[3 1 3]")));       // a1 odd
    CHECK_FALSE(theorem1_applicable(parse_cf("[4 1]")));
}

TEST_CASE("model companion fraction") {
    CHECK(k0_of(parse_cf("[6 1 7 1 2]")) == Fraction(26, 49));
    CHECK(k0_of(parse_cf("[130 2 1 3 1]")) == Fraction(14, 19));
    CHECK(k0_of(parse_cf("[6 1 1]")) == Fraction(2, 3));
    CHECK_THROWS_AS(k0_of(parse_cf("[4 1]")), std::invalid_argument);
}

TEST_CASE("certificate for [6 1 7 1 2]") {
    Certificate c = certify(parse_cf("[6 1 7 1 2]"));
    CHECK(c.input == Fraction(26, 179));
    CHECK(c.verdict == Verdict::NonSimple);
    CHECK(c.path == CertPath::RankBound);
    CHECK(exit_code(c.verdict) == 0);
    REQUIRE(c.front.has_value());
    CHECK(*c.winding == 0);
    CHECK(c.front->writhe == 7);
    CHECK(c.front->up_cusps == 2);
    CHECK(c.front->down_cusps == 2);
    CHECK(c.tb() == 5);
    CHECK(c.rot() == 0);
    CHECK(c.sl() == 5);
    CHECK(*c.grading == 3);
    CHECK(*c.k0 == Fraction(26, 49));
    CHECK(c.delta_k0->to_text() == "4t^-2 - 12t^-1 + 17 - 12t + 4t^2");
    CHECK(*c.rank_r == 0);
    CHECK(*c.bound_n == 2);
    REQUIRE(c.family.size() == 3);
    CHECK(c.family[0] == std::pair<Int, Int>(1, 5));
    CHECK(c.family[2] == std::pair<Int, Int>(5, 1));

    TransverseView tv = transverse_view(c);
    CHECK(tv.sl == 5);
    CHECK(tv.bound_n == 2);
}

TEST_CASE("certificate for 14/1825") {
    Certificate c = certify(Fraction(14, 1825));
    CHECK(to_string(c.cf) == "[130 2 1 3 1]");
    CHECK(c.verdict == Verdict::NonSimple);
    CHECK(c.path == CertPath::RankBound);
    CHECK(c.front->writhe == -3);
    CHECK(c.front->up_cusps == 8);
    CHECK(c.front->down_cusps == 2);
    CHECK(c.tb() == -8);
    CHECK(c.rot() == -3);
    CHECK(c.sl() == -5);
    CHECK(*c.grading == -2);
    CHECK(*c.k0 == Fraction(14, 19));
    CHECK(c.delta_k0->to_text() == "-2t^-2 + 5t^-1 - 5 + 5t - 2t^2");
    CHECK(*c.rank_r == 2);
    CHECK(*c.bound_n == 9);
    CHECK(c.family.size() == 65);
    CHECK(c.notes.size() == 1);  // only the verdict note: the rank is the model rank
}

TEST_CASE("vanishing argument overrides a nonzero model coefficient") {
    Certificate c = certify(Fraction(2, 13));  // [6 1 1]
    CHECK(c.path == CertPath::Theorem1);
    CHECK(*c.grading == 1);
    CHECK(c.delta_k0->coefficient(1) == 1);  // trefoil companion
    CHECK(*c.rank_r == 0);
    CHECK(*c.bound_n == 2);
    CHECK(c.verdict == Verdict::NonSimple);
    bool superseded = false;
    for (const auto& n : c.notes) superseded |= n.find("supersedes") != std::string::npos;
    CHECK(superseded);
}

TEST_CASE("small bound stays inconclusive") {
    Certificate c = certify(parse_cf("[4 1 3]"));
    CHECK(c.path == CertPath::Theorem1);
    CHECK(c.tb() == 3);
    CHECK(c.rot() == 0);
    CHECK(*c.bound_n == 1);
    CHECK(c.verdict == Verdict::Inconclusive);
    CHECK(exit_code(c.verdict) == 1);
    CHECK(c.family.size() == 2);
}

TEST_CASE("inapplicable inputs carry a reason") {
    Certificate link = certify(Fraction(1, 4));
    CHECK(link.verdict == Verdict::Inapplicable);
    CHECK(link.reason.find("link") != std::string::npos);
    CHECK(exit_code(link.verdict) == 2);
    CHECK_FALSE(link.pattern.has_value());
    CHECK_THROWS_AS(transverse_view(link), std::domain_error);

    Certificate torus = certify(Fraction(1, 3));
    CHECK(torus.reason.find("torus") != std::string::npos);

    Certificate odd_lead = certify(Fraction(9, 13));  // [1 2 4]
    CHECK(odd_lead.reason.find("odd") != std::string::npos);

    Certificate winding = certify(Fraction(7, 31));  // [4 2 3]
    CHECK(winding.reason.find("winding") != std::string::npos);
    CHECK(*winding.winding == 2);
}

TEST_CASE("non-canonical input is noted") {
    Certificate c = certify(parse_cf("[6 1 7 2]"));
    CHECK(to_string(c.cf) == "[6 1 7 1 1]");
    bool noted = false;
    for (const auto& n : c.notes) noted |= n.find("canonicalized") != std::string::npos;
    CHECK(noted);
}

TEST_CASE("json rendering is stable and ordered") {
    nlohmann::ordered_json j = certify(parse_cf("[6 1 7 1 2]")).to_json();
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    std::vector<std::string> expected{
        "input",   "determinant", "cf",         "verdict", "path",   "reason", "pattern",
        "total_perm", "winding",  "writhe",     "up_cusps", "down_cusps", "tb", "rot",
        "sl",      "grading",     "k0",         "delta_k0", "rank_r", "bound_n", "family",
        "notes"};
    CHECK(keys == expected);
    CHECK(j["input"] == "26/179");
    CHECK(j["determinant"] == 179);
    CHECK(j["cf"] == nlohmann::ordered_json::array({6, 1, 7, 1, 2}));
    CHECK(j["verdict"] == "non_simple");
    CHECK(j["path"] == "rank_bound");
    CHECK(j["reason"].is_null());
    CHECK(j["total_perm"] == "aba");
    CHECK(j["tb"] == 5);
    CHECK(j["k0"] == "26/49");
    CHECK(j["delta_k0"] == "4t^-2 - 12t^-1 + 17 - 12t + 4t^2");
    CHECK(j["bound_n"] == 2);
    CHECK(j["family"].size() == 3);

    nlohmann::ordered_json link = certify(Fraction(1, 4)).to_json();
    CHECK(link["reason"].is_string());
    CHECK(link["pattern"].is_null());
    CHECK(link["tb"].is_null());
}

TEST_CASE("published tables reproduce") {
    auto t1 = reproduce_table(1);
    REQUIRE(t1.size() == 15);
    for (const auto& chk : t1) {
        CAPTURE(chk.row->label);
        CHECK(chk.pass());
        CHECK(*chk.cert.bound_n == 2);
        CHECK(chk.cert.verdict == Verdict::NonSimple);
    }
    // the printed labels are mirrors of the fractions the expansions produce
    CHECK(t1[0].label_vs_computed == Equivalence::Mirror);

    auto t2 = reproduce_table(2);
    REQUIRE(t2.size() == 14);
    for (const auto& chk : t2) {
        CAPTURE(chk.row->label);
        CHECK(chk.pass());
        CHECK(chk.cert.verdict == Verdict::NonSimple);
    }
    CHECK(*t2[0].cert.rank_r == 2);
    CHECK(*t2[0].cert.bound_n == 9);
    CHECK(*t2[5].cert.rank_r == 3);

    CHECK_THROWS_AS(reproduce_table(3), std::invalid_argument);
}

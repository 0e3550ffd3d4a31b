#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "tbcert/rational.hpp"

#include <doctest.h>

#include <random>

using namespace tbcert;

TEST_CASE("cf_value matches the worked expansions") {
    CHECK(cf_value(parse_cf("[130 2 1 3 1]")) == Fraction(14, 1825));
    CHECK(cf_value(parse_cf("[6 1 7 1 2]")) == Fraction(26, 179));
    CHECK(cf_value(parse_cf("[1 1 7 1 2]")) == Fraction(26, 49));
    CHECK(cf_value(parse_cf("[1 2 1 3 1]")) == Fraction(14, 19));
    CHECK(cf_value(parse_cf("[2 2]")) == Fraction(2, 5));
    CHECK(cf_value(parse_cf("[3]")) == Fraction(1, 3));
}

TEST_CASE("cf_value rejects degenerate input") {
    CHECK_THROWS_AS(cf_value(ContinuedFraction{}), std::invalid_argument);
    CHECK_THROWS_AS(cf_value(ContinuedFraction{{1}}), std::invalid_argument);
    CHECK_THROWS_AS(cf_value(ContinuedFraction{{2, 0, 2}}), std::invalid_argument);
}

TEST_CASE("cf_expand_odd splits the final term when the expansion is even") {
    CHECK(cf_expand_odd(Fraction(14, 1825)) == parse_cf("130 2 1 3 1"));
    CHECK(cf_expand_odd(Fraction(26, 179)) == parse_cf("6 1 7 1 2"));
    CHECK(cf_expand_odd(Fraction(26, 49)) == parse_cf("1 1 7 1 2"));
    CHECK(cf_expand_odd(Fraction(1, 3)) == parse_cf("3"));
    CHECK(cf_expand_odd(Fraction(2, 5)) == parse_cf("2 1 1"));
    CHECK(cf_expand_odd(Fraction(3, 5)) == parse_cf("1 1 2"));  // already odd, untouched
    CHECK(cf_expand_odd(Fraction(3, 7)) == parse_cf("2 2 1"));
}

TEST_CASE("cf_expand_odd inverts cf_value on every odd-length list") {
    // exhaustive for lengths 1, 3, 5 with terms up to 5 (except the
    // degenerate [1]); sampled for length 7
    for (int len : {1, 3, 5}) {
        std::vector<int> t(len, 1);
        while (true) {
            if (!(len == 1 && t[0] == 1)) {
                ContinuedFraction cf;
                for (int v : t) cf.terms.emplace_back(v);
                Fraction f = cf_value(cf);
                CHECK(cf_expand_odd(f) == cf);
            }
            int k = 0;
            while (k < len && ++t[k] > 5) t[k++] = 1;
            if (k == len) break;
        }
    }
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> term(1, 9);
    for (int i = 0; i < 2000; ++i) {
        ContinuedFraction cf;
        for (int j = 0; j < 7; ++j) cf.terms.emplace_back(term(rng));
        CHECK(cf_expand_odd(cf_value(cf)) == cf);
    }
}

TEST_CASE("knot and torus predicates") {
    CHECK(is_knot(Fraction(1, 3)));
    CHECK(!is_knot(Fraction(1, 4)));
    CHECK(is_torus_two_bridge(Fraction(1, 3)));
    CHECK(is_torus_two_bridge(Fraction(4, 5)));
    CHECK(!is_torus_two_bridge(Fraction(2, 5)));
    CHECK(!is_torus_two_bridge(Fraction(26, 179)));
}

TEST_CASE("equivalence classifies same, mirror and distinct") {
    CHECK(equivalence(Fraction(26, 179), Fraction(26, 179)) == Equivalence::Same);
    CHECK(equivalence(Fraction(26, 179), Fraction(62, 179)) == Equivalence::Same);  // 26*62 = 1 mod 179
    CHECK(equivalence(Fraction(26, 179), Fraction(153, 179)) == Equivalence::Mirror);
    CHECK(equivalence(Fraction(26, 179), Fraction(117, 179)) == Equivalence::Mirror);
    CHECK(equivalence(Fraction(2, 13), Fraction(3, 13)) == Equivalence::Distinct);
    CHECK(equivalence(Fraction(1, 3), Fraction(1, 5)) == Equivalence::Distinct);
    // figure eight, amphichiral: 3 is both 2^{-1} and -2 mod 5; Same wins
    CHECK(equivalence(Fraction(2, 5), Fraction(3, 5)) == Equivalence::Same);
}

TEST_CASE("fraction construction rejects bad values") {
    CHECK_THROWS_AS(Fraction(0, 5), std::invalid_argument);
    CHECK_THROWS_AS(Fraction(5, 5), std::invalid_argument);
    CHECK_THROWS_AS(Fraction(7, 5), std::invalid_argument);
    CHECK_THROWS_AS(Fraction(2, 4), std::invalid_argument);
}

TEST_CASE("parsing accepts the documented forms") {
    CHECK(parse_fraction("14/1825") == Fraction(14, 1825));
    CHECK(parse_fraction(" 26 / 179 ") == Fraction(26, 179));
    CHECK(parse_cf("[6 1 7 1 2]") == parse_cf("6,1,7,1,2"));
    CHECK(parse_cf("6 1 7 1 2").terms.size() == 5);
    CHECK(to_string(parse_cf("6,1,7,1,2")) == "[6 1 7 1 2]");
    CHECK(to_string(Fraction(26, 179)) == "26/179");
}

TEST_CASE("parsing rejects garbage") {
    CHECK_THROWS_AS(parse_fraction(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_fraction("179"), std::invalid_argument);
    CHECK_THROWS_AS(parse_fraction("-2/5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_fraction("2/5x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_cf("[]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_cf("a b c"), std::invalid_argument);
    CHECK_THROWS_AS(parse_cf("6 0 2"), std::invalid_argument);
}

TEST_CASE("numeric helpers") {
    CHECK(ceil_div(Int(130), Int(16)) == 9);
    CHECK(ceil_div(Int(6), Int(4)) == 2);
    CHECK(ceil_div(Int(4), Int(4)) == 1);
    CHECK(floor_div(Int(-7), Int(2)) == -4);
    CHECK(mod_inverse(Int(26), Int(179)) == 62);
    CHECK_THROWS_AS(mod_inverse(Int(2), Int(4)), std::invalid_argument);
}

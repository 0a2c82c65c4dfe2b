#include <catch2/catch_amalgamated.hpp>

#include "corkal/alexander.hpp"
#include "corkal/twobridge.hpp"

using namespace corkal;

TEST_CASE("fraction normalization") {
    CHECK(make_fraction(3, 1) == TwoBridgeFraction{3, 1});
    CHECK(make_fraction(3, -2) == TwoBridgeFraction{3, 1});  // -2 mod 3
    CHECK(make_fraction(-3, -2) == TwoBridgeFraction{3, 2});
    CHECK(make_fraction(1, 0) == TwoBridgeFraction{1, 0});
    CHECK(make_fraction(1, 5) == TwoBridgeFraction{1, 0});
    CHECK_THROWS_AS(make_fraction(4, 1), ParseError);   // even p
    CHECK_THROWS_AS(make_fraction(9, 3), ParseError);   // gcd != 1
    CHECK_THROWS_AS(make_fraction(5, 0), ParseError);
    CHECK_THROWS_AS(make_fraction(0, 1), ParseError);
}

TEST_CASE("fraction text form") {
    CHECK(to_text(make_fraction(13, 8)) == "13/8");
    CHECK(parse_fraction("13/8") == TwoBridgeFraction{13, 8});
    CHECK(parse_fraction("3/-2") == TwoBridgeFraction{3, 1});
    CHECK_THROWS_AS(parse_fraction("13"), ParseError);
    CHECK_THROWS_AS(parse_fraction("a/b"), ParseError);
}

TEST_CASE("continued fraction evaluation") {
    // [2,-2] -> 3/2 - 1/2 ... plus-CF 2 + 1/(-2) = 3/2
    CHECK(fraction_from_cf({{2, -2}}) == TwoBridgeFraction{3, 2});
    CHECK(fraction_from_cf({{2, 2}}) == TwoBridgeFraction{5, 2});
    CHECK(fraction_from_cf({}) == TwoBridgeFraction{1, 0});
    CHECK_THROWS_AS(fraction_from_cf({{2}}), ParseError);       // odd length
    CHECK_THROWS_AS(fraction_from_cf({{2, 3}}), ParseError);    // odd entry
    CHECK_THROWS_AS(fraction_from_cf({{2, 0}}), ParseError);    // zero entry
}

TEST_CASE("determinant of CF fraction matches the Alexander determinant") {
    // p = |Delta(-1)| is forced by the paired CF/Seifert conventions
    const EvenContinuedFraction cases[] = {
        {{2, -2}}, {{2, 2}}, {{2, -4}}, {{4, 6}}, {{2, -2, -2, 2}}, {{6, -2, 4, 2}},
        {{2, -2, 2, -2}}, {{-4, 2, -6, 8}},
    };
    for (const auto& cf : cases) {
        const auto frac = fraction_from_cf(cf);
        const auto delta = alex_from_seifert(seifert_from_cf(cf));
        CHECK(frac.p == boost::multiprecision::abs(evaluate_int(delta, -1)));
    }
}

TEST_CASE("unoriented equivalence") {
    CHECK(equivalent(make_fraction(3, 1), make_fraction(3, 1)));
    CHECK(equivalent(make_fraction(5, 2), make_fraction(5, 3)));  // 2*3 = 1 mod 5
    CHECK_FALSE(equivalent(make_fraction(3, 1), make_fraction(5, 2)));
    CHECK_FALSE(equivalent(make_fraction(3, 1), make_fraction(3, 2)));  // mirror trefoils
}

TEST_CASE("equivalence is an equivalence relation") {
    std::vector<TwoBridgeFraction> fractions;
    for (long long p : {3, 5, 7, 9, 11, 13, 15})
        for (long long q = 1; q < p; ++q)
            if (std::gcd(p, q) == 1) fractions.push_back(make_fraction(p, q));
    for (const auto& a : fractions) {
        CHECK(equivalent(a, a));
        for (const auto& b : fractions) {
            CHECK(equivalent(a, b) == equivalent(b, a));
            for (const auto& c : fractions)
                if (equivalent(a, b) && equivalent(b, c)) CHECK(equivalent(a, c));
        }
    }
}

TEST_CASE("family anchors from the classification") {
    // (2,0) is the right trefoil T_{2,3}: determinant 3
    const auto t23 = family_cf(2, 0);
    CHECK(t23 == EvenContinuedFraction{{2, -2}});
    CHECK(fraction_from_cf(t23).p == 3);

    // (-1,-1) is the unknot
    CHECK(family_cf(-1, -1) == EvenContinuedFraction{});
    CHECK(fraction_from_cf(family_cf(-1, -1)) == TwoBridgeFraction{1, 0});

    // (1,1) has determinant 13
    CHECK(fraction_from_cf(family_cf(1, 1)).p == 13);

    // (0,1) is the other trefoil; distinct fraction from (2,0) but same Delta
    const auto t2m3 = family_cf(0, 1);
    CHECK(fraction_from_cf(t2m3).p == 3);
    CHECK_FALSE(equivalent(fraction_from_cf(t2m3), fraction_from_cf(t23)));
    CHECK(doteq(alex_from_seifert(seifert_from_cf(t2m3)),
                alex_from_seifert(seifert_from_cf(t23))));

    CHECK_THROWS_AS(family_cf(-2, 1), UnsupportedParams);
}

TEST_CASE("twist knots") {
    CHECK(doteq(alex_from_seifert(seifert_from_cf(twist_knot_cf(1))), delta_closed(0, 1)));
    CHECK(twist_knot_cf(0) == EvenContinuedFraction{});
    CHECK(family_determinant(0, 2) == 7);
    CHECK(fraction_from_cf(twist_knot_cf(2)).p == 7);
    for (long long k = -4; k <= 4; ++k)
        CHECK(doteq(alex_from_seifert(seifert_from_cf(twist_knot_cf(k))), delta_closed(0, k)));
}

TEST_CASE("kappa double twist knots") {
    // kappa(k,-1) is the 2k-twist knot
    for (long long k = -3; k <= 3; ++k)
        CHECK(doteq(alex_from_seifert(seifert_from_cf(kappa_cf(k, -1))), delta_closed(0, k)));
    // kappa(r,0) and kappa(0,s) are unknots
    CHECK(kappa_cf(3, 0) == EvenContinuedFraction{});
    CHECK(kappa_cf(0, -2) == EvenContinuedFraction{});
}

TEST_CASE("FamilyParams overloads") {
    const FamilyParams p{1, 1};
    CHECK(family_cf(p) == family_cf(1, 1));
    CHECK(classify(p) == classify(1, 1));
}

TEST_CASE("classification follows the family case analysis") {
    CHECK(classify(3, 0) == KnotClass{KnotClass::TorusKnot, 5});
    CHECK(classify(-1, -1) == KnotClass{KnotClass::Unknot, 0});
    CHECK(classify(0, 1) == KnotClass{KnotClass::LeftTrefoil, -3});
    CHECK(classify(0, 0) == KnotClass{KnotClass::Unknot, 0});
    CHECK(classify(1, 0) == KnotClass{KnotClass::Unknot, 0});
    CHECK(classify(1, 1) == KnotClass{KnotClass::NonTorus2Bridge, 0});
    CHECK(classify(0, -1) == KnotClass{KnotClass::NonTorus2Bridge, 0});  // figure-eight
    CHECK(classify(-1, 0) == KnotClass{KnotClass::LeftTrefoil, -3});     // reduces to (0,1)
    CHECK_THROWS_AS(classify(-2, 0), UnsupportedParams);
}

TEST_CASE("reduction K_{-1,n} = K_{0,n+1} is consistent across the row") {
    for (long long n = -4; n <= 4; ++n) {
        CHECK(classify(-1, n) == classify(0, n + 1));
        const auto a = fraction_from_cf(family_cf(-1, n));
        const auto b = fraction_from_cf(family_cf(0, n + 1));
        CHECK(equivalent(a, b));
        CHECK(doteq(delta_closed(-1, n), delta_closed(0, n + 1)));
    }
}

TEST_CASE("CF text form") {
    CHECK(to_text(EvenContinuedFraction{{2, -2, 4, 2}}) == "[2,-2,4,2]");
    CHECK(parse_cf("[2,-2,4,2]") == EvenContinuedFraction{{2, -2, 4, 2}});
    CHECK(parse_cf("[ 2, -2 ]") == EvenContinuedFraction{{2, -2}});
    CHECK(parse_cf("[]") == EvenContinuedFraction{});
    CHECK_THROWS_AS(parse_cf("[2]"), ParseError);
    CHECK_THROWS_AS(parse_cf("2,-2"), ParseError);
    CHECK_THROWS_AS(parse_cf("[2,-2] junk"), ParseError);
}

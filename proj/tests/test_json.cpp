#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "corkal/json_io.hpp"

using namespace corkal;

TEST_CASE("polynomial JSON form") {
    LaurentPoly p;
    p.add_term(-1, 1);
    p.add_term(0, -1);
    p.add_term(1, 1);
    const auto j = poly_to_json(p);
    CHECK(j.dump() == R"({"-1":"1","0":"-1","1":"1"})");  // exponent-ascending keys
    CHECK(poly_from_json(j) == p);

    // coefficients as decimal strings survive beyond 64 bits
    LaurentPoly big;
    big.add_term(3, Int("123456789012345678901234567890"));
    CHECK(poly_from_json(poly_to_json(big)) == big);

    CHECK_THROWS_AS(poly_from_json(Json::parse(R"({"x":"1"})")), ParseError);
    CHECK_THROWS_AS(poly_from_json(Json::parse(R"([1,2])")), ParseError);
}

TEST_CASE("parse_poly accepts both text and JSON") {
    LaurentPoly p;
    p.add_term(-1, 1);
    p.add_term(0, -1);
    p.add_term(1, 1);
    CHECK(parse_poly("t^-1 - 1 + t") == p);
    CHECK(parse_poly(R"({"-1":"1","0":"-1","1":"1"})") == p);
    CHECK(parse_poly(R"( {"0": 5} )") == LaurentPoly::constant(5));
    CHECK_THROWS_AS(parse_poly("{bad json"), ParseError);
}

TEST_CASE("polynomial JSON round-trips on random inputs") {
    std::mt19937 rng(2718);
    std::uniform_int_distribution<int> nterms(0, 6);
    std::uniform_int_distribution<long long> exp(-8, 8);
    std::uniform_int_distribution<long long> coef(-99, 99);
    for (int i = 0; i < 200; ++i) {
        LaurentPoly p;
        const int n = nterms(rng);
        for (int t = 0; t < n; ++t) p.add_term(exp(rng), coef(rng));
        CHECK(poly_from_json(poly_to_json(p)) == p);
        CHECK(parse_poly(poly_to_json(p).dump()) == p);
    }
}

TEST_CASE("matrix JSON") {
    const IntMatrix m{{1, -2}, {3, 4}};
    CHECK(matrix_from_json(matrix_to_json(m)) == m);
    CHECK_THROWS_AS(matrix_from_json(Json::parse("[[1,2],[3]]")), ParseError);
    CHECK_THROWS_AS(matrix_from_json(Json::parse(R"([[1,"x"]])")), ParseError);
    CHECK(matrix_from_json(Json::parse("[]")).rows() == 0);
}

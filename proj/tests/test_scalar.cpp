#include "polylin/errors.hpp"
#include "polylin/scalar.hpp"

#include <doctest.h>

using namespace polylin;

TEST_CASE("rational arithmetic stays reduced") {
    Field q = Field::rationals();
    Scalar a = q.parse("3/4");
    Scalar b = q.parse("1/4");
    CHECK((a + b).to_string() == "1");
    CHECK((a - b).to_string() == "1/2");
    CHECK((a * b).to_string() == "3/16");
    CHECK((a / b).to_string() == "3");
    CHECK((-a).to_string() == "-3/4");
    CHECK_THROWS_AS(a / q.zero(), DomainError);
}

TEST_CASE("rational powers including negative exponents") {
    Field q = Field::rationals();
    Scalar h = q.parse("1/2");
    CHECK(h.pow(3).to_string() == "1/8");
    CHECK(h.pow(-2).to_string() == "4");
    CHECK(h.pow(0).is_one());
    CHECK_THROWS_AS(q.zero().pow(-1), DomainError);
}

TEST_CASE("prime field keeps canonical residues") {
    Field f7 = Field::prime(7);
    CHECK(f7.from_int(10).to_string() == "3");
    CHECK(f7.from_int(-1).to_string() == "6");
    CHECK((f7.from_int(3) * f7.from_int(5)).to_string() == "1");
    CHECK(f7.from_int(3).inverse().to_string() == "5");
    CHECK((f7.from_int(2) / f7.from_int(3)).to_string() == "3");
    CHECK(f7.from_int(2).pow(-1).to_string() == "4");
}

TEST_CASE("prime field characteristic must be prime") {
    CHECK_THROWS_AS(Field::prime(4), DomainError);
    CHECK_THROWS_AS(Field::prime(1), DomainError);
    CHECK_NOTHROW(Field::prime(2));
    CHECK_NOTHROW(Field::prime(101));
}

TEST_CASE("mixing fields is rejected") {
    Scalar a = Field::rationals().one();
    Scalar b = Field::prime(5).one();
    CHECK_THROWS_AS(a + b, DomainError);
    CHECK_THROWS_AS(a * b, DomainError);
}

TEST_CASE("parsing accepts integers and fractions") {
    Field q = Field::rationals();
    CHECK(q.parse("-3/7").to_string() == "-3/7");
    CHECK(q.parse("12").to_string() == "12");
    CHECK_THROWS_AS(q.parse("x"), DomainError);
    Field f5 = Field::prime(5);
    CHECK(f5.parse("7").to_string() == "2");
    CHECK(f5.parse("1/2").to_string() == "3");
}

TEST_CASE("rational nth roots are exact or absent") {
    Field q = Field::rationals();
    CHECK(q.from_int(4).nth_root(2)->to_string() == "2");
    CHECK(q.parse("8/27").nth_root(3)->to_string() == "2/3");
    CHECK(q.from_int(-8).nth_root(3)->to_string() == "-2");
    CHECK_FALSE(q.from_int(2).nth_root(2).has_value());
    CHECK_FALSE(q.from_int(-4).nth_root(2).has_value());
    CHECK(q.zero().nth_root(5)->is_zero());
}

TEST_CASE("prime field nth roots") {
    Field f5 = Field::prime(5);
    auto r = f5.from_int(4).nth_root(2);
    REQUIRE(r.has_value());
    CHECK((*r) * (*r) == f5.from_int(4));
    CHECK_FALSE(f5.from_int(2).nth_root(2).has_value());
}

TEST_CASE("binomial coefficients") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(4, 0) == 1);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(10, 5) == 252);
    CHECK(binomial(0, 0) == 1);
}

TEST_CASE("integer nth root floors") {
    CHECK(integer_nth_root(27, 3) == 3);
    CHECK(integer_nth_root(26, 3) == 2);
    CHECK(integer_nth_root(1, 7) == 1);
    CHECK(integer_nth_root(0, 2) == 0);
}

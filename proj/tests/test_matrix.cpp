#include "polylin/errors.hpp"
#include "polylin/matrix.hpp"

#include <doctest.h>

using namespace polylin;

namespace {

ExactMatrix make(const Field& f, std::vector<std::vector<long long>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows[0].size() : 0;
    ExactMatrix m(r, c, f);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = f.from_int(rows[i][j]);
    return m;
}

} // namespace

TEST_CASE("identity multiplication") {
    Field q = Field::rationals();
    ExactMatrix a = make(q, {{1, 2}, {3, 4}});
    CHECK(a * ExactMatrix::identity(2, q) == a);
    CHECK(ExactMatrix::identity(2, q) * a == a);
    CHECK_THROWS_AS(a * make(q, {{1, 2, 3}}), DomainError);
}

TEST_CASE("rank drops on dependent rows") {
    Field q = Field::rationals();
    CHECK(make(q, {{1, 2}, {2, 4}}).rank() == 1);
    CHECK(make(q, {{1, 2}, {2, 3}}).rank() == 2);
    CHECK(ExactMatrix(3, 3, q).rank() == 0);
}

TEST_CASE("rref reports pivot columns") {
    Field q = Field::rationals();
    auto [r, pivots] = make(q, {{0, 2, 4}, {1, 1, 1}}).rref();
    CHECK(pivots == std::vector<std::size_t>{0, 1});
    CHECK(r.at(0, 0).is_one());
    CHECK(r.at(1, 0).is_zero());
}

TEST_CASE("kernel vectors lead with one") {
    Field q = Field::rationals();
    auto k = make(q, {{1, 1}}).kernel_basis();
    REQUIRE(k.size() == 1);
    CHECK(k[0][0].to_string() == "1");
    CHECK(k[0][1].to_string() == "-1");
}

TEST_CASE("kernel of a matrix with no rows is the whole space") {
    Field q = Field::rationals();
    auto k = ExactMatrix(0, 2, q).kernel_basis();
    REQUIRE(k.size() == 2);
    CHECK(k[0][0].is_one());
    CHECK(k[0][1].is_zero());
    CHECK(k[1][0].is_zero());
    CHECK(k[1][1].is_one());
}

TEST_CASE("solve picks zero free variables") {
    Field q = Field::rationals();
    auto x = make(q, {{1, 1}}).solve({q.from_int(3)});
    REQUIRE(x.has_value());
    CHECK((*x)[0].to_string() == "3");
    CHECK((*x)[1].is_zero());
    auto none = make(q, {{1, 1}, {1, 1}}).solve({q.from_int(1), q.from_int(2)});
    CHECK_FALSE(none.has_value());
}

TEST_CASE("prime field elimination") {
    Field f5 = Field::prime(5);
    CHECK(make(f5, {{1, 2}, {2, 4}}).rank() == 1);
    CHECK(make(f5, {{1, 2}, {2, 3}}).rank() == 2);
    // 3x = 1 mod 5 has solution x = 2
    auto x = make(f5, {{3}}).solve({f5.one()});
    REQUIRE(x.has_value());
    CHECK((*x)[0].to_string() == "2");
}

TEST_CASE("transpose and arithmetic") {
    Field q = Field::rationals();
    ExactMatrix a = make(q, {{1, 2}, {3, 4}});
    CHECK(a.transpose() == make(q, {{1, 3}, {2, 4}}));
    CHECK(a + a - a == a);
    CHECK((a - a).is_zero());
}

TEST_CASE("apply multiplies by a vector") {
    Field q = Field::rationals();
    auto y = make(q, {{1, 2}, {0, 1}}).apply({q.from_int(1), q.from_int(1)});
    CHECK(y[0].to_string() == "3");
    CHECK(y[1].to_string() == "1");
}

#include <doctest.h>

#include "polylin/autgroup.hpp"
#include "polylin/errors.hpp"

#include <algorithm>

using namespace polylin;

namespace {

const Field Q = Field::rationals();

LatticePolytope triangle_t1() {
    return LatticePolytope::from_points({{1, 0}, {0, 1}, {-1, 0}}, 2, "T1");
}

LatticePolytope triangle_t2() {
    return LatticePolytope::from_points({{1, 0}, {0, 1}, {-1, -1}}, 2, "T2");
}

std::vector<Point> column_dirs(const LatticePolytope& p) {
    std::vector<Point> dirs;
    for (const auto& c : column_vectors(p)) dirs.push_back(c.vector);
    std::sort(dirs.begin(), dirs.end());
    dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());
    return dirs;
}

} // namespace

TEST_CASE("column vector counts for the catalog") {
    CHECK(column_vectors(unit_square()).size() == 4);
    CHECK(column_vectors(triangle_t1()).size() == 5);
    CHECK(column_vectors(triangle_t2()).empty());
    CHECK(column_vectors(unit_simplex(1)).size() == 2);
    CHECK(column_vectors(dilate(unit_simplex(1), 2)).size() == 2);
    CHECK(column_vectors(unit_simplex(2)).size() == 6);
}

TEST_CASE("column vector directions are the expected sets") {
    CHECK(column_dirs(unit_square()) ==
          std::vector<Point>{{-1, 0}, {0, -1}, {0, 1}, {1, 0}});
    CHECK(column_dirs(triangle_t1()) ==
          std::vector<Point>{{-1, -1}, {-1, 0}, {0, -1}, {1, -1}, {1, 0}});
}

TEST_CASE("each column knows its base facet") {
    auto sq = unit_square();
    for (const auto& col : column_vectors(sq)) {
        const auto& f = sq.facets()[col.base_facet];
        // Moving along the column lowers the facet functional by one.
        Int drop = 0;
        for (std::size_t i = 0; i < 2; ++i) drop += Int(f.normal[i]) * col.vector[i];
        CHECK(drop == -1);
    }
}

TEST_CASE("heights count lattice steps toward the base facet") {
    auto seg2 = dilate(unit_simplex(1), 2);
    ColumnStructure down{{-1}, 0};
    auto cols = column_vectors(seg2);
    REQUIRE(std::find_if(cols.begin(), cols.end(), [&](const ColumnStructure& c) {
                return c.vector == Point{-1};
            }) != cols.end());
    auto it = std::find_if(cols.begin(), cols.end(),
                           [&](const ColumnStructure& c) { return c.vector == Point{-1}; });
    CHECK(height(seg2, *it, {0}) == 0);
    CHECK(height(seg2, *it, {1}) == 1);
    CHECK(height(seg2, *it, {2}) == 2);
    CHECK_THROWS_AS((void)height(seg2, *it, {5}), DomainError);
}

TEST_CASE("elementary automorphism on the segment is the unipotent 2x2 block") {
    auto seg = unit_simplex(1);
    auto cols = column_vectors(seg);
    auto it = std::find_if(cols.begin(), cols.end(),
                           [](const ColumnStructure& c) { return c.vector == Point{-1}; });
    REQUIRE(it != cols.end());
    Scalar lam = Q.from_int(3);
    auto e = elementary(seg, *it, lam);
    // Column of generator 1: 1 -> x_1 + 3 x_0.
    CHECK(e.matrix.at(0, 0) == Q.one());
    CHECK(e.matrix.at(1, 0) == Q.zero());
    CHECK(e.matrix.at(0, 1) == lam);
    CHECK(e.matrix.at(1, 1) == Q.one());
    CHECK(is_homomorphism(e));
}

TEST_CASE("elementary automorphism on the dilated segment gives binomial coefficients") {
    auto seg2 = dilate(unit_simplex(1), 2);
    auto cols = column_vectors(seg2);
    auto it = std::find_if(cols.begin(), cols.end(),
                           [](const ColumnStructure& c) { return c.vector == Point{-1}; });
    REQUIRE(it != cols.end());
    Scalar lam = Q.from_int(5);
    auto e = elementary(seg2, *it, lam);
    // Points 0,1,2: x_2 -> x_2 + 2 lam x_1 + lam^2 x_0, x_1 -> x_1 + lam x_0.
    ExactMatrix want(3, 3, Q);
    want.at(0, 0) = Q.one();
    want.at(0, 1) = lam;
    want.at(1, 1) = Q.one();
    want.at(0, 2) = lam * lam;
    want.at(1, 2) = Q.from_int(2) * lam;
    want.at(2, 2) = Q.one();
    CHECK(e.matrix == want);
    CHECK(is_homomorphism(e));
}

TEST_CASE("elementary with zero parameter is the identity") {
    auto sq = unit_square();
    for (const auto& col : column_vectors(sq))
        CHECK(elementary(sq, col, Q.zero()) == identity_hom(sq, Q));
}

TEST_CASE("non-columns are rejected") {
    auto sq = unit_square();
    CHECK_THROWS_AS((void)elementary(sq, ColumnStructure{{1, 1}, 0}, Q.one()), DomainError);
    try {
        (void)elementary(sq, ColumnStructure{{1, 1}, 0}, Q.one());
    } catch (const DomainError& e) {
        CHECK(e.code() == errc::not_a_column);
    }
}

TEST_CASE("toric automorphism scales each generator by its monomial") {
    auto seg = unit_simplex(1);
    auto t = toric(seg, {Q.from_int(2), Q.from_int(3)});
    CHECK(t.matrix.at(0, 0) == Q.from_int(3));
    CHECK(t.matrix.at(1, 1) == Q.from_int(6));
    CHECK(t.matrix.at(0, 1) == Q.zero());
    CHECK(is_homomorphism(t));

    CHECK_THROWS_AS((void)toric(seg, {Q.zero(), Q.one()}), DomainError);
    CHECK_THROWS_AS((void)toric(seg, {Q.one()}), DomainError);
}

TEST_CASE("lattice symmetry counts for the catalog") {
    CHECK(symmetries(unit_simplex(2), Q).size() == 6);
    CHECK(symmetries(unit_square(), Q).size() == 8);
    CHECK(symmetries(triangle_t2(), Q).size() == 6);
    CHECK(symmetries(triangle_t1(), Q).size() == 2);
    CHECK(symmetries(unit_simplex(1), Q).size() == 2);
}

TEST_CASE("symmetries permute generators and pass the homomorphism test") {
    for (const auto& sym : symmetries(unit_square(), Q)) {
        CHECK(sym.map.is_unimodular());
        CHECK(is_homomorphism(sym.hom));
        auto info = degree1_rank(sym.hom);
        CHECK(info.injective);
        CHECK(info.surjective);
    }
}

TEST_CASE("predicted automorphism group dimension matches the tangent space") {
    CHECK(predicted_gamma_dim(unit_simplex(1)) == 4);
    CHECK(predicted_gamma_dim(unit_simplex(2)) == 9);
    CHECK(predicted_gamma_dim(dilate(unit_simplex(1), 2)) == 4);
    CHECK(predicted_gamma_dim(unit_square()) == 7);
    CHECK(predicted_gamma_dim(triangle_t1()) == 8);
    CHECK(predicted_gamma_dim(triangle_t2()) == 3);
}

TEST_CASE("normal form composes blocks over toric and symmetry factors") {
    auto sq = unit_square();
    auto cols = column_vectors(sq);
    // Group the four columns by their base facets, two facets per direction.
    std::vector<NormalFormBlock> blocks;
    for (const auto& col : cols) {
        auto it = std::find_if(blocks.begin(), blocks.end(),
                               [&](const NormalFormBlock& b) { return b.facet == col.base_facet; });
        if (it == blocks.end())
            blocks.push_back({col.base_facet, {{col, Q.from_int(2)}}});
        else
            it->lambdas.push_back({col, Q.from_int(2)});
    }
    std::sort(blocks.begin(), blocks.end(),
              [&](const NormalFormBlock& a, const NormalFormBlock& b) {
                  return sq.facets()[a.facet].points.size() < sq.facets()[b.facet].points.size() ||
                         (sq.facets()[a.facet].points.size() == sq.facets()[b.facet].points.size() &&
                          a.facet < b.facet);
              });
    std::vector<Scalar> xi{Q.from_int(1), Q.from_int(2), Q.from_int(3)};
    auto g = compose_normal_form(sq, AffineLatticeMap::identity(2), xi, blocks, Q);
    CHECK(is_homomorphism(g));
    CHECK(degree1_rank(g).injective);

    // With no blocks and trivial scalars this is just the symmetry factor.
    auto syms = symmetries(sq, Q);
    std::vector<Scalar> ones{Q.one(), Q.one(), Q.one()};
    auto h = compose_normal_form(sq, syms[1].map, ones, {}, Q);
    CHECK(h == syms[1].hom);
}

TEST_CASE("normal form validation errors") {
    auto sq = unit_square();
    auto cols = column_vectors(sq);
    REQUIRE(cols.size() == 4);
    std::vector<Scalar> ones{Q.one(), Q.one(), Q.one()};

    // Repeating a facet.
    std::vector<NormalFormBlock> rep{{cols[0].base_facet, {{cols[0], Q.one()}}},
                                     {cols[0].base_facet, {{cols[0], Q.one()}}}};
    try {
        (void)compose_normal_form(sq, AffineLatticeMap::identity(2), ones, rep, Q);
        CHECK(false);
    } catch (const DomainError& e) {
        CHECK(e.code() == errc::repeated_facet);
    }

    // A column filed under a foreign facet.
    std::size_t other = cols[1].base_facet == cols[0].base_facet ? cols[2].base_facet
                                                                 : cols[1].base_facet;
    std::vector<NormalFormBlock> wrong{{other, {{cols[0], Q.one()}}}};
    try {
        (void)compose_normal_form(sq, AffineLatticeMap::identity(2), ones, wrong, Q);
        CHECK(false);
    } catch (const DomainError& e) {
        CHECK(e.code() == errc::not_a_column);
    }
}

TEST_CASE("block order violations are detected on facets of different sizes") {
    auto t1 = triangle_t1();
    auto cols = column_vectors(t1);
    // Facet sizes differ: the bottom edge has three lattice points, the
    // slanted edges two. Putting a big facet before a small one must throw.
    std::size_t big = 0, small = 0;
    bool found_big = false, found_small = false;
    for (const auto& c : cols) {
        std::size_t sz = t1.facets()[c.base_facet].points.size();
        if (sz == 3 && !found_big) {
            big = c.base_facet;
            found_big = true;
        }
        if (sz == 2 && !found_small) {
            small = c.base_facet;
            found_small = true;
        }
    }
    REQUIRE(found_big);
    REQUIRE(found_small);
    ColumnStructure big_col, small_col;
    for (const auto& c : cols) {
        if (c.base_facet == big) big_col = c;
        if (c.base_facet == small) small_col = c;
    }
    std::vector<NormalFormBlock> bad{{big, {{big_col, Q.one()}}}, {small, {{small_col, Q.one()}}}};
    std::vector<Scalar> ones{Q.one(), Q.one(), Q.one()};
    try {
        (void)compose_normal_form(t1, AffineLatticeMap::identity(2), ones, bad, Q);
        CHECK(false);
    } catch (const DomainError& e) {
        CHECK(e.code() == errc::block_order_violation);
    }
    std::vector<NormalFormBlock> good{{small, {{small_col, Q.one()}}}, {big, {{big_col, Q.one()}}}};
    CHECK(is_homomorphism(
        compose_normal_form(t1, AffineLatticeMap::identity(2), ones, good, Q)));
}

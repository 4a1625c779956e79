#include "polylin/errors.hpp"
#include "polylin/polytope.hpp"

#include <doctest.h>

#include <numeric>

using namespace polylin;

namespace {

LatticePolytope tri_t1() {
    return LatticePolytope::from_points({{1, 0}, {0, 1}, {-1, 0}}, 2, "T1");
}

LatticePolytope tri_t2() {
    return LatticePolytope::from_points({{1, 0}, {0, 1}, {-1, -1}}, 2, "T2");
}

long long gcd_of(const Point& v) {
    long long g = 0;
    for (auto c : v) g = std::gcd(g, static_cast<long long>(c < 0 ? -c : c));
    return g;
}

} // namespace

TEST_CASE("unit simplex basics") {
    LatticePolytope s = unit_simplex(2);
    CHECK(s.dim() == 2);
    CHECK(s.vertices().size() == 3);
    CHECK(s.facets().size() == 3);
    CHECK(s.point_count() == 3);
    CHECK(s.hull_equations().empty());
    for (const auto& f : s.facets()) CHECK(gcd_of(f.normal) == 1);
}

TEST_CASE("zero-dimensional and empty polytopes") {
    LatticePolytope pt = unit_simplex(0);
    CHECK(pt.dim() == 0);
    CHECK(pt.point_count() == 1);
    CHECK(pt.facets().empty());
    LatticePolytope e = empty_polytope();
    CHECK(e.is_empty());
    CHECK(e.dim() == -1);
    CHECK(e.point_count() == 0);
    CHECK_FALSE(e.contains({}));
}

TEST_CASE("lattice point counts from dilation") {
    CHECK(dilate(unit_simplex(1), 2).point_count() == 3);
    CHECK(dilate(unit_square(), 2).point_count() == 9);
    CHECK(dilate(unit_simplex(2), 3).point_count() == 10);
    CHECK(dilate(tri_t2(), 2).point_count() == 10);
    CHECK_THROWS_AS(dilate(unit_square(), 0), DomainError);
}

TEST_CASE("interior points are found") {
    LatticePolytope t = tri_t1();
    CHECK(t.point_count() == 4);
    CHECK(t.lattice_points() ==
          std::vector<Point>{{-1, 0}, {0, 0}, {0, 1}, {1, 0}});
    CHECK(t.point_index({0, 0}) == 1);
    CHECK(t.has_lattice_point({0, 1}));
    CHECK_FALSE(t.has_lattice_point({1, 1}));
    CHECK_THROWS_AS(t.point_index({2, 2}), DomainError);
}

TEST_CASE("facets carry their lattice points") {
    LatticePolytope t = tri_t2();
    CHECK(t.point_count() == 4);
    CHECK(t.facets().size() == 3);
    for (const auto& f : t.facets()) {
        CHECK(gcd_of(f.normal) == 1);
        CHECK(f.points.size() == 2);  // every edge has exactly its two vertices
        for (const auto& p : t.lattice_points()) {
            Coord v = 0;
            for (std::size_t i = 0; i < 2; ++i) v += f.normal[i] * p[i];
            CHECK(v + f.offset >= 0);
        }
    }
}

TEST_CASE("square facts") {
    LatticePolytope sq = unit_square();
    CHECK(sq.point_count() == 4);
    CHECK(sq.facets().size() == 4);
    CHECK(sq.vertices().size() == 4);
    CHECK(is_pyramid(sq).empty());
}

TEST_CASE("hull round trip through lattice points") {
    for (const LatticePolytope& p :
         {unit_simplex(2), unit_square(), tri_t1(), tri_t2(), dilate(unit_simplex(2), 2)}) {
        LatticePolytope q = LatticePolytope::from_points(p.lattice_points(), p.ambient_dim());
        CHECK(q == p);
        CHECK(q.facets().size() == p.facets().size());
        for (std::size_t i = 0; i < q.facets().size(); ++i) {
            CHECK(q.facets()[i].normal == p.facets()[i].normal);
            CHECK(q.facets()[i].offset == p.facets()[i].offset);
        }
    }
}

TEST_CASE("minkowski sums") {
    LatticePolytope seg_x = LatticePolytope::from_points({{0, 0}, {1, 0}}, 2);
    LatticePolytope seg_y = LatticePolytope::from_points({{0, 0}, {0, 1}}, 2);
    CHECK(minkowski_sum(seg_x, seg_y) == unit_square());
    LatticePolytope d1 = unit_simplex(1);
    CHECK(minkowski_sum(d1, d1) == dilate(d1, 2));
    LatticePolytope shift = LatticePolytope::from_points({{3, 3}}, 2);
    LatticePolytope moved = minkowski_sum(unit_square(), shift);
    CHECK(moved.vertices() == std::vector<Point>{{3, 3}, {3, 4}, {4, 3}, {4, 4}});
    CHECK_THROWS_AS(minkowski_sum(d1, seg_x), DomainError);
}

TEST_CASE("newton polytopes") {
    Field q = Field::rationals();
    LaurentPoly f(2, q);
    f.add_term({1, 0}, q.one());
    f.add_term({0, 1}, q.one());
    LatticePolytope n = newton_polytope(f);
    CHECK(n.vertices() == std::vector<Point>{{0, 1}, {1, 0}});
    CHECK(n.dim() == 1);
    CHECK_THROWS_AS(newton_polytope(LaurentPoly(2, q)), DomainError);

    LaurentPoly g(1, q);
    g.add_term({0}, q.one());
    g.add_term({1}, q.from_int(2));
    g.add_term({2}, q.one());
    CHECK(newton_polytope(g).point_count() == 3);
}

TEST_CASE("newton polytope of a product is the minkowski sum") {
    Field q = Field::rationals();
    LaurentPoly f(2, q), g(2, q);
    f.add_term({-1, 2}, q.from_int(3));
    f.add_term({1, 0}, q.one());
    g.add_term({0, -1}, q.one());
    g.add_term({2, 1}, q.from_int(5));
    CHECK(newton_polytope(f * g) == minkowski_sum(newton_polytope(f), newton_polytope(g)));
}

TEST_CASE("normalization of a sparse segment") {
    LatticePolytope seg = LatticePolytope::from_points({{0, 0}, {2, 2}}, 2);
    CHECK(seg.dim() == 1);
    CHECK(seg.point_count() == 3);
    CHECK_FALSE(is_normalized(seg));
    NormalizationResult nr = normalize_lattice(seg);
    CHECK(nr.image.ambient_dim() == 1);
    CHECK(nr.image.lattice_points() == std::vector<Point>{{0}, {1}, {2}});
    for (const auto& y : nr.image.lattice_points())
        CHECK(seg.has_lattice_point(nr.to_original.apply(y)));
    CHECK(is_normalized(nr.image));
}

TEST_CASE("already normalized polytopes stay put") {
    for (const LatticePolytope& p : {unit_square(), tri_t1(), tri_t2()}) {
        CHECK(is_normalized(p));
        NormalizationResult nr = normalize_lattice(p);
        CHECK(nr.image.point_count() == p.point_count());
        CHECK(nr.image.dim() == p.dim());
    }
}

TEST_CASE("pyramid detection") {
    CHECK(is_pyramid(unit_simplex(2)).size() == 3);
    CHECK(is_pyramid(unit_simplex(1)).size() == 2);
    auto splits = is_pyramid(tri_t1());
    REQUIRE(splits.size() == 1);
    CHECK(splits[0].apex == Point{0, 1});
    CHECK(splits[0].base.lattice_points() ==
          std::vector<Point>{{-1, 0}, {0, 0}, {1, 0}});
    auto point_split = is_pyramid(unit_simplex(0));
    REQUIRE(point_split.size() == 1);
    CHECK(point_split[0].base.is_empty());
}

TEST_CASE("faces enumerate without duplicates") {
    auto faces = all_faces(unit_simplex(2));
    CHECK(faces.size() == 7);
    CHECK(faces[0].polytope == unit_simplex(2));
    CHECK(faces[0].facet_ids.empty());
    auto sq_faces = all_faces(unit_square());
    CHECK(sq_faces.size() == 9);
    int dims[3] = {0, 0, 0};
    for (const auto& f : sq_faces) ++dims[f.polytope.dim()];
    CHECK(dims[2] == 1);
    CHECK(dims[1] == 4);
    CHECK(dims[0] == 4);
}

TEST_CASE("face from facet selection") {
    LatticePolytope sq = unit_square();
    Face edge = face_from_facets(sq, {0});
    CHECK(edge.polytope.dim() == 1);
    CHECK(edge.point_ids.size() == 2);
    CHECK_THROWS_AS(face_from_facets(sq, {0, 1, 2, 3}), DomainError);
    CHECK_THROWS_AS(face_from_facets(sq, {9}), DomainError);
}

TEST_CASE("affine maps compose and invert") {
    AffineLatticeMap shear({{1, 1}, {0, 1}}, {2, 3});
    CHECK(shear.is_unimodular());
    CHECK(shear.apply({1, 1}) == Point{4, 4});
    AffineLatticeMap inv = shear.inverse();
    CHECK(inv.compose(shear).apply({5, -7}) == Point{5, -7});
    CHECK(shear.compose(inv).apply({5, -7}) == Point{5, -7});
    AffineLatticeMap scale({{2, 0}, {0, 1}}, {0, 0});
    CHECK_FALSE(scale.is_unimodular());
    CHECK_THROWS_AS(scale.inverse(), DomainError);
    CHECK(AffineLatticeMap::identity(3).apply({1, 2, 3}) == Point{1, 2, 3});
}

TEST_CASE("containment checks") {
    CHECK(contains_polytope(unit_square(), unit_simplex(2)));
    CHECK_FALSE(contains_polytope(unit_simplex(2), unit_square()));
    CHECK(contains_polytope(unit_square(), empty_polytope()));
    CHECK(unit_square().contains({1, 1}));
    CHECK_FALSE(unit_square().contains({2, 0}));
}

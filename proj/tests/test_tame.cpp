#include <doctest.h>

#include "polylin/autgroup.hpp"
#include "polylin/errors.hpp"
#include "polylin/tame.hpp"

#include <algorithm>

using namespace polylin;

namespace {

const Field Q = Field::rationals();

LatticePolytope square() { return unit_square(); }
LatticePolytope segment() { return unit_simplex(1); }
LatticePolytope segment2() { return dilate(unit_simplex(1), 2); }
LatticePolytope triangle_t2() {
    return LatticePolytope::from_points({{1, 0}, {0, 1}, {-1, -1}}, 2);
}
LatticePolytope rectangle() {
    return LatticePolytope::from_points({{0, 0}, {1, 0}, {0, 2}, {1, 2}}, 2);
}
LatticePolytope spike() {
    return LatticePolytope::from_points({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 2}},
                                        3);
}

ColumnStructure find_column(const LatticePolytope& p, const Point& v) {
    for (const auto& c : column_vectors(p))
        if (c.vector == v) return c;
    throw std::runtime_error("no such column in test fixture");
}

LaurentPoly mono(std::vector<long long> e, const Field& f) {
    return LaurentPoly::monomial(Exponent(e.begin(), e.end()), f.one());
}

std::string thrown_code(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const DomainError& e) {
        return e.code();
    }
    return "";
}

} // namespace

TEST_CASE("face retractions and inclusions compose to the identity") {
    std::vector<LatticePolytope> catalog = {segment(),      segment2(), square(),
                                            unit_simplex(2), triangle_t2()};
    for (const auto& p : catalog) {
        for (const auto& face : all_faces(p)) {
            GradedHom rho = face_retraction(p, face.facet_ids, Q);
            GradedHom iota = face_inclusion(p, face.facet_ids, Q);
            CHECK(rho.source == p);
            CHECK(rho.target == face.polytope);
            CHECK(compose(rho, iota) == identity_hom(face.polytope, Q));
            CHECK(is_homomorphism(rho));
            CHECK(is_homomorphism(iota));
            CHECK(is_idempotent(compose(iota, rho)));
        }
    }
}

TEST_CASE("fibration search finds the axis directions of the square") {
    auto sq = square();
    auto fibs = detect_segmental_fibrations(sq);
    CHECK(fibs.size() == 8);
    bool bottom = false, left = false;
    for (const auto& fib : fibs) {
        CHECK(validate_fibration(fib));
        auto base = fibration_base(fib);
        if (fib.w_basis == std::vector<Point>{{0, 1}} &&
            base.lattice_points() == std::vector<Point>{{0, 0}, {1, 0}})
            bottom = true;
        if (fib.w_basis == std::vector<Point>{{1, 0}} &&
            base.lattice_points() == std::vector<Point>{{0, 0}, {0, 1}})
            left = true;
        GradedHom rho = fibration_retraction(fib, Q);
        GradedHom iota = fibration_inclusion(fib, Q);
        CHECK(compose(rho, iota) == identity_hom(base, Q));
        CHECK(is_homomorphism(rho));
        CHECK(is_homomorphism(iota));
        CHECK(is_idempotent(compose(iota, rho)));
    }
    CHECK(bottom);
    CHECK(left);
}

TEST_CASE("fibration search on a rectangle") {
    auto fibs = detect_segmental_fibrations(rectangle());
    CHECK(fibs.size() == 11);
    std::size_t tall = 0, wide = 0;
    for (const auto& fib : fibs) {
        if (fib.w_basis == std::vector<Point>{{0, 1}}) ++tall;
        if (fib.w_basis == std::vector<Point>{{1, 0}}) ++wide;
        GradedHom rho = fibration_retraction(fib, Q);
        GradedHom iota = fibration_inclusion(fib, Q);
        CHECK(compose(rho, iota) == identity_hom(fibration_base(fib), Q));
        CHECK(is_idempotent(compose(iota, rho)));
    }
    CHECK(tall == 9);
    CHECK(wide == 2);
}

TEST_CASE("fibration search edge cases") {
    CHECK(detect_segmental_fibrations(triangle_t2()).empty());

    auto fibs = detect_segmental_fibrations(segment());
    CHECK(fibs.size() == 2);
    bool at_origin = false;
    for (const auto& fib : fibs) {
        CHECK(fib.w_basis == std::vector<Point>{{1}});
        CHECK(fib.h_basis.empty());
        if (fib.h_point == Point{0}) at_origin = true;
    }
    CHECK(at_origin);

    auto reeve = LatticePolytope::from_points({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 2}}, 3);
    CHECK(thrown_code([&] { detect_segmental_fibrations(reeve); }) == errc::not_normalized);
}

TEST_CASE("invalid fibration witnesses are rejected") {
    Fibration bad{square(), {{1, 1}}, {0, 0}, {{1, -1}}};
    CHECK(!validate_fibration(bad));
    CHECK(thrown_code([&] { fibration_retraction(bad, Q); }) == errc::not_a_fibration);
    CHECK(thrown_code([&] { fibration_inclusion(bad, Q); }) == errc::not_a_fibration);
}

TEST_CASE("homothetic blowups of basic maps") {
    auto sq = square();
    CHECK(homothetic_blowup(identity_hom(sq, Q), 2) == identity_hom(dilate(sq, 2), Q));

    auto seg = segment();
    auto seg2 = segment2();
    ColumnStructure down1 = find_column(seg, {-1});
    ColumnStructure down2 = find_column(seg2, {-1});
    Scalar lam = Q.from_int(3);
    CHECK(homothetic_blowup(elementary(seg, down1, lam), 2) == elementary(seg2, down2, lam));

    auto seg3 = dilate(seg, 3);
    ColumnStructure down3 = find_column(seg3, {-1});
    Scalar mu = Q.from_int(2);
    CHECK(homothetic_blowup(elementary(seg, down1, mu), 3) == elementary(seg3, down3, mu));
}

TEST_CASE("homothetic blowups respect composition") {
    auto seg = segment();
    GradedHom f = elementary(seg, find_column(seg, {1}), Q.from_int(2));
    GradedHom g = toric(seg, {Q.from_int(2), Q.from_int(3)});
    CHECK(homothetic_blowup(compose(g, f), 2) ==
          compose(homothetic_blowup(g, 2), homothetic_blowup(f, 2)));
}

TEST_CASE("blowup witness search covers gaps above a non-normal polytope") {
    auto p = spike();
    CHECK(homothetic_blowup(identity_hom(p, Q), 2) == identity_hom(dilate(p, 2), Q));
}

TEST_CASE("blowup rejects bad input") {
    auto seg = segment();
    std::vector<LaurentPoly> cols = {LaurentPoly(1, Q), mono({1}, Q)};
    GradedHom withzero = hom_from_columns(seg, seg, cols, Q);
    CHECK(thrown_code([&] { homothetic_blowup(withzero, 2); }) == errc::zero_generator_image);
    CHECK(thrown_code([&] { homothetic_blowup(identity_hom(seg, Q), 0); }) ==
          errc::degenerate_input);
}

TEST_CASE("star products multiply image columns") {
    auto seg = segment();
    auto seg2 = segment2();
    LaurentPoly one = LaurentPoly::constant(1, Q.one());
    GradedHom f = hom_from_columns(seg, seg2, {one, mono({1}, Q)}, Q);
    GradedHom ff = minkowski_star(f, f);
    CHECK(ff == hom_from_columns(seg, seg2, {one, mono({2}, Q)}, Q));

    GradedHom g = hom_from_columns(seg, seg2, {one, one + mono({1}, Q)}, Q);
    GradedHom fg = minkowski_star(f, g);
    CHECK(fg == hom_from_columns(seg, seg2, {one, mono({1}, Q) + mono({2}, Q)}, Q));
    CHECK(fg == minkowski_star(g, f));
    CHECK(is_homomorphism(fg));

    CHECK(thrown_code([&] { minkowski_star(identity_hom(seg, Q), identity_hom(seg, Q)); }) ==
          errc::newton_containment_violated);
    CHECK(thrown_code([&] { minkowski_star(f, identity_hom(seg, Q)); }) == errc::shape_mismatch);
}

TEST_CASE("free extensions fill in a pyramid apex") {
    auto t1 = LatticePolytope::from_points({{1, 0}, {0, 1}, {-1, 0}}, 2);
    auto base = LatticePolytope::from_points({{1, 0}, {-1, 0}}, 2);
    auto sq = square();
    LaurentPoly one2 = LaurentPoly::constant(2, Q.one());
    GradedHom f0 = hom_from_columns(base, sq, {one2, one2, one2}, Q);
    LaurentPoly q = one2 + mono({1, 0}, Q);
    GradedHom ext = free_extension(f0, t1, {0, 1}, sq, q);
    CHECK(is_homomorphism(ext));
    CHECK(column_laurent(ext, {0, 1}) == q);
    CHECK(column_laurent(ext, {-1, 0}) == one2);

    CHECK(thrown_code([&] { free_extension(f0, sq, {0, 0}, sq, q); }) == errc::not_a_pyramid);
    CHECK(thrown_code([&] { free_extension(f0, t1, {1, 0}, sq, q); }) == errc::not_a_pyramid);
}

TEST_CASE("free extension over the empty base embeds the coefficients") {
    auto pt = LatticePolytope::from_points({{0}}, 1);
    auto seg = segment();
    LaurentPoly q = LaurentPoly::constant(1, Q.one()) + mono({1}, Q);
    GradedHom ext = free_extension(identity_hom(LatticePolytope(), Q), pt, {0}, seg, q);
    CHECK(ext.source == pt);
    CHECK(ext.target == seg);
    CHECK(column_laurent(ext, {0}) == q);
    CHECK(is_homomorphism(ext));
}

TEST_CASE("polytope changes restrict and transport maps") {
    auto seg = segment();
    auto seg2 = segment2();
    LaurentPoly one = LaurentPoly::constant(1, Q.one());
    GradedHom restricted = polytope_change(identity_hom(seg2, Q), seg, seg2);
    CHECK(restricted == hom_from_columns(seg, seg2, {one, mono({1}, Q)}, Q));
    CHECK(is_homomorphism(restricted));

    auto sq = square();
    auto syms = symmetries(sq, Q);
    const Symmetry* nontrivial = nullptr;
    for (const auto& s : syms)
        if (!s.hom.matrix.is_identity()) { nontrivial = &s; break; }
    REQUIRE(nontrivial != nullptr);
    AffineLatticeMap inv = nontrivial->map.inverse();
    GradedHom inv_hom = polytope_change(identity_hom(sq, Q), sq, sq, std::nullopt, inv);
    GradedHom f = elementary(sq, column_vectors(sq)[0], Q.from_int(2));
    GradedHom conj = polytope_change(f, sq, sq, nontrivial->map, inv);
    CHECK(conj == compose(inv_hom, compose(f, nontrivial->hom)));
    CHECK(is_homomorphism(conj));
}

TEST_CASE("polytope change detects escaping images and bad subpolytopes") {
    auto sq = square();
    auto top = LatticePolytope::from_points({{0, 1}, {1, 1}}, 2);
    GradedHom f = elementary(sq, find_column(sq, {0, -1}), Q.one());
    GradedHom restricted = polytope_change(f, top, sq);
    CHECK(is_homomorphism(restricted));
    CHECK(thrown_code([&] { polytope_change(f, top, top); }) == errc::image_escapes_target);

    auto seg = segment();
    auto seg2 = segment2();
    CHECK(thrown_code([&] { polytope_change(identity_hom(seg, Q), seg2, seg2); }) ==
          errc::degenerate_input);
    AffineLatticeMap doubling({{2}}, {0});
    CHECK(thrown_code([&] {
              polytope_change(identity_hom(seg, Q), seg, seg, doubling, std::nullopt);
          }) == errc::degenerate_input);
}

TEST_CASE("affine factorizations of dilated maps") {
    AffineFactorization fac = factor_affine({{3, 1}, {2, 3}, {1, 5}}, 2, 1, 2);
    CHECK(fac.shift == Point{1, 1});
    CHECK(fac.vertex_images == std::vector<Point>{{1, 0}, {0, 2}});

    AffineFactorization triv = factor_affine({{5}, {7}}, 1, 1, 1);
    CHECK(triv.shift == Point{5});
    CHECK(triv.vertex_images == std::vector<Point>{{0}, {2}});

    std::vector<Point> beta = {{1, 0}, {0, 1}, {1, 1}};
    Point v = {3, 4};
    auto big = dilate(unit_simplex(2), 2);
    std::vector<Point> alpha;
    for (const auto& x : big.lattice_points()) {
        auto a = barycentric_coordinates(x, 2);
        Point img = v;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t k = 0; k < 2; ++k) img[k] += static_cast<Coord>(a[i]) * beta[i][k];
        alpha.push_back(img);
    }
    AffineFactorization fac2 = factor_affine(alpha, 2, 2, 2);
    CHECK(fac2.shift == v);
    CHECK(fac2.vertex_images == beta);
}

TEST_CASE("affine factorization rejects inconsistent data") {
    CHECK(thrown_code([&] { factor_affine({{1, 0}, {0, 0}, {0, 1}}, 2, 1, 2); }) ==
          errc::not_integral_affine);
    CHECK(thrown_code([&] { factor_affine({{1}, {-1}}, 1, 1, 1); }) == errc::degenerate_input);
    CHECK(thrown_code([&] { factor_affine({{1}, {2}}, 2, 1, 1); }) == errc::shape_mismatch);
}

TEST_CASE("Veronese decomposition of the identity") {
    auto seg2 = segment2();
    VeroneseDecomposition dec = decompose_veronese(identity_hom(seg2, Q));
    CHECK(dec.psi.to_string() == "1");
    CHECK(dec.eta[0].to_string() == "1");
    CHECK(dec.eta[1].to_string() == "Y");
    for (const auto& t : dec.scalars) CHECK(t == Q.one());
    CHECK(recompose_veronese(dec, 1, 2, seg2, Q) == identity_hom(seg2, Q));

    auto big = dilate(unit_simplex(2), 2);
    VeroneseDecomposition dec2 = decompose_veronese(identity_hom(big, Q));
    CHECK(dec2.psi.to_string() == "1");
    CHECK(dec2.eta[1].to_string() == "Y1");
    CHECK(dec2.eta[2].to_string() == "Y2");
    CHECK(recompose_veronese(dec2, 2, 2, big, Q) == identity_hom(big, Q));
}

TEST_CASE("Veronese decomposition splits binomial powers") {
    auto seg2 = segment2();
    LaurentPoly one = LaurentPoly::constant(1, Q.one());
    LaurentPoly y = mono({1}, Q);
    LaurentPoly b = one + y;
    GradedHom f = hom_from_columns(seg2, seg2, {b * b, b * y, y * y}, Q);
    CHECK(is_homomorphism(f));
    VeroneseDecomposition dec = decompose_veronese(f);
    CHECK(dec.psi.to_string() == "1");
    CHECK(dec.eta[0] == b);
    CHECK(dec.eta[1] == y);
    for (const auto& t : dec.scalars) CHECK(t == Q.one());
    CHECK(recompose_veronese(dec, 1, 2, seg2, Q) == f);
}

TEST_CASE("Veronese decomposition extracts scalar roots") {
    auto seg2 = segment2();
    LaurentPoly one = LaurentPoly::constant(1, Q.one());
    LaurentPoly y = mono({1}, Q);
    GradedHom f =
        hom_from_columns(seg2, seg2, {one.scaled(Q.from_int(4)), y.scaled(Q.from_int(2)), y * y},
                         Q);
    VeroneseDecomposition dec = decompose_veronese(f);
    CHECK(dec.psi.to_string() == "1");
    CHECK(dec.eta[0].to_string() == "2");
    CHECK(dec.eta[1].to_string() == "Y");
    CHECK(recompose_veronese(dec, 1, 2, seg2, Q) == f);
}

TEST_CASE("Veronese decomposition failure modes") {
    auto seg2 = segment2();
    LaurentPoly one = LaurentPoly::constant(1, Q.one());
    LaurentPoly y = mono({1}, Q);
    Scalar two = Q.from_int(2);
    GradedHom noroot =
        hom_from_columns(seg2, seg2, {one.scaled(two), y.scaled(two), (y * y).scaled(two)}, Q);
    CHECK(thrown_code([&] { decompose_veronese(noroot); }) == errc::scalar_root_missing);

    GradedHom withzero = hom_from_columns(seg2, seg2, {LaurentPoly(1, Q), y, y * y}, Q);
    CHECK(thrown_code([&] { decompose_veronese(withzero); }) == errc::zero_generator_image);

    CHECK(thrown_code([&] { decompose_veronese(identity_hom(square(), Q)); }) ==
          errc::degenerate_input);
}

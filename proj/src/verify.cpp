#include "polylin/verify.hpp"

#include "polylin/autgroup.hpp"
#include "polylin/errors.hpp"
#include "polylin/hom.hpp"
#include "polylin/polytope.hpp"
#include "polylin/semigroup.hpp"
#include "polylin/tame.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

namespace polylin {

namespace {

const Field Q = Field::rationals();

struct CatalogEntry {
    std::string name;
    LatticePolytope polytope;
    std::size_t expected_columns;
    std::size_t expected_tangent_dim;
};

std::vector<CatalogEntry> catalog() {
    return {
        {"seg", unit_simplex(1), 2, 4},
        {"tri", unit_simplex(2), 6, 9},
        {"seg2", dilate(unit_simplex(1), 2), 2, 4},
        {"square", unit_square(), 4, 7},
        {"t1", LatticePolytope::from_points({{1, 0}, {0, 1}, {-1, 0}}, 2), 5, 8},
        {"t2", LatticePolytope::from_points({{1, 0}, {0, 1}, {-1, -1}}, 2), 0, 3},
    };
}

long long ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
}

long long pick(std::mt19937_64& rng, long long lo, long long hi) {
    return lo + static_cast<long long>(rng() % static_cast<unsigned long long>(hi - lo + 1));
}

// Random composite of elementary and torus maps on p. Scalars for the torus
// factors come from the given list so callers can force perfect squares.
GradedHom random_endo(std::mt19937_64& rng, const LatticePolytope& p,
                      const std::vector<long long>& torus_scalars) {
    auto cols = column_vectors(p);
    GradedHom result = identity_hom(p, Q);
    std::size_t layers = 1 + static_cast<std::size_t>(rng() % 2);
    for (std::size_t l = 0; l < layers; ++l) {
        bool use_column = !cols.empty() && (rng() % 2 == 0);
        if (use_column) {
            const auto& col = cols[rng() % cols.size()];
            result = compose(elementary(p, col, Q.from_int(pick(rng, -2, 2))), result);
        } else {
            std::vector<Scalar> xi;
            for (std::size_t i = 0; i <= p.ambient_dim(); ++i)
                xi.push_back(Q.from_int(torus_scalars[rng() % torus_scalars.size()]));
            result = compose(toric(p, xi), result);
        }
    }
    return result;
}

// Random nonzero marker-stripped column supported on the target's points.
LaurentPoly random_column(std::mt19937_64& rng, const LatticePolytope& target) {
    const auto& pts = target.lattice_points();
    std::size_t terms = 1 + static_cast<std::size_t>(rng() % 2);
    LaurentPoly out(target.ambient_dim(), Q);
    for (std::size_t t = 0; t < terms; ++t) {
        const Point& s = pts[rng() % pts.size()];
        out.add_term(Exponent(s.begin(), s.end()), Q.from_int(pick(rng, 1, 3)));
    }
    if (out.is_zero()) out.add_term(Exponent(pts[0].begin(), pts[0].end()), Q.one());
    return out;
}

bool direct_square_equals(const ExactMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            Scalar s = m.field().zero();
            for (std::size_t k = 0; k < m.cols(); ++k) s += m.at(i, k) * m.at(k, j);
            if (!(s == m.at(i, j))) return false;
        }
    return true;
}

CriterionResult criterion_column_counts() {
    CriterionResult r{1, "column-counts", true, ""};
    std::ostringstream detail;
    for (const auto& entry : catalog()) {
        if (entry.name != "square" && entry.name != "t1" && entry.name != "t2") continue;
        auto start = std::chrono::steady_clock::now();
        std::size_t count = column_vectors(entry.polytope).size();
        long long elapsed = ms_since(start);
        bool ok = count == entry.expected_columns && elapsed < 1000;
        if (!ok) r.passed = false;
        detail << entry.name << "=" << count << " (" << elapsed << "ms) ";
    }
    r.detail = detail.str();
    return r;
}

CriterionResult criterion_tangent_dims() {
    CriterionResult r{2, "tangent-dimension-formula", true, ""};
    std::ostringstream detail;
    auto start = std::chrono::steady_clock::now();
    for (const auto& entry : catalog()) {
        std::size_t dim = tangent_dim(entry.polytope);
        std::size_t predicted = predicted_gamma_dim(entry.polytope);
        if (dim != entry.expected_tangent_dim || predicted != entry.expected_tangent_dim)
            r.passed = false;
        detail << entry.name << "=" << dim << "/" << predicted << " ";
    }
    long long elapsed = ms_since(start);
    if (elapsed >= 30000) r.passed = false;
    detail << "(" << elapsed << "ms total)";
    r.detail = detail.str();
    return r;
}

CriterionResult criterion_elementary_laws() {
    CriterionResult r{3, "elementary-composition-laws", true, ""};
    std::size_t cases = 0, failures = 0;
    std::vector<long long> range = {-2, -1, 0, 1, 2};
    for (const auto& entry : catalog()) {
        const auto& p = entry.polytope;
        auto cols = column_vectors(p);
        GradedHom id = identity_hom(p, Q);
        for (const auto& col : cols) {
            for (long long a : range)
                for (long long b : range) {
                    ++cases;
                    GradedHom lhs = compose(elementary(p, col, Q.from_int(a)),
                                            elementary(p, col, Q.from_int(b)));
                    if (!(lhs == elementary(p, col, Q.from_int(a + b)))) ++failures;
                }
            for (long long a : range) {
                ++cases;
                GradedHom inv = compose(elementary(p, col, Q.from_int(a)),
                                        elementary(p, col, Q.from_int(-a)));
                if (!(inv == id)) ++failures;
            }
        }
        for (const auto& c1 : cols)
            for (const auto& c2 : cols) {
                if (c1.base_facet != c2.base_facet) continue;
                for (long long a : range)
                    for (long long b : range) {
                        ++cases;
                        GradedHom e1 = elementary(p, c1, Q.from_int(a));
                        GradedHom e2 = elementary(p, c2, Q.from_int(b));
                        if (!(compose(e1, e2) == compose(e2, e1))) ++failures;
                    }
            }
    }
    if (failures > 0 || cases == 0) r.passed = false;
    r.detail = std::to_string(cases) + " cases, " + std::to_string(failures) + " failures";
    return r;
}

CriterionResult criterion_integer_equations(unsigned long long seed) {
    CriterionResult r{4, "integer-defined-equations", true, ""};
    auto sq = unit_square();
    auto seg = unit_simplex(1);
    Field f5 = Field::prime(5);

    auto coeff_fingerprint = [](const HomEquations& eq) {
        std::ostringstream s;
        for (const auto& poly : eq.polys) {
            for (const auto& [mono, coeff] : poly.terms) {
                for (auto v : mono) s << v << ",";
                s << ":" << coeff << ";";
            }
            s << "|";
        }
        return s.str();
    };

    // The equation generator never consults the field, so the integer
    // coefficient lists must agree verbatim between two runs used for the
    // rational and the prime-field sessions.
    auto eq_sq_seg = hom_equations(sq, seg);
    auto eq_sq_sq = hom_equations(sq, sq);
    bool identical = coeff_fingerprint(eq_sq_seg) == coeff_fingerprint(hom_equations(sq, seg)) &&
                     coeff_fingerprint(eq_sq_sq) == coeff_fingerprint(hom_equations(sq, sq)) &&
                     !eq_sq_seg.polys.empty() && !eq_sq_sq.polys.empty();
    if (!identical) r.passed = false;

    std::mt19937_64 rng(0x9e3779b9ULL + seed);
    std::size_t disagreements = 0;
    for (int i = 0; i < 200; ++i) {
        const LatticePolytope& target = (i < 100) ? seg : sq;
        const HomEquations& eq = (i < 100) ? eq_sq_seg : eq_sq_sq;
        ExactMatrix m(target.point_count(), sq.point_count(), f5);
        for (std::size_t a = 0; a < m.rows(); ++a)
            for (std::size_t b = 0; b < m.cols(); ++b)
                m.at(a, b) = f5.from_integer(Int(rng() % 5));
        bool vanish = equations_vanish(eq, m);
        bool hom = is_homomorphism(GradedHom{sq, target, m, false});
        if (vanish != hom) ++disagreements;
    }
    if (disagreements > 0) r.passed = false;
    r.detail = std::string("coefficient lists ") + (identical ? "identical" : "DIFFER") +
               "; 200 samples, " + std::to_string(disagreements) + " disagreements";
    return r;
}

CriterionResult criterion_quadratic_generation() {
    CriterionResult r{5, "quadratic-generation", true, ""};
    auto sq = unit_square();
    auto t2 = LatticePolytope::from_points({{1, 0}, {0, 1}, {-1, -1}}, 2);
    bool a = is_generated_in_degree(sq, 2, 3);
    bool b = is_generated_in_degree(t2, 2, 3);
    bool c = is_generated_in_degree(dilate(t2, 2), 2, 3);
    r.passed = a && !b && c;
    std::ostringstream detail;
    detail << "square=" << (a ? "true" : "false") << " t2=" << (b ? "true" : "false")
           << " 2t2=" << (c ? "true" : "false");
    r.detail = detail.str();
    return r;
}

CriterionResult criterion_blowup_coherence(unsigned long long seed) {
    CriterionResult r{6, "blowup-coherence", true, ""};
    auto seg = unit_simplex(1);
    ColumnStructure down{{-1}, 0};
    for (const auto& c : column_vectors(seg))
        if (c.vector == Point{-1}) down = c;

    std::size_t oracle_failures = 0;
    for (long long c = 2; c <= 3; ++c)
        for (long long lam = 1; lam <= 2; ++lam) {
            auto scaled = dilate(seg, c);
            ColumnStructure down_c{{-1}, 0};
            for (const auto& cc : column_vectors(scaled))
                if (cc.vector == Point{-1}) down_c = cc;
            GradedHom blown = homothetic_blowup(elementary(seg, down, Q.from_int(lam)), c);
            if (!(blown == elementary(scaled, down_c, Q.from_int(lam)))) ++oracle_failures;
        }

    std::mt19937_64 rng(0x6b43a9b5ULL + seed);
    auto entries = catalog();
    std::size_t pair_failures = 0;
    for (int i = 0; i < 50; ++i) {
        const auto& p = entries[static_cast<std::size_t>(i) % entries.size()].polytope;
        GradedHom f = random_endo(rng, p, {1, 2, 3});
        GradedHom g = random_endo(rng, p, {1, 2, 3});
        GradedHom lhs = homothetic_blowup(compose(g, f), 2);
        GradedHom rhs = compose(homothetic_blowup(g, 2), homothetic_blowup(f, 2));
        if (!(lhs == rhs)) ++pair_failures;
    }
    if (oracle_failures > 0 || pair_failures > 0) r.passed = false;
    r.detail = std::to_string(oracle_failures) + " oracle failures, " +
               std::to_string(pair_failures) + " of 50 pairs failed";
    return r;
}

CriterionResult criterion_simplex_decomposition(unsigned long long seed) {
    CriterionResult r{7, "simplex-decomposition", true, ""};
    auto seg = unit_simplex(1);
    auto tri = unit_simplex(2);
    std::mt19937_64 rng(0x5eed0007ULL + seed);
    std::size_t failures = 0;
    for (int i = 0; i < 100; ++i) {
        std::size_t n = (i < 50) ? 1 : 2;
        const LatticePolytope& base = (n == 1) ? seg : tri;
        LatticePolytope source = dilate(base, 2);
        GradedHom h = identity_hom(source, Q);
        if (i % 2 == 0) {
            h = random_endo(rng, source, {1, 4, 9});
        } else {
            LatticePolytope target = (rng() % 2 == 0) ? base : source;
            std::vector<LaurentPoly> cols;
            for (std::size_t j = 0; j < base.point_count(); ++j)
                cols.push_back(random_column(rng, target));
            h = homothetic_blowup(hom_from_columns(base, target, cols, Q), 2);
        }
        try {
            VeroneseDecomposition dec = decompose_veronese(h);
            GradedHom back = recompose_veronese(dec, n, 2, h.target, Q);
            if (!(back == h)) ++failures;
        } catch (const DomainError&) {
            ++failures;
        }
    }

    bool zero_path = false, root_path = false;
    auto seg2 = dilate(seg, 2);
    LaurentPoly y = LaurentPoly::monomial(Exponent{1}, Q.one());
    try {
        decompose_veronese(
            hom_from_columns(seg2, seg2, {LaurentPoly(1, Q), y, y * y}, Q));
    } catch (const DomainError& e) {
        zero_path = e.code() == errc::zero_generator_image;
    }
    Scalar two = Q.from_int(2);
    try {
        decompose_veronese(hom_from_columns(
            seg2, seg2,
            {LaurentPoly::constant(1, two), y.scaled(two), (y * y).scaled(two)}, Q));
    } catch (const DomainError& e) {
        root_path = e.code() == errc::scalar_root_missing;
    }

    if (failures > 0 || !zero_path || !root_path) r.passed = false;
    r.detail = std::to_string(failures) + " of 100 round trips failed; zero-image path " +
               (zero_path ? "hit" : "MISSED") + ", missing-root path " +
               (root_path ? "hit" : "MISSED");
    return r;
}

CriterionResult criterion_affine_factorization(unsigned long long seed) {
    CriterionResult r{8, "affine-factorization", true, ""};
    std::mt19937_64 rng(0xfac708ULL + seed);
    std::size_t failures = 0;
    for (int i = 0; i < 100; ++i) {
        long long c = pick(rng, 1, 3);
        std::size_t n = static_cast<std::size_t>(pick(rng, 1, 2));
        std::size_t d = static_cast<std::size_t>(pick(rng, 1, 3));
        Point v(d);
        for (auto& x : v) x = pick(rng, 0, 4);
        std::vector<Point> beta(n + 1, Point(d));
        for (auto& b : beta)
            for (auto& x : b) x = pick(rng, 0, 3);
        auto simplex = dilate(unit_simplex(n), c);
        std::vector<Point> alpha;
        for (const auto& x : simplex.lattice_points()) {
            auto a = barycentric_coordinates(x, c);
            Point img = v;
            for (std::size_t t = 0; t <= n; ++t)
                for (std::size_t k = 0; k < d; ++k)
                    img[k] += static_cast<Coord>(a[t]) * beta[t][k];
            alpha.push_back(img);
        }
        try {
            AffineFactorization fac = factor_affine(alpha, c, n, d);
            for (std::size_t j = 0; j < alpha.size(); ++j) {
                auto a = barycentric_coordinates(simplex.lattice_points()[j], c);
                Point img = fac.shift;
                for (std::size_t t = 0; t <= n; ++t)
                    for (std::size_t k = 0; k < d; ++k)
                        img[k] += static_cast<Coord>(a[t]) * fac.vertex_images[t][k];
                if (img != alpha[j]) ++failures;
            }
        } catch (const DomainError&) {
            ++failures;
        }
    }

    bool midpoint_rejected = false;
    try {
        factor_affine({{1, 0}, {0, 0}, {0, 1}}, 2, 1, 2);
    } catch (const DomainError& e) {
        midpoint_rejected = e.code() == errc::not_integral_affine;
    }
    if (failures > 0 || !midpoint_rejected) r.passed = false;
    r.detail = std::to_string(failures) + " of 100 round trips failed; midpoint fixture " +
               (midpoint_rejected ? "rejected" : "NOT rejected");
    return r;
}

CriterionResult criterion_retraction_idempotents(unsigned long long seed) {
    CriterionResult r{9, "retraction-idempotents", true, ""};
    std::size_t face_cases = 0, face_failures = 0;
    auto entries = catalog();
    for (const auto& entry : entries)
        for (const auto& face : all_faces(entry.polytope)) {
            ++face_cases;
            GradedHom rho = face_retraction(entry.polytope, face.facet_ids, Q);
            GradedHom iota = face_inclusion(entry.polytope, face.facet_ids, Q);
            if (!(compose(rho, iota) == identity_hom(face.polytope, Q))) ++face_failures;
        }

    std::size_t fib_cases = 0, fib_failures = 0;
    std::vector<LatticePolytope> fib_hosts = {
        unit_square(), LatticePolytope::from_points({{0, 0}, {1, 0}, {0, 2}, {1, 2}}, 2)};
    for (const auto& p : fib_hosts)
        for (const auto& fib : detect_segmental_fibrations(p)) {
            ++fib_cases;
            GradedHom proj =
                compose(fibration_inclusion(fib, Q), fibration_retraction(fib, Q));
            if (!is_idempotent(proj)) ++fib_failures;
        }

    std::mt19937_64 rng(0x1de9997eULL + seed);
    std::size_t idem_disagreements = 0;
    for (int i = 0; i < 100; ++i) {
        const auto& p = entries[static_cast<std::size_t>(i) % entries.size()].polytope;
        GradedHom f = identity_hom(p, Q);
        if (i % 3 == 0) {
            auto faces = all_faces(p);
            const auto& face = faces[rng() % faces.size()];
            f = compose(face_inclusion(p, face.facet_ids, Q),
                        face_retraction(p, face.facet_ids, Q));
        } else {
            for (std::size_t a = 0; a < f.matrix.rows(); ++a)
                for (std::size_t b = 0; b < f.matrix.cols(); ++b)
                    f.matrix.at(a, b) = Q.from_int(pick(rng, -2, 2));
        }
        if (is_idempotent(f) != direct_square_equals(f.matrix)) ++idem_disagreements;
    }

    if (face_failures > 0 || fib_failures > 0 || idem_disagreements > 0 || face_cases == 0 ||
        fib_cases == 0)
        r.passed = false;
    r.detail = std::to_string(face_cases) + " faces (" + std::to_string(face_failures) +
               " failed), " + std::to_string(fib_cases) + " fibrations (" +
               std::to_string(fib_failures) + " failed), 100 idempotent samples (" +
               std::to_string(idem_disagreements) + " disagreements)";
    return r;
}

} // namespace

std::vector<CriterionResult> run_acceptance(unsigned long long seed) {
    std::vector<std::function<CriterionResult()>> runners = {
        [] { return criterion_column_counts(); },
        [] { return criterion_tangent_dims(); },
        [] { return criterion_elementary_laws(); },
        [seed] { return criterion_integer_equations(seed); },
        [] { return criterion_quadratic_generation(); },
        [seed] { return criterion_blowup_coherence(seed); },
        [seed] { return criterion_simplex_decomposition(seed); },
        [seed] { return criterion_affine_factorization(seed); },
        [seed] { return criterion_retraction_idempotents(seed); },
    };
    std::vector<CriterionResult> results;
    int id = 1;
    for (const auto& run : runners) {
        try {
            results.push_back(run());
        } catch (const std::exception& e) {
            results.push_back({id, "criterion", false, std::string("unexpected error: ") +
                                                           e.what()});
        }
        results.back().id = id++;
    }
    return results;
}

} // namespace polylin

#include "polylin/tame.hpp"

#include "polylin/errors.hpp"
#include "polylin/semigroup.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <string>

namespace polylin {

namespace {

const Field kRat = Field::rationals();

Int dot(const Point& a, const Point& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += Int(a[i]) * Int(b[i]);
    return s;
}

Point add(const Point& a, const Point& b) {
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

std::string point_str(const Point& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(p[i]);
    }
    return s + ")";
}

Coord to_coord(const Int& v) {
    if (v < std::numeric_limits<long long>::min() || v > std::numeric_limits<long long>::max())
        throw DomainError(errc::degenerate_input, "coordinate overflow");
    return v.convert_to<long long>();
}

Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// Primitive integer vector with positive first nonzero entry, from rationals.
Point primitive_from_rationals(const std::vector<Scalar>& v) {
    Int lcm = 1;
    for (const auto& s : v) {
        Int den = boost::multiprecision::denominator(s.rational_value());
        lcm = boost::multiprecision::lcm(lcm, den);
    }
    std::vector<Int> ints;
    Int g = 0;
    for (const auto& s : v) {
        Rat r = s.rational_value() * Rat(lcm);
        Int n = boost::multiprecision::numerator(r);
        ints.push_back(n);
        g = boost::multiprecision::gcd(g, n);
    }
    if (g == 0) throw DomainError(errc::degenerate_input, "zero vector has no primitive form");
    Int sign = 1;
    for (const auto& n : ints)
        if (n != 0) {
            if (n < 0) sign = -1;
            break;
        }
    Point out;
    for (const auto& n : ints) out.push_back(to_coord(n * sign / g));
    return out;
}

// Basis of {u in Z^n : row . u = 0 for every row}, by unimodular column
// reduction; the returned vectors generate the full (saturated) kernel
// lattice.
std::vector<Point> integral_kernel(const std::vector<Point>& rows, std::size_t n) {
    std::vector<std::vector<Int>> a;
    for (const auto& r : rows) a.emplace_back(r.begin(), r.end());
    std::vector<std::vector<Int>> u(n, std::vector<Int>(n, 0));
    for (std::size_t j = 0; j < n; ++j) u[j][j] = 1;
    std::vector<bool> active(n, true);
    for (std::size_t r = 0; r < a.size(); ++r) {
        while (true) {
            std::size_t best = n;
            std::size_t live = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (!active[j] || a[r][j] == 0) continue;
                ++live;
                if (best == n || boost::multiprecision::abs(a[r][j]) <
                                     boost::multiprecision::abs(a[r][best]))
                    best = j;
            }
            if (live == 0) break;
            if (live == 1) {
                active[best] = false;
                break;
            }
            for (std::size_t j = 0; j < n; ++j) {
                if (j == best || !active[j] || a[r][j] == 0) continue;
                Int q = a[r][j] / a[r][best];
                if (q == 0) continue;
                for (std::size_t rr = 0; rr < a.size(); ++rr) a[rr][j] -= q * a[rr][best];
                for (std::size_t k = 0; k < n; ++k) u[j][k] -= q * u[best][k];
            }
        }
    }
    std::vector<Point> out;
    for (std::size_t j = 0; j < n; ++j) {
        if (!active[j]) continue;
        Point v;
        for (const auto& x : u[j]) v.push_back(to_coord(x));
        out.push_back(std::move(v));
    }
    return out;
}

// Basis of span_Q(gens) ∩ Z^n.
std::vector<Point> saturate_lattice(const std::vector<Point>& gens, std::size_t n) {
    if (gens.empty()) return {};
    ExactMatrix g(gens.size(), n, kRat);
    for (std::size_t r = 0; r < gens.size(); ++r)
        for (std::size_t c = 0; c < n; ++c) g.at(r, c) = kRat.from_integer(gens[r][c]);
    std::vector<Point> normals;
    for (const auto& k : g.kernel_basis()) normals.push_back(primitive_from_rationals(k));
    return integral_kernel(normals, n);
}

// x - h_point lies in the rational span of the columns.
bool in_affine_span(const ExactMatrix& dirs, const Point& base, const Point& x) {
    std::vector<Scalar> b;
    for (std::size_t i = 0; i < x.size(); ++i)
        b.push_back(kRat.from_integer(Int(x[i]) - Int(base[i])));
    if (dirs.cols() == 0) {
        for (const auto& s : b)
            if (!s.is_zero()) return false;
        return true;
    }
    return dirs.solve(b).has_value();
}

ExactMatrix direction_matrix(const std::vector<Point>& dirs, std::size_t n) {
    ExactMatrix m(n, dirs.size(), kRat);
    for (std::size_t j = 0; j < dirs.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) m.at(i, j) = kRat.from_integer(dirs[j][i]);
    return m;
}

// Lattice points of the polytope lying on the base slice.
std::vector<Point> slice_points(const Fibration& fib) {
    std::size_t n = fib.polytope.ambient_dim();
    ExactMatrix dirs = direction_matrix(fib.h_basis, n);
    std::vector<Point> reps;
    for (const auto& x : fib.polytope.lattice_points())
        if (in_affine_span(dirs, fib.h_point, x)) reps.push_back(x);
    return reps;
}

std::size_t affine_rank(const std::vector<Point>& pts, std::size_t n) {
    if (pts.size() <= 1) return 0;
    ExactMatrix diffs(pts.size() - 1, n, kRat);
    for (std::size_t i = 1; i < pts.size(); ++i)
        for (std::size_t c = 0; c < n; ++c)
            diffs.at(i - 1, c) = kRat.from_integer(Int(pts[i][c]) - Int(pts[0][c]));
    return diffs.rank();
}

LaurentPoly stripped_column(const GradedHom& f, const Point& x) { return column_laurent(f, x); }

LaurentPoly product_over(const std::vector<LaurentPoly>& cols, const LatticePolytope& src,
                         const std::vector<Point>& rep, std::size_t target_dim,
                         const Field& field) {
    LaurentPoly prod = LaurentPoly::constant(target_dim, field.one());
    for (const auto& pt : rep) prod *= cols[src.point_index(pt)];
    return prod;
}

void expand_into_column(ExactMatrix& m, const LatticePolytope& target, const LaurentPoly& poly,
                        std::size_t col, const Point& witness) {
    for (const auto& [e, coeff] : poly.terms()) {
        Point pt(e.begin(), e.end());
        if (!target.has_lattice_point(pt))
            throw DomainError(errc::image_escapes_target,
                              "image of " + point_str(witness) + " has the monomial " +
                                  point_str(pt) + " outside the target");
        m.at(target.point_index(pt), col) = coeff;
    }
}

} // namespace

GradedHom face_retraction(const LatticePolytope& p, const std::vector<std::size_t>& facet_ids,
                          const Field& f) {
    Face face = face_from_facets(p, facet_ids);
    ExactMatrix m(face.polytope.point_count(), p.point_count(), f);
    for (std::size_t i = 0; i < face.point_ids.size(); ++i) m.at(i, face.point_ids[i]) = f.one();
    return GradedHom{p, face.polytope, std::move(m), true};
}

GradedHom face_inclusion(const LatticePolytope& p, const std::vector<std::size_t>& facet_ids,
                         const Field& f) {
    Face face = face_from_facets(p, facet_ids);
    ExactMatrix m(p.point_count(), face.polytope.point_count(), f);
    for (std::size_t i = 0; i < face.point_ids.size(); ++i) m.at(face.point_ids[i], i) = f.one();
    return GradedHom{face.polytope, p, std::move(m), true};
}

bool validate_fibration(const Fibration& fib) {
    const auto& p = fib.polytope;
    if (p.is_empty() || !is_normalized(p)) return false;
    std::size_t n = p.ambient_dim();
    std::size_t c = fib.w_basis.size();
    std::size_t dh = fib.h_basis.size();
    if (c == 0 || c + dh != n) return false;
    for (const auto& w : fib.w_basis)
        if (w.size() != n) return false;
    for (const auto& h : fib.h_basis)
        if (h.size() != n) return false;
    if (fib.h_point.size() != n || !p.has_lattice_point(fib.h_point)) return false;

    ExactMatrix wmat = direction_matrix(fib.w_basis, n);
    ExactMatrix hmat = direction_matrix(fib.h_basis, n);
    if (wmat.rank() != c || (dh > 0 && hmat.rank() != dh)) return false;

    std::vector<Point> reps = slice_points(fib);
    if (reps.empty() || affine_rank(reps, n) != dh) return false;

    // Every lattice point must see exactly one base point along the fibers.
    for (const auto& x : p.lattice_points()) {
        std::size_t hits = 0;
        for (const auto& r : reps)
            if (in_affine_span(wmat, r, x)) ++hits;
        if (hits != 1) return false;
    }

    // The ambient lattice splits into the saturated fiber and slice parts.
    std::vector<Point> sat_w = saturate_lattice(fib.w_basis, n);
    std::vector<Point> sat_h = saturate_lattice(fib.h_basis, n);
    if (sat_w.size() + sat_h.size() != n) return false;
    ExactMatrix split(n, n, kRat);
    for (std::size_t r = 0; r < sat_w.size(); ++r)
        for (std::size_t i = 0; i < n; ++i) split.at(r, i) = kRat.from_integer(sat_w[r][i]);
    for (std::size_t r = 0; r < sat_h.size(); ++r)
        for (std::size_t i = 0; i < n; ++i)
            split.at(sat_w.size() + r, i) = kRat.from_integer(sat_h[r][i]);
    Rat det = split.determinant().rational_value();
    return det == 1 || det == -1;
}

std::vector<Fibration> detect_segmental_fibrations(const LatticePolytope& p) {
    if (!is_normalized(p))
        throw DomainError(errc::not_normalized, "fibration search needs a normalized polytope");
    std::size_t n = p.ambient_dim();
    std::vector<Fibration> out;
    if (n == 0) return out;
    const auto& pts = p.lattice_points();

    std::set<Point> dirs;
    for (const auto& x : pts)
        for (const auto& y : pts) {
            if (x == y) continue;
            std::vector<Scalar> diff;
            for (std::size_t i = 0; i < n; ++i)
                diff.push_back(kRat.from_integer(Int(x[i]) - Int(y[i])));
            dirs.insert(primitive_from_rationals(diff));
        }

    struct Found {
        Point w, normal;
        Coord offset;
        Fibration fib;
    };
    std::vector<Found> found;

    for (const auto& w : dirs) {
        // Fiber classes: reduce each point modulo integer steps of w.
        std::size_t piv = 0;
        while (w[piv] == 0) ++piv;
        std::map<Point, std::vector<Point>> classes;
        for (const auto& x : pts) {
            Int k = floor_div(Int(x[piv]), Int(w[piv]));
            Point key(n);
            for (std::size_t i = 0; i < n; ++i) key[i] = to_coord(Int(x[i]) - k * Int(w[i]));
            classes[key].push_back(x);
        }
        if (classes.size() < n) continue;  // transversal cannot span a hyperplane

        std::vector<const std::vector<Point>*> cls;
        for (const auto& [key, members] : classes) cls.push_back(&members);

        std::set<std::pair<Point, Coord>> seen;
        std::vector<std::size_t> pick(cls.size(), 0);
        while (true) {
            std::vector<Point> trans;
            for (std::size_t i = 0; i < cls.size(); ++i) trans.push_back((*cls[i])[pick[i]]);
            if (affine_rank(trans, n) == n - 1) {
                ExactMatrix diffs(trans.size() - 1, n, kRat);
                for (std::size_t i = 1; i < trans.size(); ++i)
                    for (std::size_t cc = 0; cc < n; ++cc)
                        diffs.at(i - 1, cc) =
                            kRat.from_integer(Int(trans[i][cc]) - Int(trans[0][cc]));
                auto ker = diffs.kernel_basis();
                if (ker.size() == 1) {
                    Point normal = primitive_from_rationals(ker[0]);
                    Coord offset = to_coord(dot(normal, trans[0]));
                    if (seen.insert({normal, offset}).second) {
                        Point h_point;
                        for (const auto& x : pts)
                            if (dot(normal, x) == offset) {
                                h_point = x;
                                break;
                            }
                        Fibration fib{p, {w}, h_point, integral_kernel({normal}, n)};
                        if (validate_fibration(fib))
                            found.push_back({w, normal, offset, std::move(fib)});
                    }
                }
            }
            std::size_t i = 0;
            while (i < cls.size() && pick[i] + 1 == cls[i]->size()) pick[i++] = 0;
            if (i == cls.size()) break;
            ++pick[i];
        }
    }

    std::sort(found.begin(), found.end(), [](const Found& a, const Found& b) {
        return std::tie(a.w, a.normal, a.offset) < std::tie(b.w, b.normal, b.offset);
    });
    for (auto& f : found) out.push_back(std::move(f.fib));
    return out;
}

LatticePolytope fibration_base(const Fibration& fib) {
    return LatticePolytope::from_points(slice_points(fib), fib.polytope.ambient_dim());
}

GradedHom fibration_retraction(const Fibration& fib, const Field& f) {
    if (!validate_fibration(fib))
        throw DomainError(errc::not_a_fibration, "invalid fibration witness");
    const auto& p = fib.polytope;
    std::size_t n = p.ambient_dim();
    LatticePolytope base = fibration_base(fib);
    ExactMatrix wmat = direction_matrix(fib.w_basis, n);
    ExactMatrix m(base.point_count(), p.point_count(), f);
    const auto& pts = p.lattice_points();
    for (std::size_t j = 0; j < pts.size(); ++j)
        for (const auto& r : base.lattice_points())
            if (in_affine_span(wmat, r, pts[j])) {
                m.at(base.point_index(r), j) = f.one();
                break;
            }
    return GradedHom{p, std::move(base), std::move(m), true};
}

GradedHom fibration_inclusion(const Fibration& fib, const Field& f) {
    if (!validate_fibration(fib))
        throw DomainError(errc::not_a_fibration, "invalid fibration witness");
    const auto& p = fib.polytope;
    LatticePolytope base = fibration_base(fib);
    ExactMatrix m(p.point_count(), base.point_count(), f);
    const auto& reps = base.lattice_points();
    for (std::size_t j = 0; j < reps.size(); ++j) m.at(p.point_index(reps[j]), j) = f.one();
    return GradedHom{std::move(base), p, std::move(m), true};
}

GradedHom homothetic_blowup(const GradedHom& f, long long c, long long witness_bound) {
    if (c < 1) throw DomainError(errc::degenerate_input, "dilation factor must be positive");
    if (f.matrix.rows() != f.target.point_count() || f.matrix.cols() != f.source.point_count())
        throw DomainError(errc::shape_mismatch, "hom matrix shape does not match the polytopes");
    LatticePolytope src_d = dilate(f.source, c);
    LatticePolytope tgt_d = dilate(f.target, c);
    const Field& field = f.matrix.field();
    std::size_t tdim = f.target.ambient_dim();

    std::vector<LaurentPoly> cols;
    for (const auto& x : f.source.lattice_points()) {
        LaurentPoly col = stripped_column(f, x);
        if (col.is_zero())
            throw DomainError(errc::zero_generator_image,
                              "generator at " + point_str(x) + " maps to zero");
        cols.push_back(std::move(col));
    }

    long long bound = witness_bound > 0
                          ? witness_bound
                          : c * static_cast<long long>(f.source.point_count());
    ExactMatrix m(tgt_d.point_count(), src_d.point_count(), field);
    const auto& new_pts = src_d.lattice_points();
    for (std::size_t j = 0; j < new_pts.size(); ++j) {
        const Point& x = new_pts[j];
        LaurentPoly image;
        bool done = false;
        if (auto rep = monomial_product_rep(f.source, x, c)) {
            image = product_over(cols, f.source, *rep, tdim, field);
            done = true;
        }
        for (long long e = 1; !done && e <= bound; ++e) {
            for (const auto& z : degree_piece(f.source, e)) {
                auto num_rep = monomial_product_rep(f.source, add(x, z.vector), c + e);
                if (!num_rep) continue;
                auto den_rep = monomial_product_rep(f.source, z.vector, e);
                LaurentPoly num = product_over(cols, f.source, *num_rep, tdim, field);
                LaurentPoly den = product_over(cols, f.source, *den_rep, tdim, field);
                image = laurent_exact_div(num, den);
                done = true;
                break;
            }
        }
        if (!done)
            throw DomainError(errc::witness_not_found,
                              "no witness monomial for " + point_str(x) + " within degree " +
                                  std::to_string(bound));
        expand_into_column(m, tgt_d, image, j, x);
    }
    return GradedHom{std::move(src_d), std::move(tgt_d), std::move(m), f.verified};
}

GradedHom minkowski_star(const GradedHom& f, const GradedHom& g) {
    if (!(f.source == g.source) || !(f.target == g.target))
        throw DomainError(errc::shape_mismatch, "star factors need equal sources and targets");
    if (f.matrix.field() != g.matrix.field())
        throw DomainError(errc::field_mismatch, "star factors live over different fields");
    const Field& field = f.matrix.field();
    ExactMatrix m(f.target.point_count(), f.source.point_count(), field);
    const auto& pts = f.source.lattice_points();
    for (std::size_t j = 0; j < pts.size(); ++j) {
        LaurentPoly a = stripped_column(f, pts[j]);
        LaurentPoly b = stripped_column(g, pts[j]);
        if (a.is_zero() || b.is_zero()) continue;
        LatticePolytope mk = minkowski_sum(newton_polytope(a), newton_polytope(b));
        if (!contains_polytope(f.target, mk))
            throw DomainError(errc::newton_containment_violated,
                              "Newton polytope sum escapes the target at " + point_str(pts[j]));
        expand_into_column(m, f.target, a * b, j, pts[j]);
    }
    return GradedHom{f.source, f.target, std::move(m), f.verified && g.verified};
}

GradedHom free_extension(const GradedHom& f0, const LatticePolytope& p, const Point& apex,
                         const LatticePolytope& target, const LaurentPoly& q) {
    auto splits = is_pyramid(p);
    const PyramidSplit* match = nullptr;
    for (const auto& s : splits)
        if (s.apex == apex) match = &s;
    if (!match)
        throw DomainError(errc::not_a_pyramid, "no pyramid split with apex " + point_str(apex));
    const LatticePolytope& base = match->base;
    if (base.is_empty() ? !f0.source.is_empty() : !(f0.source == base))
        throw DomainError(errc::not_a_pyramid,
                          "pyramid base does not match the source of the extended map");
    if (!f0.target.is_empty() && !(f0.target == target))
        throw DomainError(errc::shape_mismatch, "extension target differs from the base map's");
    if (q.dim() != target.ambient_dim())
        throw DomainError(errc::dimension_mismatch, "apex image lives in the wrong dimension");

    const Field& field = q.field();
    if (!f0.source.is_empty() && f0.matrix.field() != field)
        throw DomainError(errc::field_mismatch, "apex image and base map fields differ");
    ExactMatrix m(target.point_count(), p.point_count(), field);
    const auto& pts = p.lattice_points();
    for (std::size_t j = 0; j < pts.size(); ++j) {
        if (pts[j] == apex) {
            expand_into_column(m, target, q, j, apex);
            continue;
        }
        std::size_t bcol = base.point_index(pts[j]);
        for (std::size_t r = 0; r < target.point_count(); ++r) m.at(r, j) = f0.matrix.at(r, bcol);
    }
    return GradedHom{p, target, std::move(m), f0.verified};
}

GradedHom polytope_change(const GradedHom& f, const LatticePolytope& new_source,
                          const LatticePolytope& new_target,
                          const std::optional<AffineLatticeMap>& source_map,
                          const std::optional<AffineLatticeMap>& target_map) {
    if (source_map && !source_map->is_unimodular())
        throw DomainError(errc::degenerate_input, "source transport must be unimodular");
    if (target_map && !target_map->is_unimodular())
        throw DomainError(errc::degenerate_input, "target transport must be unimodular");
    const Field& field = f.matrix.field();
    ExactMatrix m(new_target.point_count(), new_source.point_count(), field);
    const auto& pts = new_source.lattice_points();
    const auto& old_tgt = f.target.lattice_points();
    for (std::size_t j = 0; j < pts.size(); ++j) {
        Point sx = source_map ? source_map->apply(pts[j]) : pts[j];
        if (!f.source.has_lattice_point(sx))
            throw DomainError(errc::degenerate_input,
                              "new source is not a subpolytope of the original: " +
                                  point_str(pts[j]) + " is missing");
        std::size_t col = f.source.point_index(sx);
        for (std::size_t r = 0; r < old_tgt.size(); ++r) {
            const Scalar& entry = f.matrix.at(r, col);
            if (entry.is_zero()) continue;
            Point ty = target_map ? target_map->apply(old_tgt[r]) : old_tgt[r];
            if (!new_target.has_lattice_point(ty))
                throw DomainError(errc::image_escapes_target,
                                  "image of " + point_str(pts[j]) + " has the monomial " +
                                      point_str(ty) + " outside the new target");
            m.at(new_target.point_index(ty), j) = entry;
        }
    }
    return GradedHom{new_source, new_target, std::move(m), f.verified};
}

std::vector<long long> barycentric_coordinates(const Point& x, long long c) {
    std::vector<long long> a(x.size() + 1);
    long long sum = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        a[i + 1] = x[i];
        sum += x[i];
    }
    a[0] = c - sum;
    return a;
}

AffineFactorization factor_affine(const std::vector<Point>& alpha, long long c, std::size_t n,
                                  std::size_t d) {
    if (c < 1) throw DomainError(errc::degenerate_input, "dilation factor must be positive");
    LatticePolytope simplex = dilate(unit_simplex(n), c);
    if (alpha.size() != simplex.point_count())
        throw DomainError(errc::shape_mismatch, "one image per lattice point required");
    for (const auto& img : alpha) {
        if (img.size() != d)
            throw DomainError(errc::shape_mismatch, "image dimension mismatch");
        for (auto v : img)
            if (v < 0)
                throw DomainError(errc::degenerate_input, "images must be nonnegative");
    }

    std::vector<std::size_t> vidx(n + 1);
    vidx[0] = simplex.point_index(Point(n, 0));
    for (std::size_t i = 1; i <= n; ++i) {
        Point v(n, 0);
        v[i - 1] = c;
        vidx[i] = simplex.point_index(v);
    }

    const auto& pts = simplex.lattice_points();
    for (std::size_t j = 0; j < pts.size(); ++j) {
        auto a = barycentric_coordinates(pts[j], c);
        for (std::size_t k = 0; k < d; ++k) {
            Int lhs = Int(c) * Int(alpha[j][k]);
            Int rhs = 0;
            for (std::size_t i = 0; i <= n; ++i) rhs += Int(a[i]) * Int(alpha[vidx[i]][k]);
            if (lhs != rhs)
                throw DomainError(errc::not_integral_affine,
                                  "affine consistency fails at " + point_str(pts[j]));
        }
    }

    AffineFactorization out;
    out.shift.assign(d, 0);
    for (std::size_t k = 0; k < d; ++k) {
        Coord mn = alpha[vidx[0]][k];
        for (std::size_t i = 1; i <= n; ++i) mn = std::min(mn, alpha[vidx[i]][k]);
        out.shift[k] = mn;
    }
    for (std::size_t i = 0; i <= n; ++i) {
        Point b(d);
        for (std::size_t k = 0; k < d; ++k) {
            Coord diff = alpha[vidx[i]][k] - out.shift[k];
            if (diff % c != 0)
                throw DomainError(errc::not_integral_affine,
                                  "vertex image is not congruent to the shift");
            b[k] = diff / c;
        }
        out.vertex_images.push_back(std::move(b));
    }

    for (std::size_t j = 0; j < pts.size(); ++j) {
        auto a = barycentric_coordinates(pts[j], c);
        for (std::size_t k = 0; k < d; ++k) {
            Int want = Int(out.shift[k]);
            for (std::size_t i = 0; i <= n; ++i) want += Int(a[i]) * Int(out.vertex_images[i][k]);
            if (want != Int(alpha[j][k]))
                throw DomainError(errc::not_integral_affine,
                                  "factorization does not reproduce the map");
        }
    }
    return out;
}

VeroneseDecomposition decompose_veronese(const GradedHom& f) {
    std::size_t n = f.source.ambient_dim();
    long long c = 0;
    for (const auto& v : f.source.vertices()) {
        long long s = 0;
        for (auto x : v) s += x;
        c = std::max(c, s);
    }
    if (c < 1 || !(f.source == dilate(unit_simplex(n), c)))
        throw DomainError(errc::degenerate_input, "source must be a dilated unit simplex");

    const Field& field = f.matrix.field();
    const auto& pts = f.source.lattice_points();
    std::vector<LaurentPoly> phi;
    std::vector<Scalar> scales;
    std::vector<Exponent> shifts;
    std::vector<LaurentPoly> units;
    for (const auto& x : pts) {
        LaurentPoly col = stripped_column(f, x);
        if (col.is_zero())
            throw DomainError(errc::zero_generator_image,
                              "generator at " + point_str(x) + " maps to zero");
        auto parts = col.canonical_parts();
        phi.push_back(std::move(col));
        scales.push_back(parts.scale);
        shifts.push_back(parts.shift);
        units.push_back(parts.unit_part);
    }

    VeroneseDecomposition out;
    out.psi = laurent_gcd(units);

    for (std::size_t i = 0; i <= n; ++i) {
        Point vert(n, 0);
        if (i > 0) vert[i - 1] = c;
        std::size_t idx = f.source.point_index(vert);
        LaurentPoly q_hat = laurent_exact_div(units[idx], out.psi);
        LaurentPoly root = laurent_nth_root(q_hat, static_cast<unsigned>(c));
        auto sroot = scales[idx].nth_root(static_cast<unsigned>(c));
        if (!sroot)
            throw DomainError(errc::scalar_root_missing,
                              "the field has no " + std::to_string(c) + "-th root of " +
                                  scales[idx].to_string());
        Exponent sh = shifts[idx];
        for (auto& e : sh) {
            if (e % c != 0)
                throw DomainError(errc::no_exact_root,
                                  "vertex image monomial is not a " + std::to_string(c) +
                                      "-th power");
            e /= c;
        }
        out.eta.push_back(root.shifted(sh).scaled(*sroot));
    }

    for (std::size_t j = 0; j < pts.size(); ++j) {
        auto a = barycentric_coordinates(pts[j], c);
        LaurentPoly expected = out.psi;
        for (std::size_t i = 0; i <= n; ++i)
            expected *= out.eta[i].pow(static_cast<unsigned>(a[i]));
        LaurentPoly resid = laurent_exact_div(phi[j], expected);
        if (resid.term_count() != 1 ||
            resid.leading_exponent() != Exponent(f.target.ambient_dim(), 0))
            throw DomainError(errc::not_a_homomorphism,
                              "columns do not admit the simplicial factorization");
        out.scalars.push_back(resid.leading_coefficient());
    }
    (void)field;
    return out;
}

GradedHom recompose_veronese(const VeroneseDecomposition& dec, std::size_t n, long long c,
                             const LatticePolytope& target, const Field& f) {
    if (dec.eta.size() != n + 1)
        throw DomainError(errc::shape_mismatch, "need one root factor per simplex vertex");
    LatticePolytope source = dilate(unit_simplex(n), c);
    if (dec.scalars.size() != source.point_count())
        throw DomainError(errc::shape_mismatch, "need one scalar per source lattice point");
    std::vector<LaurentPoly> cols;
    const auto& pts = source.lattice_points();
    for (std::size_t j = 0; j < pts.size(); ++j) {
        auto a = barycentric_coordinates(pts[j], c);
        LaurentPoly col = dec.psi.scaled(dec.scalars[j]);
        for (std::size_t i = 0; i <= n; ++i) col *= dec.eta[i].pow(static_cast<unsigned>(a[i]));
        cols.push_back(std::move(col));
    }
    return hom_from_columns(source, target, cols, f);
}

} // namespace polylin

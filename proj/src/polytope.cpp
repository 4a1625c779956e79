#include "polylin/polytope.hpp"

#include "polylin/errors.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <set>

namespace polylin {

namespace {

const Field& rational_field() {
    static const Field f = Field::rationals();
    return f;
}

Coord checked_coord(const Int& v) {
    if (v > std::numeric_limits<Coord>::max() / 4 || v < std::numeric_limits<Coord>::min() / 4)
        throw DomainError(errc::degenerate_input, "coordinate overflow");
    return static_cast<Coord>(v);
}

Coord dot(const Point& a, const Point& b) {
    Int acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += Int(a[i]) * b[i];
    return checked_coord(acc);
}

// Scale a rational vector by the least positive rational making it integral
// and coprime. The scale is positive, so inequality directions survive.
Point primitive_positive(const std::vector<Scalar>& v) {
    Int den_lcm = 1;
    for (const auto& s : v) {
        Int d = denominator(s.rational_value());
        den_lcm = boost::multiprecision::lcm(den_lcm, d);
    }
    std::vector<Int> nums;
    Int g = 0;
    for (const auto& s : v) {
        Int n = numerator(s.rational_value()) * (den_lcm / denominator(s.rational_value()));
        g = boost::multiprecision::gcd(g, boost::multiprecision::abs(n));
        nums.push_back(std::move(n));
    }
    Point out(v.size(), 0);
    if (g == 0) return out;
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = checked_coord(nums[i] / g);
    return out;
}

Point canonical_primitive(const std::vector<Scalar>& v) {
    Point p = primitive_positive(v);
    for (Coord c : p) {
        if (c == 0) continue;
        if (c < 0)
            for (auto& x : p) x = -x;
        break;
    }
    return p;
}

ExactMatrix rows_to_matrix(const std::vector<Point>& rows, std::size_t d) {
    ExactMatrix m(rows.size(), d, rational_field());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < d; ++j) m.at(i, j) = rational_field().from_int(rows[i][j]);
    return m;
}

struct AffineData {
    int rank = -1;
    std::vector<std::pair<Point, Coord>> equations;
};

AffineData affine_data(const std::vector<Point>& pts, std::size_t d) {
    AffineData ad;
    if (pts.empty()) return ad;
    std::vector<Point> diffs;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        Point diff(d, 0);
        for (std::size_t j = 0; j < d; ++j) diff[j] = pts[i][j] - pts[0][j];
        diffs.push_back(std::move(diff));
    }
    ExactMatrix m = rows_to_matrix(diffs, d);
    ad.rank = static_cast<int>(m.rank());
    for (const auto& k : m.kernel_basis()) {
        Point n = canonical_primitive(k);
        ad.equations.emplace_back(n, dot(n, pts[0]));
    }
    std::sort(ad.equations.begin(), ad.equations.end());
    return ad;
}

// Supporting hyperplanes spanned by r affinely independent input points
// within the affine hull; works in any codimension because the hull
// equations are added as constraints on the normal.
std::vector<Facet> compute_facets(const std::vector<Point>& pts, std::size_t d,
                                  int r, const std::vector<std::pair<Point, Coord>>& equations) {
    std::vector<Facet> out;
    if (r <= 0) return out;
    std::set<std::pair<Point, Coord>> seen;
    const std::size_t n = pts.size();
    std::vector<std::size_t> comb(static_cast<std::size_t>(r));
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t k) {
        if (k == comb.size()) {
            std::vector<Point> rows;
            const Point& s0 = pts[comb[0]];
            for (std::size_t i = 1; i < comb.size(); ++i) {
                Point diff(d, 0);
                for (std::size_t j = 0; j < d; ++j) diff[j] = pts[comb[i]][j] - s0[j];
                rows.push_back(std::move(diff));
            }
            for (const auto& [en, eb] : equations) rows.push_back(en);
            ExactMatrix m = rows_to_matrix(rows, d);
            auto kern = m.kernel_basis();
            if (kern.size() != 1) return;
            Point normal = canonical_primitive(kern[0]);
            Coord offset = -dot(normal, s0);
            bool pos = false, neg = false;
            for (const auto& p : pts) {
                Coord v = dot(normal, p) + offset;
                if (v > 0) pos = true;
                if (v < 0) neg = true;
            }
            if (pos && neg) return;
            if (!pos && !neg) return;  // hyperplane contains everything
            if (neg) {
                for (auto& c : normal) c = -c;
                offset = -offset;
            }
            if (seen.insert({normal, offset}).second) {
                Facet f;
                f.normal = std::move(normal);
                f.offset = offset;
                out.push_back(std::move(f));
            }
            return;
        }
        for (std::size_t i = start; i + (comb.size() - k) <= n; ++i) {
            comb[k] = i;
            rec(i + 1, k + 1);
        }
    };
    rec(0, 0);
    std::sort(out.begin(), out.end(), [](const Facet& a, const Facet& b) {
        return std::tie(a.normal, a.offset) < std::tie(b.normal, b.offset);
    });
    return out;
}

std::vector<Point> scan_lattice(const std::vector<Point>& pts, std::size_t d,
                                const std::vector<std::pair<Point, Coord>>& equations,
                                const std::vector<Facet>& facets) {
    std::vector<Point> out;
    if (pts.empty()) return out;
    Point lo = pts[0], hi = pts[0];
    for (const auto& p : pts)
        for (std::size_t j = 0; j < d; ++j) {
            lo[j] = std::min(lo[j], p[j]);
            hi[j] = std::max(hi[j], p[j]);
        }
    long long cells = 1;
    for (std::size_t j = 0; j < d; ++j) {
        cells *= (hi[j] - lo[j] + 1);
        if (cells > 20'000'000LL)
            throw DomainError(errc::degenerate_input, "lattice scan box too large");
    }
    Point cur = lo;
    auto accept = [&](const Point& p) {
        for (const auto& [n, b] : equations)
            if (dot(n, p) != b) return false;
        for (const auto& f : facets)
            if (dot(f.normal, p) + f.offset < 0) return false;
        return true;
    };
    if (d == 0) {
        out.push_back({});
        return out;
    }
    while (true) {
        if (accept(cur)) out.push_back(cur);
        std::size_t j = 0;
        while (j < d && cur[j] == hi[j]) {
            cur[j] = lo[j];
            ++j;
        }
        if (j == d) break;
        ++cur[j];
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

AffineLatticeMap::AffineLatticeMap(std::vector<Point> matrix_rows, Point translation)
    : rows_(std::move(matrix_rows)), translation_(std::move(translation)) {
    if (rows_.size() != translation_.size())
        throw DomainError(errc::shape_mismatch, "affine map rows vs translation length");
    cols_ = rows_.empty() ? 0 : rows_[0].size();
    for (const auto& r : rows_)
        if (r.size() != cols_)
            throw DomainError(errc::shape_mismatch, "affine map ragged rows");
}

AffineLatticeMap AffineLatticeMap::identity(std::size_t d) {
    std::vector<Point> rows(d, Point(d, 0));
    for (std::size_t i = 0; i < d; ++i) rows[i][i] = 1;
    return AffineLatticeMap(std::move(rows), Point(d, 0));
}

Point AffineLatticeMap::apply(const Point& x) const {
    if (x.size() != cols_)
        throw DomainError(errc::dimension_mismatch, "affine map applied to wrong dimension");
    Point y = translation_;
    for (std::size_t i = 0; i < rows_.size(); ++i) y[i] += dot(rows_[i], x);
    return y;
}

AffineLatticeMap AffineLatticeMap::compose(const AffineLatticeMap& inner) const {
    if (cols_ != inner.rows_.size())
        throw DomainError(errc::dimension_mismatch, "affine map composition mismatch");
    std::vector<Point> rows(rows_.size(), Point(inner.cols_, 0));
    for (std::size_t i = 0; i < rows_.size(); ++i)
        for (std::size_t j = 0; j < inner.cols_; ++j) {
            Int acc = 0;
            for (std::size_t k = 0; k < cols_; ++k) acc += Int(rows_[i][k]) * inner.rows_[k][j];
            rows[i][j] = checked_coord(acc);
        }
    Point t = translation_;
    for (std::size_t i = 0; i < rows_.size(); ++i) t[i] += dot(rows_[i], inner.translation_);
    return AffineLatticeMap(std::move(rows), std::move(t));
}

namespace {
Int det_int(const std::vector<Point>& rows, std::vector<std::size_t> cols) {
    if (cols.empty()) return 1;
    std::size_t row = rows.size() - cols.size();
    Int acc = 0;
    int sign = 1;
    for (std::size_t i = 0; i < cols.size(); ++i) {
        std::vector<std::size_t> rest;
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (j != i) rest.push_back(cols[j]);
        Int minor = det_int(rows, rest);
        acc += sign * Int(rows[row][cols[i]]) * minor;
        sign = -sign;
    }
    return acc;
}
} // namespace

bool AffineLatticeMap::is_unimodular() const {
    if (rows_.size() != cols_) return false;
    std::vector<std::size_t> cols(cols_);
    std::iota(cols.begin(), cols.end(), 0);
    Int d = det_int(rows_, cols);
    return d == 1 || d == -1;
}

AffineLatticeMap AffineLatticeMap::inverse() const {
    if (!is_unimodular())
        throw DomainError(errc::degenerate_input, "affine map is not unimodular");
    const std::size_t d = cols_;
    ExactMatrix m = rows_to_matrix(rows_, d);
    std::vector<Point> inv_rows(d, Point(d, 0));
    for (std::size_t j = 0; j < d; ++j) {
        std::vector<Scalar> e(d, rational_field().zero());
        e[j] = rational_field().one();
        auto col = m.solve(e);
        if (!col) throw DomainError(errc::degenerate_input, "affine map is singular");
        for (std::size_t i = 0; i < d; ++i) {
            const Rat& q = (*col)[i].rational_value();
            if (denominator(q) != 1)
                throw DomainError(errc::degenerate_input, "inverse is not integral");
            inv_rows[i][j] = checked_coord(numerator(q));
        }
    }
    AffineLatticeMap inv(inv_rows, Point(d, 0));
    Point t = inv.apply(translation_);
    for (auto& c : t) c = -c;
    return AffineLatticeMap(std::move(inv_rows), std::move(t));
}

LatticePolytope LatticePolytope::from_points(const std::vector<Point>& points,
                                             std::size_t ambient_dim, std::string name) {
    for (const auto& p : points)
        if (p.size() != ambient_dim)
            throw DomainError(errc::dimension_mismatch, "point dimension mismatch");
    LatticePolytope poly;
    poly.ambient_dim_ = ambient_dim;
    poly.name_ = std::move(name);
    std::vector<Point> pts = points;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.empty()) return poly;

    AffineData ad = affine_data(pts, ambient_dim);
    poly.dim_ = ad.rank;
    poly.hull_equations_ = ad.equations;
    poly.facets_ = compute_facets(pts, ambient_dim, ad.rank, ad.equations);
    poly.lattice_points_ = scan_lattice(pts, ambient_dim, ad.equations, poly.facets_);

    for (auto& f : poly.facets_) {
        for (const auto& p : poly.lattice_points_)
            if (dot(f.normal, p) + f.offset == 0) f.points.push_back(p);
    }

    for (const auto& p : pts) {
        std::vector<Point> rows;
        for (const auto& f : poly.facets_)
            if (dot(f.normal, p) + f.offset == 0) rows.push_back(f.normal);
        for (const auto& [en, eb] : ad.equations) rows.push_back(en);
        if (rows_to_matrix(rows, ambient_dim).rank() == ambient_dim)
            poly.vertices_.push_back(p);
    }
    if (poly.vertices_.empty()) poly.vertices_ = {pts[0]};  // single point
    std::sort(poly.vertices_.begin(), poly.vertices_.end());
    return poly;
}

std::size_t LatticePolytope::point_index(const Point& p) const {
    auto it = std::lower_bound(lattice_points_.begin(), lattice_points_.end(), p);
    if (it == lattice_points_.end() || *it != p)
        throw DomainError(errc::degenerate_input, "point is not a lattice point of the polytope");
    return static_cast<std::size_t>(it - lattice_points_.begin());
}

bool LatticePolytope::has_lattice_point(const Point& p) const {
    return std::binary_search(lattice_points_.begin(), lattice_points_.end(), p);
}

bool LatticePolytope::contains(const Point& p) const {
    if (is_empty() || p.size() != ambient_dim_) return false;
    for (const auto& [n, b] : hull_equations_)
        if (dot(n, p) != b) return false;
    for (const auto& f : facets_)
        if (dot(f.normal, p) + f.offset < 0) return false;
    if (dim_ == 0) return p == vertices_[0];
    return true;
}

LatticePolytope empty_polytope() { return LatticePolytope(); }

LatticePolytope unit_simplex(std::size_t n) {
    std::vector<Point> pts;
    pts.push_back(Point(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        Point e(n, 0);
        e[i] = 1;
        pts.push_back(std::move(e));
    }
    return LatticePolytope::from_points(pts, n, "simplex" + std::to_string(n));
}

LatticePolytope unit_square() {
    return LatticePolytope::from_points({{0, 0}, {0, 1}, {1, 0}, {1, 1}}, 2, "square");
}

LatticePolytope dilate(const LatticePolytope& p, long long factor) {
    if (factor < 1)
        throw DomainError(errc::degenerate_input, "dilation factor must be positive");
    std::vector<Point> pts;
    for (const auto& v : p.vertices()) {
        Point w = v;
        for (auto& c : w) c *= factor;
        pts.push_back(std::move(w));
    }
    return LatticePolytope::from_points(pts, p.ambient_dim(), p.name());
}

LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q) {
    if (p.ambient_dim() != q.ambient_dim())
        throw DomainError(errc::dimension_mismatch, "minkowski sum ambient dimensions differ");
    if (p.is_empty() || q.is_empty()) return LatticePolytope();
    std::vector<Point> pts;
    for (const auto& a : p.vertices())
        for (const auto& b : q.vertices()) {
            Point s = a;
            for (std::size_t i = 0; i < s.size(); ++i) s[i] += b[i];
            pts.push_back(std::move(s));
        }
    return LatticePolytope::from_points(pts, p.ambient_dim());
}

LatticePolytope newton_polytope(const LaurentPoly& f) {
    if (f.is_zero())
        throw DomainError(errc::zero_polynomial, "newton polytope of zero");
    std::vector<Point> pts;
    for (const auto& e : f.support()) pts.push_back(Point(e.begin(), e.end()));
    return LatticePolytope::from_points(pts, f.dim());
}

bool contains_polytope(const LatticePolytope& p, const LatticePolytope& q) {
    if (q.is_empty()) return true;
    for (const auto& v : q.vertices())
        if (!p.contains(v)) return false;
    return true;
}

NormalizationResult normalize_lattice(const LatticePolytope& p) {
    if (p.is_empty())
        throw DomainError(errc::degenerate_input, "cannot normalize the empty polytope");
    const std::size_t d = p.ambient_dim();
    const Point& x0 = p.lattice_points().front();
    std::vector<std::vector<Int>> rows;
    for (const auto& q : p.lattice_points()) {
        std::vector<Int> diff(d);
        bool nonzero = false;
        for (std::size_t j = 0; j < d; ++j) {
            diff[j] = Int(q[j]) - x0[j];
            if (diff[j] != 0) nonzero = true;
        }
        if (nonzero) rows.push_back(std::move(diff));
    }
    // Hermite-style row reduction gives a basis of the difference lattice.
    std::size_t rank = 0;
    for (std::size_t col = 0; col < d && rank < rows.size(); ++col) {
        while (true) {
            std::size_t best = rows.size();
            for (std::size_t i = rank; i < rows.size(); ++i) {
                if (rows[i][col] == 0) continue;
                if (best == rows.size() ||
                    boost::multiprecision::abs(rows[i][col]) < boost::multiprecision::abs(rows[best][col]))
                    best = i;
            }
            if (best == rows.size()) break;
            std::swap(rows[rank], rows[best]);
            bool clean = true;
            for (std::size_t i = rank + 1; i < rows.size(); ++i) {
                if (rows[i][col] == 0) continue;
                Int q = rows[i][col] / rows[rank][col];
                for (std::size_t j = 0; j < d; ++j) rows[i][j] -= q * rows[rank][j];
                if (rows[i][col] != 0) clean = false;
            }
            if (clean) {
                ++rank;
                break;
            }
        }
    }
    rows.resize(rank);
    const std::size_t r = rank;

    std::vector<Point> basis_cols_rows(d, Point(r, 0));  // matrix B with basis vectors as columns
    for (std::size_t k = 0; k < r; ++k)
        for (std::size_t i = 0; i < d; ++i) basis_cols_rows[i][k] = checked_coord(rows[k][i]);
    ExactMatrix B = rows_to_matrix(basis_cols_rows, r);

    std::vector<Point> mapped_vertices;
    for (const auto& v : p.vertices()) {
        std::vector<Scalar> rhs(d, rational_field().zero());
        for (std::size_t i = 0; i < d; ++i) rhs[i] = rational_field().from_int(v[i] - x0[i]);
        auto y = B.solve(rhs);
        if (!y) throw DomainError(errc::degenerate_input, "normalization solve failed");
        Point yp(r, 0);
        for (std::size_t i = 0; i < r; ++i) {
            const Rat& q = (*y)[i].rational_value();
            if (denominator(q) != 1)
                throw DomainError(errc::degenerate_input, "normalization produced non-integral coordinates");
            yp[i] = checked_coord(numerator(q));
        }
        mapped_vertices.push_back(std::move(yp));
    }
    NormalizationResult res;
    res.image = LatticePolytope::from_points(mapped_vertices, r, p.name());
    res.to_original = AffineLatticeMap(basis_cols_rows, x0);
    return res;
}

bool is_normalized(const LatticePolytope& p) {
    if (p.is_empty()) return false;
    if (p.dim() != static_cast<int>(p.ambient_dim())) return false;
    NormalizationResult nr = normalize_lattice(p);
    std::vector<Point> rows = nr.to_original.matrix_rows();
    std::vector<std::size_t> cols(p.ambient_dim());
    std::iota(cols.begin(), cols.end(), 0);
    Int det = det_int(rows, cols);
    return det == 1 || det == -1;
}

std::vector<PyramidSplit> is_pyramid(const LatticePolytope& p) {
    std::vector<PyramidSplit> out;
    if (p.is_empty()) return out;
    for (const auto& v : p.vertices()) {
        std::vector<Point> rest;
        for (const auto& q : p.lattice_points())
            if (q != v) rest.push_back(q);
        if (rest.empty()) {
            out.push_back({v, LatticePolytope()});
            continue;
        }
        LatticePolytope base = LatticePolytope::from_points(rest, p.ambient_dim());
        bool off_hull = false;
        for (const auto& [n, b] : base.hull_equations())
            if (dot(n, v) != b) { off_hull = true; break; }
        if (!off_hull) continue;
        if (base.lattice_points() != rest) continue;
        out.push_back({v, std::move(base)});
    }
    return out;
}

Face face_from_facets(const LatticePolytope& p, std::vector<std::size_t> facet_ids) {
    std::sort(facet_ids.begin(), facet_ids.end());
    facet_ids.erase(std::unique(facet_ids.begin(), facet_ids.end()), facet_ids.end());
    for (auto id : facet_ids)
        if (id >= p.facets().size())
            throw DomainError(errc::not_a_face, "facet index out of range");
    Face face;
    face.facet_ids = facet_ids;
    std::vector<Point> pts;
    for (std::size_t i = 0; i < p.lattice_points().size(); ++i) {
        const Point& q = p.lattice_points()[i];
        bool tight = true;
        for (auto id : facet_ids) {
            const Facet& f = p.facets()[id];
            if (dot(f.normal, q) + f.offset != 0) { tight = false; break; }
        }
        if (tight) {
            face.point_ids.push_back(i);
            pts.push_back(q);
        }
    }
    if (pts.empty())
        throw DomainError(errc::not_a_face, "selected facets have empty intersection");
    face.polytope = LatticePolytope::from_points(pts, p.ambient_dim());
    return face;
}

std::vector<Face> all_faces(const LatticePolytope& p) {
    const std::size_t f = p.facets().size();
    if (f > 20) throw DomainError(errc::degenerate_input, "too many facets for face enumeration");
    std::map<std::vector<std::size_t>, Face> seen;
    for (std::size_t mask = 0; mask < (1u << f); ++mask) {
        std::vector<std::size_t> ids;
        for (std::size_t i = 0; i < f; ++i)
            if (mask & (1u << i)) ids.push_back(i);
        try {
            Face face = face_from_facets(p, ids);
            seen.emplace(face.point_ids, std::move(face));
        } catch (const DomainError&) {
            // empty intersection: not a face
        }
    }
    std::vector<Face> out;
    for (auto& [ids, face] : seen) out.push_back(std::move(face));
    std::sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
        if (a.polytope.dim() != b.polytope.dim()) return a.polytope.dim() > b.polytope.dim();
        return a.point_ids < b.point_ids;
    });
    return out;
}

} // namespace polylin

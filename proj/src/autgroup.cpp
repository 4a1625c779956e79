#include "polylin/autgroup.hpp"

#include "polylin/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace polylin {

namespace {

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

bool on_facet(const Facet& f, const Point& x) {
    return dot(f.normal, x) + Int(f.offset) == 0;
}

} // namespace

std::vector<ColumnStructure> column_vectors(const LatticePolytope& p) {
    const auto& pts = p.lattice_points();
    const auto& facets = p.facets();
    std::set<Point> candidates;
    for (const auto& x : pts)
        for (const auto& y : pts)
            if (x != y) {
                Point v(x.size());
                for (std::size_t i = 0; i < x.size(); ++i) v[i] = x[i] - y[i];
                candidates.insert(v);
            }
    std::vector<ColumnStructure> out;
    for (const auto& v : candidates) {
        for (std::size_t fi = 0; fi < facets.size(); ++fi) {
            bool ok = true;
            for (const auto& x : pts) {
                if (on_facet(facets[fi], x)) continue;
                if (!p.has_lattice_point(add(x, v))) {
                    ok = false;
                    break;
                }
            }
            if (ok) out.push_back({v, fi});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

long long height(const LatticePolytope& p, const ColumnStructure& col, const Point& x) {
    if (!p.has_lattice_point(x))
        throw DomainError(errc::degenerate_input, "height of a point outside the polytope");
    long long m = 0;
    Point cur = x;
    while (true) {
        Point next = add(cur, col.vector);
        if (!p.has_lattice_point(next)) break;
        cur = next;
        ++m;
    }
    return m;
}

GradedHom elementary(const LatticePolytope& p, const ColumnStructure& col, const Scalar& lambda) {
    auto cols = column_vectors(p);
    if (std::find(cols.begin(), cols.end(), col) == cols.end())
        throw DomainError(errc::not_a_column, "vector is not a column structure of the polytope");
    const Field& f = lambda.field();
    const auto& pts = p.lattice_points();
    std::size_t m = pts.size();
    ExactMatrix mat(m, m, f);
    for (std::size_t jx = 0; jx < m; ++jx) {
        long long h = height(p, col, pts[jx]);
        Point cur = pts[jx];
        for (long long j = 0; j <= h; ++j) {
            std::size_t row = p.point_index(cur);
            mat.at(row, jx) = f.from_integer(binomial(h, j)) * lambda.pow(j);
            cur = add(cur, col.vector);
        }
    }
    GradedHom g{p, p, std::move(mat), true};
    return g;
}

GradedHom toric(const LatticePolytope& p, const std::vector<Scalar>& xi) {
    if (!is_normalized(p))
        throw DomainError(errc::not_normalized, "toric automorphisms need a normalized polytope");
    std::size_t n = static_cast<std::size_t>(p.dim());
    if (xi.size() != n + 1)
        throw DomainError(errc::dimension_mismatch, "need one scalar per coordinate plus one for the degree marker");
    const Field& f = xi.front().field();
    for (const auto& s : xi)
        if (s.is_zero())
            throw DomainError(errc::degenerate_input, "toric scalars must be nonzero");
    const auto& pts = p.lattice_points();
    std::size_t m = pts.size();
    ExactMatrix mat(m, m, f);
    for (std::size_t jx = 0; jx < m; ++jx) {
        Scalar val = xi[n];
        for (std::size_t i = 0; i < n; ++i) val = val * xi[i].pow(pts[jx][i]);
        mat.at(jx, jx) = val;
    }
    GradedHom g{p, p, std::move(mat), true};
    return g;
}

std::vector<Symmetry> symmetries(const LatticePolytope& p, const Field& f) {
    if (p.dim() < 0 || static_cast<std::size_t>(p.dim()) != p.ambient_dim())
        throw DomainError(errc::degenerate_input, "symmetries need a full-dimensional polytope");
    const auto& verts = p.vertices();
    const auto& pts = p.lattice_points();
    std::size_t k = verts.size();
    std::size_t d = p.ambient_dim();
    Field rat = Field::rationals();

    // Difference matrix rows v_i - v_0 shared by every permutation.
    ExactMatrix diffs(k - 1, d, rat);
    for (std::size_t i = 1; i < k; ++i)
        for (std::size_t c = 0; c < d; ++c)
            diffs.at(i - 1, c) = rat.from_integer(Int(verts[i][c]) - Int(verts[0][c]));

    std::vector<Symmetry> out;
    std::vector<std::size_t> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        // Solve row by row for the matrix sending v_i - v_0 to images' diffs.
        std::vector<Point> rows(d, Point(d, 0));
        bool ok = true;
        for (std::size_t r = 0; r < d && ok; ++r) {
            std::vector<Scalar> rhs;
            rhs.reserve(k - 1);
            for (std::size_t i = 1; i < k; ++i)
                rhs.push_back(rat.from_integer(Int(verts[perm[i]][r]) - Int(verts[perm[0]][r])));
            auto sol = diffs.solve(rhs);
            if (!sol) {
                ok = false;
                break;
            }
            for (std::size_t c = 0; c < d; ++c) {
                Rat val = (*sol)[c].rational_value();
                if (boost::multiprecision::denominator(val) != 1) {
                    ok = false;
                    break;
                }
                rows[r][c] = static_cast<Coord>(boost::multiprecision::numerator(val).convert_to<long long>());
            }
        }
        if (!ok) continue;
        Point trans(d, 0);
        for (std::size_t r = 0; r < d; ++r) {
            Int v = Int(verts[perm[0]][r]) - dot(rows[r], verts[0]);
            trans[r] = static_cast<Coord>(v.convert_to<long long>());
        }
        AffineLatticeMap map(rows, trans);
        if (!map.is_unimodular()) continue;
        // The map must permute the lattice points; record the permutation.
        ExactMatrix mat(pts.size(), pts.size(), f);
        bool perm_ok = true;
        for (std::size_t jx = 0; jx < pts.size(); ++jx) {
            Point img = map.apply(pts[jx]);
            if (!p.has_lattice_point(img)) {
                perm_ok = false;
                break;
            }
            mat.at(p.point_index(img), jx) = f.one();
        }
        if (!perm_ok) continue;
        GradedHom g{p, p, std::move(mat), true};
        out.push_back({map, std::move(g)});
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::size_t predicted_gamma_dim(const LatticePolytope& p) {
    return column_vectors(p).size() + static_cast<std::size_t>(p.dim()) + 1;
}

GradedHom compose_normal_form(const LatticePolytope& p, const AffineLatticeMap& sigma,
                              const std::vector<Scalar>& xi,
                              const std::vector<NormalFormBlock>& blocks, const Field& f) {
    const auto& facets = p.facets();
    auto cols = column_vectors(p);

    std::set<std::size_t> seen_facets;
    std::size_t prev_count = 0;
    for (const auto& blk : blocks) {
        if (blk.facet >= facets.size())
            throw DomainError(errc::degenerate_input, "facet index out of range");
        if (!seen_facets.insert(blk.facet).second)
            throw DomainError(errc::repeated_facet, "normal form repeats a base facet");
        std::size_t cnt = facets[blk.facet].points.size();
        if (cnt < prev_count)
            throw DomainError(errc::block_order_violation,
                              "blocks must come in nondecreasing facet size order");
        prev_count = cnt;
        for (const auto& [col, lam] : blk.lambdas) {
            (void)lam;
            if (col.base_facet != blk.facet)
                throw DomainError(errc::not_a_column, "column is not based at the block's facet");
            if (std::find(cols.begin(), cols.end(), col) == cols.end())
                throw DomainError(errc::not_a_column, "vector is not a column structure of the polytope");
        }
    }

    // Rightmost factor: the lattice symmetry as a permutation of generators.
    const auto& pts = p.lattice_points();
    ExactMatrix smat(pts.size(), pts.size(), f);
    for (std::size_t jx = 0; jx < pts.size(); ++jx) {
        Point img = sigma.apply(pts[jx]);
        if (!p.has_lattice_point(img))
            throw DomainError(errc::degenerate_input, "map does not permute the lattice points");
        smat.at(p.point_index(img), jx) = f.one();
    }
    GradedHom result{p, p, std::move(smat), true};
    result = compose(toric(p, xi), result);
    for (auto it = blocks.rbegin(); it != blocks.rend(); ++it)
        for (auto lit = it->lambdas.rbegin(); lit != it->lambdas.rend(); ++lit)
            result = compose(elementary(p, lit->first, lit->second), result);
    return result;
}

} // namespace polylin

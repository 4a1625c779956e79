#pragma once

#include "polylin/laurent.hpp"
#include "polylin/matrix.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace polylin {

using Coord = std::int64_t;
using Point = std::vector<Coord>;

// Inward-oriented facet inequality: normal . x + offset >= 0, with equality
// exactly on the facet. The normal is a primitive integer vector.
struct Facet {
    Point normal;
    Coord offset = 0;
    std::vector<Point> points;  // lattice points of the polytope on this facet

    bool operator==(const Facet& o) const { return normal == o.normal && offset == o.offset; }
};

// Affine map x -> matrix * x + translation with integer entries.
class AffineLatticeMap {
public:
    AffineLatticeMap() = default;
    AffineLatticeMap(std::vector<Point> matrix_rows, Point translation);
    static AffineLatticeMap identity(std::size_t d);

    std::size_t target_dim() const { return rows_.size(); }
    std::size_t source_dim() const { return cols_; }
    const std::vector<Point>& matrix_rows() const { return rows_; }
    const Point& translation() const { return translation_; }

    Point apply(const Point& x) const;
    AffineLatticeMap compose(const AffineLatticeMap& inner) const;  // this after inner
    bool is_unimodular() const;
    AffineLatticeMap inverse() const;  // throws unless unimodular

    bool operator==(const AffineLatticeMap& o) const = default;

private:
    std::vector<Point> rows_;  // target_dim rows of length source_dim
    Point translation_;
    std::size_t cols_ = 0;
};

// A lattice polytope given by the convex hull of finitely many points of
// Z^d. Vertices, facets, affine-hull equations and the full lattice-point
// list are derived on construction and kept in canonical (lex-sorted) order.
class LatticePolytope {
public:
    LatticePolytope() = default;  // empty polytope in ambient dimension 0

    static LatticePolytope from_points(const std::vector<Point>& points,
                                       std::size_t ambient_dim,
                                       std::string name = "");

    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }

    std::size_t ambient_dim() const { return ambient_dim_; }
    int dim() const { return dim_; }  // -1 for the empty polytope
    bool is_empty() const { return vertices_.empty(); }

    const std::vector<Point>& vertices() const { return vertices_; }
    const std::vector<Point>& lattice_points() const { return lattice_points_; }
    const std::vector<Facet>& facets() const { return facets_; }
    // Affine-hull equations a . x = b, present when dim < ambient_dim.
    const std::vector<std::pair<Point, Coord>>& hull_equations() const { return hull_equations_; }

    std::size_t point_count() const { return lattice_points_.size(); }
    // Index of a lattice point in the canonical order; throws if absent.
    std::size_t point_index(const Point& p) const;
    bool has_lattice_point(const Point& p) const;
    bool contains(const Point& p) const;

    bool operator==(const LatticePolytope& o) const {
        return ambient_dim_ == o.ambient_dim_ && vertices_ == o.vertices_;
    }
    bool operator!=(const LatticePolytope& o) const { return !(*this == o); }

private:
    std::string name_;
    std::size_t ambient_dim_ = 0;
    int dim_ = -1;
    std::vector<Point> vertices_;
    std::vector<Point> lattice_points_;
    std::vector<Facet> facets_;
    std::vector<std::pair<Point, Coord>> hull_equations_;
};

LatticePolytope empty_polytope();
// Standard unit simplex conv{0, e_1, ..., e_n} in Z^n.
LatticePolytope unit_simplex(std::size_t n);
LatticePolytope unit_square();

LatticePolytope dilate(const LatticePolytope& p, long long factor);
LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q);
LatticePolytope newton_polytope(const LaurentPoly& f);
// All vertices of q lie in p (and q is nonempty unless p is).
bool contains_polytope(const LatticePolytope& p, const LatticePolytope& q);

struct NormalizationResult {
    LatticePolytope image;          // spans Z^{dim} affinely
    AffineLatticeMap to_original;   // maps image coordinates back to the ambient
};
// Re-coordinatizes so the lattice generated by differences of lattice points
// becomes Z^{dim P}. The witnessing map transports results back.
NormalizationResult normalize_lattice(const LatticePolytope& p);
bool is_normalized(const LatticePolytope& p);

struct PyramidSplit {
    Point apex;
    LatticePolytope base;
};
// All ways to split P as a pyramid: apex vertex v with base conv(L_P \ {v}),
// valid when v is off the base's affine hull and no lattice points are lost.
std::vector<PyramidSplit> is_pyramid(const LatticePolytope& p);

// A face of a polytope: the locus where a set of facet inequalities is tight.
struct Face {
    LatticePolytope polytope;
    std::vector<std::size_t> facet_ids;       // defining facets, sorted
    std::vector<std::size_t> point_ids;       // lattice-point indices into the parent
};
Face face_from_facets(const LatticePolytope& p, std::vector<std::size_t> facet_ids);
// Every distinct nonempty face, the whole polytope first, then by decreasing
// dimension; deduplicated by lattice-point set.
std::vector<Face> all_faces(const LatticePolytope& p);

} // namespace polylin

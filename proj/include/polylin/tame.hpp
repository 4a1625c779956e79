#pragma once

#include "polylin/hom.hpp"
#include "polylin/laurent.hpp"
#include "polylin/polytope.hpp"

#include <optional>
#include <vector>

namespace polylin {

// Surjection killing every generator outside the face cut out by the given
// facets; the kept generators map to themselves.
GradedHom face_retraction(const LatticePolytope& p, const std::vector<std::size_t>& facet_ids,
                          const Field& f);

// Monomial inclusion of the face algebra into the ambient one.
GradedHom face_inclusion(const LatticePolytope& p, const std::vector<std::size_t>& facet_ids,
                         const Field& f);

// A lattice fibration: the fiber directions cover every lattice point from
// the base slice, and the ambient lattice splits as fiber plus slice lattice.
struct Fibration {
    LatticePolytope polytope;
    std::vector<Point> w_basis;  // fiber directions; codimension = size
    Point h_point;               // one lattice point on the base slice
    std::vector<Point> h_basis;  // directions spanning the base slice
};

// Checks the covering and direct-sum conditions.
bool validate_fibration(const Fibration& fib);

// All codimension-1 fibrations whose base slice is spanned by one lattice
// point per fiber class, over every primitive difference direction.
std::vector<Fibration> detect_segmental_fibrations(const LatticePolytope& p);

// The base slice as a lattice polytope.
LatticePolytope fibration_base(const Fibration& fib);

// Contracts each fiber to its base point; composing with the base inclusion
// is idempotent.
GradedHom fibration_retraction(const Fibration& fib, const Field& f);
GradedHom fibration_inclusion(const Fibration& fib, const Field& f);

// Degree-c Veronese transform: the induced map on the dilated polytopes,
// computed per generator x by dividing the image of a degree-(c+e) witness
// monomial x+z by the image of z. Every generator image must be nonzero;
// witness search stops at the bound (default c times the source point
// count).
GradedHom homothetic_blowup(const GradedHom& f, long long c, long long witness_bound = 0);

// Degree-1 product of two parallel maps: x maps to f(x)g(x) with the degree
// marker reduced by one. Requires Newton polytope sums to stay inside the
// target.
GradedHom minkowski_star(const GradedHom& f, const GradedHom& g);

// Extends a map defined on the base of a pyramid by sending the apex to an
// arbitrary degree-1 element q of the target algebra.
GradedHom free_extension(const GradedHom& f0, const LatticePolytope& p, const Point& apex,
                         const LatticePolytope& target, const LaurentPoly& q);

// Restricts columns to a subpolytope of the source and re-expands them in a
// new target; optional unimodular transports relabel source and target
// points on the way.
GradedHom polytope_change(const GradedHom& f, const LatticePolytope& new_source,
                          const LatticePolytope& new_target,
                          const std::optional<AffineLatticeMap>& source_map = {},
                          const std::optional<AffineLatticeMap>& target_map = {});

// Barycentric coordinates of a lattice point of the c-fold unit simplex:
// (c - sum, x_1, ..., x_n), indexed by the vertices origin, e_1, ..., e_n.
std::vector<long long> barycentric_coordinates(const Point& x, long long c);

// Splitting of an integral affine map on the c-fold unit simplex as a
// constant shift plus c times an integral affine map on the unit simplex.
struct AffineFactorization {
    Point shift;                       // componentwise vertex minimum
    std::vector<Point> vertex_images;  // images of origin, e_1, ..., e_n
};

// alpha lists the image of every lattice point of the c-fold unit simplex in
// ambient order; images live in Z^d with nonnegative entries.
AffineFactorization factor_affine(const std::vector<Point>& alpha, long long c, std::size_t n,
                                  std::size_t d);

// Simplicial factorization of a map out of the c-fold unit simplex algebra:
// every column factors as t_x * psi * eta_0^{a_0} ... eta_n^{a_n} with a the
// barycentric coordinates; psi is the monic common factor, eta_i the monic
// c-th roots at the vertices, t_x the leftover scalars (1 at the vertices).
struct VeroneseDecomposition {
    LaurentPoly psi;
    std::vector<LaurentPoly> eta;  // n+1 entries, vertex order origin, e_1..e_n
    std::vector<Scalar> scalars;   // t_x per source lattice point
};

VeroneseDecomposition decompose_veronese(const GradedHom& f);

// Rebuilds the map from a decomposition; inverse of decompose_veronese.
GradedHom recompose_veronese(const VeroneseDecomposition& dec, std::size_t n, long long c,
                             const LatticePolytope& target, const Field& f);

} // namespace polylin

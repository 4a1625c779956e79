#pragma once

#include "polylin/autgroup.hpp"
#include "polylin/hom.hpp"
#include "polylin/laurent.hpp"
#include "polylin/polytope.hpp"
#include "polylin/semigroup.hpp"
#include "polylin/tame.hpp"

#include <json.hpp>

#include <cstddef>
#include <vector>

namespace polylin {

using Json = nlohmann::ordered_json;

// Points and point lists.
Json point_to_json(const Point& p);
Point point_from_json(const Json& j);
Json points_to_json(const std::vector<Point>& pts);
std::vector<Point> points_from_json(const Json& j);

// Polytopes: {"name", "ambient_dim", "vertices"}; with derived data the
// output also carries "lattice_points" and "facets".
Json polytope_to_json(const LatticePolytope& p, bool with_derived = false);
LatticePolytope polytope_from_json(const Json& j);

// Laurent polynomials: list of {"exponents": [int], "coeff": str} in
// canonical term order. The dimension is supplied by the caller because the
// zero polynomial has no terms to carry it.
Json laurent_to_json(const LaurentPoly& f);
LaurentPoly laurent_from_json(const Json& j, std::size_t dim, const Field& f);

// Graded homomorphisms: {"source", "target", "entries"} with scalar entries
// as strings, row-major.
Json hom_to_json(const GradedHom& h);
GradedHom hom_from_json(const Json& j, const Field& f);

Json relation_to_json(const BinomialRelation& r);

Json column_to_json(const ColumnStructure& c);
ColumnStructure column_from_json(const Json& j);

Json affine_map_to_json(const AffineLatticeMap& m);
AffineLatticeMap affine_map_from_json(const Json& j);

Json equations_to_json(const HomEquations& eq);

// Fibrations: {"w" or "W_basis", "H_point", "H_basis"}; input accepts either
// spelling for the fiber directions, output uses "w" in codimension one.
Json fibration_to_json(const Fibration& fib);
Fibration fibration_from_json(const Json& j, const LatticePolytope& p);

} // namespace polylin

#pragma once

#include "polylin/hom.hpp"
#include "polylin/polytope.hpp"

#include <tuple>
#include <vector>

namespace polylin {

// A column structure: a nonzero vector v together with a base facet F such
// that adding v moves every lattice point off F to another lattice point.
struct ColumnStructure {
    Point vector;
    std::size_t base_facet = 0;  // index into facets()

    bool operator==(const ColumnStructure&) const = default;
    bool operator<(const ColumnStructure& o) const {
        return std::tie(vector, base_facet) < std::tie(o.vector, o.base_facet);
    }
};

// Complete list of column structures; candidates are differences of lattice
// points, so the scan is exhaustive.
std::vector<ColumnStructure> column_vectors(const LatticePolytope& p);

// Largest m with x + m*v still a lattice point of p.
long long height(const LatticePolytope& p, const ColumnStructure& col, const Point& x);

// The one-parameter automorphism attached to a column structure: the
// generator at x maps to the binomial expansion over x, x+v, ..., with
// coefficients C(ht(x), j) lambda^j.
GradedHom elementary(const LatticePolytope& p, const ColumnStructure& col, const Scalar& lambda);

// Diagonal automorphism scaling the generator at x by
// xi_1^{x_1} ... xi_n^{x_n} * xi_{n+1}; requires a normalized polytope and
// nonzero scalars.
GradedHom toric(const LatticePolytope& p, const std::vector<Scalar>& xi);

// A lattice self-symmetry together with the permutation it induces on the
// degree-1 monomial basis.
struct Symmetry {
    AffineLatticeMap map;
    GradedHom hom;
};

// All unimodular affine self-maps of a full-dimensional polytope, found by
// exact solving over vertex permutations. Deterministic order.
std::vector<Symmetry> symmetries(const LatticePolytope& p, const Field& f);

// Column count plus dim + 1: the expected automorphism-group dimension.
std::size_t predicted_gamma_dim(const LatticePolytope& p);

// One factor of the normal form: scalars for the columns sharing a base
// facet. Columns without an entry contribute nothing.
struct NormalFormBlock {
    std::size_t facet = 0;
    std::vector<std::pair<ColumnStructure, Scalar>> lambdas;
};

// Composite automorphism block_1 ∘ ... ∘ block_r ∘ toric ∘ symmetry, with
// blocks validated: pairwise distinct base facets, ordered by nondecreasing
// facet lattice-point count, and every column based at its block's facet.
GradedHom compose_normal_form(const LatticePolytope& p, const AffineLatticeMap& sigma,
                              const std::vector<Scalar>& xi,
                              const std::vector<NormalFormBlock>& blocks, const Field& f);

} // namespace polylin

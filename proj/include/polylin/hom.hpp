#pragma once

#include "polylin/laurent.hpp"
#include "polylin/matrix.hpp"
#include "polylin/polytope.hpp"

#include <map>
#include <vector>

namespace polylin {

// Degree-1 part of a graded algebra map between two polytopal algebras.
// Column x holds the image of the source generator x in the target's
// degree-1 monomial basis; rows and columns follow the global lex order of
// lattice points. The degree marker is implicit: degree-1 monomials map to
// degree-1 elements.
struct GradedHom {
    LatticePolytope source;
    LatticePolytope target;
    ExactMatrix matrix;  // #L_target rows, #L_source columns
    bool verified = false;

    bool operator==(const GradedHom& o) const {
        return source == o.source && target == o.target && matrix == o.matrix;
    }
    bool operator!=(const GradedHom& o) const { return !(*this == o); }
};

GradedHom identity_hom(const LatticePolytope& p, const Field& f);

// g after f; throws when f's target differs from g's source.
GradedHom compose(const GradedHom& g, const GradedHom& f);

// The image of generator x as a Laurent polynomial in the target's ambient
// coordinates (degree marker stripped).
LaurentPoly column_laurent(const GradedHom& f, const Point& x);

// Builds a hom from per-generator Laurent images; every support point must
// be a lattice point of the target, otherwise ImageEscapesTarget.
GradedHom hom_from_columns(const LatticePolytope& p, const LatticePolytope& q,
                           const std::vector<LaurentPoly>& columns, const Field& field);

// Pushes every spanning binomial relation of degree <= relation_degree
// through f and compares both sides in the target algebra. relation_degree
// 0 means: use the certified generation degree of the source.
bool is_homomorphism(const GradedHom& f, long long relation_degree = 0);

struct RankInfo {
    std::size_t rank = 0;
    bool injective = false;
    bool surjective = false;
};
RankInfo degree1_rank(const GradedHom& f);

// f composed with itself equals f; requires an endomorphism.
bool is_idempotent(const GradedHom& f);

// Homogeneous polynomial with integer coefficients in the matrix entry
// variables; a monomial is a sorted multiset of variable indices.
struct IntPoly {
    std::map<std::vector<std::size_t>, Int> terms;

    bool operator==(const IntPoly&) const = default;
};

// Defining equations of the hom variety: variable X_{x,y} has index
// x_index * #L_target + y_index; vanishing of every polynomial at a matrix
// is equivalent to is_homomorphism. Coefficients are integers regardless of
// the session field.
struct HomEquations {
    LatticePolytope source, target;
    long long relation_degree = 0;
    std::vector<IntPoly> polys;

    std::size_t var_index(std::size_t x_idx, std::size_t y_idx) const {
        return x_idx * target.point_count() + y_idx;
    }
};

HomEquations hom_equations(const LatticePolytope& p, const LatticePolytope& q,
                           long long relation_degree = 0);

// Evaluates every equation at the matrix (any session field).
bool equations_vanish(const HomEquations& eq, const ExactMatrix& m);

// #L_P squared minus the rank of the Jacobian of the self-hom equations at
// the identity matrix, over the rationals.
std::size_t tangent_dim(const LatticePolytope& p, long long relation_degree = 0);

} // namespace polylin

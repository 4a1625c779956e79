#pragma once

#include "polylin/polytope.hpp"

#include <optional>
#include <vector>

namespace polylin {

// A degree-tagged element of the graded monoid attached to a polytope:
// degree-e elements are e-fold sums of lattice points, degree 0 is the
// origin.
struct GradedMonomial {
    Point vector;
    long long degree = 0;

    bool operator==(const GradedMonomial&) const = default;
    bool operator<(const GradedMonomial& o) const {
        return std::tie(degree, vector) < std::tie(o.degree, o.vector);
    }
};

// The e-fold sumset of the lattice points, lex sorted.
std::vector<GradedMonomial> degree_piece(const LatticePolytope& p, long long e);

// Number of degree-e monomials.
std::size_t hilbert(const LatticePolytope& p, long long e);

// A binomial relation: two distinct equal-degree multisets of lattice
// points with the same vector sum. Multisets are stored lex-sorted and the
// left side is the lex-least member of its sum class.
struct BinomialRelation {
    long long degree = 0;
    std::vector<Point> left, right;
};

// Deterministic spanning set of the relations in each degree 2..max_degree:
// within every class of equal-sum multisets, each member is paired with the
// lex-least one.
std::vector<BinomialRelation> binomial_relations(const LatticePolytope& p, long long max_degree);

// Checks degreewise, by exact rank, that products of relations of degree
// <= d with monomials span the relation space in every degree up to
// check_up_to.
bool is_generated_in_degree(const LatticePolytope& p, long long d, long long check_up_to);

// Smallest d <= limit with is_generated_in_degree(p, d, d+1); throws
// DegenerateInput when no bound up to limit works.
long long generation_degree(const LatticePolytope& p, long long limit = 6);

// Degree-c piece of the saturation: all lattice points of the c-th dilation,
// tagged with degree c. Requires a normalized polytope.
std::vector<GradedMonomial> normalization_degree_piece(const LatticePolytope& p, long long c);

// One representation of a degree-e monomial as a sorted list of e lattice
// points, chosen greedily in lex order; nullopt when w is not in the
// degree-e piece.
std::optional<std::vector<Point>> monomial_product_rep(const LatticePolytope& p,
                                                       const Point& w, long long e);

} // namespace polylin

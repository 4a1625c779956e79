#pragma once

#include "polylin/hom.hpp"
#include "polylin/json_io.hpp"

#include <string>
#include <vector>

namespace polylin {

// A tree-shaped construction plan for a graded homomorphism. Leaves name
// base maps; inner nodes combine the maps built by their children.
struct TameRecipe {
    std::string op;
    Json args;
    std::vector<TameRecipe> children;
};

TameRecipe recipe_from_json(const Json& j);
Json recipe_to_json(const TameRecipe& r);

// Evaluates the tree bottom-up. A failure anywhere rethrows the node's
// error with the path to the failing node appended to the detail.
//
// Supported ops:
//   identity_k                           coefficient field as an empty-polytope map
//   identity     {polytope}              identity on a polytopal algebra
//   hom          {source,target,entries} explicit matrix leaf
//   elementary   {polytope,column,lambda}
//   toric        {polytope,xi}
//   face_retract {polytope,facets}       projection onto a face algebra
//   face_include {polytope,facets}       inclusion of a face algebra
//   free_extension {polytope,apex,target,q} over child f0
//   blowup       {factor,bound?}         homothetic blow-up of the child
//   star         two children            Minkowski product of the children
//   change       {source,target,source_map?,target_map?} over the child
//   compose      two children [outer, inner]
GradedHom evaluate_recipe(const TameRecipe& r, const Field& f);

} // namespace polylin

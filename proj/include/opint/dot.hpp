#pragma once

// Graphviz output. Node ids follow traversal order, so identical input gives
// byte-identical text.

#include "opint/integration.hpp"
#include "opint/trees.hpp"

#include <string>

namespace opint {

/// Root stub at the top, one node per internal vertex and per leaf.
std::string tree_dot(const PlanarTree& t, const std::string& name = "tree");

/// A 1-cell [f; a; α] of ∫T drawn as the grafted tree μ_f(b, a) with the
/// edges crossing the cut dashed, next to its contraction target a.
std::string cut_dot(const Integration& trees, const OneCell& c, const std::string& name = "cut");

/// Objects as nodes, non-identity morphisms as edges.
std::string category_dot(const FinCat& c, const std::string& name = "hom");

/// x --E--> s --M--> y together with φ itself.
std::string factorization_dot(const Integration& ip, const OneCell& phi, const std::string& name = "factorization");

} // namespace opint

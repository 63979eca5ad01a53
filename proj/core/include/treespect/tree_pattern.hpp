#pragma once

#include "treespect/skeleton.hpp"

namespace treespect {

// Support structure of a tree pattern matrix for one eigenvalue, together
// with the two counts entering the support nullity formula.
struct PatternSupport {
  Rational lambda;
  std::vector<int> support;
  int induced_components = 0;
  int outside_adjacent = 0;
};

PatternSupport pattern_support(const TreePatternMatrix& m, const Rational& lambda);

// The pattern graph; exposed as the module operation, the matrix validates
// it at construction.
Forest pattern_graph(const TreePatternMatrix& m);

// Eigenspace dimension read off the support: connected components of the
// induced support subgraph minus the vertices adjacent to the support but
// outside it. Requires the pattern graph to be a tree.
int support_nullity(const TreePatternMatrix& m, const Rational& lambda);

// Transfers a vector from the null space of the pattern's adjacency matrix
// into the null space of m (zero diagonal required), preserving the
// zero/non-zero pattern. Breadth-first branch rescaling from vertex zero.
RationalVector transfer_null_pattern(const TreePatternMatrix& m, const RationalVector& v);

}  // namespace treespect

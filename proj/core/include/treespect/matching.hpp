#pragma once

#include "treespect/graph.hpp"
#include "treespect/rational.hpp"

namespace treespect {

// Eigenvector candidate with entries restricted to {-1, 0, +1}.
using SignVector = std::vector<int>;

RationalVector to_rational(const SignVector& x);

struct Matching {
  std::vector<std::pair<int, int>> edges;  // u < v, in match order
  std::vector<int> mate;                   // -1 for exposed vertices
  int size() const { return static_cast<int>(edges.size()); }
};

// Deterministic leaf-peeling: each component is rooted at its first vertex
// and processed in post-order, matching a vertex to its parent when both
// are still exposed. Exposed leaves are skipped.
Matching maximum_matching(const Forest& f);

int matching_number(const Forest& f);

struct MatchingClassification {
  Matching matching;
  std::vector<int> may_be_missed;  // K: missed by some maximum matching
  std::vector<int> never_missed;   // N: covered by every maximum matching
  std::vector<int> missed;         // K_M: missed by `matching`
  std::vector<std::pair<int, int>> forced_edges;  // in every maximum matching
};

// K membership decided by "deleting v keeps the matching number"; an edge is
// forced iff deleting it drops the matching number.
MatchingClassification classify_vertices(const Forest& f);

// Simply structured null space basis: one vector per vertex missed by the
// deterministic maximum matching, built from the alternating-path subtree
// with weight +1 at distance 0 mod 4 and -1 at distance 2 mod 4.
// The result is straight with the missed vertices as witnesses.
std::vector<SignVector> kernel_basis(const Forest& f);

}  // namespace treespect

#pragma once

#include "treespect/skeleton.hpp"

namespace treespect {

// One removal of the four-vertex gadget: u0, u1 and w are leaves of the
// current tree, y is adjacent to u0, u1 and the kept vertex, w to the kept
// vertex. Indices refer to the original tree.
struct ReductionStep {
  int kept;
  int u0, u1, y, w;
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
  std::pair<int, int> terminal;  // the final K2 edge
};

struct ClassCResult {
  bool member = false;
  std::optional<ReductionTrace> trace;
  std::optional<SignVector> certificate;  // {1,-1} eigenvector for eigenvalue 1
};

// Membership in the class of trees with a {1,-1} eigenvector for eigenvalue
// one, decided by gadget reduction to K2. Candidates are tried by maximal
// eccentricity of the kept vertex with backtracking, so a pass/fail answer
// never depends on reduction order. The certificate is rebuilt by replaying
// the trace backward from the all-ones vector on K2.
ClassCResult is_class_c(const Forest& t);

// For lambda in {0, 1, -1} only; lambda must be an eigenvalue.
// Zero always qualifies; for +-1 every component of the tree minus the
// always-zero set must be a class-C member.
bool has_simply_structured_basis(const Forest& t, const Rational& lambda);

// Exact eigenspace basis with all entries in {0, 1, -1}: the kernel basis
// for lambda 0; for lambda 1 class-C certificates assigned along a straight
// skeleton null basis with breadth-first sign correction; lambda -1 by
// flipping signs on the second bipartition class.
std::vector<SignVector> simply_structured_basis(const Forest& t, const Rational& lambda);

}  // namespace treespect

#pragma once

#include "treespect/linalg.hpp"
#include "treespect/matching.hpp"

namespace treespect {

// Zero/non-zero structure of a whole eigenspace over the pattern graph.
// always_zero is the set where every eigenvector vanishes; boundary the
// always-zero vertices adjacent to an eigen-component. When lambda is not
// an eigenvalue, support and boundary are empty.
struct SupportReport {
  Rational lambda;
  std::vector<int> always_zero;
  std::vector<int> support;
  std::vector<int> boundary;
  std::vector<std::vector<int>> eigen_components;  // discovery order
  RationalBasis basis;                             // the basis the report was read from
};

SupportReport support_report(const TreePatternMatrix& m, const Rational& lambda);
SupportReport support_report(const Forest& f, const Rational& lambda);

enum class SkeletonVertexKind { Contracted, Boundary };

// Contraction of each eigen-component to a single vertex, induced together
// with the boundary set. Contracted vertices carry their component's
// original vertices as members; Boundary vertices a single original vertex.
struct SkeletonForest {
  Forest forest;
  std::vector<SkeletonVertexKind> kind;
  std::vector<std::vector<int>> members;     // original vertex indices, ascending
  std::vector<std::string> original_labels;  // labels of the source graph

  std::vector<int> contracted_vertices() const;
  std::vector<int> boundary_vertices() const;
  // Per original vertex: owning skeleton vertex, -1 if absent.
  std::vector<int> original_to_skeleton() const;
};

// Skeleton of a single eigenvector x (components of the graph minus the
// zero set of x). Throws std::invalid_argument when x is not an eigenvector.
SkeletonForest x_skeleton(const TreePatternMatrix& m, const RationalVector& x,
                          const Rational& lambda);
SkeletonForest x_skeleton(const Forest& f, const RationalVector& x, const Rational& lambda);

// Merged skeleton of the whole eigenspace. Throws std::domain_error when
// lambda is not an eigenvalue.
SkeletonForest skeleton(const TreePatternMatrix& m, const Rational& lambda);
SkeletonForest skeleton(const Forest& f, const Rational& lambda);

// S' contracts every component of the graph minus the boundary set; the
// components outside the skeleton form the independent non-eigenvalue set X.
struct MetaSkeleton {
  Forest tree;                           // S' (a tree when the input is one)
  std::vector<int> skeleton_vertices;    // V(S) inside S'
  std::vector<int> non_eigen_vertices;   // X = V(S') minus V(S)
  std::vector<std::vector<int>> origin;  // original members per S' vertex
  std::vector<bool> was_contracted;
  SkeletonForest skeleton;
};

MetaSkeleton meta_skeleton(const TreePatternMatrix& m, const Rational& lambda);
MetaSkeleton meta_skeleton(const Forest& f, const Rational& lambda);

// Number of vertices missed by a maximum matching of the skeleton; equals
// the exact eigenspace dimension.
int multiplicity_via_matching(const TreePatternMatrix& m, const Rational& lambda);
int multiplicity_via_matching(const Forest& f, const Rational& lambda);

// Null space vector of the skeleton that is non-zero exactly on the
// contracted vertices whose components carry non-zero b. The value of the
// search start vertex is set to one.
RationalVector project_eigenvector(const TreePatternMatrix& m, const Rational& lambda,
                                   const RationalVector& b);
RationalVector project_eigenvector(const Forest& f, const Rational& lambda,
                                   const RationalVector& b);
RationalVector project_eigenvector(const TreePatternMatrix& m, const SupportReport& report,
                                   const SkeletonForest& skel, const RationalVector& b);

// Eigenvector of the original matrix that is non-zero exactly on the
// eigen-components whose skeleton vertices carry non-zero s; zero-free on
// each such component.
RationalVector lift_null_vector(const TreePatternMatrix& m, const Rational& lambda,
                                const RationalVector& s);
RationalVector lift_null_vector(const Forest& f, const Rational& lambda,
                                const RationalVector& s);
RationalVector lift_null_vector(const TreePatternMatrix& m, const SupportReport& report,
                                const SkeletonForest& skel, const RationalVector& s);

// Structural checks every genuine skeleton passes: leaves (and isolated
// vertices) are contracted, edges alternate between contracted and boundary
// vertices, no edge is forced, and the may-be-missed set is exactly the
// contracted set. Returns human-readable violations, empty when clean.
std::vector<std::string> check_skeleton_invariants(const SkeletonForest& s);

// The skeleton is its own eigenvalue-zero skeleton: re-running the
// construction on the skeleton forest contracts nothing and reproduces the
// vertex kinds and edges.
bool skeleton_fixed_point_holds(const SkeletonForest& s);

// DOT rendering: contracted vertices as boxes listing their members,
// boundary vertices as filled circles.
std::string skeleton_to_dot(const SkeletonForest& s);

}  // namespace treespect

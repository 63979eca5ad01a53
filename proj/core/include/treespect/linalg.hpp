#pragma once

#include <map>
#include <optional>

#include "treespect/matrix.hpp"

namespace treespect {

// Exact eigenspace basis; vectors are normalized so the first non-zero
// entry is one. When straight_order is present the basis is straight with
// the listed witness components (identified by their first vertex label).
struct RationalBasis {
  std::vector<RationalVector> vectors;
  Rational lambda;
  std::optional<std::vector<std::string>> straight_order;

  int dimension() const { return static_cast<int>(vectors.size()); }
  bool empty() const { return vectors.empty(); }
};

// Exact null space of the rows, canonical form: fraction-free forward
// elimination with the first non-zero pivot per column, free columns in
// index order, each vector scaled so its first non-zero entry is one.
std::vector<RationalVector> nullspace(const std::vector<RationalVector>& rows, int cols);

int rank(const std::vector<RationalVector>& rows, int cols);

bool linearly_independent(const std::vector<RationalVector>& vectors);

TreePatternMatrix adjacency_matrix(const Forest& f);

// Basis of the null space of (m - lambda*I); empty iff lambda is not an
// eigenvalue.
RationalBasis eigenspace_basis(const TreePatternMatrix& m, const Rational& lambda);
RationalBasis eigenspace_basis(const Forest& f, const Rational& lambda);

// True iff m*x = lambda*x exactly and x is not the null vector.
// Throws std::invalid_argument on a dimension mismatch.
bool verify_eigenvector(const TreePatternMatrix& m, const Rational& lambda,
                        const RationalVector& x);

// All integer eigenvalues with multiplicities; candidates |k| <= max degree
// suffice because a forest's spectral radius is bounded by its max degree.
std::map<long, int> integer_spectrum(const Forest& f);

// Rewrites b into a straight basis of the same eigenspace over the
// components of f minus the always-zero set, recording witness components.
// Throws std::invalid_argument when b is not an adjacency eigenspace basis.
RationalBasis straighten_basis(const Forest& f, const RationalBasis& b);

// Whether vectors[j] is non-vanishing on witnesses[j] and vanishes on
// witnesses[i] for every i > j.
bool check_straight(const std::vector<RationalVector>& vectors,
                    const std::vector<std::vector<int>>& witnesses);

// Vertices on which every basis vector vanishes (the whole vertex set when
// the basis is empty).
std::vector<int> always_zero_set(int order, const std::vector<RationalVector>& vectors);

}  // namespace treespect

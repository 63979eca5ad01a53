#pragma once

#include "treespect/graph.hpp"
#include "treespect/rational.hpp"

namespace treespect {

// Square rational matrix whose off-diagonal zero pattern is combinatorially
// symmetric and whose pattern graph is acyclic. Adjacency matrices are the
// all-ones-weight, zero-diagonal special case. Diagonal entries are
// unrestricted; values may be asymmetric as long as the zero pattern is not.
class TreePatternMatrix {
 public:
  // Validates squareness, combinatorial symmetry and acyclicity of the
  // pattern. Throws std::invalid_argument on violations.
  static TreePatternMatrix build(const std::vector<std::string>& vertex_order,
                                 std::vector<RationalVector> rows);

  static TreePatternMatrix adjacency(const Forest& f);

  // Text exchange format:
  //   order <n>
  //   vertices <l1> ... <ln>
  //   <n rows of n entries, "p/q" or integer strings>
  // Blank lines and '#' comments are ignored. Round-trips exactly.
  static TreePatternMatrix parse(const std::string& text);
  std::string serialize() const;

  int order() const { return static_cast<int>(rows_.size()); }
  const Rational& at(int r, int c) const { return rows_.at(r).at(c); }
  const std::vector<RationalVector>& rows() const { return rows_; }
  const std::vector<std::string>& vertex_order() const { return vertex_order_; }

  // Graph with an edge {i,j} wherever an off-diagonal entry is non-zero.
  const Forest& pattern() const { return pattern_; }

  bool zero_diagonal() const;
  bool value_symmetric() const;

  // M - lambda*I; stays in-type since the diagonal is unrestricted.
  TreePatternMatrix shifted(const Rational& lambda) const;

  // Principal submatrix on the given vertex indices (ascending order kept).
  TreePatternMatrix principal_submatrix(const std::vector<int>& keep) const;

 private:
  std::vector<std::string> vertex_order_;
  std::vector<RationalVector> rows_;
  Forest pattern_;
};

}  // namespace treespect

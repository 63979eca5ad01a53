#include "treespect/tree_pattern.hpp"

#include <deque>

namespace treespect {

PatternSupport pattern_support(const TreePatternMatrix& m, const Rational& lambda) {
  SupportReport report = support_report(m, lambda);
  PatternSupport out;
  out.lambda = lambda;
  out.support = report.support;
  out.induced_components = static_cast<int>(report.eigen_components.size());
  out.outside_adjacent = static_cast<int>(report.boundary.size());
  return out;
}

Forest pattern_graph(const TreePatternMatrix& m) { return m.pattern(); }

int support_nullity(const TreePatternMatrix& m, const Rational& lambda) {
  if (!m.pattern().is_tree()) {
    throw std::invalid_argument("support_nullity: pattern graph is not a tree");
  }
  PatternSupport s = pattern_support(m, lambda);
  return s.induced_components - s.outside_adjacent;
}

RationalVector transfer_null_pattern(const TreePatternMatrix& m, const RationalVector& v) {
  if (!m.zero_diagonal()) {
    throw std::invalid_argument("transfer_null_pattern: matrix diagonal is not zero");
  }
  TreePatternMatrix a = TreePatternMatrix::adjacency(m.pattern());
  if (!verify_eigenvector(a, Rational(0), v)) {
    throw std::invalid_argument("transfer_null_pattern: v is not in the adjacency null space");
  }

  // Per-vertex scale factors sigma with m(z,u)*sigma(u) constant over the
  // neighbors u of every z; then every row of m applied to sigma*v is a
  // multiple of the corresponding adjacency row applied to v, hence zero.
  const int n = m.order();
  RationalVector sigma(n, Rational(0));
  std::vector<int> parent(n, -1);
  std::vector<bool> seen(n, false);
  for (int root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    sigma[root] = 1;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      int p = queue.front();
      queue.pop_front();
      Rational kappa = parent[p] == -1 ? Rational(1) : m.at(p, parent[p]) * sigma[parent[p]];
      for (int c : m.pattern().neighbors(p)) {
        if (seen[c]) continue;
        seen[c] = true;
        parent[c] = p;
        sigma[c] = kappa / m.at(p, c);
        queue.push_back(c);
      }
    }
  }
  RationalVector out(n);
  for (int i = 0; i < n; ++i) out[i] = sigma[i] * v[i];
  return out;
}

}  // namespace treespect

#include "treespect/skeleton.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace treespect {

namespace {

std::vector<int> complement(int n, const std::vector<int>& sorted_subset) {
  std::vector<int> out;
  std::size_t i = 0;
  for (int v = 0; v < n; ++v) {
    if (i < sorted_subset.size() && sorted_subset[i] == v) {
      ++i;
    } else {
      out.push_back(v);
    }
  }
  return out;
}

// Components of the pattern graph minus `excluded`, as original indices in
// discovery order.
std::vector<std::vector<int>> components_without(const Forest& pattern,
                                                 const std::vector<int>& excluded) {
  Forest rest = pattern.without_vertices(excluded);
  std::vector<std::vector<int>> out;
  for (const auto& part : rest.component_vertices()) {
    std::vector<int> orig;
    orig.reserve(part.size());
    for (int v : part) orig.push_back(pattern.require_index(rest.label(v)));
    out.push_back(std::move(orig));
  }
  return out;
}

// Contracts the support components and induces on them plus the boundary.
SkeletonForest build_skeleton(const Forest& pattern,
                              const std::vector<std::vector<int>>& support_components,
                              const std::vector<int>& boundary) {
  ContractionResult contraction = contract_subgraphs(pattern, support_components);
  std::vector<bool> keep_original(pattern.order(), false);
  for (int b : boundary) keep_original[b] = true;

  std::vector<int> keep;
  for (int v = 0; v < contraction.contracted.order(); ++v) {
    if (contraction.was_contracted[v] || keep_original[contraction.origin[v].front()]) {
      keep.push_back(v);
    }
  }
  Forest induced = contraction.contracted.induced(keep);

  SkeletonForest skel;
  skel.forest = induced;
  skel.original_labels = pattern.labels();
  skel.kind.reserve(keep.size());
  skel.members.reserve(keep.size());
  for (int v = 0; v < induced.order(); ++v) {
    int cv = contraction.contracted.require_index(induced.label(v));
    skel.kind.push_back(contraction.was_contracted[cv] ? SkeletonVertexKind::Contracted
                                                       : SkeletonVertexKind::Boundary);
    skel.members.push_back(contraction.origin[cv]);
  }
  return skel;
}

// The unique member of contracted vertex c adjacent to boundary vertex w,
// as an original index. Uniqueness holds because the pattern is acyclic.
int attachment_vertex(const TreePatternMatrix& m, const std::vector<int>& owner, int c,
                      int w_original) {
  for (int u : m.pattern().neighbors(w_original)) {
    if (owner[u] == c) return u;
  }
  throw std::logic_error("skeleton: boundary vertex has no attachment in component");
}

}  // namespace

std::vector<int> SkeletonForest::contracted_vertices() const {
  std::vector<int> out;
  for (int v = 0; v < forest.order(); ++v) {
    if (kind[v] == SkeletonVertexKind::Contracted) out.push_back(v);
  }
  return out;
}

std::vector<int> SkeletonForest::boundary_vertices() const {
  std::vector<int> out;
  for (int v = 0; v < forest.order(); ++v) {
    if (kind[v] == SkeletonVertexKind::Boundary) out.push_back(v);
  }
  return out;
}

std::vector<int> SkeletonForest::original_to_skeleton() const {
  std::vector<int> owner(original_labels.size(), -1);
  for (int v = 0; v < forest.order(); ++v) {
    for (int u : members[v]) owner[u] = v;
  }
  return owner;
}

SupportReport support_report(const TreePatternMatrix& m, const Rational& lambda) {
  SupportReport report;
  report.lambda = lambda;
  report.basis = eigenspace_basis(m, lambda);
  report.always_zero = always_zero_set(m.order(), report.basis.vectors);
  report.support = complement(m.order(), report.always_zero);
  if (report.support.empty()) return report;

  report.eigen_components = components_without(m.pattern(), report.always_zero);
  std::vector<bool> in_support(m.order(), false);
  for (int v : report.support) in_support[v] = true;
  for (int z : report.always_zero) {
    for (int u : m.pattern().neighbors(z)) {
      if (in_support[u]) {
        report.boundary.push_back(z);
        break;
      }
    }
  }
  return report;
}

SupportReport support_report(const Forest& f, const Rational& lambda) {
  return support_report(TreePatternMatrix::adjacency(f), lambda);
}

SkeletonForest x_skeleton(const TreePatternMatrix& m, const RationalVector& x,
                          const Rational& lambda) {
  if (!verify_eigenvector(m, lambda, x)) {
    throw std::invalid_argument("x_skeleton: x is not an eigenvector for lambda");
  }
  std::vector<int> zero;
  for (int v = 0; v < m.order(); ++v) {
    if (x[v] == 0) zero.push_back(v);
  }
  auto comps = components_without(m.pattern(), zero);
  std::vector<bool> nonzero(m.order(), false);
  for (int v = 0; v < m.order(); ++v) nonzero[v] = x[v] != 0;
  std::vector<int> boundary;
  for (int z : zero) {
    for (int u : m.pattern().neighbors(z)) {
      if (nonzero[u]) {
        boundary.push_back(z);
        break;
      }
    }
  }
  return build_skeleton(m.pattern(), comps, boundary);
}

SkeletonForest x_skeleton(const Forest& f, const RationalVector& x, const Rational& lambda) {
  return x_skeleton(TreePatternMatrix::adjacency(f), x, lambda);
}

SkeletonForest skeleton(const TreePatternMatrix& m, const Rational& lambda) {
  SupportReport report = support_report(m, lambda);
  if (report.basis.empty()) {
    throw std::domain_error("skeleton: lambda is not an eigenvalue");
  }
  return build_skeleton(m.pattern(), report.eigen_components, report.boundary);
}

SkeletonForest skeleton(const Forest& f, const Rational& lambda) {
  return skeleton(TreePatternMatrix::adjacency(f), lambda);
}

MetaSkeleton meta_skeleton(const TreePatternMatrix& m, const Rational& lambda) {
  SupportReport report = support_report(m, lambda);
  if (report.basis.empty()) {
    throw std::domain_error("meta_skeleton: lambda is not an eigenvalue");
  }
  auto parts = components_without(m.pattern(), report.boundary);
  ContractionResult contraction = contract_subgraphs(m.pattern(), parts);

  std::vector<bool> in_support(m.order(), false);
  for (int v : report.support) in_support[v] = true;

  MetaSkeleton meta;
  meta.tree = contraction.contracted;
  meta.origin = contraction.origin;
  meta.was_contracted = contraction.was_contracted;
  for (int v = 0; v < meta.tree.order(); ++v) {
    bool eigen_part = false;
    for (int u : meta.origin[v]) {
      if (in_support[u]) eigen_part = true;
    }
    if (!contraction.was_contracted[v] || eigen_part) {
      meta.skeleton_vertices.push_back(v);
    } else {
      meta.non_eigen_vertices.push_back(v);
      RationalBasis sub = eigenspace_basis(m.principal_submatrix(meta.origin[v]), lambda);
      if (!sub.empty()) {
        throw std::logic_error("meta_skeleton: contracted outside component has the eigenvalue");
      }
    }
  }
  for (std::size_t i = 0; i < meta.non_eigen_vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < meta.non_eigen_vertices.size(); ++j) {
      if (meta.tree.has_edge(meta.non_eigen_vertices[i], meta.non_eigen_vertices[j])) {
        throw std::logic_error("meta_skeleton: non-eigenvalue set is not independent");
      }
    }
  }
  meta.skeleton = build_skeleton(m.pattern(), report.eigen_components, report.boundary);
  return meta;
}

MetaSkeleton meta_skeleton(const Forest& f, const Rational& lambda) {
  return meta_skeleton(TreePatternMatrix::adjacency(f), lambda);
}

int multiplicity_via_matching(const TreePatternMatrix& m, const Rational& lambda) {
  SkeletonForest skel = skeleton(m, lambda);
  return skel.forest.order() - 2 * matching_number(skel.forest);
}

int multiplicity_via_matching(const Forest& f, const Rational& lambda) {
  return multiplicity_via_matching(TreePatternMatrix::adjacency(f), lambda);
}

RationalVector project_eigenvector(const TreePatternMatrix& m, const SupportReport& report,
                                   const SkeletonForest& skel, const RationalVector& b) {
  if (!verify_eigenvector(m, report.lambda, b)) {
    throw std::invalid_argument("project_eigenvector: b is not an eigenvector for lambda");
  }
  const std::vector<int> owner = skel.original_to_skeleton();
  const int sn = skel.forest.order();

  // The restriction of b to an eigen-component is all-zero or zero-free, so
  // the first member decides.
  std::vector<char> comp_nonzero(sn, 0);
  for (int v = 0; v < sn; ++v) {
    if (skel.kind[v] == SkeletonVertexKind::Contracted) {
      comp_nonzero[v] = b[skel.members[v].front()] != 0;
    }
  }

  RationalVector sv(sn, Rational(0));
  std::vector<bool> visited(sn, false);
  std::vector<bool> processed(sn, false);  // boundary vertices handled
  auto contrib = [&](int c, int w) {
    int u = attachment_vertex(m, owner, c, skel.members[w].front());
    return m.at(skel.members[w].front(), u) * b[u];
  };

  for (const auto& comp : skel.forest.component_vertices()) {
    int start = -1;
    for (int v : comp) {
      if (skel.kind[v] == SkeletonVertexKind::Contracted) {
        start = v;
        break;
      }
    }
    if (start < 0) throw std::logic_error("skeleton component without contracted vertex");
    visited[start] = true;
    if (comp_nonzero[start]) sv[start] = 1;
    std::deque<int> queue{start};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int w : skel.forest.neighbors(v)) {
        if (processed[w]) continue;
        processed[w] = true;
        // w is a boundary vertex; v is its only visited neighbor.
        std::vector<int> fresh;
        for (int c : skel.forest.neighbors(w)) {
          if (!visited[c]) fresh.push_back(c);
        }
        Rational kappa = 0;
        if (sv[v] != 0) {
          kappa = sv[v] / contrib(v, w);
        } else {
          for (int c : fresh) {
            if (comp_nonzero[c]) {
              kappa = Rational(1) / contrib(c, w);
              break;
            }
          }
        }
        for (int c : fresh) {
          visited[c] = true;
          if (comp_nonzero[c]) sv[c] = kappa * contrib(c, w);
          queue.push_back(c);
        }
      }
    }
  }
  return sv;
}

RationalVector project_eigenvector(const TreePatternMatrix& m, const Rational& lambda,
                                   const RationalVector& b) {
  SupportReport report = support_report(m, lambda);
  if (report.basis.empty()) {
    throw std::domain_error("project_eigenvector: lambda is not an eigenvalue");
  }
  SkeletonForest skel = build_skeleton(m.pattern(), report.eigen_components, report.boundary);
  return project_eigenvector(m, report, skel, b);
}

RationalVector project_eigenvector(const Forest& f, const Rational& lambda,
                                   const RationalVector& b) {
  return project_eigenvector(TreePatternMatrix::adjacency(f), lambda, b);
}

RationalVector lift_null_vector(const TreePatternMatrix& m, const SupportReport& report,
                                const SkeletonForest& skel, const RationalVector& s) {
  if (static_cast<int>(s.size()) != skel.forest.order()) {
    throw std::invalid_argument("lift_null_vector: vector length does not match skeleton");
  }
  if (!verify_eigenvector(TreePatternMatrix::adjacency(skel.forest), Rational(0), s)) {
    throw std::invalid_argument("lift_null_vector: s is not in the skeleton null space");
  }
  for (int v = 0; v < skel.forest.order(); ++v) {
    if (skel.kind[v] == SkeletonVertexKind::Boundary && s[v] != 0) {
      throw std::invalid_argument("lift_null_vector: s is non-zero on a boundary vertex");
    }
  }
  const std::vector<int> owner = skel.original_to_skeleton();
  const int sn = skel.forest.order();

  // Zero-free eigenvector of each component carrying a non-zero entry of s,
  // normalized so its first entry is one.
  std::vector<RationalVector> comp_vector(sn);
  for (int v = 0; v < sn; ++v) {
    if (skel.kind[v] != SkeletonVertexKind::Contracted || s[v] == 0) continue;
    RationalBasis sub = eigenspace_basis(m.principal_submatrix(skel.members[v]), report.lambda);
    if (sub.dimension() != 1) {
      throw std::logic_error("lift_null_vector: eigen-component eigenspace is not simple");
    }
    for (const auto& e : sub.vectors[0]) {
      if (e == 0) throw std::logic_error("lift_null_vector: component vector has a zero entry");
    }
    comp_vector[v] = sub.vectors[0];
  }

  auto entry_at = [&](int c, int original) {
    const auto& mem = skel.members[c];
    auto it = std::lower_bound(mem.begin(), mem.end(), original);
    return comp_vector[c][static_cast<std::size_t>(it - mem.begin())];
  };
  auto contrib_alpha = [&](int c, int w, const Rational& alpha) {
    int u = attachment_vertex(m, owner, c, skel.members[w].front());
    return m.at(skel.members[w].front(), u) * alpha * entry_at(c, u);
  };
  auto unit_contrib = [&](int c, int w) { return contrib_alpha(c, w, Rational(1)); };

  RationalVector alpha(sn, Rational(0));
  std::vector<bool> visited(sn, false);
  std::vector<bool> processed(sn, false);
  for (const auto& comp : skel.forest.component_vertices()) {
    int start = -1;
    for (int v : comp) {
      if (skel.kind[v] == SkeletonVertexKind::Contracted) {
        start = v;
        break;
      }
    }
    if (start < 0) throw std::logic_error("skeleton component without contracted vertex");
    visited[start] = true;
    if (s[start] != 0) alpha[start] = 1;
    std::deque<int> queue{start};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int w : skel.forest.neighbors(v)) {
        if (processed[w]) continue;
        processed[w] = true;
        std::vector<int> fresh;
        for (int c : skel.forest.neighbors(w)) {
          if (!visited[c]) fresh.push_back(c);
        }
        Rational kappa = 0;
        if (s[v] != 0) {
          kappa = contrib_alpha(v, w, alpha[v]) / s[v];
        } else {
          for (int c : fresh) {
            if (s[c] != 0) {
              // Fresh block: give this component multiplier one.
              kappa = unit_contrib(c, w) / s[c];
              break;
            }
          }
        }
        for (int c : fresh) {
          visited[c] = true;
          if (s[c] != 0) alpha[c] = kappa * s[c] / unit_contrib(c, w);
          queue.push_back(c);
        }
      }
    }
  }

  RationalVector x(m.order(), Rational(0));
  for (int v = 0; v < sn; ++v) {
    if (alpha[v] == 0) continue;
    const auto& mem = skel.members[v];
    for (std::size_t i = 0; i < mem.size(); ++i) {
      x[mem[i]] = alpha[v] * comp_vector[v][i];
    }
  }
  return x;
}

RationalVector lift_null_vector(const TreePatternMatrix& m, const Rational& lambda,
                                const RationalVector& s) {
  SupportReport report = support_report(m, lambda);
  if (report.basis.empty()) {
    throw std::domain_error("lift_null_vector: lambda is not an eigenvalue");
  }
  SkeletonForest skel = build_skeleton(m.pattern(), report.eigen_components, report.boundary);
  return lift_null_vector(m, report, skel, s);
}

RationalVector lift_null_vector(const Forest& f, const Rational& lambda,
                                const RationalVector& s) {
  return lift_null_vector(TreePatternMatrix::adjacency(f), lambda, s);
}

std::vector<std::string> check_skeleton_invariants(const SkeletonForest& s) {
  std::vector<std::string> violations;
  const Forest& g = s.forest;
  for (int v = 0; v < g.order(); ++v) {
    if (s.kind[v] == SkeletonVertexKind::Boundary) {
      if (g.degree(v) < 2) {
        violations.push_back("boundary vertex '" + g.label(v) + "' has degree " +
                             std::to_string(g.degree(v)));
      }
      if (s.members[v].size() != 1) {
        violations.push_back("boundary vertex '" + g.label(v) + "' has several members");
      }
    } else if (s.members[v].empty()) {
      violations.push_back("contracted vertex '" + g.label(v) + "' has no members");
    }
  }
  for (auto [u, v] : g.edges()) {
    if (s.kind[u] == s.kind[v]) {
      violations.push_back("edge '" + g.label(u) + " " + g.label(v) +
                           "' joins two vertices of the same kind");
    }
  }
  MatchingClassification cls = classify_vertices(g);
  if (!cls.forced_edges.empty()) {
    auto [u, v] = cls.forced_edges.front();
    violations.push_back("edge '" + g.label(u) + " " + g.label(v) +
                         "' lies in every maximum matching");
  }
  std::vector<int> contracted = s.contracted_vertices();
  if (cls.may_be_missed != contracted) {
    violations.push_back("may-be-missed set differs from the contracted set");
  }
  return violations;
}

bool skeleton_fixed_point_holds(const SkeletonForest& s) {
  RationalBasis zero_basis = eigenspace_basis(s.forest, Rational(0));
  if (zero_basis.empty()) return false;
  SkeletonForest again = skeleton(s.forest, Rational(0));
  if (again.forest.order() != s.forest.order()) return false;

  // Identify each re-derived vertex with its single member in s.forest.
  std::vector<int> image(again.forest.order(), -1);
  for (int v = 0; v < again.forest.order(); ++v) {
    if (again.members[v].size() != 1) return false;
    image[v] = again.members[v].front();
    if (again.kind[v] != s.kind[image[v]]) return false;
  }
  std::set<std::pair<int, int>> expected(s.forest.edges().begin(), s.forest.edges().end());
  std::set<std::pair<int, int>> got;
  for (auto [u, v] : again.forest.edges()) {
    auto p = std::minmax(image[u], image[v]);
    got.emplace(p.first, p.second);
  }
  return expected == got;
}

std::string skeleton_to_dot(const SkeletonForest& s) {
  std::ostringstream out;
  out << "graph skeleton {\n";
  for (int v = 0; v < s.forest.order(); ++v) {
    if (s.kind[v] == SkeletonVertexKind::Contracted) {
      out << "  \"" << s.forest.label(v) << "\" [shape=box, label=\"" << s.forest.label(v)
          << ":";
      for (int u : s.members[v]) out << ' ' << s.original_labels[u];
      out << "\"];\n";
    } else {
      out << "  \"" << s.forest.label(v) << "\" [shape=circle, style=filled];\n";
    }
  }
  for (auto [u, v] : s.forest.edges()) {
    out << "  \"" << s.forest.label(u) << "\" -- \"" << s.forest.label(v) << "\";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace treespect

#include "treespect/simply_structured.hpp"

#include <algorithm>
#include <deque>

namespace treespect {

namespace {

struct Candidate {
  int kept, y, u0, u1, w;
  int kept_eccentricity;
};

// Alive-subgraph view of the original tree during reduction.
struct AliveView {
  const Forest* tree;
  std::vector<bool> alive;
  int count;

  int degree(int v) const {
    int d = 0;
    for (int u : tree->neighbors(v)) {
      if (alive[u]) ++d;
    }
    return d;
  }
  std::vector<int> neighbors(int v) const {
    std::vector<int> out;
    for (int u : tree->neighbors(v)) {
      if (alive[u]) out.push_back(u);
    }
    return out;
  }
  int eccentricity(int from) const {
    std::deque<std::pair<int, int>> queue{{from, 0}};
    std::vector<bool> seen(tree->order(), false);
    seen[from] = true;
    int ecc = 0;
    while (!queue.empty()) {
      auto [v, d] = queue.front();
      queue.pop_front();
      ecc = std::max(ecc, d);
      for (int u : tree->neighbors(v)) {
        if (alive[u] && !seen[u]) {
          seen[u] = true;
          queue.emplace_back(u, d + 1);
        }
      }
    }
    return ecc;
  }
};

std::vector<Candidate> gadget_candidates(const AliveView& view) {
  std::vector<Candidate> out;
  const Forest& t = *view.tree;
  for (int y = 0; y < t.order(); ++y) {
    if (!view.alive[y] || view.degree(y) != 3) continue;
    auto nbrs = view.neighbors(y);
    for (int pick = 0; pick < 3; ++pick) {
      int kept = nbrs[pick];
      int a = nbrs[(pick + 1) % 3];
      int b = nbrs[(pick + 2) % 3];
      if (view.degree(a) != 1 || view.degree(b) != 1) continue;
      int u0 = std::min(a, b);
      int u1 = std::max(a, b);
      for (int w : view.neighbors(kept)) {
        if (w == y || view.degree(w) != 1) continue;
        out.push_back({kept, y, u0, u1, w, 0});
      }
    }
  }
  for (auto& c : out) c.kept_eccentricity = view.eccentricity(c.kept);
  std::sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) {
    if (a.kept_eccentricity != b.kept_eccentricity) {
      return a.kept_eccentricity > b.kept_eccentricity;
    }
    return std::tie(a.kept, a.y, a.u0, a.w) < std::tie(b.kept, b.y, b.u0, b.w);
  });
  return out;
}

// Backtracking keeps the answer independent of gadget order; the maximal
// eccentricity heuristic makes dead ends rare.
bool reduce(AliveView& view, std::vector<ReductionStep>& steps, std::pair<int, int>& terminal) {
  if (view.count == 2) {
    std::vector<int> left;
    for (int v = 0; v < view.tree->order(); ++v) {
      if (view.alive[v]) left.push_back(v);
    }
    if (!view.tree->has_edge(left[0], left[1])) return false;
    terminal = {left[0], left[1]};
    return true;
  }
  if (view.count < 6) return false;
  for (const Candidate& c : gadget_candidates(view)) {
    view.alive[c.u0] = view.alive[c.u1] = view.alive[c.y] = view.alive[c.w] = false;
    view.count -= 4;
    steps.push_back({c.kept, c.u0, c.u1, c.y, c.w});
    if (reduce(view, steps, terminal)) return true;
    steps.pop_back();
    view.alive[c.u0] = view.alive[c.u1] = view.alive[c.y] = view.alive[c.w] = true;
    view.count += 4;
  }
  return false;
}

void require_feasible_lambda(const Rational& lambda) {
  if (lambda != 0 && lambda != 1 && lambda != -1) {
    throw std::invalid_argument(
        "simply structured bases exist only for eigenvalues 0, 1 and -1");
  }
}

}  // namespace

ClassCResult is_class_c(const Forest& t) {
  require_tree(t, "is_class_c");
  ClassCResult result;
  if (t.order() % 4 != 2) return result;

  AliveView view{&t, std::vector<bool>(t.order(), true), t.order()};
  ReductionTrace trace;
  if (!reduce(view, trace.steps, trace.terminal)) return result;

  // Replay backward from the all-ones vector on the terminal K2. The
  // gadget's values are forced by the value on the kept vertex.
  SignVector x(t.order(), 0);
  x[trace.terminal.first] = 1;
  x[trace.terminal.second] = 1;
  for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it) {
    x[it->y] = -x[it->kept];
    x[it->u0] = x[it->y];
    x[it->u1] = x[it->y];
    x[it->w] = x[it->kept];
  }

  result.member = true;
  result.trace = std::move(trace);
  result.certificate = std::move(x);
  return result;
}

bool has_simply_structured_basis(const Forest& t, const Rational& lambda) {
  require_tree(t, "has_simply_structured_basis");
  require_feasible_lambda(lambda);
  if (eigenspace_basis(t, lambda).empty()) {
    throw std::domain_error("has_simply_structured_basis: lambda is not an eigenvalue");
  }
  if (lambda == 0) return true;
  // The bipartite sign flip turns the question for -1 into the one for +1,
  // and both eigenvalues share their always-zero set.
  SupportReport report = support_report(t, Rational(1));
  for (const auto& comp : report.eigen_components) {
    if (!is_class_c(t.induced(comp)).member) return false;
  }
  return true;
}

std::vector<SignVector> simply_structured_basis(const Forest& t, const Rational& lambda) {
  require_tree(t, "simply_structured_basis");
  require_feasible_lambda(lambda);
  if (!has_simply_structured_basis(t, lambda)) {
    throw std::domain_error("simply_structured_basis: no simply structured basis exists");
  }
  if (lambda == 0) return kernel_basis(t);

  // Work at eigenvalue one; flip a bipartition class afterwards for -1.
  TreePatternMatrix a = TreePatternMatrix::adjacency(t);
  SkeletonForest skel = skeleton(t, Rational(1));

  // {1,-1} certificate per eigen-component, indexed by skeleton vertex.
  const int sn = skel.forest.order();
  std::vector<SignVector> certificate(sn);
  for (int v = 0; v < sn; ++v) {
    if (skel.kind[v] != SkeletonVertexKind::Contracted) continue;
    ClassCResult sub = is_class_c(t.induced(skel.members[v]));
    if (!sub.member) {
      throw std::logic_error("simply_structured_basis: component lost class-C membership");
    }
    certificate[v] = *sub.certificate;
  }

  const std::vector<int> owner = skel.original_to_skeleton();
  auto entry_at = [&](int c, int original) {
    const auto& mem = skel.members[c];
    auto it = std::lower_bound(mem.begin(), mem.end(), original);
    return certificate[c][static_cast<std::size_t>(it - mem.begin())];
  };
  auto attachment = [&](int c, int w_orig) {
    for (int cand : t.neighbors(w_orig)) {
      if (owner[cand] == c) return cand;
    }
    throw std::logic_error("simply_structured_basis: missing attachment vertex");
  };

  std::vector<SignVector> basis;
  for (const SignVector& s : kernel_basis(skel.forest)) {
    // Assign certificates to the non-zero components, then fix the
    // summation rule at every boundary vertex by sign flips. A skeleton
    // kernel vector leaves each boundary vertex either untouched or with
    // exactly two non-zero neighbors, so factors 1 and -1 suffice.
    std::vector<int> sign(sn, 0);
    std::vector<bool> visited(sn, false);
    std::vector<bool> processed(sn, false);
    int root = -1;
    for (int v = 0; v < sn; ++v) {
      if (s[v] != 0) {
        root = v;
        break;
      }
    }
    if (root < 0) throw std::logic_error("simply_structured_basis: zero skeleton vector");
    sign[root] = 1;
    visited[root] = true;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int w : skel.forest.neighbors(v)) {
        if (processed[w]) continue;
        processed[w] = true;
        const int w_orig = skel.members[w].front();
        // Contribution of the already-determined side at w, if any.
        int pending = sign[v] == 0 ? 0 : sign[v] * entry_at(v, attachment(v, w_orig));
        for (int c : skel.forest.neighbors(w)) {
          if (visited[c]) continue;
          visited[c] = true;
          queue.push_back(c);
          if (s[c] == 0) continue;
          int e = entry_at(c, attachment(c, w_orig));
          if (pending == 0) {
            sign[c] = 1;
            pending = e;
          } else {
            sign[c] = -pending * e;  // 1/e equals e on {1,-1}
            pending = 0;
          }
        }
        if (pending != 0) {
          throw std::logic_error("simply_structured_basis: unbalanced boundary vertex");
        }
      }
    }

    SignVector x(t.order(), 0);
    for (int v = 0; v < sn; ++v) {
      if (sign[v] == 0) continue;
      for (int u : skel.members[v]) x[u] = sign[v] * entry_at(v, u);
    }
    if (!verify_eigenvector(a, Rational(1), to_rational(x))) {
      throw std::logic_error("simply_structured_basis: constructed vector failed verification");
    }
    basis.push_back(std::move(x));
  }

  if (lambda == -1) {
    auto parts = bipartition(t);
    for (auto& x : basis) {
      for (int v : parts.second) x[v] = -x[v];
      if (!verify_eigenvector(a, Rational(-1), to_rational(x))) {
        throw std::logic_error("simply_structured_basis: bipartite flip failed verification");
      }
    }
  }
  return basis;
}

}  // namespace treespect

#include "treespect/matching.hpp"

#include <algorithm>
#include <deque>

namespace treespect {

RationalVector to_rational(const SignVector& x) {
  RationalVector out;
  out.reserve(x.size());
  for (int e : x) out.emplace_back(e);
  return out;
}

Matching maximum_matching(const Forest& f) {
  const int n = f.order();
  Matching m;
  m.mate.assign(n, -1);
  std::vector<int> parent(n, -1);
  std::vector<bool> seen(n, false);
  for (int root = 0; root < n; ++root) {
    if (seen[root]) continue;
    // Iterative DFS collecting a post-order of the component.
    std::vector<int> order;
    std::vector<int> stack{root};
    seen[root] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      order.push_back(v);
      for (int u : f.neighbors(v)) {
        if (!seen[u]) {
          seen[u] = true;
          parent[u] = v;
          stack.push_back(u);
        }
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      int v = *it;
      int p = parent[v];
      if (p != -1 && m.mate[v] == -1 && m.mate[p] == -1) {
        m.mate[v] = p;
        m.mate[p] = v;
        m.edges.emplace_back(std::min(v, p), std::max(v, p));
      }
    }
  }
  return m;
}

int matching_number(const Forest& f) { return maximum_matching(f).size(); }

MatchingClassification classify_vertices(const Forest& f) {
  MatchingClassification out;
  out.matching = maximum_matching(f);
  const int nu = out.matching.size();
  for (int v = 0; v < f.order(); ++v) {
    if (matching_number(f.without_vertices({v})) == nu) {
      out.may_be_missed.push_back(v);
    } else {
      out.never_missed.push_back(v);
    }
    if (out.matching.mate[v] == -1) out.missed.push_back(v);
  }
  for (auto [u, v] : f.edges()) {
    if (matching_number(f.without_edge(u, v)) < nu) {
      out.forced_edges.emplace_back(u, v);
    }
  }
  std::sort(out.forced_edges.begin(), out.forced_edges.end());
  return out;
}

std::vector<SignVector> kernel_basis(const Forest& f) {
  const int n = f.order();
  MatchingClassification cls = classify_vertices(f);
  std::vector<bool> in_k(n, false);
  for (int v : cls.may_be_missed) in_k[v] = true;
  std::vector<bool> missed(n, false);
  for (int v : cls.missed) missed[v] = true;

  std::vector<SignVector> basis;
  for (int v : cls.missed) {
    SignVector x(n, 0);
    x[v] = 1;
    // BFS over the alternating-path subtree S_v: non-matching edges leave
    // K-vertices for N-vertices, matching edges leave N-vertices for their
    // mates, and other missed vertices stay outside.
    std::deque<std::pair<int, int>> queue{{v, 0}};  // (vertex, distance)
    std::vector<bool> visited(n, false);
    visited[v] = true;
    while (!queue.empty()) {
      auto [u, dist] = queue.front();
      queue.pop_front();
      if (dist % 2 == 0) {
        for (int w : f.neighbors(u)) {
          if (visited[w] || cls.matching.mate[u] == w) continue;
          if (in_k[w]) continue;  // edge must join K to N; K is independent anyway
          visited[w] = true;
          queue.emplace_back(w, dist + 1);
        }
      } else {
        int w = cls.matching.mate[u];
        if (w == -1 || visited[w]) continue;
        if (!in_k[w]) continue;            // matched pair inside N ends the path
        if (missed[w]) continue;           // unreachable: mates are covered
        visited[w] = true;
        x[w] = (dist + 1) % 4 == 0 ? 1 : -1;
        queue.emplace_back(w, dist + 1);
      }
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace treespect

#include "treespect/oracles.hpp"

namespace treespect {

namespace {

void extend_matchings(const Forest& f, std::size_t edge_index, std::vector<bool>& covered,
                      std::vector<std::pair<int, int>>& current,
                      std::vector<std::vector<std::pair<int, int>>>& out, std::size_t target) {
  if (current.size() == target) {
    out.push_back(current);
    return;
  }
  if (edge_index >= f.edges().size()) return;
  // Prune: not enough edges left to reach the target.
  if (current.size() + (f.edges().size() - edge_index) < target) return;
  auto [u, v] = f.edges()[edge_index];
  if (!covered[u] && !covered[v]) {
    covered[u] = covered[v] = true;
    current.emplace_back(u, v);
    extend_matchings(f, edge_index + 1, covered, current, out, target);
    current.pop_back();
    covered[u] = covered[v] = false;
  }
  extend_matchings(f, edge_index + 1, covered, current, out, target);
}

}  // namespace

std::vector<std::vector<std::pair<int, int>>> enumerate_maximum_matchings(const Forest& f) {
  const std::size_t target = static_cast<std::size_t>(matching_number(f));
  std::vector<std::vector<std::pair<int, int>>> out;
  std::vector<bool> covered(f.order(), false);
  std::vector<std::pair<int, int>> current;
  extend_matchings(f, 0, covered, current, out, target);
  return out;
}

std::optional<SignVector> exhaustive_pm1_eigenvector(const Forest& t) {
  const int n = t.order();
  if (n > 24) throw std::invalid_argument("exhaustive_pm1_eigenvector: tree too large");
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) {
      int sum = 0;
      for (int u : t.neighbors(v)) sum += (mask >> u) & 1 ? -1 : 1;
      int value = (mask >> v) & 1 ? -1 : 1;
      if (sum != value) ok = false;
    }
    if (ok) {
      SignVector x(n);
      for (int v = 0; v < n; ++v) x[v] = (mask >> v) & 1 ? -1 : 1;
      return x;
    }
  }
  return std::nullopt;
}

}  // namespace treespect

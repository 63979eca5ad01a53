#include "treespect/enumeration.hpp"

#include <algorithm>
#include <queue>

namespace treespect {

namespace {

std::vector<std::string> index_labels(int n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
  return labels;
}

std::vector<std::pair<int, int>> pruefer_edges(const std::vector<int>& seq, int n) {
  std::vector<int> degree(n, 1);
  for (int s : seq) degree.at(s) += 1;
  std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
  for (int v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  std::vector<std::pair<int, int>> edges;
  for (int s : seq) {
    int leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, s);
    if (--degree[s] == 1) leaves.push(s);
  }
  int a = leaves.top();
  leaves.pop();
  if (!leaves.empty()) {
    int b = leaves.top();
    edges.emplace_back(a, b);
  }
  return edges;
}

}  // namespace

Forest tree_from_pruefer(const std::vector<int>& seq, int n) {
  if (n < 1) throw std::invalid_argument("tree_from_pruefer: n must be positive");
  if (static_cast<int>(seq.size()) != std::max(0, n - 2)) {
    throw std::invalid_argument("tree_from_pruefer: sequence length must be n-2");
  }
  auto labels = index_labels(n);
  std::vector<std::pair<std::string, std::string>> edges;
  if (n >= 2) {
    for (auto [u, v] : pruefer_edges(seq, n)) {
      edges.emplace_back(labels[u], labels[v]);
    }
  }
  return Forest::build(labels, edges);
}

long long labeled_tree_count(int n) {
  if (n <= 2) return 1;
  long long count = 1;
  for (int i = 0; i < n - 2; ++i) count *= n;
  return count;
}

void for_each_labeled_tree(int n, const std::function<void(const Forest&)>& fn) {
  if (n <= 2) {
    fn(tree_from_pruefer({}, n));
    return;
  }
  std::vector<int> seq(n - 2, 0);
  while (true) {
    fn(tree_from_pruefer(seq, n));
    int pos = n - 3;
    while (pos >= 0 && seq[pos] == n - 1) {
      seq[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++seq[pos];
  }
}

Forest random_tree(int n, std::mt19937_64& rng) {
  if (n <= 2) return tree_from_pruefer({}, n);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> seq(n - 2);
  for (auto& s : seq) s = pick(rng);
  return tree_from_pruefer(seq, n);
}

namespace {

std::string encode_rooted(const Forest& f, const std::vector<int>& color, int v, int parent) {
  std::vector<std::string> child_codes;
  for (int u : f.neighbors(v)) {
    if (u != parent) child_codes.push_back(encode_rooted(f, color, u, v));
  }
  std::sort(child_codes.begin(), child_codes.end());
  std::string code = "(" + std::to_string(color.empty() ? 0 : color[v]) + ":";
  for (const auto& c : child_codes) code += c;
  code += ")";
  return code;
}

// Centers of a tree component (one or two), found by repeated leaf removal.
std::vector<int> centers(const Forest& f, const std::vector<int>& comp) {
  if (comp.size() <= 2) return comp;
  std::vector<int> degree(f.order(), 0);
  std::vector<bool> in(f.order(), false);
  for (int v : comp) in[v] = true;
  for (int v : comp) {
    for (int u : f.neighbors(v)) {
      if (in[u]) ++degree[v];
    }
  }
  std::vector<int> layer;
  std::vector<bool> removed(f.order(), false);
  for (int v : comp) {
    if (degree[v] <= 1) layer.push_back(v);
  }
  int remaining = static_cast<int>(comp.size());
  while (remaining > 2) {
    std::vector<int> next;
    for (int v : layer) {
      removed[v] = true;
      --remaining;
      for (int u : f.neighbors(v)) {
        if (in[u] && !removed[u] && --degree[u] == 1) next.push_back(u);
      }
    }
    layer = std::move(next);
  }
  std::vector<int> out;
  for (int v : comp) {
    if (!removed[v]) out.push_back(v);
  }
  return out;
}

std::string encode_component(const Forest& f, const std::vector<int>& color,
                             const std::vector<int>& comp) {
  std::string best;
  for (int c : centers(f, comp)) {
    std::string code = encode_rooted(f, color, c, -1);
    if (best.empty() || code < best) best = code;
  }
  return best;
}

}  // namespace

std::string canonical_form(const Forest& f) {
  return canonical_form_colored(f, {});
}

std::string canonical_form_colored(const Forest& f, const std::vector<int>& color) {
  std::vector<std::string> codes;
  for (const auto& comp : f.component_vertices()) {
    codes.push_back(encode_component(f, color, comp));
  }
  std::sort(codes.begin(), codes.end());
  std::string out;
  for (const auto& c : codes) out += c;
  return out;
}

}  // namespace treespect

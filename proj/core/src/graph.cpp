#include "treespect/graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace treespect {

namespace {

int uf_find(std::vector<int>& uf, int x) {
  while (uf[x] != x) {
    uf[x] = uf[uf[x]];
    x = uf[x];
  }
  return x;
}

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

}  // namespace

int Forest::add_vertex(const std::string& label, int line) {
  if (label.empty()) throw ParseError(line, "empty vertex label");
  auto it = index_.find(label);
  if (it != index_.end()) return it->second;
  int id = static_cast<int>(labels_.size());
  labels_.push_back(label);
  index_.emplace(label, id);
  adj_.emplace_back();
  return id;
}

void Forest::add_edge(int u, int v, int line, std::vector<int>& uf) {
  if (u == v) throw ParseError(line, "self-loop at '" + labels_[u] + "'");
  if (has_edge(u, v)) {
    throw ParseError(line, "duplicate edge '" + labels_[u] + " " + labels_[v] + "'");
  }
  int ru = uf_find(uf, u);
  int rv = uf_find(uf, v);
  if (ru == rv) {
    throw ParseError(line, "edge '" + labels_[u] + " " + labels_[v] + "' closes a cycle");
  }
  uf[ru] = rv;
  edges_.emplace_back(std::min(u, v), std::max(u, v));
  adj_[u].push_back(v);
  adj_[v].push_back(u);
}

Forest Forest::build(const std::vector<std::string>& vertices,
                     const std::vector<std::pair<std::string, std::string>>& edges) {
  Forest f;
  std::vector<int> uf;
  for (const auto& label : vertices) {
    if (f.index_.count(label)) {
      throw std::invalid_argument("duplicate vertex label '" + label + "'");
    }
    f.add_vertex(label, 0);
    uf.push_back(static_cast<int>(uf.size()));
  }
  for (const auto& [a, b] : edges) {
    int u = f.add_vertex(a, 0);
    while (uf.size() < f.labels_.size()) uf.push_back(static_cast<int>(uf.size()));
    int v = f.add_vertex(b, 0);
    while (uf.size() < f.labels_.size()) uf.push_back(static_cast<int>(uf.size()));
    try {
      f.add_edge(u, v, 0, uf);
    } catch (const ParseError& e) {
      throw std::invalid_argument(e.what());
    }
  }
  for (auto& nbrs : f.adj_) std::sort(nbrs.begin(), nbrs.end());
  return f;
}

Forest Forest::parse(const std::string& text) {
  Forest f;
  std::vector<int> uf;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = split_ws(line);
    if (toks.empty() || toks[0][0] == '#') continue;
    if (toks.size() == 1) {
      f.add_vertex(toks[0], lineno);
      while (uf.size() < f.labels_.size()) uf.push_back(static_cast<int>(uf.size()));
    } else if (toks.size() == 2) {
      int u = f.add_vertex(toks[0], lineno);
      while (uf.size() < f.labels_.size()) uf.push_back(static_cast<int>(uf.size()));
      int v = f.add_vertex(toks[1], lineno);
      while (uf.size() < f.labels_.size()) uf.push_back(static_cast<int>(uf.size()));
      f.add_edge(u, v, lineno, uf);
    } else {
      throw ParseError(lineno, "expected 'u v' or a lone vertex label");
    }
  }
  for (auto& nbrs : f.adj_) std::sort(nbrs.begin(), nbrs.end());
  return f;
}

std::string Forest::serialize() const {
  std::vector<std::pair<std::string, std::string>> lex_edges;
  lex_edges.reserve(edges_.size());
  for (auto [u, v] : edges_) {
    std::string a = labels_[u];
    std::string b = labels_[v];
    if (b < a) std::swap(a, b);
    lex_edges.emplace_back(std::move(a), std::move(b));
  }
  std::sort(lex_edges.begin(), lex_edges.end());
  std::vector<std::string> isolated;
  for (int v = 0; v < order(); ++v) {
    if (adj_[v].empty()) isolated.push_back(labels_[v]);
  }
  std::sort(isolated.begin(), isolated.end());
  std::ostringstream out;
  for (const auto& [a, b] : lex_edges) out << a << ' ' << b << '\n';
  for (const auto& v : isolated) out << v << '\n';
  return out.str();
}

std::optional<int> Forest::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int Forest::require_index(const std::string& label) const {
  auto idx = index_of(label);
  if (!idx) throw std::invalid_argument("unknown vertex '" + label + "'");
  return *idx;
}

int Forest::max_degree() const {
  int d = 0;
  for (const auto& nbrs : adj_) d = std::max(d, static_cast<int>(nbrs.size()));
  return d;
}

bool Forest::has_edge(int u, int v) const {
  // Linear scan: adjacency lists are unsorted while a parse is in flight.
  const auto& nbrs = adj_.at(u);
  return std::find(nbrs.begin(), nbrs.end(), v) != nbrs.end();
}

bool Forest::is_tree() const {
  return order() >= 1 && edge_count() == order() - 1 && component_count() == 1;
}

std::vector<int> Forest::component_ids() const {
  std::vector<int> comp(order(), -1);
  int next = 0;
  std::vector<int> stack;
  for (int s = 0; s < order(); ++s) {
    if (comp[s] != -1) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : adj_[v]) {
        if (comp[u] == -1) {
          comp[u] = next;
          stack.push_back(u);
        }
      }
    }
    ++next;
  }
  return comp;
}

int Forest::component_count() const {
  auto ids = component_ids();
  int m = 0;
  for (int c : ids) m = std::max(m, c + 1);
  return m;
}

std::vector<std::vector<int>> Forest::component_vertices() const {
  auto ids = component_ids();
  int m = 0;
  for (int c : ids) m = std::max(m, c + 1);
  std::vector<std::vector<int>> out(m);
  for (int v = 0; v < order(); ++v) out[ids[v]].push_back(v);
  return out;
}

Forest Forest::without_vertices(const std::vector<int>& removed) const {
  std::vector<bool> gone(order(), false);
  for (int v : removed) gone.at(v) = true;
  std::vector<int> keep;
  for (int v = 0; v < order(); ++v) {
    if (!gone[v]) keep.push_back(v);
  }
  return induced(keep);
}

Forest Forest::without_edge(int u, int v) const {
  std::vector<std::pair<std::string, std::string>> es;
  for (auto [a, b] : edges_) {
    if ((a == u && b == v) || (a == v && b == u)) continue;
    es.emplace_back(labels_[a], labels_[b]);
  }
  return build(labels_, es);
}

Forest Forest::induced(const std::vector<int>& keep) const {
  std::vector<bool> in(order(), false);
  for (int v : keep) in.at(v) = true;
  std::vector<std::string> verts;
  for (int v = 0; v < order(); ++v) {
    if (in[v]) verts.push_back(labels_[v]);
  }
  std::vector<std::pair<std::string, std::string>> es;
  for (auto [u, v] : edges_) {
    if (in[u] && in[v]) es.emplace_back(labels_[u], labels_[v]);
  }
  return build(verts, es);
}

bool Forest::same_graph(const Forest& other) const {
  if (order() != other.order() || edge_count() != other.edge_count()) return false;
  std::set<std::string> a(labels_.begin(), labels_.end());
  std::set<std::string> b(other.labels_.begin(), other.labels_.end());
  if (a != b) return false;
  std::set<std::pair<std::string, std::string>> ea;
  std::set<std::pair<std::string, std::string>> eb;
  for (auto [u, v] : edges_) {
    auto p = std::minmax(labels_[u], labels_[v]);
    ea.emplace(p.first, p.second);
  }
  for (auto [u, v] : other.edges_) {
    auto p = std::minmax(other.labels_[u], other.labels_[v]);
    eb.emplace(p.first, p.second);
  }
  return ea == eb;
}

std::vector<Forest> components(const Forest& f) {
  std::vector<Forest> out;
  for (const auto& part : f.component_vertices()) {
    out.push_back(f.induced(part));
  }
  return out;
}

Forest remove_vertices(const Forest& f, const std::vector<std::string>& labels) {
  std::vector<int> removed;
  removed.reserve(labels.size());
  for (const auto& l : labels) removed.push_back(f.require_index(l));
  return f.without_vertices(removed);
}

ContractionResult contract_subgraphs(const Forest& f,
                                     const std::vector<std::vector<int>>& parts) {
  const int n = f.order();
  std::vector<int> part_of(n, -1);
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (parts[p].empty()) throw std::invalid_argument("empty contraction part");
    for (int v : parts[p]) {
      if (v < 0 || v >= n) throw std::invalid_argument("contraction part vertex out of range");
      if (part_of[v] != -1) {
        throw std::invalid_argument("overlapping contraction parts at '" + f.label(v) + "'");
      }
      part_of[v] = static_cast<int>(p);
    }
  }
  // Each part must induce a connected subgraph.
  for (std::size_t p = 0; p < parts.size(); ++p) {
    Forest sub = f.induced(parts[p]);
    if (sub.component_count() != 1) {
      throw std::invalid_argument("contraction part is not connected");
    }
  }

  // Contracted vertices appear at the position of their first member;
  // labels "C#k" follow discovery order over vertex order.
  std::vector<int> part_rank(parts.size(), -1);
  std::vector<std::string> verts;
  std::vector<std::vector<int>> origin;
  std::vector<bool> synthesized;
  std::vector<int> image(n, -1);
  int next_rank = 0;
  auto fresh_label = [&f](std::string candidate) {
    while (f.index_of(candidate)) candidate += "'";
    return candidate;
  };
  for (int v = 0; v < n; ++v) {
    int p = part_of[v];
    if (p == -1) {
      image[v] = static_cast<int>(verts.size());
      verts.push_back(f.label(v));
      origin.push_back({v});
      synthesized.push_back(false);
    } else if (part_rank[p] == -1) {
      part_rank[p] = ++next_rank;
      int id = static_cast<int>(verts.size());
      verts.push_back(fresh_label("C#" + std::to_string(part_rank[p])));
      std::vector<int> members = parts[p];
      std::sort(members.begin(), members.end());
      origin.push_back(std::move(members));
      synthesized.push_back(true);
      for (int u : parts[p]) image[u] = id;
    }
  }
  std::set<std::pair<int, int>> seen;
  std::vector<std::pair<std::string, std::string>> es;
  for (auto [u, v] : f.edges()) {
    int a = image[u];
    int b = image[v];
    if (a == b) continue;
    auto key = std::minmax(a, b);
    if (!seen.insert(key).second) {
      // Two original edges between the same contracted pair would close a
      // cycle; Forest::build would reject it anyway, with a worse message.
      throw std::invalid_argument("contraction would create a multi-edge");
    }
    es.emplace_back(verts[a], verts[b]);
  }
  ContractionResult result{Forest::build(verts, es), std::move(origin), std::move(synthesized)};
  return result;
}

std::pair<std::vector<int>, std::vector<int>> bipartition(const Forest& f) {
  std::vector<int> color(f.order(), -1);
  std::vector<int> stack;
  for (int s = 0; s < f.order(); ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : f.neighbors(v)) {
        if (color[u] == -1) {
          color[u] = 1 - color[v];
          stack.push_back(u);
        }
      }
    }
  }
  std::pair<std::vector<int>, std::vector<int>> out;
  for (int v = 0; v < f.order(); ++v) {
    (color[v] == 0 ? out.first : out.second).push_back(v);
  }
  return out;
}

void require_tree(const Forest& f, const char* where) {
  if (!f.is_tree()) {
    throw std::invalid_argument(std::string(where) + ": input graph is not a tree");
  }
}

}  // namespace treespect

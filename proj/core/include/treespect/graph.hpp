#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace treespect {

// Input document could not be parsed; line numbers are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Vertex-labeled undirected acyclic graph. Immutable after construction;
// all derived graphs are new values. Vertices are addressed by index in
// vertex order (first appearance in the source document).
class Forest {
 public:
  Forest() = default;

  // Validates label uniqueness, self-loops, duplicate edges and acyclicity.
  static Forest build(const std::vector<std::string>& vertices,
                      const std::vector<std::pair<std::string, std::string>>& edges);

  // Edge-list document: each non-comment line is "u v" or a lone vertex
  // label. Blank lines and lines starting with '#' are ignored.
  static Forest parse(const std::string& text);

  // One edge per line in lexicographic order, isolated vertices as lone labels.
  std::string serialize() const;

  int order() const { return static_cast<int>(labels_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::string& label(int v) const { return labels_.at(v); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<int> index_of(const std::string& label) const;
  int require_index(const std::string& label) const;

  // Ascending neighbor indices.
  const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
  int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
  int max_degree() const;
  bool has_edge(int u, int v) const;
  // Normalized (u < v), in insertion order.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  bool is_tree() const;
  int component_count() const;
  // Per-vertex component id; ids follow discovery order over vertex order.
  std::vector<int> component_ids() const;
  // Vertex sets of the components, discovery order, each ascending.
  std::vector<std::vector<int>> component_vertices() const;

  Forest without_vertices(const std::vector<int>& removed) const;
  Forest without_edge(int u, int v) const;
  // Subgraph induced by `keep` (indices, any order); vertex order preserved.
  Forest induced(const std::vector<int>& keep) const;

  // Label set and edge set equality; vertex order is not compared.
  bool same_graph(const Forest& other) const;

 private:
  int add_vertex(const std::string& label, int line);
  void add_edge(int u, int v, int line, std::vector<int>& uf);

  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> index_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
};

std::vector<Forest> components(const Forest& f);

// Removes the given vertices and all their incident edges.
// Throws std::invalid_argument on unknown labels.
Forest remove_vertices(const Forest& f, const std::vector<std::string>& labels);

struct ContractionResult {
  Forest contracted;
  // Original vertex indices represented by each contracted-graph vertex,
  // aligned with the contracted vertex order. The sets partition the
  // original vertex set.
  std::vector<std::vector<int>> origin;
  // True for vertices synthesized from a contracted part ("C#k" labels).
  std::vector<bool> was_contracted;
};

// Contracts each part (a connected set of vertex indices) to a single
// vertex labeled "C#k", k in discovery order over vertex order. Parts must
// be pairwise disjoint and induce connected subgraphs.
ContractionResult contract_subgraphs(const Forest& f,
                                     const std::vector<std::vector<int>>& parts);

// Two-coloring; the part containing the first vertex of each component is
// the first set. Returns ascending index lists.
std::pair<std::vector<int>, std::vector<int>> bipartition(const Forest& f);

// Throws std::invalid_argument when f is not a tree.
void require_tree(const Forest& f, const char* where);

}  // namespace treespect

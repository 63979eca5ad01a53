#include "treespect/composition.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "treespect/enumeration.hpp"

namespace treespect {

namespace {

// Components of spec.tree minus X together with each component's matching
// classification, reused by validation and substitution.
struct SpecParts {
  std::vector<std::vector<int>> components;  // original indices
  std::vector<MatchingClassification> classification;
  std::vector<Forest> induced;
  std::vector<char> missable;  // per original vertex of S'
};

SpecParts analyze(const MetaSkeletonSpec& spec) {
  SpecParts parts;
  parts.missable.assign(spec.tree.order(), 0);
  Forest rest = spec.tree.without_vertices(spec.non_eigenvalue_set);
  for (const auto& comp : rest.component_vertices()) {
    std::vector<int> orig;
    orig.reserve(comp.size());
    for (int v : comp) orig.push_back(spec.tree.require_index(rest.label(v)));
    Forest sub = spec.tree.induced(orig);
    MatchingClassification cls = classify_vertices(sub);
    for (int v : cls.may_be_missed) {
      parts.missable[spec.tree.require_index(sub.label(v))] = 1;
    }
    parts.components.push_back(std::move(orig));
    parts.classification.push_back(std::move(cls));
    parts.induced.push_back(std::move(sub));
  }
  return parts;
}

}  // namespace

std::vector<Violation> validate_meta_skeleton(const MetaSkeletonSpec& spec) {
  std::vector<Violation> out;
  const Forest& t = spec.tree;
  std::vector<bool> in_x(t.order(), false);
  for (int v : spec.non_eigenvalue_set) in_x.at(v) = true;

  for (std::size_t i = 0; i < spec.non_eigenvalue_set.size(); ++i) {
    for (std::size_t j = i + 1; j < spec.non_eigenvalue_set.size(); ++j) {
      int a = spec.non_eigenvalue_set[i];
      int b = spec.non_eigenvalue_set[j];
      if (t.has_edge(a, b)) {
        out.push_back({"independent", "X vertices '" + t.label(a) + "' and '" + t.label(b) +
                                          "' are adjacent"});
      }
    }
  }

  SpecParts parts = analyze(spec);
  for (std::size_t c = 0; c < parts.components.size(); ++c) {
    const auto& comp = parts.components[c];
    const auto& cls = parts.classification[c];
    const Forest& sub = parts.induced[c];
    if (2 * cls.matching.size() == static_cast<int>(comp.size())) {
      out.push_back({"no-perfect-matching", "component containing '" +
                                                t.label(comp.front()) +
                                                "' has a perfect matching"});
    }
    for (int v : cls.may_be_missed) {
      int orig = t.require_index(sub.label(v));
      for (int u : t.neighbors(orig)) {
        if (in_x[u]) {
          out.push_back({"only-never-missed-adjacent",
                         "missable vertex '" + t.label(orig) + "' is adjacent to X vertex '" +
                             t.label(u) + "'"});
        }
      }
    }
    for (auto [u, v] : cls.forced_edges) {
      out.push_back({"no-forced-edge", "edge '" + sub.label(u) + " " + sub.label(v) +
                                           "' lies in every maximum matching of its component"});
    }
  }
  return out;
}

BlowupResult substitute(const MetaSkeletonSpec& spec, const BlowupPlan& plan) {
  const Forest& t = spec.tree;
  if (static_cast<int>(plan.replacements.size()) != t.order()) {
    throw std::invalid_argument("blow-up plan does not cover every vertex");
  }

  std::vector<std::string> verts;
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::vector<std::string>> copy_labels(t.order());
  for (int v = 0; v < t.order(); ++v) {
    const Replacement& rep = plan.replacements[v];
    if (rep.tree.order() == 0 || !rep.tree.is_tree()) {
      throw std::invalid_argument("replacement for '" + t.label(v) + "' is not a tree");
    }
    if (rep.attachment < 0 || rep.attachment >= rep.tree.order()) {
      throw std::invalid_argument("attachment vertex out of range for '" + t.label(v) + "'");
    }
    for (int u = 0; u < rep.tree.order(); ++u) {
      std::string name =
          rep.tree.order() == 1 ? t.label(v) : t.label(v) + "." + rep.tree.label(u);
      copy_labels[v].push_back(name);
      verts.push_back(std::move(name));
    }
    for (auto [a, b] : rep.tree.edges()) {
      edges.emplace_back(copy_labels[v][a], copy_labels[v][b]);
    }
  }
  for (auto [u, v] : t.edges()) {
    edges.emplace_back(copy_labels[u][plan.replacements[u].attachment],
                       copy_labels[v][plan.replacements[v].attachment]);
  }

  BlowupResult result;
  result.tree = Forest::build(verts, edges);
  SpecParts parts = analyze(spec);
  for (std::size_t c = 0; c < parts.components.size(); ++c) {
    result.predicted_multiplicity += static_cast<int>(parts.components[c].size()) -
                                     2 * parts.classification[c].matching.size();
  }
  return result;
}

BlowupResult blow_up(const MetaSkeletonSpec& spec, const BlowupPlan& plan) {
  std::vector<Violation> violations = validate_meta_skeleton(spec);
  if (!violations.empty()) {
    std::string msg = "meta skeleton invalid:";
    for (const auto& v : violations) msg += " [" + v.condition + "] " + v.detail + ";";
    throw std::domain_error(msg);
  }
  if (static_cast<int>(plan.replacements.size()) != spec.tree.order()) {
    throw std::invalid_argument("blow-up plan does not cover every vertex");
  }

  SpecParts parts = analyze(spec);
  std::vector<bool> in_x(spec.tree.order(), false);
  for (int v : spec.non_eigenvalue_set) in_x[v] = true;

  for (int v = 0; v < spec.tree.order(); ++v) {
    const Replacement& rep = plan.replacements[v];
    RationalBasis basis = eigenspace_basis(rep.tree, spec.lambda);
    if (in_x[v]) {
      if (!basis.empty()) {
        throw std::domain_error("replacement for X vertex '" + spec.tree.label(v) +
                                "' has the eigenvalue");
      }
    } else if (parts.missable[v]) {
      bool zero_free = basis.dimension() == 1;
      if (zero_free) {
        for (const auto& e : basis.vectors[0]) {
          if (e == 0) zero_free = false;
        }
      }
      if (!zero_free) {
        throw std::domain_error("replacement for missable vertex '" + spec.tree.label(v) +
                                "' lacks a zero-free eigenvector");
      }
    } else if (rep.tree.order() != 1) {
      throw std::domain_error("never-missed vertex '" + spec.tree.label(v) +
                              "' must stay a single vertex");
    }
  }
  return substitute(spec, plan);
}

namespace {

constexpr int kDeskBound = 12;
constexpr int kExhaustiveLimit = 8;
constexpr int kSamplesPerOrder = 3000;

bool has_zero_free_simple_eigenspace(const Forest& t, const Rational& lambda) {
  RationalBasis basis = eigenspace_basis(t, lambda);
  if (basis.dimension() != 1) return false;
  for (const auto& e : basis.vectors[0]) {
    if (e == 0) return false;
  }
  return true;
}

}  // namespace

Ingredients generate_ingredients(const Rational& lambda, int n_max, unsigned long long seed) {
  if (n_max < 1 || n_max > kDeskBound) {
    throw std::invalid_argument("generate_ingredients: n_max outside the desk bound");
  }
  std::map<std::pair<int, std::string>, Forest> without;
  std::map<std::pair<int, std::string>, Forest> zero_free;
  auto consider = [&](const Forest& t) {
    std::pair<int, std::string> key{t.order(), canonical_form(t)};
    if (without.count(key) || zero_free.count(key)) return;
    if (eigenspace_basis(t, lambda).empty()) {
      without.emplace(std::move(key), t);
    } else if (has_zero_free_simple_eigenspace(t, lambda)) {
      zero_free.emplace(std::move(key), t);
    }
  };

  std::mt19937_64 rng(seed);
  for (int n = 1; n <= n_max; ++n) {
    if (n <= kExhaustiveLimit) {
      for_each_labeled_tree(n, consider);
    } else {
      for (int i = 0; i < kSamplesPerOrder; ++i) consider(random_tree(n, rng));
    }
  }

  Ingredients out;
  for (auto& [key, t] : without) out.without_lambda.push_back(std::move(t));
  for (auto& [key, t] : zero_free) out.zero_free.push_back(std::move(t));
  return out;
}

ComposeDocument parse_compose_document(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  std::optional<Rational> lambda;
  std::vector<std::string> nodes;
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::string> nonev;
  struct RawReplacement {
    std::string attachment;
    std::vector<std::string> items;
    int line;
  };
  std::map<std::string, RawReplacement> raw;

  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok) || tok[0] == '#') continue;
    if (tok == "lambda") {
      std::string value;
      if (!(ls >> value)) throw ParseError(lineno, "lambda needs a value");
      try {
        lambda = parse_rational(value);
      } catch (const std::invalid_argument& e) {
        throw ParseError(lineno, e.what());
      }
    } else if (tok == "node") {
      std::string v;
      if (!(ls >> v)) throw ParseError(lineno, "node needs a label");
      nodes.push_back(v);
    } else if (tok == "edge") {
      std::string u, v;
      if (!(ls >> u >> v)) throw ParseError(lineno, "edge needs two labels");
      edges.emplace_back(u, v);
    } else if (tok == "nonev") {
      std::string v;
      if (!(ls >> v)) throw ParseError(lineno, "nonev needs a label");
      nonev.push_back(v);
    } else if (tok == "replace") {
      RawReplacement rep;
      rep.line = lineno;
      std::string v;
      if (!(ls >> v >> rep.attachment)) {
        throw ParseError(lineno, "replace needs a vertex and an attachment");
      }
      std::string item;
      while (ls >> item) rep.items.push_back(item);
      if (rep.items.empty()) throw ParseError(lineno, "replace needs at least one item");
      raw[v] = std::move(rep);
    } else {
      throw ParseError(lineno, "unknown directive '" + tok + "'");
    }
  }
  if (!lambda) throw ParseError(lineno, "missing lambda");

  ComposeDocument doc;
  doc.spec.lambda = *lambda;
  try {
    std::vector<std::pair<std::string, std::string>> spec_edges = edges;
    Forest tree = Forest::build(nodes, spec_edges);
    doc.spec.tree = tree;
  } catch (const std::invalid_argument& e) {
    throw ParseError(lineno, e.what());
  }
  for (const auto& x : nonev) {
    doc.spec.non_eigenvalue_set.push_back(doc.spec.tree.require_index(x));
  }
  std::sort(doc.spec.non_eigenvalue_set.begin(), doc.spec.non_eigenvalue_set.end());

  doc.plan.replacements.resize(doc.spec.tree.order());
  for (int v = 0; v < doc.spec.tree.order(); ++v) {
    auto it = raw.find(doc.spec.tree.label(v));
    if (it == raw.end()) {
      doc.plan.replacements[v].tree = Forest::build({doc.spec.tree.label(v)}, {});
      doc.plan.replacements[v].attachment = 0;
      continue;
    }
    const RawReplacement& rep = it->second;
    std::vector<std::string> rep_nodes;
    std::vector<std::pair<std::string, std::string>> rep_edges;
    for (const auto& item : rep.items) {
      auto dash = item.find('-');
      if (dash == std::string::npos) {
        rep_nodes.push_back(item);
      } else {
        rep_edges.emplace_back(item.substr(0, dash), item.substr(dash + 1));
      }
    }
    Forest rt;
    try {
      rt = Forest::build(rep_nodes, rep_edges);
    } catch (const std::invalid_argument& e) {
      throw ParseError(rep.line, e.what());
    }
    if (!rt.is_tree()) {
      throw ParseError(rep.line, "replacement for '" + it->first + "' is not a tree");
    }
    doc.plan.replacements[v].attachment = rt.require_index(rep.attachment);
    doc.plan.replacements[v].tree = std::move(rt);
  }
  for (const auto& [label, rep] : raw) {
    if (!doc.spec.tree.index_of(label)) {
      throw ParseError(rep.line, "replace names unknown vertex '" + label + "'");
    }
  }
  return doc;
}

}  // namespace treespect

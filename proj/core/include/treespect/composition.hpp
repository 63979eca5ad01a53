#pragma once

#include "treespect/skeleton.hpp"

namespace treespect {

// Candidate meta skeleton: a tree S' with an independent non-eigenvalue set
// X and a target eigenvalue for the blow-up.
struct MetaSkeletonSpec {
  Forest tree;                     // S'
  std::vector<int> non_eigenvalue_set;  // X, ascending indices into tree
  Rational lambda;
};

struct Violation {
  std::string condition;
  std::string detail;
};

// The four definitional conditions: X independent; every component of
// S' minus X lacks a perfect matching; only never-missed vertices of a
// component touch X; no edge of S' minus X is forced. Empty result = ok.
std::vector<Violation> validate_meta_skeleton(const MetaSkeletonSpec& spec);

// Replacement tree per S'-vertex with a marked attachment vertex.
struct Replacement {
  Forest tree;
  int attachment = 0;
};

struct BlowupPlan {
  std::vector<Replacement> replacements;  // aligned with spec.tree vertices
};

struct BlowupResult {
  Forest tree;
  int predicted_multiplicity = 0;  // misses of a maximum matching of S' minus X
};

// Substitution only; no validation. Vertices of single-vertex replacements
// keep the S' label, others become "<spec label>.<replacement label>".
BlowupResult substitute(const MetaSkeletonSpec& spec, const BlowupPlan& plan);

// Validates the spec and the plan's eigen-conditions, then substitutes:
// X vertices get trees without the eigenvalue, missable vertices trees with
// a zero-free eigenvector for it, never-missed vertices stay single.
// Throws std::domain_error listing violations.
BlowupResult blow_up(const MetaSkeletonSpec& spec, const BlowupPlan& plan);

// Search classification of small trees used to feed blow-up plans, deduped
// up to isomorphism and ordered by (order, canonical form). Exhaustive up
// to the enumeration limit, seeded sampling beyond it.
struct Ingredients {
  std::vector<Forest> without_lambda;
  std::vector<Forest> zero_free;  // eigenspace is one zero-free vector
};

Ingredients generate_ingredients(const Rational& lambda, int n_max, unsigned long long seed);

// Text document for the compose command:
//   lambda <p/q>
//   node <v>            (optional isolated S' vertex)
//   edge <u> <v>
//   nonev <x>           (membership in X)
//   replace <v> <attachment> <item> [<item> ...]
// where each <item> is "a-b" (an edge) or a lone vertex label. Vertices
// without a replace line stay single. '#' comments and blanks are ignored.
struct ComposeDocument {
  MetaSkeletonSpec spec;
  BlowupPlan plan;
};

ComposeDocument parse_compose_document(const std::string& text);

}  // namespace treespect

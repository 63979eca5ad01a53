#pragma once

#include <functional>
#include <random>

#include "treespect/graph.hpp"

namespace treespect {

// Labeled tree on n vertices "v0".."v{n-1}" decoded from a Pruefer sequence
// (length n-2, entries in [0, n)).
Forest tree_from_pruefer(const std::vector<int>& seq, int n);

// Calls fn for every labeled tree on n vertices (n^(n-2) of them, n >= 1).
void for_each_labeled_tree(int n, const std::function<void(const Forest&)>& fn);

long long labeled_tree_count(int n);

// Uniform over labeled trees via a random Pruefer sequence.
Forest random_tree(int n, std::mt19937_64& rng);

// Isomorphism-invariant encoding (canonical rooted encoding at the tree
// centers, components sorted). Two forests get equal strings iff they are
// isomorphic.
std::string canonical_form(const Forest& f);

// As above with a per-vertex color folded into the encoding; isomorphisms
// must preserve colors.
std::string canonical_form_colored(const Forest& f, const std::vector<int>& color);

}  // namespace treespect

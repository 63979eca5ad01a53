#pragma once

#include <optional>

#include "treespect/matching.hpp"

namespace treespect {

// Brute-force oracles for desk-scale cross-checks. These stay independent
// of the production algorithms they are compared against.

// Every maximum matching, by backtracking over the edge list.
std::vector<std::vector<std::pair<int, int>>> enumerate_maximum_matchings(const Forest& f);

// Exhaustive search over all {1,-1} assignments for one satisfying the
// eigenvalue-one summation rule at every vertex.
std::optional<SignVector> exhaustive_pm1_eigenvector(const Forest& t);

}  // namespace treespect

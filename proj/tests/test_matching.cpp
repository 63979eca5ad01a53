#include <random>
#include <set>

#include "doctest.h"
#include "treespect/enumeration.hpp"
#include "treespect/linalg.hpp"
#include "treespect/matching.hpp"
#include "treespect/oracles.hpp"

using namespace treespect;

namespace {

Forest p3() { return Forest::parse("a b\nb c"); }
Forest p4() { return Forest::parse("a b\nb c\nc d"); }
Forest star() { return Forest::parse("m l1\nm l2\nm l3"); }

std::set<std::pair<std::string, std::string>> edge_labels(
    const Forest& f, const std::vector<std::pair<int, int>>& edges) {
  std::set<std::pair<std::string, std::string>> out;
  for (auto [u, v] : edges) {
    auto p = std::minmax(f.label(u), f.label(v));
    out.emplace(p.first, p.second);
  }
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("matching");

TEST_CASE("maximum matchings of small graphs") {
  CHECK(edge_labels(p4(), maximum_matching(p4()).edges) ==
        std::set<std::pair<std::string, std::string>>{{"a", "b"}, {"c", "d"}});
  CHECK(maximum_matching(star()).size() == 1);
  CHECK(maximum_matching(Forest::parse("v")).size() == 0);
}

TEST_CASE("matching size agrees with the enumeration oracle") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 40; ++i) {
    Forest t = random_tree(1 + static_cast<int>(rng() % 9), rng);
    auto all = enumerate_maximum_matchings(t);
    REQUIRE(!all.empty());
    CHECK(all.front().size() == static_cast<std::size_t>(matching_number(t)));
  }
}

TEST_CASE("classification of the worked examples") {
  MatchingClassification c3 = classify_vertices(p3());
  CHECK(c3.may_be_missed == std::vector<int>{0, 2});
  CHECK(c3.never_missed == std::vector<int>{1});
  CHECK(c3.forced_edges.empty());

  MatchingClassification c4 = classify_vertices(p4());
  CHECK(c4.may_be_missed.empty());
  CHECK(c4.never_missed == std::vector<int>{0, 1, 2, 3});
  CHECK(edge_labels(p4(), c4.forced_edges) ==
        std::set<std::pair<std::string, std::string>>{{"a", "b"}, {"c", "d"}});

  MatchingClassification cs = classify_vertices(star());
  CHECK(cs.may_be_missed == std::vector<int>{1, 2, 3});
  CHECK(cs.never_missed == std::vector<int>{0});
}

TEST_CASE("classification agrees with enumerating all maximum matchings") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 35; ++i) {
    Forest t = random_tree(1 + static_cast<int>(rng() % 8), rng);
    MatchingClassification cls = classify_vertices(t);
    auto all = enumerate_maximum_matchings(t);
    std::vector<bool> missable(t.order(), false);
    std::set<std::pair<int, int>> in_all(all.front().begin(), all.front().end());
    for (const auto& m : all) {
      std::vector<bool> covered(t.order(), false);
      for (auto [u, v] : m) covered[u] = covered[v] = true;
      for (int v = 0; v < t.order(); ++v) {
        if (!covered[v]) missable[v] = true;
      }
      std::set<std::pair<int, int>> here(m.begin(), m.end());
      for (auto it = in_all.begin(); it != in_all.end();) {
        it = here.count(*it) ? std::next(it) : in_all.erase(it);
      }
    }
    std::vector<int> expected_k;
    for (int v = 0; v < t.order(); ++v) {
      if (missable[v]) expected_k.push_back(v);
    }
    CHECK(cls.may_be_missed == expected_k);
    CHECK(std::set<std::pair<int, int>>(cls.forced_edges.begin(), cls.forced_edges.end()) ==
          in_all);
  }
}

TEST_CASE("kernel basis of the worked examples") {
  auto b3 = kernel_basis(p3());
  REQUIRE(b3.size() == 1);
  CHECK(b3[0] == SignVector{1, 0, -1});

  // Star with vertex order m,l1,l2,l3: the deterministic matching is m-l1,
  // so the missed leaves l2 and l3 define the two vectors.
  auto bs = kernel_basis(star());
  REQUIRE(bs.size() == 2);
  CHECK(bs[0] == SignVector{0, -1, 1, 0});
  CHECK(bs[1] == SignVector{0, -1, 0, 1});

  CHECK(kernel_basis(p4()).empty());
}

TEST_CASE("kernel basis properties on random trees") {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 40; ++i) {
    Forest t = random_tree(1 + static_cast<int>(rng() % 10), rng);
    TreePatternMatrix a = adjacency_matrix(t);
    MatchingClassification cls = classify_vertices(t);
    auto basis = kernel_basis(t);
    int nullity = eigenspace_basis(a, Rational(0)).dimension();

    CHECK(static_cast<int>(basis.size()) == nullity);
    CHECK(nullity == t.order() - 2 * cls.matching.size());

    std::vector<RationalVector> rational_basis;
    for (const auto& x : basis) {
      for (int e : x) CHECK((e == -1 || e == 0 || e == 1));
      rational_basis.push_back(to_rational(x));
      CHECK(verify_eigenvector(a, Rational(0), rational_basis.back()));
    }
    CHECK(linearly_independent(rational_basis));
    CHECK(always_zero_set(t.order(), rational_basis) == cls.never_missed);

    std::vector<std::vector<int>> witnesses;
    for (int v : cls.missed) witnesses.push_back({v});
    CHECK(check_straight(rational_basis, witnesses));

    for (std::size_t a1 = 0; a1 < cls.may_be_missed.size(); ++a1) {
      for (std::size_t a2 = a1 + 1; a2 < cls.may_be_missed.size(); ++a2) {
        CHECK_FALSE(t.has_edge(cls.may_be_missed[a1], cls.may_be_missed[a2]));
      }
    }
  }
}

TEST_CASE("nullity equals support components minus outside-adjacent vertices") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 40; ++i) {
    Forest t = random_tree(1 + static_cast<int>(rng() % 10), rng);
    MatchingClassification cls = classify_vertices(t);
    int nullity = eigenspace_basis(t, Rational(0)).dimension();
    Forest r_graph = t.without_vertices(cls.never_missed);
    std::vector<bool> in_r(t.order(), false);
    for (int v : cls.may_be_missed) in_r[v] = true;
    int outside = 0;
    for (int v : cls.never_missed) {
      for (int u : t.neighbors(v)) {
        if (in_r[u]) {
          ++outside;
          break;
        }
      }
    }
    CHECK(nullity == r_graph.component_count() - outside);
  }
}

TEST_SUITE_END();

#include <random>

#include "doctest.h"
#include "treespect/enumeration.hpp"
#include "treespect/graph.hpp"

using namespace treespect;

namespace {

Forest p5() { return Forest::parse("a b\nb c\nc d\nd e\n"); }
Forest t6() { return Forest::parse("z r\nz w\nz y\ny u0\ny u1\n"); }

}  // namespace

TEST_SUITE_BEGIN("graph");

TEST_CASE("parse builds the declared forest in first-appearance order") {
  Forest p3 = Forest::parse("a b\nb c");
  CHECK(p3.order() == 3);
  CHECK(p3.edge_count() == 2);
  CHECK(p3.labels() == std::vector<std::string>{"a", "b", "c"});
  CHECK(p3.is_tree());

  Forest t = t6();
  CHECK(t.order() == 6);
  CHECK(t.edge_count() == 5);
  CHECK(t.is_tree());
}

TEST_CASE("parse ignores comments and blank lines") {
  Forest f = Forest::parse("# fixture\n\na b\n\n# trailing\nc\n");
  CHECK(f.order() == 3);
  CHECK(f.edge_count() == 1);
  CHECK(f.degree(f.require_index("c")) == 0);
}

TEST_CASE("parse rejects cycles, self-loops and duplicates") {
  CHECK_THROWS_WITH_AS(Forest::parse("a b\nb c\na c"), doctest::Contains("cycle"), ParseError);
  CHECK_THROWS_WITH_AS(Forest::parse("a a"), doctest::Contains("self-loop"), ParseError);
  CHECK_THROWS_WITH_AS(Forest::parse("a b\na b"), doctest::Contains("duplicate"), ParseError);
  CHECK_THROWS_WITH_AS(Forest::parse("a b\nb a"), doctest::Contains("duplicate"), ParseError);
  try {
    Forest::parse("a b\nb c\na c");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("components partition the vertex set") {
  Forest p3 = Forest::parse("a b\nb c");
  auto parts = components(p3);
  REQUIRE(parts.size() == 1);
  CHECK(parts[0].same_graph(p3));

  Forest split = remove_vertices(p3, {"b"});
  auto isolated = components(split);
  REQUIRE(isolated.size() == 2);
  CHECK(isolated[0].order() == 1);
  CHECK(isolated[1].order() == 1);

  Forest mixed = Forest::parse("a b\nc");
  auto two = components(mixed);
  REQUIRE(two.size() == 2);
  CHECK(two[0].edge_count() == 1);
  CHECK(two[1].order() == 1);
}

TEST_CASE("remove_vertices keeps surviving edges only") {
  Forest f = remove_vertices(p5(), {"c"});
  CHECK(f.order() == 4);
  CHECK(f.edge_count() == 2);
  CHECK(f.has_edge(f.require_index("a"), f.require_index("b")));
  CHECK(f.has_edge(f.require_index("d"), f.require_index("e")));

  CHECK(remove_vertices(t6(), {}).same_graph(t6()));

  Forest star = Forest::parse("m a\nm b\nm c");
  Forest leaves = remove_vertices(star, {"m"});
  CHECK(leaves.order() == 3);
  CHECK(leaves.edge_count() == 0);

  CHECK_THROWS_AS(remove_vertices(star, {"nope"}), std::invalid_argument);
}

TEST_CASE("contract_subgraphs contracts paths to paths") {
  Forest p = p5();
  auto result = contract_subgraphs(
      p, {{p.require_index("a"), p.require_index("b")},
          {p.require_index("d"), p.require_index("e")}});
  CHECK(result.contracted.order() == 3);
  CHECK(result.contracted.edge_count() == 2);
  CHECK(result.contracted.labels() == std::vector<std::string>{"C#1", "c", "C#2"});
  CHECK(result.was_contracted == std::vector<bool>{true, false, true});
  CHECK(result.origin[0] == std::vector<int>{0, 1});
  CHECK(result.origin[2] == std::vector<int>{3, 4});

  // Singleton contraction relabels but preserves shape.
  Forest t = t6();
  auto single = contract_subgraphs(t, {{t.require_index("z")}});
  CHECK(single.contracted.order() == 6);
  CHECK(single.contracted.edge_count() == 5);

  // Whole-tree contraction gives K1.
  Forest p3 = Forest::parse("a b\nb c");
  auto all = contract_subgraphs(p3, {{0, 1, 2}});
  CHECK(all.contracted.order() == 1);
  CHECK(all.contracted.edge_count() == 0);
}

TEST_CASE("contract_subgraphs rejects bad parts") {
  Forest p = p5();
  CHECK_THROWS_WITH_AS(contract_subgraphs(p, {{0, 2}}), doctest::Contains("connected"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(contract_subgraphs(p, {{0, 1}, {1, 2}}), doctest::Contains("overlap"),
                       std::invalid_argument);
}

TEST_CASE("contraction reduces the order by the part sizes") {
  std::mt19937_64 rng(11);
  for (int n = 2; n <= 9; ++n) {
    Forest t = random_tree(n, rng);
    auto [u, v] = t.edges()[rng() % t.edges().size()];
    auto result = contract_subgraphs(t, {{u, v}});
    CHECK(result.contracted.order() == n - 1);
    CHECK(result.contracted.is_tree());
  }
}

TEST_CASE("bipartition separates every edge") {
  Forest p3 = Forest::parse("a b\nb c");
  auto [pa, pb] = bipartition(p3);
  CHECK(pa == std::vector<int>{0, 2});
  CHECK(pb == std::vector<int>{1});

  Forest k1 = Forest::parse("v");
  auto single = bipartition(k1);
  CHECK(single.first == std::vector<int>{0});
  CHECK(single.second.empty());

  Forest t = t6();
  auto [ta, tb] = bipartition(t);
  std::vector<std::string> a_labels;
  for (int v : ta) a_labels.push_back(t.label(v));
  CHECK(a_labels == std::vector<std::string>{"z", "u0", "u1"});

  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    Forest r = random_tree(3 + static_cast<int>(rng() % 8), rng);
    auto [ra, rb] = bipartition(r);
    std::vector<int> side(r.order(), 0);
    for (int v : rb) side[v] = 1;
    for (auto [u, v] : r.edges()) CHECK(side[u] != side[v]);
    CHECK(ra.size() + rb.size() == static_cast<std::size_t>(r.order()));
  }
}

TEST_CASE("serialize round-trips as a labeled graph") {
  for (const char* doc : {"a b\nb c", "z r\nz w\nz y\ny u0\ny u1", "b a\nc\nd e"}) {
    Forest f = Forest::parse(doc);
    Forest again = Forest::parse(f.serialize());
    CHECK(again.same_graph(f));
    CHECK(again.serialize() == f.serialize());
  }
}

TEST_CASE("components of removals partition the remaining vertices") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 25; ++i) {
    int n = 2 + static_cast<int>(rng() % 9);
    Forest t = random_tree(n, rng);
    std::vector<int> removed;
    for (int v = 0; v < n; ++v) {
      if (rng() % 3 == 0) removed.push_back(v);
    }
    Forest rest = t.without_vertices(removed);
    auto parts = rest.component_vertices();
    std::size_t total = 0;
    for (const auto& p : parts) total += p.size();
    CHECK(total == static_cast<std::size_t>(rest.order()));
    CHECK(rest.order() == n - static_cast<int>(removed.size()));
  }
}

TEST_SUITE_END();

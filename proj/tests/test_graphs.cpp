#include "doctest.h"

#include "zonoforge/graphs.hpp"

#include <set>
#include <stdexcept>

using namespace zonoforge;

namespace {

RootedTree fork3() { return RootedTree({0, 1, 1}); }

// Brute-force spanning tree count: all (n)-edge subsets that connect 0..n without a cycle.
long brute_spanning_trees(const DirectedMultigraph& g) {
  const std::size_t m = g.edges.size();
  long count = 0;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != g.n) continue;
    std::vector<std::size_t> comp(g.n + 1);
    for (std::size_t v = 0; v <= g.n; ++v) comp[v] = v;
    auto find = [&](std::size_t v) {
      while (comp[v] != v) v = comp[v];
      return v;
    };
    bool acyclic = true;
    for (std::size_t e = 0; e < m && acyclic; ++e) {
      if (!(mask & (1u << e))) continue;
      const std::size_t a = find(g.edges[e].tail);
      const std::size_t b = find(g.edges[e].head);
      if (a == b) acyclic = false;
      comp[a] = b;
    }
    if (acyclic) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("broken_wheel") {
  const EdgeMatrix x4 = edge_matrix(broken_wheel(4));
  const std::vector<std::vector<int>> printed{
      {1, 1, -1, 0, 0, 0, 0, 0},
      {0, 0, 1, 1, -1, 0, 0, 0},
      {0, 0, 0, 0, 1, 1, -1, 0},
      {0, 0, 0, 0, 0, 0, 1, 1},
  };
  REQUIRE(x4.size() == 8);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 8; ++j) CHECK(x4.columns[j][i] == printed[i][j]);
  }

  const auto g1 = broken_wheel(1);
  CHECK(g1.edges == std::vector<Edge>{{0, 1}, {0, 1}});

  const EdgeMatrix x2 = edge_matrix(broken_wheel(2));
  CHECK(x2.columns == std::vector<std::vector<int>>{{1, 0}, {1, 0}, {-1, 1}, {0, 1}});
  CHECK_THROWS_AS(broken_wheel(0), std::invalid_argument);
}

TEST_CASE("gbw") {
  const auto line3 = line_tree(3);
  const auto g = gbw(line3, Orientation({1, 1, -1}));
  CHECK(weights(g) == Exponent{1, 2, 0});
  CHECK(gbw(line3, Orientation({1, 1, 1})) == broken_wheel(3));

  const auto gf = gbw(fork3(), Orientation({1, -1, -1}));
  // Tree edges sit at positions 3 and 5 (1-based) in the canonical order.
  CHECK(gf.edges[2] == Edge{2, 1});
  CHECK(gf.edges[4] == Edge{3, 1});
  CHECK_THROWS_AS(gbw(line3, Orientation({1, 1})), std::invalid_argument);
  CHECK_THROWS_AS(Orientation({-1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(RootedTree({0, 3, 2}), std::invalid_argument);
  CHECK_THROWS_AS(RootedTree({1, 1}), std::invalid_argument);
}

TEST_CASE("weights") {
  CHECK(weights(gbw(line_tree(3), Orientation({1, 1, -1}))) == Exponent{1, 2, 0});
  CHECK(weights(gbw(fork3(), Orientation({1, -1, -1}))) == Exponent{3, 0, 0});
  for (const auto& t : enumerate_rooted_trees(4)) {
    CHECK(weights(gbw(t, Orientation({1, 1, 1, 1}))) == Exponent{1, 1, 1, 1});
  }
  DirectedMultigraph bad;
  bad.n = 2;
  bad.edges = {{0, 1}};
  CHECK_THROWS_AS(weights(bad), std::invalid_argument);
}

TEST_CASE("edge_matrix") {
  DirectedMultigraph single;
  single.n = 1;
  single.edges = {{0, 1}};
  CHECK(edge_matrix(single).columns == std::vector<std::vector<int>>{{1}});
  const auto x = edge_matrix(gbw(fork3(), Orientation({1, -1, 1})));
  CHECK(x.columns[2] == std::vector<int>{1, -1, 0});
}

TEST_CASE("enumerate_orientations") {
  CHECK(enumerate_orientations(1).size() == 1);
  const auto o3 = enumerate_orientations(3);
  REQUIRE(o3.size() == 4);
  CHECK(o3[0].values() == std::vector<int>{1, -1, -1});
  CHECK(o3[1].values() == std::vector<int>{1, -1, 1});
  CHECK(o3[2].values() == std::vector<int>{1, 1, -1});
  CHECK(o3[3].values() == std::vector<int>{1, 1, 1});
  CHECK(enumerate_orientations(5).size() == 16);
}

TEST_CASE("enumerate_rooted_trees") {
  CHECK(enumerate_rooted_trees(1).size() == 1);
  CHECK(enumerate_rooted_trees(2).size() == 1);
  const auto t3 = enumerate_rooted_trees(3);
  CHECK(t3.size() == 3);
  std::set<std::vector<std::size_t>> parents;
  for (const auto& t : t3) parents.insert(t.parents());
  CHECK(parents == std::set<std::vector<std::size_t>>{{0, 1, 2}, {0, 3, 1}, {0, 1, 1}});
  CHECK(enumerate_rooted_trees(3, true).size() == 2);
  CHECK(enumerate_rooted_trees(4).size() == 16);
  CHECK(enumerate_rooted_trees(4, true).size() == 4);
  CHECK(enumerate_rooted_trees(5).size() == 125);
  CHECK(enumerate_rooted_trees(5, true).size() == 9);
  CHECK_THROWS_AS(enumerate_rooted_trees(9), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_rooted_trees(0), std::invalid_argument);
}

TEST_CASE("property: every GBW has 2n edges, weight sum n, full rank") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& t : enumerate_rooted_trees(n)) {
      for (const auto& k : enumerate_orientations(n)) {
        const auto g = gbw(t, k);
        REQUIRE(g.edges.size() == 2 * n);
        REQUIRE(g.n == n);
        REQUIRE(total_degree(weights(g)) == n);
        REQUIRE(edge_matrix(g).rank() == n);
      }
    }
  }
  for (std::size_t n = 1; n <= 8; ++n) REQUIRE(gbw(line_tree(n), Orientation(std::vector<int>(n, 1))) == broken_wheel(n));
}

TEST_CASE("spanning_tree_count against brute force") {
  for (std::size_t n = 1; n <= 5; ++n) CHECK(spanning_tree_count(broken_wheel(n)) == brute_spanning_trees(broken_wheel(n)));
  for (const auto& t : enumerate_rooted_trees(4)) {
    const auto g = gbw(t, Orientation({1, 1, 1, 1}));
    CHECK(spanning_tree_count(g) == brute_spanning_trees(g));
  }
}

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "neutro/errors.hpp"
#include "neutro/fixtures.hpp"
#include "neutro/subset_vertex.hpp"

using namespace neutro;

namespace {

Graph host_edge() {
  Graph g;
  g.add_vertex("a", Kind::Real);
  g.add_vertex("b", Kind::Real);
  g.add_edge("a", "b", Kind::Real);
  return g;
}

// Direct adjacency test between two subsets: some cross pair is a host edge.
bool subsets_adjacent(const Graph& g, const std::vector<std::string>& base,
                      std::uint32_t a, std::uint32_t b) {
  for (std::size_t i = 0; i < base.size(); ++i) {
    if (!(a >> i & 1)) continue;
    for (std::size_t j = 0; j < base.size(); ++j) {
      if (!(b >> j & 1) || i == j) continue;
      if (g.has_edge(base[i], base[j])) return true;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("subset graph labels, lookup, and degrees") {
  SubsetGraph s;
  s.base = {"x", "y"};
  s.vertices = {1, 2, 3};
  s.edges = {{1, 3}, {2, 3}};
  CHECK(s.label(1) == "{x}");
  CHECK(s.label(2) == "{y}");
  CHECK(s.label(3) == "{x,y}");
  CHECK(s.has_vertex(2));
  CHECK_FALSE(s.has_vertex(4));
  CHECK(s.degree(3) == 2);
  CHECK(s.degree(1) == 1);
  CHECK(is_connected(s));
  CHECK(is_tree(s));

  s.edges.insert(s.edges.begin(), {1, 2});
  CHECK(is_connected(s));
  CHECK_FALSE(is_tree(s));  // cycle

  SubsetGraph lone;
  lone.base = {"x"};
  lone.vertices = {1};
  CHECK(is_tree(lone));
  CHECK_FALSE(is_tree(SubsetGraph{}));
}

TEST_CASE("the subset graph induced by a host") {
  SUBCASE("one host vertex gives one subset and no edges") {
    Graph g;
    g.add_vertex("solo", Kind::Indeterminate);
    const SubsetGraph s = build_type_one(g);
    CHECK(s.base == std::vector<std::string>{"solo"});
    CHECK(s.vertices == std::vector<std::uint32_t>{1});
    CHECK(s.edges.empty());
  }

  SUBCASE("a single host edge blows up into a triangle") {
    const SubsetGraph s = build_type_one(host_edge());
    CHECK(s.vertices == std::vector<std::uint32_t>{1, 2, 3});
    CHECK(s.edges ==
          std::vector<std::pair<std::uint32_t, std::uint32_t>>{
              {1, 2}, {1, 3}, {2, 3}});
    CHECK(s.degree(1) == 2);
    CHECK(is_connected(s));
  }

  SUBCASE("an edgeless host stays edgeless") {
    const SubsetGraph s = build_type_one(fixtures::isolated(2));
    CHECK(s.vertices.size() == 3);
    CHECK(s.edges.empty());
  }

  SUBCASE("a complete host saturates to the complete subset graph") {
    const SubsetGraph s = build_type_one(fixtures::triangle());
    CHECK(s.vertices.size() == 7);
    CHECK(s.edges.size() == 21);
    for (std::uint32_t v : s.vertices) {
      CHECK(s.degree(v) == 6);  // 2^3 - 2, the ceiling for a 3-set base
    }
  }

  SUBCASE("deterministic and monotone in the host edges") {
    CHECK(build_type_one(fixtures::path3()) == build_type_one(fixtures::path3()));
    const auto sparse = build_type_one(fixtures::path3()).edges;
    const auto dense = build_type_one(fixtures::triangle()).edges;
    CHECK(std::includes(dense.begin(), dense.end(), sparse.begin(),
                        sparse.end()));
  }

  SUBCASE("adjacency agrees with the elementwise definition") {
    std::mt19937 rng(99);
    for (int t = 0; t < 25; ++t) {
      Graph g;
      const std::size_t n = 1 + rng() % 4;
      for (std::size_t i = 0; i < n; ++i) {
        g.add_vertex("h" + std::to_string(i), Kind::Real);
      }
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (rng() % 2) {
            g.add_edge("h" + std::to_string(i), "h" + std::to_string(j),
                       rng() % 2 ? Kind::Real : Kind::Indeterminate);
          }
        }
      }
      const SubsetGraph s = build_type_one(g);
      std::set<std::pair<std::uint32_t, std::uint32_t>> got(s.edges.begin(),
                                                            s.edges.end());
      for (std::uint32_t a = 1; a < (std::uint32_t{1} << n); ++a) {
        for (std::uint32_t b = a + 1; b < (std::uint32_t{1} << n); ++b) {
          CHECK(got.count({a, b}) ==
                static_cast<std::size_t>(subsets_adjacent(g, s.base, a, b)));
        }
      }
    }
  }

  SUBCASE("caps") {
    CHECK_THROWS_AS(build_type_one(fixtures::isolated(11)), CapExceeded);
    CHECK(build_type_one(fixtures::isolated(11), 11).vertices.size() == 2047);
    CHECK_THROWS_AS(build_type_one(fixtures::isolated(16), 20), CapExceeded);
  }
}

TEST_CASE("counting graphs on the full subset universe") {
  CHECK(count_type_two(1) == 1);
  CHECK(count_type_two(2) == 8);
  CHECK(count_type_two(3) == 2097152);  // 2^21
  CHECK_THROWS_AS(count_type_two(12), CapExceeded);

  SUBCASE("fixed edge budgets") {
    CHECK(count_type_two_with_edges(3, BigInt(1)) == 21);
    CHECK(count_type_two_with_edges(3, BigInt(2)) == 210);
    CHECK(count_type_two_with_edges(3, BigInt(10)) == 352716);
    CHECK(count_type_two_with_edges(3, BigInt(19)) ==
          count_type_two_with_edges(3, BigInt(2)));  // C(21,19) = C(21,2)
    BigInt sum = 0;
    for (int r = 0; r <= 3; ++r) sum += count_type_two_with_edges(2, BigInt(r));
    CHECK(sum == count_type_two(2));
    CHECK(count_type_two_with_edges(2, BigInt(4)) == 0);  // past the maximum
    CHECK_THROWS_AS(count_type_two_with_edges(2, BigInt(-1)),
                    std::invalid_argument);
  }
}

TEST_CASE("degree ceiling over the subset universe") {
  CHECK_THROWS_AS(max_subset_degree(0), std::invalid_argument);
  CHECK(max_subset_degree(1) == 0);
  CHECK(max_subset_degree(2) == 2);
  CHECK(max_subset_degree(3) == 6);
  CHECK(max_subset_degree(10) == 1022);

  SUBCASE("the ceiling is attained by complete hosts") {
    for (unsigned n = 2; n <= 3; ++n) {
      Graph k;
      for (unsigned i = 0; i < n; ++i) {
        k.add_vertex("k" + std::to_string(i), Kind::Real);
      }
      for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = i + 1; j < n; ++j) {
          k.add_edge("k" + std::to_string(i), "k" + std::to_string(j),
                     Kind::Real);
        }
      }
      const SubsetGraph s = build_type_one(k);
      std::size_t best = 0;
      for (std::uint32_t v : s.vertices) best = std::max(best, s.degree(v));
      CHECK(BigInt(best) == max_subset_degree(n));
    }
  }
}

TEST_CASE("labeled tree counts") {
  CHECK(count_labeled_trees_on(BigInt(1)) == 1);
  CHECK(count_labeled_trees_on(BigInt(2)) == 1);
  CHECK(count_labeled_trees_on(BigInt(3)) == 3);
  CHECK(count_labeled_trees_on(BigInt(4)) == 16);
  CHECK(count_labeled_trees_on(BigInt(5)) == 125);
  CHECK(count_labeled_trees(2) == 3);
  CHECK(count_labeled_trees(3) == 16807);  // 7^5
  CHECK_THROWS_AS(count_labeled_trees_on(BigInt(0)), std::invalid_argument);
  CHECK_THROWS_AS(count_labeled_trees_on(BigInt(20001)), CapExceeded);
}

TEST_CASE("enumerating rooted trees on the subset universe") {
  SUBCASE("one-element base") {
    const auto trees = enumerate_trees(1);
    REQUIRE(trees.size() == 1);
    CHECK(trees[0].root == 1);
    CHECK(trees[0].tree.vertices == std::vector<std::uint32_t>{1});
    CHECK(trees[0].tree.edges.empty());
  }

  SUBCASE("two-element base") {
    const auto trees = enumerate_trees(2);
    REQUIRE(trees.size() == 3);
    std::set<std::vector<std::pair<std::uint32_t, std::uint32_t>>> seen;
    for (const auto& t : trees) {
      CHECK(t.root == 3);  // rooted at the whole set
      CHECK(t.tree.vertices == std::vector<std::uint32_t>{1, 2, 3});
      CHECK(is_tree(t.tree));
      seen.insert(t.tree.edges);
    }
    CHECK(seen.size() == 3);
  }

  SUBCASE("three-element base matches the closed-form count") {
    const auto trees = enumerate_trees(3);
    REQUIRE(BigInt(trees.size()) == count_labeled_trees(3));
    std::set<std::vector<std::pair<std::uint32_t, std::uint32_t>>> seen;
    for (const auto& t : trees) {
      CHECK(t.tree.edges.size() == 6);
      seen.insert(t.tree.edges);
    }
    CHECK(seen.size() == trees.size());
    CHECK(is_tree(trees.front().tree));
    CHECK(is_tree(trees.back().tree));
  }

  SUBCASE("caps") {
    CHECK_THROWS_AS(enumerate_trees(3, 6), CapExceeded);
    CHECK_THROWS_AS(enumerate_trees(4), CapExceeded);  // 15 > 7
  }
}

TEST_CASE("isomorphism census of graphs on m abstract vertices") {
  SUBCASE("tiny universes") {
    CHECK(enumerate_type_two_iso(1).classes.size() == 1);
    CHECK(enumerate_type_two_iso(2).classes.size() == 2);
  }

  SUBCASE("three vertices: four shapes") {
    const IsoCensus c = enumerate_type_two_iso(3);
    REQUIRE(c.classes.size() == 4);
    CHECK(c.total_labeled == 8);
    std::vector<std::size_t> edges, labeled;
    for (const auto& cls : c.classes) {
      edges.push_back(cls.edge_count);
      labeled.push_back(cls.labeled_count);
      CHECK(cls.representative.vertex_count() == 3);
      CHECK(cls.representative.edge_count() == cls.edge_count);
    }
    CHECK(edges == std::vector<std::size_t>{0, 1, 2, 3});
    CHECK(labeled == std::vector<std::size_t>{1, 3, 3, 1});
  }

  SUBCASE("four and five vertices") {
    const IsoCensus c4 = enumerate_type_two_iso(4);
    CHECK(c4.classes.size() == 11);
    CHECK(c4.total_labeled == 64);
    const IsoCensus c5 = enumerate_type_two_iso(5);
    CHECK(c5.classes.size() == 34);
    CHECK(c5.total_labeled == 1024);
  }

  SUBCASE("restricting to an edge budget") {
    const IsoCensus c = enumerate_type_two_iso(3, 1);
    REQUIRE(c.classes.size() == 1);
    CHECK(c.classes[0].labeled_count == 3);
    CHECK(c.total_labeled == 3);

    const IsoCensus c43 = enumerate_type_two_iso(4, 3);
    CHECK(c43.classes.size() == 3);  // path, star, triangle + isolated vertex
    std::size_t sum = 0;
    for (const auto& cls : c43.classes) sum += cls.labeled_count;
    CHECK(sum == 20);  // C(6,3)
  }

  SUBCASE("limits") {
    CHECK_THROWS_AS(enumerate_type_two_iso(0), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_type_two_iso(6), CapExceeded);
  }
}

TEST_CASE("merging subset graphs") {
  SubsetGraph p1, p2;
  p1.base = p2.base = {"v1", "v2"};
  p1.vertices = p2.vertices = {1, 2, 3};
  p1.edges = {{1, 3}, {2, 3}};  // path through the whole set
  p2.edges = {{1, 2}, {2, 3}};  // path through {v2}

  SUBCASE("two trees whose union closes a cycle are meshed") {
    const MergeResult r = merge(p1, p2);
    CHECK(r.merged.vertices == std::vector<std::uint32_t>{1, 2, 3});
    CHECK(r.merged.edges ==
          std::vector<std::pair<std::uint32_t, std::uint32_t>>{
              {1, 2}, {1, 3}, {2, 3}});
    CHECK_FALSE(r.is_tree);
    CHECK(r.meshed);
  }

  SUBCASE("gluing two edges at a shared vertex keeps a tree") {
    SubsetGraph a, b;
    a.base = b.base = {"v1", "v2"};
    a.vertices = {1, 3};
    a.edges = {{1, 3}};
    b.vertices = {2, 3};
    b.edges = {{2, 3}};
    const MergeResult r = merge(a, b);
    CHECK(r.is_tree);
    CHECK_FALSE(r.meshed);
  }

  SUBCASE("disjoint pieces do not mesh") {
    SubsetGraph a, b;
    a.base = b.base = {"v1", "v2"};
    a.vertices = {1};
    b.vertices = {2};
    const MergeResult r = merge(a, b);
    CHECK_FALSE(r.is_tree);
    CHECK_FALSE(r.meshed);
    CHECK(r.merged.vertices.size() == 2);
  }

  SUBCASE("bases must agree") {
    SubsetGraph other;
    other.base = {"w1", "w2"};
    other.vertices = {1};
    CHECK_THROWS_AS(merge(p1, other), std::invalid_argument);
  }
}

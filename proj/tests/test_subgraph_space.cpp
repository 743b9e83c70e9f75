#include <algorithm>
#include <memory>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "neutro/errors.hpp"
#include "neutro/fixtures.hpp"
#include "neutro/subgraph_space.hpp"

using namespace neutro;

namespace {

std::shared_ptr<Graph> shared(const Graph& g) {
  return std::make_shared<Graph>(g);
}

Graph single_edge() {
  Graph g;
  g.add_vertex("a", Kind::Real);
  g.add_vertex("b", Kind::Real);
  g.add_edge("a", "b", Kind::Real);
  return g;
}

// Independent count: every vertex subset contributes one subgraph per subset
// of the edges it encloses.  Only usable for small hosts.
BigInt brute_count(const Graph& g) {
  const auto ids = g.vertex_ids();
  REQUIRE(ids.size() <= 12);
  BigInt total = 0;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << ids.size()); ++mask) {
    std::set<std::string> in;
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (mask >> i & 1) in.insert(ids[i]);
    }
    std::size_t edges_inside = 0;
    for (const auto& e : g.edges()) {
      if (in.count(e.a) && in.count(e.b)) ++edges_inside;
    }
    total += BigInt(1) << edges_inside;
  }
  return total;
}

}  // namespace

TEST_CASE("edge keys are stored with endpoints in order") {
  CHECK(edge_key("b", "a") == EdgeKey{"a", "b"});
  CHECK(edge_key("a", "b") == EdgeKey{"a", "b"});
}

TEST_CASE("subgraph construction validates against the host") {
  const auto host = shared(fixtures::triangle());

  const Subgraph ok(host, {"v1", "v2"}, {edge_key("v1", "v2")});
  CHECK(ok.vertices().size() == 2);
  CHECK_FALSE(ok.empty());
  CHECK_FALSE(ok.whole());

  CHECK_THROWS_AS(Subgraph(nullptr, {}, {}), std::invalid_argument);
  CHECK_THROWS_AS(Subgraph(host, {"zz"}, {}), std::invalid_argument);
  // endpoints must be listed among the subgraph's vertices
  CHECK_THROWS_AS(Subgraph(host, {"v1"}, {edge_key("v1", "v2")}),
                  std::invalid_argument);
  // key must be normalized
  CHECK_THROWS_AS(Subgraph(host, {"v1", "v2"}, {EdgeKey{"v2", "v1"}}),
                  std::invalid_argument);
  // host must actually have the edge
  Graph p = fixtures::path3();
  CHECK_THROWS_AS(Subgraph(shared(p), {"v2", "v3"}, {edge_key("v2", "v3")}),
                  std::invalid_argument);

  SUBCASE("whole and empty members") {
    const Subgraph none(host, {}, {});
    CHECK(none.empty());
    const Subgraph all(host, {"v1", "v2", "v3"},
                       {edge_key("v1", "v2"), edge_key("v1", "v3"),
                        edge_key("v2", "v3")});
    CHECK(all.whole());
    CHECK(all.contains(ok));
    CHECK(all.contains(none));
    CHECK_FALSE(ok.contains(all));
  }
}

TEST_CASE("materialize copies kinds from the host") {
  const auto host = shared(fixtures::diamond());
  const Subgraph sg(host, {"v0", "v2", "v3"},
                    {edge_key("v0", "v2"), edge_key("v2", "v3")});
  const Graph m = sg.materialize();
  CHECK(m.vertex_ids() == std::vector<std::string>{"v0", "v2", "v3"});
  CHECK(m.edge_count() == 2);
  CHECK(m.edge_kind("v0", "v2") == Kind::Indeterminate);
  CHECK(m.edge_kind("v2", "v3") == Kind::Indeterminate);
  CHECK(m.vertex_kind("v0") == Kind::Real);
}

TEST_CASE("union and intersection stay inside one host") {
  const auto host = shared(fixtures::triangle());
  const Subgraph a(host, {"v1", "v2"}, {edge_key("v1", "v2")});
  const Subgraph b(host, {"v2", "v3"}, {edge_key("v2", "v3")});

  const Subgraph u = sg_union(a, b);
  CHECK(u.vertices() == std::set<std::string>{"v1", "v2", "v3"});
  CHECK(u.edges() ==
        std::set<EdgeKey>{edge_key("v1", "v2"), edge_key("v2", "v3")});

  const Subgraph i = sg_intersect(a, b);
  CHECK(i.vertices() == std::set<std::string>{"v2"});
  CHECK(i.edges().empty());

  const Subgraph other(shared(fixtures::diamond()), {"v1"}, {});
  CHECK_THROWS_AS(sg_union(a, other), std::invalid_argument);
  CHECK_THROWS_AS(sg_intersect(a, other), std::invalid_argument);

  SUBCASE("distinct host objects with equal structure are interchangeable") {
    const Subgraph twin(shared(fixtures::triangle()), {"v3"}, {});
    CHECK(sg_union(a, twin).vertices() ==
          std::set<std::string>{"v1", "v2", "v3"});
  }
}

TEST_CASE("subgraph counts match the closed form") {
  CHECK(count_subgraphs(fixtures::triangle()) == 18);
  CHECK(count_subgraphs(fixtures::path3()) == 13);
  CHECK(count_subgraphs(single_edge()) == 5);
  for (std::size_t n = 1; n <= 4; ++n) {
    CHECK(count_subgraphs(fixtures::isolated(n)) == BigInt(1) << n);
  }
  CHECK(count_subgraphs(Graph{}) == 1);
  // components multiply: 18 for the triangle, 5 for the detached edge
  CHECK(count_subgraphs(fixtures::triangle_and_pair()) == 90);

  SUBCASE("agrees with subset-by-subset enumeration on random hosts") {
    std::mt19937 rng(4242);
    for (int t = 0; t < 40; ++t) {
      Graph g;
      const std::size_t n = 1 + rng() % 6;
      for (std::size_t i = 0; i < n; ++i) {
        g.add_vertex("u" + std::to_string(i),
                     rng() % 2 ? Kind::Real : Kind::Indeterminate);
      }
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (rng() % 2) {
            g.add_edge("u" + std::to_string(i), "u" + std::to_string(j),
                       rng() % 2 ? Kind::Real : Kind::Indeterminate);
          }
        }
      }
      CHECK(count_subgraphs(g) == brute_count(g));
    }
  }

  SUBCASE("oversized components are rejected") {
    // the cap is per component, so any number of isolated vertices is fine
    CHECK(count_subgraphs(fixtures::isolated(40)) == BigInt(1) << 40);
    Graph big;
    big.add_vertex("w0", Kind::Real);
    for (int i = 1; i < 25; ++i) {
      big.add_vertex("w" + std::to_string(i), Kind::Real);
      big.add_edge("w" + std::to_string(i - 1), "w" + std::to_string(i),
                   Kind::Real);
    }
    CHECK_THROWS_AS(count_subgraphs(big), CapExceeded);
  }
}

TEST_CASE("enumerating the space lists every member once, in order") {
  const Space s = enumerate_space(fixtures::triangle());
  CHECK(s.members.size() == 18);
  CHECK(s.members.front().empty());
  CHECK(std::count_if(s.members.begin(), s.members.end(),
                      [](const Subgraph& m) { return m.whole(); }) == 1);
  for (std::size_t i = 1; i < s.members.size(); ++i) {
    CHECK(s.members[i - 1] < s.members[i]);  // strict: sorted and deduplicated
  }
  for (const auto& m : s.members) {
    for (const auto& [a, b] : m.edges()) {
      CHECK(m.vertices().count(a));
      CHECK(m.vertices().count(b));
    }
  }

  SUBCASE("cap messages carry the exact count") {
    CHECK_THROWS_WITH_AS(enumerate_space(fixtures::triangle(), BigInt(10)),
                         doctest::Contains("18"), CapExceeded);
  }
}

TEST_CASE("lattice and topology structure of a full space") {
  SUBCASE("host with edges: lattice and topology but not complemented") {
    const auto r = lattice_check(enumerate_space(fixtures::triangle()));
    CHECK(r.is_lattice);
    CHECK(r.is_distributive);
    CHECK(r.is_topology);
    CHECK_FALSE(r.is_complemented);
    CHECK_FALSE(r.is_boolean_algebra);
  }
  SUBCASE("edgeless host: the space is the power-set Boolean algebra") {
    const auto r = lattice_check(enumerate_space(fixtures::isolated(2)));
    CHECK(r.is_lattice);
    CHECK(r.is_distributive);
    CHECK(r.is_complemented);
    CHECK(r.is_boolean_algebra);
    CHECK(r.is_topology);
  }
}

TEST_CASE("edgeless members form a Boolean subalgebra") {
  const Space s = enumerate_space(fixtures::triangle());
  const auto sub = boolean_subalgebra(s);
  CHECK(sub.size() == 8);  // one per vertex subset
  for (const auto& m : sub) CHECK(m.edges().empty());

  const auto r = lattice_check(Space{s.host, sub});
  CHECK(r.is_boolean_algebra);
  CHECK_FALSE(r.is_topology);  // the full host is not an edgeless member
}

TEST_CASE("proper Boolean sublattices are detected") {
  CHECK(is_smarandache(enumerate_space(fixtures::triangle())));
  CHECK(is_smarandache(enumerate_space(fixtures::path3())));
  CHECK(is_smarandache(enumerate_space(fixtures::isolated(2))));
  CHECK(is_smarandache(enumerate_space(fixtures::isolated(3))));
  CHECK(is_smarandache(enumerate_space(single_edge())));

  CHECK_FALSE(is_smarandache(enumerate_space(fixtures::isolated(1))));
  CHECK_FALSE(is_smarandache(enumerate_space(Graph{})));
}

TEST_CASE("cover relations of small spaces") {
  SUBCASE("two isolated vertices give the 4-element diamond order") {
    const Space s = enumerate_space(fixtures::isolated(2));
    const Hasse h = hasse(s);
    CHECK(h.labels.size() == 4);
    CHECK(h.covers.size() == 4);
    for (const auto& [lo, hi] : h.covers) {
      CHECK(s.members[hi].contains(s.members[lo]));
      CHECK_FALSE(s.members[lo].contains(s.members[hi]));
    }
  }
  SUBCASE("single edge: the top is covered only by dropping its edge") {
    const Space s = enumerate_space(single_edge());
    const Hasse h = hasse(s);
    CHECK(h.labels.size() == 5);
    CHECK(h.covers.size() == 5);
    const auto top_it =
        std::find_if(s.members.begin(), s.members.end(),
                     [](const Subgraph& m) { return m.whole(); });
    REQUIRE(top_it != s.members.end());
    const auto top = static_cast<std::size_t>(top_it - s.members.begin());
    std::size_t into_top = 0;
    for (const auto& [lo, hi] : h.covers) {
      if (hi == top) {
        ++into_top;
        CHECK(s.members[lo].vertices() == std::set<std::string>{"a", "b"});
        CHECK(s.members[lo].edges().empty());
      }
    }
    CHECK(into_top == 1);
  }
}

TEST_CASE("member labels") {
  const auto host = shared(fixtures::triangle());
  CHECK(member_label(Subgraph(host, {}, {})) == "{}");
  CHECK(member_label(Subgraph(host, {"v1", "v3"}, {})) == "{v1 v3}");
  CHECK(member_label(Subgraph(host, {"v1", "v2"}, {edge_key("v1", "v2")})) ==
        "{v1 v2 | v1-v2}");
}

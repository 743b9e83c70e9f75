#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "neutro/graph.hpp"
#include "neutro/num.hpp"

namespace neutro {

// A graph whose vertices are subsets of a base label set, represented as
// bitmasks over `base` (bit i = base[i]).
struct SubsetGraph {
  std::vector<std::string> base;                // sorted labels
  std::vector<std::uint32_t> vertices;          // nonzero masks, ascending
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  // lo<hi, sorted

  std::string label(std::uint32_t mask) const;  // "{v1,v2}"
  bool has_vertex(std::uint32_t mask) const;
  std::size_t degree(std::uint32_t mask) const;

  friend bool operator==(const SubsetGraph&, const SubsetGraph&) = default;
};

bool is_connected(const SubsetGraph& s);
bool is_tree(const SubsetGraph& s);

// The unique subset graph of a host: one vertex per nonempty subset of the
// host's vertices, and subsets A != B adjacent iff some a in A and b in B
// (a != b) form a host edge.  Host kinds are ignored.  Throws CapExceeded
// above `cap` host vertices (the result has 2^n - 1 vertices).
SubsetGraph build_type_one(const Graph& g, std::size_t cap = 10);

// Counting the freely-chosen-edge graphs on the full subset universe of an
// n-set: m = 2^n - 1 vertices, M = m(m-1)/2 candidate edges.
BigInt count_type_two(unsigned n);                           // 2^M
BigInt count_type_two_with_edges(unsigned n, const BigInt& r);  // C(M, r)

// Largest possible degree in such a graph: 2^n - 2.
BigInt max_subset_degree(unsigned n);

// Labeled trees on the subset universe (Cayley: m^(m-2)).
BigInt count_labeled_trees(unsigned n);
BigInt count_labeled_trees_on(const BigInt& m);

struct RootedTree {
  SubsetGraph tree;
  std::uint32_t root;  // always the full-set mask
};

// Every labeled tree on the full subset universe of an n-set, rooted at the
// whole set.  Requires m = 2^n - 1 <= cap.
std::vector<RootedTree> enumerate_trees(unsigned n, std::size_t cap = 7);

// Unlabeled (isomorphism-class) enumeration of all graphs on m abstract
// vertices, by exhaustive canonicalization.
struct IsoClass {
  Graph representative;       // vertices u1..um, everything Real
  std::size_t edge_count = 0;
  std::size_t labeled_count = 0;  // orbit size among labeled graphs
};

struct IsoCensus {
  std::vector<IsoClass> classes;  // sorted by (edge_count, canonical form)
  std::size_t total_labeled = 0;
};

IsoCensus enumerate_type_two_iso(std::size_t m,
                                 std::optional<std::size_t> r = std::nullopt);

struct MergeResult {
  SubsetGraph merged;
  bool is_tree = false;
  bool meshed = false;  // two trees whose union is connected but not a tree
};

// Vertex/edge union of two subset graphs over the same base.
MergeResult merge(const SubsetGraph& a, const SubsetGraph& b);

}  // namespace neutro

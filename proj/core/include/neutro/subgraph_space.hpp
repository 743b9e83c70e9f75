#pragma once

#include "neutro/errors.hpp"
#include "neutro/graph.hpp"
#include "neutro/num.hpp"

#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace neutro {

using EdgeKey = std::pair<std::string, std::string>;  // normalized: first < second

EdgeKey edge_key(const std::string& u, const std::string& v);

// One member of S(G): any subset of host vertices together with host edges
// whose endpoints are all present.  Not restricted to induced subgraphs.
// Kinds are inherited from the host.
class Subgraph {
 public:
  Subgraph(std::shared_ptr<const Graph> host, std::set<std::string> vertices,
           std::set<EdgeKey> edges);
  static Subgraph of(const Graph& host, std::set<std::string> vertices,
                     std::set<EdgeKey> edges);

  const Graph& host() const { return *host_; }
  const std::shared_ptr<const Graph>& host_ptr() const { return host_; }
  const std::set<std::string>& vertices() const { return vertices_; }
  const std::set<EdgeKey>& edges() const { return edges_; }
  bool empty() const { return vertices_.empty() && edges_.empty(); }
  bool whole() const;  // equals the full host
  bool contains(const Subgraph& o) const;
  Graph materialize() const;  // standalone Graph, kinds copied from the host

  friend bool operator==(const Subgraph& a, const Subgraph& b);
  bool operator<(const Subgraph& o) const {  // canonical (vertices, edges) order
    return std::tie(vertices_, edges_) < std::tie(o.vertices_, o.edges_);
  }

 private:
  std::shared_ptr<const Graph> host_;
  std::set<std::string> vertices_;
  std::set<EdgeKey> edges_;
};

bool same_host(const Subgraph& a, const Subgraph& b);
Subgraph sg_union(const Subgraph& a, const Subgraph& b);      // same host required
Subgraph sg_intersect(const Subgraph& a, const Subgraph& b);  // same host required

// |S(G)| by the closed form: sum over vertex subsets S of 2^(edges inside S);
// the empty subset contributes the empty subgraph.  Computed per connected
// component and multiplied.
BigInt count_subgraphs(const Graph& g);

struct Space {
  std::shared_ptr<const Graph> host;
  std::vector<Subgraph> members;  // canonically ordered, deduplicated
};

// Materializes S(G); refuses when count_subgraphs(g) exceeds the cap.
Space enumerate_space(const Graph& g, const BigInt& cap = BigInt(100000));

struct LatticeReport {
  bool is_lattice = false;       // every pair has a least upper / greatest lower bound
  bool is_distributive = false;  // meet distributes over join (all triples)
  bool is_complemented = false;  // every member has a complement w.r.t. top/bottom
  bool is_boolean_algebra = false;
  bool is_topology = false;      // has empty + full, closed under union/intersection
};
LatticeReport lattice_check(const Space& s);

// The edgeless members (all vertex subsets with no edges); for a full space
// this is the power-set Boolean algebra of order 2^n.
std::vector<Subgraph> boolean_subalgebra(const Space& s);

// True when the space contains a PROPER sublattice forming a Boolean algebra:
// the power-set family on all n vertices when the host has an edge, else the
// one on the first n-1 vertices.  Hosts with fewer than 2 vertices fail.
bool is_smarandache(const Space& s);

struct Hasse {
  std::vector<std::string> labels;  // one per member, same order as the space
  std::vector<std::pair<std::size_t, std::size_t>> covers;  // (lower, upper)
};
Hasse hasse(const Space& s);

std::string member_label(const Subgraph& sg);  // "{v1 v2 | v1-v2}"

}  // namespace neutro

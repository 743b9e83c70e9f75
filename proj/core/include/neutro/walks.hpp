#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "neutro/graph.hpp"

namespace neutro {

// A walk is its vertex sequence; each consecutive pair must be an edge of
// the host graph (simple graphs make the edges unambiguous).
struct Walk {
  std::vector<std::string> vertices;

  // Number of edges traversed.
  std::size_t length() const {
    return vertices.empty() ? 0 : vertices.size() - 1;
  }
};

// Throws std::invalid_argument if the walk is empty, mentions unknown
// vertices, or steps along a missing edge.
void validate_walk(const Graph& g, const Walk& w);

enum class WalkClass {
  Usual,
  Neutrosophic,
  PureNeutrosophic,
  StrongNeutrosophic,
  StrongPureNeutrosophic,
};

std::string to_string(WalkClass c);

// Classification by the kinds seen along the walk:
//   all vertices real, all edges real          -> Usual
//   all vertices real, mixed edges             -> Neutrosophic
//   all vertices real, all edges indeterminate -> PureNeutrosophic
//   some indet vertex, all edges indeterminate -> StrongPureNeutrosophic
//   some indet vertex, otherwise               -> StrongNeutrosophic
// Zero-length walks are rejected (nothing to classify).
WalkClass classify_walk(const Graph& g, const Walk& w);

struct EdgeKindSplit {
  std::size_t indeterminate = 0;
  std::size_t real = 0;
};

// How many edges of each kind the walk traverses (with multiplicity).
EdgeKindSplit edge_kind_split(const Graph& g, const Walk& w);

// A simple cycle of length >= 3 in canonical form: the lexicographically
// least rotation over both orientations.
struct Circuit {
  std::vector<std::string> vertices;
  WalkClass cls;

  friend bool operator==(const Circuit&, const Circuit&) = default;
};

struct CircuitCensus {
  std::vector<Circuit> circuits;                // sorted by (length, vertices)
  std::map<WalkClass, std::size_t> by_class;    // every class present
};

// Exact enumeration of all simple cycles; throws CapExceeded above `cap`
// vertices.
CircuitCensus enumerate_circuits(const Graph& g, std::size_t cap = 12);

// True iff the graph has a trail (open or closed) using every edge exactly
// once: edges exist, the edge-bearing vertices are one component, and the
// number of odd-degree vertices is 0 or 2.  Kinds play no role.
bool has_eulerian_trail(const Graph& g);

}  // namespace neutro

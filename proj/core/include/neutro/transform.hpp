#pragma once

#include <cstddef>
#include <map>
#include <string>

#include "neutro/graph.hpp"

namespace neutro {

// Complements act on the kind labels only; the underlying structure
// (vertex set, edge set) is left untouched.
enum class ComplementMode { EdgeKind, VertexKind, Strong };

std::string to_string(ComplementMode mode);

// Toggle edge kinds, vertex kinds, or both.  All three are involutions.
Graph complement(const Graph& g, ComplementMode mode);

// Toggle edge kinds and force every vertex indeterminate.  Not an
// involution: a second application never restores mixed vertex kinds.
Graph quasi_vertex_strong_complement(const Graph& g);

struct SelfComplementResult {
  bool self_complemented = false;
  // When self_complemented, an isomorphism from g onto complement(g, mode).
  std::map<std::string, std::string> witness;
};

// Exact search over vertex bijections for an isomorphism onto the
// complement.  Throws CapExceeded above `cap` vertices.
SelfComplementResult is_self_complemented(const Graph& g, ComplementMode mode,
                                          std::size_t cap = 9);

// The subgraph spanned by edges of one kind: those edges plus their
// endpoints, nothing else.
Graph largest_usual_subgraph(const Graph& g);              // real edges
Graph largest_pure_neutrosophic_subgraph(const Graph& g);  // indeterminate edges

// How a graph with both edge kinds decomposes into its real-edge and
// indeterminate-edge parts.
enum class ConnectivityProfile {
  Unclassified,
  StronglyConnected,             // graph and both parts connected
  JustConnected,                 // graph connected, exactly one part connected
  PseudoStronglyDisconnected,    // graph connected, both parts disconnected
  SpecialDisconnectedStrong,     // two components: one all-real, one all-indet
};

std::string to_string(ConnectivityProfile p);

ConnectivityProfile connectivity_profile(const Graph& g);

}  // namespace neutro

#include "neutro/transform.hpp"

#include <algorithm>
#include <set>
#include <vector>

#include "neutro/errors.hpp"

namespace neutro {

std::string to_string(ComplementMode mode) {
  switch (mode) {
    case ComplementMode::EdgeKind: return "edge-kind";
    case ComplementMode::VertexKind: return "vertex-kind";
    case ComplementMode::Strong: return "strong";
  }
  return "?";
}

Graph complement(const Graph& g, ComplementMode mode) {
  Graph out = g;
  if (mode != ComplementMode::EdgeKind) {
    for (const auto& v : out.vertex_ids()) {
      out.set_vertex_kind(v, toggled(out.vertex_kind(v)));
    }
  }
  if (mode != ComplementMode::VertexKind) {
    for (const auto& e : out.edges()) {
      out.set_edge_kind(e.a, e.b, toggled(e.kind));
    }
  }
  return out;
}

Graph quasi_vertex_strong_complement(const Graph& g) {
  Graph out = complement(g, ComplementMode::EdgeKind);
  for (const auto& v : out.vertex_ids()) {
    out.set_vertex_kind(v, Kind::Indeterminate);
  }
  return out;
}

SelfComplementResult is_self_complemented(const Graph& g, ComplementMode mode,
                                          std::size_t cap) {
  if (g.vertex_count() > cap) {
    throw CapExceeded("graph with " + std::to_string(g.vertex_count()) +
                      " vertices is too large for exact search (cap " +
                      std::to_string(cap) + ")");
  }
  // An isomorphism preserves kind counts, so unequal counts settle it fast.
  const Graph target = complement(g, mode);
  std::size_t real_edges = g.edge_count(Kind::Real);
  if (real_edges != target.edge_count(Kind::Real)) return {};
  std::size_t real_vertices = 0, target_real_vertices = 0;
  for (const auto& v : g.vertex_ids()) {
    real_vertices += g.vertex_kind(v) == Kind::Real;
    target_real_vertices += target.vertex_kind(v) == Kind::Real;
  }
  if (real_vertices != target_real_vertices) return {};

  std::vector<std::string> ids = g.vertex_ids();
  std::sort(ids.begin(), ids.end());
  std::vector<std::string> image = ids;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < ids.size() && ok; ++i) {
      ok = g.vertex_kind(ids[i]) == target.vertex_kind(image[i]);
    }
    std::size_t mapped_edges = 0;
    for (std::size_t i = 0; i < ids.size() && ok; ++i) {
      for (std::size_t j = i + 1; j < ids.size() && ok; ++j) {
        if (!g.has_edge(ids[i], ids[j])) continue;
        ok = target.has_edge(image[i], image[j]) &&
             g.edge_kind(ids[i], ids[j]) == target.edge_kind(image[i], image[j]);
        ++mapped_edges;
      }
    }
    if (ok && mapped_edges == g.edge_count()) {
      SelfComplementResult r;
      r.self_complemented = true;
      for (std::size_t i = 0; i < ids.size(); ++i) r.witness[ids[i]] = image[i];
      return r;
    }
  } while (std::next_permutation(image.begin(), image.end()));
  return {};
}

namespace {

Graph largest_kind_subgraph(const Graph& g, Kind kind) {
  Graph out;
  for (const auto& v : g.vertex_ids()) {
    bool incident = false;
    for (const auto& e : g.edges()) {
      incident = incident || (e.kind == kind && (e.a == v || e.b == v));
    }
    if (incident) out.add_vertex(v, g.vertex_kind(v));
  }
  for (const auto& e : g.edges()) {
    if (e.kind == kind) out.add_edge(e.a, e.b, e.kind);
  }
  return out;
}

}  // namespace

Graph largest_usual_subgraph(const Graph& g) {
  return largest_kind_subgraph(g, Kind::Real);
}

Graph largest_pure_neutrosophic_subgraph(const Graph& g) {
  return largest_kind_subgraph(g, Kind::Indeterminate);
}

std::string to_string(ConnectivityProfile p) {
  switch (p) {
    case ConnectivityProfile::Unclassified: return "unclassified";
    case ConnectivityProfile::StronglyConnected: return "strongly connected";
    case ConnectivityProfile::JustConnected: return "just connected";
    case ConnectivityProfile::PseudoStronglyDisconnected:
      return "pseudo strongly disconnected";
    case ConnectivityProfile::SpecialDisconnectedStrong:
      return "special disconnected strong";
  }
  return "?";
}

ConnectivityProfile connectivity_profile(const Graph& g) {
  if (g.edge_count(Kind::Real) == 0 || g.edge_count(Kind::Indeterminate) == 0) {
    return ConnectivityProfile::Unclassified;
  }
  const Graph real_part = largest_usual_subgraph(g);
  const Graph indet_part = largest_pure_neutrosophic_subgraph(g);
  if (is_connected(g)) {
    const bool rc = is_connected(real_part);
    const bool ic = is_connected(indet_part);
    if (rc && ic) return ConnectivityProfile::StronglyConnected;
    if (!rc && !ic) return ConnectivityProfile::PseudoStronglyDisconnected;
    return ConnectivityProfile::JustConnected;
  }
  const auto comps = components(g);
  if (comps.size() == 2) {
    // One component must carry every real edge, the other every
    // indeterminate edge.
    std::set<std::string> first(comps[0].begin(), comps[0].end());
    bool real_in_first = true, real_in_second = true;
    bool indet_in_first = true, indet_in_second = true;
    for (const auto& e : g.edges()) {
      const bool in_first = first.count(e.a) > 0;
      if (e.kind == Kind::Real) {
        real_in_first = real_in_first && in_first;
        real_in_second = real_in_second && !in_first;
      } else {
        indet_in_first = indet_in_first && in_first;
        indet_in_second = indet_in_second && !in_first;
      }
    }
    if ((real_in_first && indet_in_second) ||
        (real_in_second && indet_in_first)) {
      return ConnectivityProfile::SpecialDisconnectedStrong;
    }
  }
  return ConnectivityProfile::Unclassified;
}

}  // namespace neutro

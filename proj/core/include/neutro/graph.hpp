#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace neutro {

enum class Kind : std::uint8_t { Real, Indeterminate };

constexpr Kind toggled(Kind k) {
  return k == Kind::Real ? Kind::Indeterminate : Kind::Real;
}
std::string_view to_string(Kind k);

struct Edge {
  std::string a, b;  // normalized: a < b
  Kind kind;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Simple undirected graph whose vertices and edges each carry a
// real/indeterminate kind.  Vertex ids are opaque strings; insertion order is
// preserved for deterministic output.
class Graph {
 public:
  void add_vertex(const std::string& id, Kind kind = Kind::Real);
  void add_edge(const std::string& u, const std::string& v,
                Kind kind = Kind::Real);

  std::size_t vertex_count() const { return order_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t edge_count(Kind kind) const;
  const std::vector<std::string>& vertex_ids() const { return order_; }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_vertex(const std::string& id) const;
  bool has_edge(const std::string& u, const std::string& v) const;
  Kind vertex_kind(const std::string& id) const;
  Kind edge_kind(const std::string& u, const std::string& v) const;
  void set_vertex_kind(const std::string& id, Kind kind);
  void set_edge_kind(const std::string& u, const std::string& v, Kind kind);

  std::vector<std::string> neighbors(const std::string& id) const;  // sorted
  std::size_t degree(const std::string& id) const;

  // Structural equality: same vertex ids+kinds and edge pairs+kinds,
  // regardless of insertion order.
  bool operator==(const Graph& o) const;

 private:
  std::vector<std::string> order_;
  std::map<std::string, Kind> vkinds_;
  std::vector<Edge> edges_;
  std::map<std::pair<std::string, std::string>, std::size_t> eindex_;
  std::map<std::string, std::set<std::string>> adj_;
};

// Connected components in host vertex order, ordered by first member.
std::vector<std::vector<std::string>> components(const Graph& g);
bool is_connected(const Graph& g);  // true for 0 or 1 vertices

enum class Profile : std::uint8_t { Empty, AllReal, Mixed, AllIndeterminate };
std::string_view to_string(Profile p);

Profile vertex_profile(const Graph& g);
Profile edge_profile(const Graph& g);

enum class GraphClass : std::uint8_t {
  Usual,
  Neutrosophic,
  PureNeutrosophic,
  StrongNeutrosophic,
  StrongPureNeutrosophic,
  SemiStrongVertexNeutrosophic,
  QuasiStrongVertexNeutrosophic,
  SemiStrongEdgeNeutrosophic,
  EdgeWeakNeutrosophic,
  Edgeless,
};
std::string_view to_string(GraphClass c);

struct Classification {
  GraphClass cls;
  Profile vertices;
  Profile edges;
  friend bool operator==(const Classification&, const Classification&) = default;
};

// Total classification over the (vertex profile, edge profile) table; edgeless
// graphs get the Edgeless tag with their vertex profile attached.
Classification classify(const Graph& g);
std::string to_string(const Classification& c);

// True iff `parts` splits the vertices into independent, kind-homogeneous
// sets.  Throws std::invalid_argument when parts are not a partition of V.
bool is_kind_partition(const Graph& g,
                       const std::vector<std::vector<std::string>>& parts);

}  // namespace neutro

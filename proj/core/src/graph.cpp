#include "neutro/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace neutro {

namespace {

std::pair<std::string, std::string> norm(const std::string& u,
                                         const std::string& v) {
  return u < v ? std::make_pair(u, v) : std::make_pair(v, u);
}

}  // namespace

std::string_view to_string(Kind k) {
  return k == Kind::Real ? "real" : "indet";
}

void Graph::add_vertex(const std::string& id, Kind kind) {
  if (id.empty()) throw std::invalid_argument("empty vertex id");
  if (vkinds_.count(id)) throw std::invalid_argument("duplicate vertex '" + id + "'");
  order_.push_back(id);
  vkinds_[id] = kind;
  adj_[id];
}

void Graph::add_edge(const std::string& u, const std::string& v, Kind kind) {
  if (!vkinds_.count(u)) throw std::invalid_argument("unknown vertex '" + u + "'");
  if (!vkinds_.count(v)) throw std::invalid_argument("unknown vertex '" + v + "'");
  if (u == v) throw std::invalid_argument("self-loop at '" + u + "'");
  auto key = norm(u, v);
  if (eindex_.count(key)) {
    throw std::invalid_argument("duplicate edge " + key.first + " " + key.second);
  }
  eindex_[key] = edges_.size();
  edges_.push_back({key.first, key.second, kind});
  adj_[u].insert(v);
  adj_[v].insert(u);
}

std::size_t Graph::edge_count(Kind kind) const {
  std::size_t n = 0;
  for (const auto& e : edges_) n += e.kind == kind;
  return n;
}

bool Graph::has_vertex(const std::string& id) const { return vkinds_.count(id); }

bool Graph::has_edge(const std::string& u, const std::string& v) const {
  return eindex_.count(norm(u, v));
}

Kind Graph::vertex_kind(const std::string& id) const {
  auto it = vkinds_.find(id);
  if (it == vkinds_.end()) throw std::invalid_argument("unknown vertex '" + id + "'");
  return it->second;
}

Kind Graph::edge_kind(const std::string& u, const std::string& v) const {
  auto it = eindex_.find(norm(u, v));
  if (it == eindex_.end()) {
    throw std::invalid_argument("no edge " + u + " " + v);
  }
  return edges_[it->second].kind;
}

void Graph::set_vertex_kind(const std::string& id, Kind kind) {
  auto it = vkinds_.find(id);
  if (it == vkinds_.end()) throw std::invalid_argument("unknown vertex '" + id + "'");
  it->second = kind;
}

void Graph::set_edge_kind(const std::string& u, const std::string& v, Kind kind) {
  auto it = eindex_.find(norm(u, v));
  if (it == eindex_.end()) {
    throw std::invalid_argument("no edge " + u + " " + v);
  }
  edges_[it->second].kind = kind;
}

std::vector<std::string> Graph::neighbors(const std::string& id) const {
  auto it = adj_.find(id);
  if (it == adj_.end()) throw std::invalid_argument("unknown vertex '" + id + "'");
  return {it->second.begin(), it->second.end()};
}

std::size_t Graph::degree(const std::string& id) const {
  auto it = adj_.find(id);
  if (it == adj_.end()) throw std::invalid_argument("unknown vertex '" + id + "'");
  return it->second.size();
}

bool Graph::operator==(const Graph& o) const {
  if (vkinds_ != o.vkinds_) return false;
  if (edges_.size() != o.edges_.size()) return false;
  for (const auto& e : edges_) {
    auto it = o.eindex_.find({e.a, e.b});
    if (it == o.eindex_.end() || o.edges_[it->second].kind != e.kind) return false;
  }
  return true;
}

std::vector<std::vector<std::string>> components(const Graph& g) {
  std::map<std::string, std::size_t> pos;
  for (std::size_t i = 0; i < g.vertex_ids().size(); ++i) pos[g.vertex_ids()[i]] = i;
  std::set<std::string> seen;
  std::vector<std::vector<std::string>> out;
  for (const auto& start : g.vertex_ids()) {
    if (seen.count(start)) continue;
    std::vector<std::string> comp;
    std::deque<std::string> queue{start};
    seen.insert(start);
    while (!queue.empty()) {
      auto v = queue.front();
      queue.pop_front();
      comp.push_back(v);
      for (const auto& w : g.neighbors(v)) {
        if (seen.insert(w).second) queue.push_back(w);
      }
    }
    std::sort(comp.begin(), comp.end(),
              [&](const auto& a, const auto& b) { return pos[a] < pos[b]; });
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

std::string_view to_string(Profile p) {
  switch (p) {
    case Profile::Empty: return "empty";
    case Profile::AllReal: return "all real";
    case Profile::Mixed: return "mixed";
    case Profile::AllIndeterminate: return "all indeterminate";
  }
  return "?";
}

namespace {

Profile profile_of(bool any, bool any_real, bool any_indet) {
  if (!any) return Profile::Empty;
  if (any_real && any_indet) return Profile::Mixed;
  return any_real ? Profile::AllReal : Profile::AllIndeterminate;
}

}  // namespace

Profile vertex_profile(const Graph& g) {
  bool r = false, i = false;
  for (const auto& id : g.vertex_ids()) {
    (g.vertex_kind(id) == Kind::Real ? r : i) = true;
  }
  return profile_of(g.vertex_count() > 0, r, i);
}

Profile edge_profile(const Graph& g) {
  bool r = false, i = false;
  for (const auto& e : g.edges()) {
    (e.kind == Kind::Real ? r : i) = true;
  }
  return profile_of(g.edge_count() > 0, r, i);
}

std::string_view to_string(GraphClass c) {
  switch (c) {
    case GraphClass::Usual: return "usual";
    case GraphClass::Neutrosophic: return "neutrosophic";
    case GraphClass::PureNeutrosophic: return "pure neutrosophic";
    case GraphClass::StrongNeutrosophic: return "strong neutrosophic";
    case GraphClass::StrongPureNeutrosophic: return "strong pure neutrosophic";
    case GraphClass::SemiStrongVertexNeutrosophic:
      return "semi strong vertex neutrosophic";
    case GraphClass::QuasiStrongVertexNeutrosophic:
      return "quasi strong vertex neutrosophic";
    case GraphClass::SemiStrongEdgeNeutrosophic:
      return "semi strong edge neutrosophic";
    case GraphClass::EdgeWeakNeutrosophic: return "edge weak neutrosophic";
    case GraphClass::Edgeless: return "edgeless";
  }
  return "?";
}

Classification classify(const Graph& g) {
  Profile vp = vertex_profile(g);
  Profile ep = edge_profile(g);
  if (ep == Profile::Empty) return {GraphClass::Edgeless, vp, ep};
  GraphClass cls = GraphClass::Usual;
  switch (vp) {
    case Profile::AllReal:
      cls = ep == Profile::AllReal       ? GraphClass::Usual
            : ep == Profile::AllIndeterminate ? GraphClass::PureNeutrosophic
                                              : GraphClass::Neutrosophic;
      break;
    case Profile::Mixed:
      cls = ep == Profile::AllReal ? GraphClass::QuasiStrongVertexNeutrosophic
            : ep == Profile::AllIndeterminate
                ? GraphClass::SemiStrongEdgeNeutrosophic
                : GraphClass::StrongNeutrosophic;
      break;
    case Profile::AllIndeterminate:
      cls = ep == Profile::AllReal ? GraphClass::SemiStrongVertexNeutrosophic
            : ep == Profile::AllIndeterminate
                ? GraphClass::StrongPureNeutrosophic
                : GraphClass::EdgeWeakNeutrosophic;
      break;
    case Profile::Empty:
      // No vertices means no edges; handled by the Edgeless return above.
      break;
  }
  return {cls, vp, ep};
}

std::string to_string(const Classification& c) {
  if (c.cls != GraphClass::Edgeless) return std::string(to_string(c.cls));
  if (c.vertices == Profile::Empty) return "edgeless (empty graph)";
  return "edgeless (" + std::string(to_string(c.vertices)) + " vertices)";
}

bool is_kind_partition(const Graph& g,
                       const std::vector<std::vector<std::string>>& parts) {
  std::set<std::string> seen;
  std::map<std::string, std::size_t> owner;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (parts[p].empty()) throw std::invalid_argument("empty part");
    for (const auto& id : parts[p]) {
      if (!g.has_vertex(id)) {
        throw std::invalid_argument("part member '" + id + "' is not a vertex");
      }
      if (!seen.insert(id).second) {
        throw std::invalid_argument("vertex '" + id + "' appears twice in parts");
      }
      owner[id] = p;
    }
  }
  if (seen.size() != g.vertex_count()) {
    throw std::invalid_argument("parts do not cover the vertex set");
  }
  for (const auto& part : parts) {
    Kind k = g.vertex_kind(part.front());
    for (const auto& id : part) {
      if (g.vertex_kind(id) != k) return false;
    }
  }
  for (const auto& e : g.edges()) {
    if (owner[e.a] == owner[e.b]) return false;
  }
  return true;
}

}  // namespace neutro

#include "neutro/walks.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "neutro/errors.hpp"

namespace neutro {

void validate_walk(const Graph& g, const Walk& w) {
  if (w.vertices.empty()) {
    throw std::invalid_argument("a walk needs at least one vertex");
  }
  for (const auto& v : w.vertices) {
    if (!g.has_vertex(v)) {
      throw std::invalid_argument("walk vertex '" + v + "' is not in the graph");
    }
  }
  for (std::size_t i = 1; i < w.vertices.size(); ++i) {
    if (!g.has_edge(w.vertices[i - 1], w.vertices[i])) {
      throw std::invalid_argument("walk step " + w.vertices[i - 1] + "-" +
                                  w.vertices[i] + " is not an edge");
    }
  }
}

std::string to_string(WalkClass c) {
  switch (c) {
    case WalkClass::Usual: return "usual";
    case WalkClass::Neutrosophic: return "neutrosophic";
    case WalkClass::PureNeutrosophic: return "pure neutrosophic";
    case WalkClass::StrongNeutrosophic: return "strong neutrosophic";
    case WalkClass::StrongPureNeutrosophic: return "strong pure neutrosophic";
  }
  return "?";
}

WalkClass classify_walk(const Graph& g, const Walk& w) {
  validate_walk(g, w);
  if (w.length() == 0) {
    throw std::invalid_argument("zero-length walk has no classification");
  }
  bool indet_vertex = false;
  for (const auto& v : w.vertices) {
    indet_vertex = indet_vertex || g.vertex_kind(v) == Kind::Indeterminate;
  }
  const EdgeKindSplit split = edge_kind_split(g, w);
  if (!indet_vertex) {
    if (split.indeterminate == 0) return WalkClass::Usual;
    if (split.real == 0) return WalkClass::PureNeutrosophic;
    return WalkClass::Neutrosophic;
  }
  if (split.real == 0) return WalkClass::StrongPureNeutrosophic;
  return WalkClass::StrongNeutrosophic;
}

EdgeKindSplit edge_kind_split(const Graph& g, const Walk& w) {
  validate_walk(g, w);
  EdgeKindSplit split;
  for (std::size_t i = 1; i < w.vertices.size(); ++i) {
    if (g.edge_kind(w.vertices[i - 1], w.vertices[i]) == Kind::Indeterminate) {
      ++split.indeterminate;
    } else {
      ++split.real;
    }
  }
  return split;
}

namespace {

std::vector<std::string> canonical_cycle(std::vector<std::string> cyc) {
  std::vector<std::string> best;
  for (int orientation = 0; orientation < 2; ++orientation) {
    for (std::size_t r = 0; r < cyc.size(); ++r) {
      std::vector<std::string> rot(cyc.begin() + r, cyc.end());
      rot.insert(rot.end(), cyc.begin(), cyc.begin() + r);
      if (best.empty() || rot < best) best = std::move(rot);
    }
    std::reverse(cyc.begin(), cyc.end());
  }
  return best;
}

}  // namespace

CircuitCensus enumerate_circuits(const Graph& g, std::size_t cap) {
  if (g.vertex_count() > cap) {
    throw CapExceeded("graph with " + std::to_string(g.vertex_count()) +
                      " vertices is too large for exact circuit enumeration "
                      "(cap " + std::to_string(cap) + ")");
  }
  std::vector<std::string> ids = g.vertex_ids();
  std::sort(ids.begin(), ids.end());
  std::map<std::string, std::size_t> pos;
  for (std::size_t i = 0; i < ids.size(); ++i) pos[ids[i]] = i;

  CircuitCensus census;
  std::vector<std::size_t> path;
  std::vector<bool> on_path(ids.size(), false);

  // Classic simple-cycle search: grow paths whose interior indices stay
  // above the start index, close back to the start, and keep one of the two
  // orientations.
  auto extend = [&](auto&& self, std::size_t start) -> void {
    const std::size_t cur = path.back();
    for (const auto& nb : g.neighbors(ids[cur])) {
      const std::size_t ni = pos.at(nb);
      if (ni == start) {
        if (path.size() >= 3 && path[1] < path.back()) {
          std::vector<std::string> cyc;
          for (std::size_t i : path) cyc.push_back(ids[i]);
          Circuit c;
          c.vertices = canonical_cycle(std::move(cyc));
          Walk closed{c.vertices};
          closed.vertices.push_back(c.vertices.front());
          c.cls = classify_walk(g, closed);
          census.circuits.push_back(std::move(c));
        }
        continue;
      }
      if (ni < start || on_path[ni]) continue;
      path.push_back(ni);
      on_path[ni] = true;
      self(self, start);
      on_path[ni] = false;
      path.pop_back();
    }
  };
  for (std::size_t s = 0; s < ids.size(); ++s) {
    path.assign(1, s);
    std::fill(on_path.begin(), on_path.end(), false);
    on_path[s] = true;
    extend(extend, s);
  }

  std::sort(census.circuits.begin(), census.circuits.end(),
            [](const Circuit& a, const Circuit& b) {
              if (a.vertices.size() != b.vertices.size()) {
                return a.vertices.size() < b.vertices.size();
              }
              return a.vertices < b.vertices;
            });
  census.by_class = {{WalkClass::Usual, 0},
                     {WalkClass::Neutrosophic, 0},
                     {WalkClass::PureNeutrosophic, 0},
                     {WalkClass::StrongNeutrosophic, 0},
                     {WalkClass::StrongPureNeutrosophic, 0}};
  for (const auto& c : census.circuits) ++census.by_class[c.cls];
  return census;
}

bool has_eulerian_trail(const Graph& g) {
  if (g.edge_count() == 0) return false;
  // All edge-bearing vertices must share one component.
  std::set<std::string> seen{g.edges().front().a};
  std::vector<std::string> queue{g.edges().front().a};
  while (!queue.empty()) {
    const std::string v = queue.back();
    queue.pop_back();
    for (const auto& nb : g.neighbors(v)) {
      if (seen.insert(nb).second) queue.push_back(nb);
    }
  }
  std::size_t odd = 0;
  for (const auto& v : g.vertex_ids()) {
    const std::size_t d = g.degree(v);
    if (d == 0) continue;
    if (!seen.count(v)) return false;
    odd += d % 2;
  }
  return odd == 0 || odd == 2;
}

}  // namespace neutro

#include "neutro/fixtures.hpp"

namespace neutro::fixtures {

Graph diamond() {
  Graph g;
  for (const char* id : {"v0", "v1", "v2", "v3"}) g.add_vertex(id);
  g.add_edge("v0", "v1", Kind::Real);
  g.add_edge("v0", "v2", Kind::Indeterminate);
  g.add_edge("v1", "v2", Kind::Real);
  g.add_edge("v1", "v3", Kind::Real);
  g.add_edge("v2", "v3", Kind::Indeterminate);
  return g;
}

Graph triangle_and_pair() {
  Graph g;
  for (const char* id : {"v0", "v1", "v2", "v3", "v4"}) g.add_vertex(id);
  g.add_edge("v0", "v1", Kind::Real);
  g.add_edge("v0", "v2", Kind::Indeterminate);
  g.add_edge("v1", "v2", Kind::Real);
  g.add_edge("v3", "v4", Kind::Indeterminate);
  return g;
}

Graph triangle() {
  Graph g;
  for (const char* id : {"v1", "v2", "v3"}) g.add_vertex(id);
  g.add_edge("v1", "v2");
  g.add_edge("v1", "v3");
  g.add_edge("v2", "v3");
  return g;
}

Graph path3() {
  Graph g;
  for (const char* id : {"v1", "v2", "v3"}) g.add_vertex(id);
  g.add_edge("v1", "v2");
  g.add_edge("v1", "v3");
  return g;
}

Graph isolated(std::size_t n) {
  Graph g;
  for (std::size_t i = 1; i <= n; ++i) g.add_vertex("v" + std::to_string(i));
  return g;
}

}  // namespace neutro::fixtures

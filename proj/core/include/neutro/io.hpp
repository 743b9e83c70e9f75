#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "neutro/graph.hpp"
#include "neutro/subgraph_space.hpp"
#include "neutro/subset_vertex.hpp"

namespace neutro {

struct ParseError : std::runtime_error {
  ParseError(std::size_t line_number, const std::string& message);
  std::size_t line;
};

// Graph text format, one declaration per line:
//   # comment
//   vertex <id> <real|indet>
//   edge <id> <id> <real|indet>
// Vertices must be declared before edges mention them; duplicates, self-loops
// and bad kind tokens are rejected with the offending line number.
Graph parse_graph(const std::string& text);
std::string render_graph(const Graph& g);
Graph load_graph(const std::string& path);

// Same line format for subset graphs; ids are brace sets like "{v1,v2}"
// (comma separated, no spaces).  The base set is the union of all elements
// mentioned; kind tokens are required but carry no meaning here.
SubsetGraph parse_subset_graph(const std::string& text);
std::string render_subset_graph(const SubsetGraph& s);
SubsetGraph load_subset_graph(const std::string& path);

// Graphviz output.  Indeterminate vertices and edges are dashed.
std::string to_dot(const Graph& g);
std::string to_dot(const SubsetGraph& s);

// Cover diagram of a subgraph space: edges point from smaller to larger,
// members of equal size share a rank.
std::string hasse_dot(const Space& s);

}  // namespace neutro

#pragma once

#include "neutro/graph.hpp"

// Small worked graphs used across tests, docs, and the sample data files.
namespace neutro::fixtures {

// K4 minus one edge ("diamond"), all vertices real; three real edges and two
// indeterminate ones (v0-v2 and v2-v3).  Connected.
Graph diamond();

// A triangle on v0..v2 (edge v0-v2 indeterminate) plus a disjoint
// indeterminate edge v3-v4.  Two components.
Graph triangle_and_pair();

Graph triangle();                // all-real K3 on v1..v3
Graph path3();                   // all-real path v2 - v1 - v3
Graph isolated(std::size_t n);   // n real vertices v1..vn, no edges

}  // namespace neutro::fixtures

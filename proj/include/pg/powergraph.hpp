#pragma once

#include "pg/graphcore.hpp"
#include "pg/groups.hpp"

namespace pg::powergraph {

using arith::i64;

// Largest group order build_power_graph accepts by default. The CLI can
// raise it via --vertex-cap or the PG_VERTEX_CAP environment variable.
inline constexpr i64 kDefaultVertexCap = 5000;

// The power graph of a group: vertex i is groups::element_at(spec, i), and
// two distinct elements are adjacent iff one is a power of the other.
struct PowerGraphBundle {
  groups::GroupSpec spec;
  graphcore::Graph graph;
  int identity_vertex = 0;
  // For Cyclic(n) only: the identity plus the generators, i.e. the vertices
  // adjacent to everything. Empty for the other families.
  graphcore::VertexSet s_set;
};

PowerGraphBundle build_power_graph(const groups::GroupSpec& spec,
                                   i64 vertex_cap = kDefaultVertexCap);

// The power graph with the identity vertex deleted.
graphcore::InducedSubgraph proper_power_graph(const PowerGraphBundle& bundle);

// For composite cyclic n: the subgraph induced on the residues that are
// neither 0 nor coprime to n. source_vertex maps back to residues.
graphcore::InducedSubgraph tilde_graph(const PowerGraphBundle& bundle);

}  // namespace pg::powergraph

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hat/abelian.hpp"
#include "hat/graph.hpp"
#include "hat/perm_group.hpp"

namespace hat {

// Breadth-first spanning tree rooted at 0, neighbors in ascending order.
struct SpanningTree {
  int root = 0;
  std::vector<int> parent;                 // parent[root] = -1
  std::vector<std::pair<int, int>> arcs;   // (parent, child), BFS discovery order
  bool is_tree_edge(int u, int v) const;
};
SpanningTree spanning_tree(const Graph& x);

// Arc -> group element map with xi(a^-1) = -xi(a); the voltage is stored once
// per edge on its (min,max) arc and the reverse is derived by negation.
struct VoltageAssignment {
  Graph base;
  FiniteAbelianGroup group;
  std::vector<FiniteAbelianGroup::Element> edge_volts;  // indexed like base.edges()

  FiniteAbelianGroup::Element arc_voltage(int tail, int head) const;
};

VoltageAssignment make_voltage(const Graph& base, const FiniteAbelianGroup& group,
                               const std::vector<std::pair<std::pair<int, int>,
                                                           FiniteAbelianGroup::Element>>& arcs);
VoltageAssignment identity_voltage(const Graph& base, const FiniteAbelianGroup& group);
// T-reduced sample: tree arcs carry the identity, cotree voltages are drawn
// from the seeded generator.
VoltageAssignment random_voltage(const Graph& base, const FiniteAbelianGroup& group,
                                 std::uint64_t seed);

// Vertex (u,g) of the derived graph is indexed u*|K| + rank(g).
Graph derived_graph(const VoltageAssignment& xi);
// The voltage group acting on the derived graph by (u, g') -> (u, g' + g).
PermGroup voltage_action(const VoltageAssignment& xi);
// Equivalent assignment (isomorphic derived graph) with identity tree voltages.
VoltageAssignment t_reduce(const VoltageAssignment& xi, const SpanningTree& t);
// T-reduced assignments only: true iff the cotree voltages generate the group.
bool is_connected_cover(const VoltageAssignment& xi);
// First-coordinate projection restricted to each neighborhood is a bijection.
bool projection_is_local_bijection(const VoltageAssignment& xi, const Graph& derived);

struct Quotient {
  Graph graph;
  std::vector<int> orbit_of;             // vertex -> cell index
  std::vector<std::vector<int>> cells;   // ordered by least element
};
// Combinatorial quotient by the orbits of n (cells adjacent iff some cross
// edge exists); defined for non-semiregular groups too.
Quotient quotient_graph(const Graph& x, const PermGroup& n);

// n semiregular on vertices and edges, and the projection preserves degrees.
bool is_regular_covering(const Graph& x, const PermGroup& n);

// Voltage file: line "group k1 k2 ..." then per line "u v g1 g2 ...";
// unlisted edges carry the identity.
std::string write_voltage_file(const VoltageAssignment& xi);
VoltageAssignment read_voltage_file(const Graph& base, const std::string& text);

// Classification of the induced subgraph pattern between consecutive orbits
// of a cyclic quotient with cells of size 4.
enum class Fig3Case { EightCycle, DisconnectedFourCycles, LexCycle, PraegerXu, NotApplicable };
Fig3Case fig3_classify(const Graph& x, const std::vector<std::vector<int>>& cells);

}  // namespace hat

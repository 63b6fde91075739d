#pragma once

#include <vector>

#include "hat/graph.hpp"

namespace hat {

// Ordered partition of the vertex set; each cell holds ascending vertex ids.
struct OrderedPartition {
  std::vector<std::vector<int>> cells;

  bool is_discrete() const;
  std::vector<int> labeling() const;  // discrete partitions only: position -> vertex
  std::vector<int> shape() const;     // cell sizes in order
};

OrderedPartition unit_partition(int n);

// Coarsest equitable refinement. Deterministic and isomorphism-equivariant:
// fragments of a split cell are ordered by their neighbor-count signature,
// ties keep the original vertex order.
OrderedPartition refine(const Graph& x, OrderedPartition p);

// Replace cell c by { {v}, cell minus v } at the same position.
OrderedPartition individualize(const OrderedPartition& p, int cell, int v);

// Position of the first largest non-singleton cell; -1 when discrete.
int target_cell(const OrderedPartition& p);

}  // namespace hat

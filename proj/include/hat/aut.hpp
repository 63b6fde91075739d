#pragma once

#include <optional>
#include <vector>

#include "hat/graph.hpp"
#include "hat/partition.hpp"
#include "hat/perm_group.hpp"

namespace hat {

// Full automorphism group via backtracking over the refinement tree, with
// orbit pruning by the generators discovered so far.
PermGroup automorphism_group(const Graph& x);

// Witness bijection x -> y (verified edge-by-edge), or nullopt.
std::optional<std::vector<int>> are_isomorphic(const Graph& x, const Graph& y);

}  // namespace hat

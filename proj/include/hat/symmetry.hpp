#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hat/graph.hpp"
#include "hat/perm_group.hpp"

namespace hat {

struct TransitivityProfile {
  bool vertex_transitive = false;
  bool edge_transitive = false;
  bool arc_transitive = false;
  bool half_arc_transitive = false;  // vertex && edge && !arc
};

// Flags from the orbit counts of g on vertices, edges and arcs. Every
// generator must be an automorphism of x.
TransitivityProfile transitivity_profile(const Graph& x, const PermGroup& g);
TransitivityProfile transitivity_profile_from_gens(const Graph& x, const std::vector<Perm>& gens);

bool is_half_arc_transitive(const Graph& x);

// The two arc orbits of a half-arc-transitive action; orbit_one contains the
// lexicographically least arc and orbit_two consists of the reversed arcs.
struct Orientation {
  std::vector<Arc> orbit_one;
  std::vector<Arc> orbit_two;
};
Orientation orientation(const Graph& x, const PermGroup& g);

struct AlternatingStructure {
  std::vector<std::vector<int>> cycles;  // alternating closed walks, vertex order
  int radius = 0;                        // half the common cycle length
  int attachment_number = 0;
  bool tightly_attached = false;
};
AlternatingStructure alternating_structure(const Graph& x, const Orientation& o);

struct StabilizerCheck {
  std::uint64_t stabilizer_order = 0;
  bool hypotheses_met = false;  // g half-arc-transitive with attachment sets of size >= 3
};
StabilizerCheck stabilizer_order_check(const Graph& x, const PermGroup& g);

struct HatSubgroupSearch {
  enum class Status { Found, NoneInPool, BudgetExhausted };
  Status status = Status::NoneInPool;
  std::optional<PermGroup> subgroup;
  std::uint64_t pairs_tried = 0;
  bool pool_truncated = false;
};
// Closes pairs drawn from a deterministic pool of Aut(x) elements (breadth
// first closure, capped at 5000, sorted by image) and reports the first
// half-arc-transitive subgroup. Absence is proven only when the pool was
// complete and the budget not exhausted.
HatSubgroupSearch find_hat_subgroup(const Graph& x, std::uint64_t pair_budget);

struct AnalysisReport {
  int n = 0;
  std::size_t edges = 0;
  std::optional<int> valency;
  TransitivityProfile profile;
  std::uint64_t aut_order = 0;
  std::optional<int> radius;
  std::optional<int> attachment;
  std::optional<bool> tight;
};
AnalysisReport analyze_graph(const Graph& x);
// Fixed key order: n, edges, regular, vt, et, at, hat, aut_order, radius,
// attachment, tight; absent values print as '-'.
std::string format_report(const AnalysisReport& r);

}  // namespace hat

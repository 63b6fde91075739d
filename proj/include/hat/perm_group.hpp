#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hat/graph.hpp"
#include "hat/perm.hpp"

namespace hat {

// Finitely generated permutation group with a base and strong generating set.
// Construction runs a randomized sift warm-up followed by the deterministic
// Schreier-Sims verification pass, so order() and contains() are exact.
// Immutable after construction; concurrent read queries are safe.
class PermGroup {
public:
  PermGroup() = default;

  static PermGroup trivial(int degree);
  static PermGroup from_generators(int degree, std::vector<Perm> gens);
  // Puts the given points first in the base; point_stabilizer relies on this.
  static PermGroup from_generators_with_base(int degree, std::vector<Perm> gens,
                                             const std::vector<int>& base_prefix);

  int degree() const { return degree_; }
  std::uint64_t order() const { return order_; }
  bool contains(const Perm& p) const;
  const std::vector<Perm>& generators() const { return gens_; }
  std::vector<Perm> strong_generators() const;
  const std::vector<int>& base() const { return base_; }

  std::vector<int> orbit_of(int v) const;
  // Orbit cells restricted to the domain, ordered by least element.
  std::vector<std::vector<int>> orbits(const std::vector<int>& domain) const;
  PermGroup point_stabilizer(int v) const;
  bool is_transitive(const std::vector<int>& domain) const;
  // True iff for every v in the domain the stabilizer of v fixes the whole
  // domain pointwise.
  bool is_semiregular(const std::vector<int>& domain) const;

  // Breadth-first closure enumeration; throws when the order exceeds limit.
  std::vector<Perm> elements(std::size_t limit) const;
  // Same enumeration truncated to at most count elements.
  std::vector<Perm> elements_prefix(std::size_t count) const;

private:
  struct Level {
    int base_point = 0;
    std::vector<Perm> gens;        // strong generators fixing all earlier base points
    std::vector<int> orbit;        // insertion order, orbit of base_point
    std::vector<Perm> transversal; // indexed by point; transversal[x](base_point) = x
    std::vector<char> in_orbit;
  };

  void build(std::vector<Perm> gens, const std::vector<int>& base_prefix);
  void rebuild_orbit(std::size_t i);
  // Returns the level the residue stalls at; residue is identity on success.
  std::pair<Perm, std::size_t> sift(Perm g, std::size_t from) const;
  void ensure_level_for(const Perm& g);

  int degree_ = 0;
  std::uint64_t order_ = 1;
  std::vector<Perm> gens_;
  std::vector<int> base_;
  std::vector<Level> chain_;
};

bool is_automorphism(const Graph& x, const Perm& p);

// Induced action on the arc list of x (arcs sorted by (tail, head)).
// Every generator must be an automorphism of x.
PermGroup action_on_arcs(const PermGroup& g, const Graph& x);
// Induced action on the (min,max)-sorted edge list of x.
PermGroup action_on_edges(const PermGroup& g, const Graph& x);

// First element (in closure enumeration order) of order exactly p, if any.
std::optional<Perm> element_of_order(const PermGroup& g, int p, std::size_t enumeration_limit);

}  // namespace hat

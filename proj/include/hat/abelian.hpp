#pragma once

#include <cstdint>
#include <vector>

namespace hat {

// Direct product of cyclic groups Z_{k1} x ... x Z_{kt}, written additively.
// Elements are tuples of residues; the identity is the all-zero tuple.
class FiniteAbelianGroup {
public:
  using Element = std::vector<int>;

  explicit FiniteAbelianGroup(std::vector<int> factor_orders);

  const std::vector<int>& factors() const { return factors_; }
  std::int64_t order() const { return order_; }

  Element zero() const;
  Element add(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element reduce(const Element& a) const;  // componentwise mod
  bool is_zero(const Element& a) const;

  // Rank in lexicographic tuple order (first coordinate most significant).
  std::int64_t index_of(const Element& a) const;
  Element element_at(std::int64_t idx) const;
  std::vector<Element> all_elements() const;

  std::vector<Element> subgroup_generated(const std::vector<Element>& gens) const;
  bool generates(const std::vector<Element>& gens) const;

private:
  std::vector<int> factors_;
  std::int64_t order_ = 1;
};

}  // namespace hat

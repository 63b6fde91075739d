#include "hat/abelian.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace hat {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<int> factor_orders)
    : factors_(std::move(factor_orders)) {
  if (factors_.empty()) throw std::invalid_argument("abelian group needs >= 1 factor");
  for (int k : factors_) {
    if (k < 1) throw std::invalid_argument("cyclic factor order must be >= 1");
    if (order_ > (std::int64_t)1 << 40) throw std::invalid_argument("group too large");
    order_ *= k;
  }
}

FiniteAbelianGroup::Element FiniteAbelianGroup::zero() const {
  return Element(factors_.size(), 0);
}

FiniteAbelianGroup::Element FiniteAbelianGroup::reduce(const Element& a) const {
  if (a.size() != factors_.size()) throw std::invalid_argument("element arity mismatch");
  Element r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    int m = factors_[i];
    r[i] = ((a[i] % m) + m) % m;
  }
  return r;
}

FiniteAbelianGroup::Element FiniteAbelianGroup::add(const Element& a, const Element& b) const {
  if (a.size() != factors_.size() || b.size() != factors_.size())
    throw std::invalid_argument("element arity mismatch");
  Element r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = (a[i] + b[i]) % factors_[i];
  return r;
}

FiniteAbelianGroup::Element FiniteAbelianGroup::neg(const Element& a) const {
  if (a.size() != factors_.size()) throw std::invalid_argument("element arity mismatch");
  Element r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = (factors_[i] - a[i]) % factors_[i];
  return r;
}

bool FiniteAbelianGroup::is_zero(const Element& a) const {
  for (int x : a)
    if (x != 0) return false;
  return true;
}

std::int64_t FiniteAbelianGroup::index_of(const Element& a) const {
  if (a.size() != factors_.size()) throw std::invalid_argument("element arity mismatch");
  std::int64_t idx = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 0 || a[i] >= factors_[i]) throw std::invalid_argument("residue out of range");
    idx = idx * factors_[i] + a[i];
  }
  return idx;
}

FiniteAbelianGroup::Element FiniteAbelianGroup::element_at(std::int64_t idx) const {
  if (idx < 0 || idx >= order_) throw std::invalid_argument("element index out of range");
  Element r(factors_.size());
  for (std::size_t i = factors_.size(); i-- > 0;) {
    r[i] = static_cast<int>(idx % factors_[i]);
    idx /= factors_[i];
  }
  return r;
}

std::vector<FiniteAbelianGroup::Element> FiniteAbelianGroup::all_elements() const {
  std::vector<Element> out;
  out.reserve(static_cast<std::size_t>(order_));
  for (std::int64_t i = 0; i < order_; ++i) out.push_back(element_at(i));
  return out;
}

std::vector<FiniteAbelianGroup::Element> FiniteAbelianGroup::subgroup_generated(
    const std::vector<Element>& gens) const {
  std::set<Element> seen{zero()};
  std::vector<Element> stack{zero()};
  while (!stack.empty()) {
    Element cur = stack.back();
    stack.pop_back();
    for (const Element& g : gens) {
      Element nxt = add(cur, reduce(g));
      if (seen.insert(nxt).second) stack.push_back(nxt);
    }
  }
  return {seen.begin(), seen.end()};
}

bool FiniteAbelianGroup::generates(const std::vector<Element>& gens) const {
  return static_cast<std::int64_t>(subgroup_generated(gens).size()) == order_;
}

}  // namespace hat

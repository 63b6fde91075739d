#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hat {

// Permutation of {0..n-1} stored as its image table.
struct Perm {
  std::vector<int> img;

  static Perm identity(int n);
  int degree() const { return static_cast<int>(img.size()); }
  int operator()(int i) const { return img[i]; }

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;
};

bool is_valid_perm(const Perm& p);
bool is_identity(const Perm& p);

// Apply p first, then q: result(i) = q(p(i)). Fixed convention throughout.
Perm compose(const Perm& p, const Perm& q);
Perm inverse(const Perm& p);
Perm perm_power(const Perm& p, std::uint64_t k);
std::uint64_t perm_order(const Perm& p);

std::string format_perm(const Perm& p);  // "[i0 i1 ... i_{n-1}]"
Perm parse_perm(const std::string& s);

}  // namespace hat

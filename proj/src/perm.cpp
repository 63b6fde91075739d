#include "hat/perm.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hat {

Perm Perm::identity(int n) {
  Perm p;
  p.img.resize(n);
  std::iota(p.img.begin(), p.img.end(), 0);
  return p;
}

bool is_valid_perm(const Perm& p) {
  const int n = p.degree();
  std::vector<char> seen(n, 0);
  for (int x : p.img) {
    if (x < 0 || x >= n || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

bool is_identity(const Perm& p) {
  for (int i = 0; i < p.degree(); ++i)
    if (p.img[i] != i) return false;
  return true;
}

Perm compose(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree()) throw std::invalid_argument("compose: degree mismatch");
  Perm r;
  r.img.resize(p.degree());
  for (int i = 0; i < p.degree(); ++i) r.img[i] = q.img[p.img[i]];
  return r;
}

Perm inverse(const Perm& p) {
  Perm r;
  r.img.resize(p.degree());
  for (int i = 0; i < p.degree(); ++i) r.img[p.img[i]] = i;
  return r;
}

Perm perm_power(const Perm& p, std::uint64_t k) {
  Perm acc = Perm::identity(p.degree());
  Perm base = p;
  while (k > 0) {
    if (k & 1) acc = compose(acc, base);
    base = compose(base, base);
    k >>= 1;
  }
  return acc;
}

std::uint64_t perm_order(const Perm& p) {
  const int n = p.degree();
  std::vector<char> seen(n, 0);
  std::uint64_t ord = 1;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (int j = i; !seen[j]; j = p.img[j]) {
      seen[j] = 1;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

std::string format_perm(const Perm& p) {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < p.degree(); ++i) {
    if (i) os << ' ';
    os << p.img[i];
  }
  os << ']';
  return os.str();
}

Perm parse_perm(const std::string& s) {
  auto l = s.find('[');
  auto r = s.rfind(']');
  if (l == std::string::npos || r == std::string::npos || r < l)
    throw std::invalid_argument("perm: expected [i0 i1 ...]");
  std::istringstream is(s.substr(l + 1, r - l - 1));
  Perm p;
  int x;
  while (is >> x) p.img.push_back(x);
  if (!is.eof() && is.fail()) throw std::invalid_argument("perm: bad token");
  if (!is_valid_perm(p)) throw std::invalid_argument("perm: not a bijection");
  return p;
}

}  // namespace hat

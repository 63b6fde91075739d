#include "hat/families.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hat {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

long power_mod(long b, long e, long m) {
  if (m <= 0) throw std::invalid_argument("power_mod: modulus must be positive");
  long r = 1 % m;
  b = ((b % m) + m) % m;
  while (e > 0) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

namespace {

long mod_inverse(long a, long n) {
  long t = 0, new_t = 1, r = n, new_r = ((a % n) + n) % n;
  while (new_r != 0) {
    long q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw std::invalid_argument("mod_inverse: not a unit");
  return ((t % n) + n) % n;
}

void check_x_rmn_params(long& r, int m, int n) {
  if (m < 3) throw std::invalid_argument("x_rmn: m must be >= 3");
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("x_rmn: n must be odd and >= 3");
  r = ((r % n) + n) % n;
  if (std::gcd(r, (long)n) != 1) throw std::invalid_argument("x_rmn: r must be a unit mod n");
  long rm = power_mod(r, m, n);
  if (rm != 1 && rm != n - 1) throw std::invalid_argument("x_rmn: r^m must be +/-1 mod n");
}

}  // namespace

Graph x_rmn(long r, int m, int n) {
  check_x_rmn_params(r, m, n);
  std::vector<std::pair<int, int>> e;
  long rpow = 1;  // r^i, wrap edge from row m-1 uses r^{m-1}
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      int u = i * n + j;
      int row = ((i + 1) % m) * n;
      e.emplace_back(u, row + (int)((j + rpow) % n));
      e.emplace_back(u, row + (int)(((j - rpow) % n + n) % n));
    }
    rpow = rpow * r % n;
  }
  return from_edge_list(m * n, e);
}

Graph rose_window_6_5_4() {
  std::vector<std::pair<int, int>> e;
  auto S = [](int i) { return ((i % 6) + 6) % 6; };
  auto Q = [](int i) { return 6 + ((i % 6) + 6) % 6; };
  for (int i = 0; i < 6; ++i) {
    e.emplace_back(S(i), S(i + 1));  // rim
    e.emplace_back(S(i), Q(i));     // inspoke
    e.emplace_back(S(i + 5), Q(i)); // outspoke
    e.emplace_back(Q(i), Q(i + 4)); // hub
  }
  return from_edge_list(12, e);
}

Graph wreath(int n) {
  if (n < 3) throw std::invalid_argument("wreath: n must be >= 3");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) {
    int j = (i + 1) % n;
    e.emplace_back(i, j);          // E_i E_{i+1}
    e.emplace_back(i, n + j);      // E_i F_{i+1}
    e.emplace_back(n + i, j);      // F_i E_{i+1}
    e.emplace_back(n + i, n + j);  // F_i F_{i+1}
  }
  return from_edge_list(2 * n, e);
}

Graph praeger_xu(int p) {
  if (!is_prime(p) || p == 2) throw std::invalid_argument("praeger_xu: p must be an odd prime");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < p; ++i)
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y)
        for (int z = 0; z < 2; ++z)
          e.emplace_back(4 * i + 2 * x + y, 4 * ((i + 1) % p) + 2 * y + z);
  return from_edge_list(4 * p, e);
}

Graph cayley(const FiniteAbelianGroup& g,
             const std::vector<FiniteAbelianGroup::Element>& s) {
  std::set<FiniteAbelianGroup::Element> set;
  for (const auto& x : s) set.insert(g.reduce(x));
  if (set.count(g.zero())) throw std::invalid_argument("cayley: identity in connection set");
  for (const auto& x : set)
    if (!set.count(g.neg(x)))
      throw std::invalid_argument("cayley: connection set not closed under inversion");
  std::vector<std::pair<int, int>> e;
  for (std::int64_t i = 0; i < g.order(); ++i) {
    auto x = g.element_at(i);
    for (const auto& v : set)
      e.emplace_back((int)i, (int)g.index_of(g.add(x, v)));
  }
  return from_edge_list((int)g.order(), e);
}

Graph ca_graph(int p, int variant) {
  if (variant != 0 && variant != 1) throw std::invalid_argument("ca_graph: variant must be 0 or 1");
  if (!is_prime(p) || p % 4 != 1)
    throw std::invalid_argument("ca_graph: p must be a prime with p = 1 (mod 4)");
  long w = -1;
  for (long x = 2; x < p; ++x)
    if (power_mod(x, 2, p) != 1 && power_mod(x, 4, p) == 1) {
      w = x;
      break;
    }
  if (w < 0) throw std::logic_error("ca_graph: no element of order 4 found");
  const long two_p = 2L * p;
  const long exp = (variant == 0 ? w * w : w) % two_p;
  FiniteAbelianGroup g({(int)two_p, 2});
  std::vector<FiniteAbelianGroup::Element> s = {
      {1, 0},
      {(int)(two_p - 1), 0},
      {(int)exp, 1},
      {(int)((two_p - exp) % two_p), 1},
  };
  return cayley(g, s);
}

XrmnVerdict x_rmn_hat_verdict(long r, int m, int n) {
  XrmnVerdict v;
  if (m < 3 || n < 3 || n % 2 == 0) {
    v.kind = XrmnVerdict::Kind::BadParameters;
    v.detail = "require m >= 3 and odd n >= 3";
    return v;
  }
  r = ((r % n) + n) % n;
  if (std::gcd(r, (long)n) != 1) {
    v.kind = XrmnVerdict::Kind::BadParameters;
    v.detail = "r is not a unit mod n";
    return v;
  }
  long rm = power_mod(r, m, n);
  if (rm != 1 && rm != n - 1) {
    v.kind = XrmnVerdict::Kind::BadParameters;
    v.detail = "r^m is not +/-1 mod n";
    return v;
  }
  long r2 = power_mod(r, 2, n);
  if (r2 == 1 % n || r2 == (n - 1) % n) {
    v.kind = XrmnVerdict::Kind::SquareRootOfUnity;
    v.detail = "r^2 = +/-1";
    return v;
  }
  // The parameter classes {r, -r, r^{-1}, -r^{-1}} describe one graph; both
  // exception conditions are read up to that equivalence.
  const long rinv = mod_inverse(r, n);
  const std::set<long> klass = {r, (n - r) % n, rinv, (n - rinv) % n};
  if (m == 3 && n == 7 && klass.count(2)) {
    v.kind = XrmnVerdict::Kind::Sporadic237;
    v.detail = "(r;m,n) = (2;3,7) up to r -> +/-r^{+/-1}";
    return v;
  }
  if (m == 6 && n % 7 == 0) {
    long k = n / 7;
    if (k % 2 == 1 && std::gcd(7L, k) == 1 && power_mod(r, 6, n) == 1) {
      int solutions = 0;
      for (long q : klass)
        if ((q * q + q - 2) % n == 0 && (7 * (q - 1)) % n == 0 && q % 7 == 5) ++solutions;
      if (solutions == 1) {
        v.kind = XrmnVerdict::Kind::SexticOver7k;
        v.detail = "(r;6,7k) with a unique q in {r,-r,r^-1,-r^-1} solving x^2+x-2=0";
        return v;
      }
    }
  }
  v.kind = XrmnVerdict::Kind::TightlyAttachedHat;
  return v;
}

bool order_4p_hat_exists(int p) {
  if (!is_prime(p) || p == 2) throw std::invalid_argument("order_4p_hat_exists: p must be an odd prime");
  return p % 8 == 1;
}

Graph graph_from_family_spec(const std::string& spec) {
  auto bad = [&](const std::string& why) {
    throw std::invalid_argument("family spec '" + spec + "': " + why);
  };
  auto colon = spec.find(':');
  std::string head = spec.substr(0, colon);
  std::vector<long> args;
  if (colon != std::string::npos) {
    std::string rest = spec.substr(colon + 1);
    std::replace(rest.begin(), rest.end(), ',', ' ');
    std::istringstream is(rest);
    long x;
    while (is >> x) args.push_back(x);
    if (!is.eof()) bad("non-integer parameter");
  }
  auto want = [&](std::size_t k) {
    if (args.size() != k) bad("wrong parameter count");
  };
  try {
    if (head == "rw6") {
      want(0);
      return rose_window_6_5_4();
    }
    if (head == "x") {
      want(3);
      return x_rmn(args[0], (int)args[1], (int)args[2]);
    }
    if (head == "wreath") {
      want(1);
      return wreath((int)args[0]);
    }
    if (head == "px") {
      want(1);
      return praeger_xu((int)args[0]);
    }
    if (head == "ca0") {
      want(1);
      return ca_graph((int)args[0], 0);
    }
    if (head == "ca1") {
      want(1);
      return ca_graph((int)args[0], 1);
    }
    if (head == "lex-cycle") {
      want(1);
      if (args[0] < 3) bad("cycle length must be >= 3");
      return lexicographic_product(cycle_graph((int)args[0]), edgeless_graph(2));
    }
  } catch (const std::invalid_argument& e) {
    bad(e.what());
  }
  bad("unknown family tag");
  return Graph{};  // unreachable
}

std::vector<std::pair<std::string, Graph>> small_family_graphs(int max_order) {
  std::vector<std::pair<std::string, Graph>> out;
  auto label = [](const std::string& head, std::initializer_list<long> args) {
    std::string s = head;
    char sep = ':';
    for (long a : args) {
      s += sep;
      s += std::to_string(a);
      sep = ',';
    }
    return s;
  };
  for (int m = 3; 3 * m < max_order; ++m)
    for (int n = 3; m * n < max_order; n += 2)
      for (long r = 1; r < n; ++r) {
        if (std::gcd(r, (long)n) != 1) continue;
        long rm = power_mod(r, m, n);
        if (rm != 1 && rm != n - 1) continue;
        out.emplace_back(label("x", {r, m, n}), x_rmn(r, m, n));
      }
  if (max_order > 12) out.emplace_back("rw6", rose_window_6_5_4());
  for (int n = 3; 2 * n < max_order; ++n)
    out.emplace_back(label("wreath", {n}), wreath(n));
  for (int p = 3; 4 * p < max_order; p += 2)
    if (is_prime(p)) out.emplace_back(label("px", {p}), praeger_xu(p));
  for (int p = 5; 4 * p < max_order; p += 4)
    if (is_prime(p)) {
      out.emplace_back(label("ca0", {p}), ca_graph(p, 0));
      out.emplace_back(label("ca1", {p}), ca_graph(p, 1));
    }
  for (int n = 3; 2 * n < max_order; ++n)
    out.emplace_back(label("lex-cycle", {n}),
                     lexicographic_product(cycle_graph(n), edgeless_graph(2)));
  return out;
}

}  // namespace hat

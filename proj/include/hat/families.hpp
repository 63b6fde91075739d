#pragma once

#include <string>
#include <vector>

#include "hat/abelian.hpp"
#include "hat/graph.hpp"

namespace hat {

// The tightly-attached family: vertices u_i^j (i in Z_m, j in Z_n) indexed as
// i*n + j, with u_i^j adjacent to u_{i+1}^{j +/- r^i}. Requires gcd(r,n) = 1,
// r^m = +/-1 (mod n), m >= 3, n >= 3 odd. r may be any integer; it is reduced
// mod n.
Graph x_rmn(long r, int m, int n);

// 12 vertices: rim S_i S_{i+1}, inspokes S_i Q_i, outspokes S_{i+5} Q_i and
// hub edges Q_i Q_{i+4}; S_i = i, Q_i = 6 + i.
Graph rose_window_6_5_4();

// 2n vertices E_i = i, F_i = n + i with all four edge kinds between
// consecutive columns; isomorphic to C_n[2K_1].
Graph wreath(int n);

// 4p vertices (i,(x,y)) indexed 4i + 2x + y, edges {(i,(x,y)), (i+1,(y,z))}.
// p must be an odd prime.
Graph praeger_xu(int p);

// Cayley graph on Z_{2p} x Z_2 with a = (1,0), b = (0,1) and w the least
// element of order 4 in Z_p^*. Variant 0 uses exponents +/- w^2, variant 1
// uses +/- w. Requires p prime, p = 1 (mod 4).
Graph ca_graph(int p, int variant);

// Vertices are group elements in lexicographic tuple order; {x,y} is an edge
// iff y - x lies in s. Requires 0 not in s and s closed under negation.
Graph cayley(const FiniteAbelianGroup& g, const std::vector<FiniteAbelianGroup::Element>& s);

struct XrmnVerdict {
  enum class Kind {
    TightlyAttachedHat,  // no exceptional condition holds
    SquareRootOfUnity,   // r^2 = +/-1 (mod n)
    Sporadic237,         // the (2;3,7) parameter class
    SexticOver7k,        // (r;6,7k) with the unique quadratic solution
    BadParameters
  };
  Kind kind = Kind::BadParameters;
  std::string detail;
  bool ok() const { return kind == Kind::TightlyAttachedHat; }
};
// Whether X(r;m,n) is a tightly attached half-arc-transitive graph of radius
// n. Parameter violations report as BadParameters, not as a false verdict.
XrmnVerdict x_rmn_hat_verdict(long r, int m, int n);

// Whether a tetravalent half-arc-transitive graph of order 4p exists,
// equivalently p = 1 (mod 8); p must be an odd prime.
bool order_4p_hat_exists(int p);

bool is_prime(long n);
long power_mod(long b, long e, long m);

// Family mini-language: x:r,m,n | rw6 | wreath:n | px:p | ca0:p | ca1:p | lex-cycle:n
Graph graph_from_family_spec(const std::string& spec);

// All family members with fewer than `max_order` vertices, with labels
// (used by the minimum-order exclusion battery).
std::vector<std::pair<std::string, Graph>> small_family_graphs(int max_order);

}  // namespace hat

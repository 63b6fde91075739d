#include <numeric>
#include <vector>
#include <tuple>
#include <stdexcept>

#include "doctest.h"
#include "hat/aut.hpp"
#include "hat/families.hpp"
#include "hat/graph.hpp"
#include "hat/perm_group.hpp"

using namespace hat;

TEST_CASE("x_rmn construction") {
  Graph x = x_rmn(2, 3, 7);
  CHECK(x.vertex_count() == 21);
  CHECK(x.edge_count() == 42);
  CHECK(is_connected(x));
  CHECK(is_regular(x, 4));
  // u_i^j sits at i*n + j; u_0^0 joins u_1^{+/-1}
  CHECK(x.has_edge(0, 7 + 1));
  CHECK(x.has_edge(0, 7 + 6));

  CHECK(x_rmn(2, 12, 13).vertex_count() == 156);
  CHECK(is_regular(x_rmn(5, 4, 13), 4));
  CHECK(x_rmn(-5, 3, 7) == x_rmn(2, 3, 7));  // r reduces mod n

  CHECK_THROWS_AS(x_rmn(3, 3, 4), std::invalid_argument);   // n even
  CHECK_THROWS_AS(x_rmn(2, 2, 7), std::invalid_argument);   // m too small
  CHECK_THROWS_AS(x_rmn(3, 3, 9), std::invalid_argument);   // r not a unit
  CHECK_THROWS_AS(x_rmn(2, 3, 5), std::invalid_argument);   // r^m != +/-1
}

TEST_CASE("x_rmn is insensitive to the sign of r") {
  std::vector<std::tuple<int, int, int>> triples{{2, 3, 7}, {2, 3, 9}, {3, 3, 13}, {2, 4, 15}};
  for (auto [r, m, n] : triples) {
    CHECK(x_rmn(n - r, m, n) == x_rmn(r, m, n));
    CHECK(are_isomorphic(x_rmn(r, m, n), x_rmn(n - r, m, n)).has_value());
  }
}

TEST_CASE("rose window R6(5,4)") {
  Graph r = rose_window_6_5_4();
  CHECK(r.vertex_count() == 12);
  CHECK(r.edge_count() == 24);
  CHECK(is_regular(r, 4));
  CHECK(is_connected(r));
  CHECK(r.has_edge(0, 1));    // rim S0 S1
  CHECK(r.has_edge(0, 6));    // inspoke S0 Q0
  CHECK(r.has_edge(5, 6));    // outspoke S5 Q0
  CHECK(r.has_edge(6, 10));   // hub Q0 Q4
}

TEST_CASE("wreath graphs") {
  Graph w = wreath(6);
  CHECK(w.vertex_count() == 12);
  CHECK(w.edge_count() == 24);
  CHECK(is_regular(w, 4));
  CHECK_THROWS_AS(wreath(2), std::invalid_argument);
}

TEST_CASE("praeger_xu graphs") {
  Graph g = praeger_xu(5);
  CHECK(g.vertex_count() == 20);
  CHECK(g.edge_count() == 40);
  CHECK(is_regular(g, 4));
  CHECK(is_connected(g));
  // (0,(0,0)) -> forward fibre (1,(0,z)), backward (4,(w,0))
  CHECK(g.has_edge(0, 4));
  CHECK(g.has_edge(0, 5));
  CHECK(g.has_edge(0, 16));
  CHECK(g.has_edge(0, 18));
  CHECK_THROWS_AS(praeger_xu(4), std::invalid_argument);
  CHECK_THROWS_AS(praeger_xu(2), std::invalid_argument);
}

TEST_CASE("cayley graphs") {
  FiniteAbelianGroup z6({6});
  Graph c = cayley(z6, {{1}, {5}});
  CHECK(c == cycle_graph(6));

  FiniteAbelianGroup v4({2, 2});
  Graph k4 = cayley(v4, {{0, 1}, {1, 0}, {1, 1}});
  CHECK(are_isomorphic(k4, complete_graph(4)).has_value());

  CHECK_THROWS_AS(cayley(z6, {{0}}), std::invalid_argument);
  CHECK_THROWS_AS(cayley(z6, {{1}}), std::invalid_argument);  // not inversion closed
}

TEST_CASE("cayley graphs are vertex-transitive via translations") {
  FiniteAbelianGroup g({10, 2});
  Graph ca = ca_graph(5, 0);
  std::vector<Perm> trans;
  for (std::size_t f = 0; f < g.factors().size(); ++f) {
    auto unit = g.zero();
    unit[f] = 1;
    Perm p;
    p.img.resize(ca.vertex_count());
    for (std::int64_t i = 0; i < g.order(); ++i)
      p.img[i] = (int)g.index_of(g.add(g.element_at(i), unit));
    CHECK(is_automorphism(ca, p));
    trans.push_back(std::move(p));
  }
  PermGroup reg = PermGroup::from_generators(ca.vertex_count(), trans);
  std::vector<int> all(ca.vertex_count());
  for (int i = 0; i < ca.vertex_count(); ++i) all[i] = i;
  CHECK(reg.is_transitive(all));
  CHECK(reg.is_semiregular(all));
}

TEST_CASE("ca graphs") {
  // p=5, variant 0: w=2, connection set {(1,0),(9,0),(4,1),(6,1)}
  FiniteAbelianGroup g({10, 2});
  Graph expect = cayley(g, {{1, 0}, {9, 0}, {4, 1}, {6, 1}});
  CHECK(ca_graph(5, 0) == expect);
  Graph v1 = ca_graph(5, 1);
  CHECK(v1.vertex_count() == 20);
  CHECK(is_regular(v1, 4));
  CHECK_THROWS_AS(ca_graph(7, 0), std::invalid_argument);  // 7 = 3 mod 4
  CHECK_THROWS_AS(ca_graph(9, 0), std::invalid_argument);  // not prime
  CHECK_THROWS_AS(ca_graph(5, 2), std::invalid_argument);
}

TEST_CASE("x_rmn parameter verdict") {
  CHECK(x_rmn_hat_verdict(2, 3, 7).kind == XrmnVerdict::Kind::Sporadic237);
  CHECK(x_rmn_hat_verdict(5, 4, 13).kind == XrmnVerdict::Kind::SquareRootOfUnity);
  CHECK(x_rmn_hat_verdict(2, 12, 13).ok());
  CHECK(x_rmn_hat_verdict(2, 3, 9).ok());
  // the whole parameter class of (2;3,7) is excluded
  for (long r : {3, 4, 5})
    CHECK(x_rmn_hat_verdict(r, 3, 7).kind == XrmnVerdict::Kind::Sporadic237);
  // (r;6,7): every unit hits the square-root or sextic condition
  for (long r = 1; r < 7; ++r) {
    auto v = x_rmn_hat_verdict(r, 6, 7);
    CHECK(!v.ok());
    CHECK(v.kind != XrmnVerdict::Kind::BadParameters);
  }
  CHECK(x_rmn_hat_verdict(2, 3, 6).kind == XrmnVerdict::Kind::BadParameters);
  CHECK(x_rmn_hat_verdict(2, 3, 5).kind == XrmnVerdict::Kind::BadParameters);
  CHECK(x_rmn_hat_verdict(3, 3, 9).kind == XrmnVerdict::Kind::BadParameters);
}

TEST_CASE("order-4p existence predicate") {
  CHECK(order_4p_hat_exists(17));
  CHECK(!order_4p_hat_exists(13));
  CHECK(order_4p_hat_exists(41));
  CHECK_THROWS_AS(order_4p_hat_exists(15), std::invalid_argument);
  CHECK_THROWS_AS(order_4p_hat_exists(2), std::invalid_argument);
}

TEST_CASE("order-4p predicate matches the order-8 element criterion") {
  for (int p = 3; p < 100; p += 2) {
    if (!is_prime(p)) continue;
    bool has_order8 = false;
    for (long r = 2; r < p && !has_order8; ++r)
      has_order8 = power_mod(r, 4, p) == p - 1;
    CHECK(order_4p_hat_exists(p) == has_order8);
  }
}

TEST_CASE("family spec mini-language") {
  CHECK(graph_from_family_spec("x:2,3,7") == x_rmn(2, 3, 7));
  CHECK(graph_from_family_spec("rw6") == rose_window_6_5_4());
  CHECK(graph_from_family_spec("wreath:6") == wreath(6));
  CHECK(graph_from_family_spec("px:5") == praeger_xu(5));
  CHECK(graph_from_family_spec("ca0:5") == ca_graph(5, 0));
  CHECK(graph_from_family_spec("ca1:5") == ca_graph(5, 1));
  CHECK(graph_from_family_spec("lex-cycle:6") ==
        lexicographic_product(cycle_graph(6), edgeless_graph(2)));
  CHECK_THROWS_AS(graph_from_family_spec("x:3,3,4"), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_family_spec("bogus"), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_family_spec("wreath:2"), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_family_spec("x:2,3"), std::invalid_argument);
}

TEST_CASE("small family battery is 4-regular and parses back") {
  auto fams = small_family_graphs(27);
  CHECK(fams.size() > 20);
  for (const auto& [label, g] : fams) {
    CHECK(g.vertex_count() < 27);
    CHECK(is_regular(g, 4));
    CHECK(is_connected(g));
    CHECK(graph_from_family_spec(label) == g);
  }
}

TEST_CASE("ca graphs do not depend on the chosen order-4 element") {
  // p=5: order-4 units are 2 and 3; p=13: 5 and 8
  struct Alt { int p; long w_alt; };
  for (auto [p, w_alt] : {Alt{5, 3}, Alt{13, 8}}) {
    FiniteAbelianGroup g({2 * p, 2});
    for (int variant : {0, 1}) {
      long e = (variant == 0 ? w_alt * w_alt : w_alt) % (2 * p);
      Graph alt = cayley(g, {{1, 0},
                             {2 * p - 1, 0},
                             {(int)e, 1},
                             {(int)((2 * p - e) % (2 * p)), 1}});
      CHECK(are_isomorphic(ca_graph(p, variant), alt).has_value());
    }
  }
}

namespace {

// Column rotation (i,j) -> (i,j+1) and twist (i,j) -> (i+1, s*j).
PermGroup metacirculant_subgroup(const Graph& x, long s, int m, int n) {
  Perm rho, sigma;
  rho.img.resize(m * n);
  sigma.img.resize(m * n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      rho.img[i * n + j] = i * n + (j + 1) % n;
      sigma.img[i * n + j] = ((i + 1) % m) * n + (int)((s * j) % n);
    }
  REQUIRE(is_automorphism(x, rho));
  REQUIRE(is_automorphism(x, sigma));
  return PermGroup::from_generators(m * n, {rho, sigma});
}

}  // namespace

TEST_CASE("x_rmn graphs carry a regular metacirculant subgroup when the twist closes") {
  // sigma^m multiplies columns by s^m, so the group has order mn exactly when
  // s^m = 1; for odd m with r^m = -1 the negated twist closes instead. A
  // regular subgroup of the automorphism group makes the graph a Cayley graph.
  struct Params { long r; int m, n; };
  for (auto [r, m, n] : {Params{2, 3, 9}, Params{2, 12, 13}, Params{3, 5, 11}}) {
    Graph x = x_rmn(r, m, n);
    long s = power_mod(r, m, n) == 1 ? r : n - r;
    REQUIRE(power_mod(s, m, n) == 1);
    PermGroup meta = metacirculant_subgroup(x, s, m, n);
    CHECK(meta.order() == (std::uint64_t)m * n);
    std::vector<int> all(m * n);
    std::iota(all.begin(), all.end(), 0);
    CHECK(meta.is_transitive(all));
    CHECK(meta.is_semiregular(all));
  }

  // even m with r^m = -1: neither twist closes and the subgroup doubles
  {
    Graph x = x_rmn(2, 4, 17);
    REQUIRE(power_mod(2, 4, 17) == 16);
    for (long s : {2L, 15L}) {
      PermGroup meta = metacirculant_subgroup(x, s, 4, 17);
      CHECK(meta.order() == 2ULL * 4 * 17);
    }
  }
}

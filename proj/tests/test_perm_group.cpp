#include <numeric>
#include <stdexcept>
#include <numeric>

#include "doctest.h"
#include "hat/aut.hpp"
#include "hat/graph.hpp"
#include "hat/families.hpp"
#include "hat/perm_group.hpp"
#include "oracles.hpp"

using namespace hat;

namespace {

std::vector<int> all_points(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace

TEST_CASE("group construction and order") {
  PermGroup c4 = PermGroup::from_generators(4, {Perm{{1, 2, 3, 0}}});
  CHECK(c4.order() == 4);
  CHECK(c4.contains(Perm{{2, 3, 0, 1}}));
  CHECK(!c4.contains(Perm{{1, 0, 2, 3}}));

  PermGroup t = PermGroup::from_generators(5, {});
  CHECK(t.order() == 1);
  CHECK(t.degree() == 5);

  CHECK_THROWS_AS(PermGroup::from_generators(3, {Perm{{0, 1}}}), std::invalid_argument);
  CHECK_THROWS_AS(PermGroup::from_generators(3, {Perm{{0, 0, 1}}}), std::invalid_argument);
}

TEST_CASE("membership agrees with naive closure") {
  // dihedral of order 12 on the hexagon plus a couple of bigger fixtures
  std::vector<std::vector<Perm>> gen_sets = {
      {Perm{{1, 2, 3, 4, 5, 0}}, Perm{{0, 5, 4, 3, 2, 1}}},
      {Perm{{1, 2, 0, 3, 4}}, Perm{{0, 1, 2, 4, 3}}},
  };
  for (const auto& gens : gen_sets) {
    int deg = gens[0].degree();
    PermGroup g = PermGroup::from_generators(deg, gens);
    auto closed = oracle::closure(gens, deg);
    CHECK(g.order() == closed.size());
    for (const auto& img : closed) CHECK(g.contains(Perm{img}));
    // a few non-members
    int found = 0;
    for (const auto& e : PermGroup::from_generators(
             deg, {Perm{[&] {
               std::vector<int> v(deg);
               std::iota(v.begin(), v.end(), 0);
               std::swap(v[0], v[1]);
               return v;
             }()}})
             .elements(10)) {
      if (!closed.count(e.img)) {
        CHECK(!g.contains(e));
        ++found;
      }
    }
    (void)found;
  }
}

TEST_CASE("orbits") {
  PermGroup t = PermGroup::from_generators(6, {});
  CHECK(t.orbits(all_points(6)).size() == 6);

  PermGroup c5 = PermGroup::from_generators(5, {Perm{{1, 2, 3, 4, 0}}});
  auto orb = c5.orbits(all_points(5));
  REQUIRE(orb.size() == 1);
  CHECK(orb[0].size() == 5);
  CHECK(c5.is_transitive(all_points(5)));
  CHECK(!t.is_transitive(all_points(2)));
}

TEST_CASE("point stabilizer and orbit-stabilizer") {
  PermGroup d12 = automorphism_group(cycle_graph(12));
  CHECK(d12.order() == 24);
  PermGroup st = d12.point_stabilizer(0);
  CHECK(st.order() == 2);
  for (int v : {0, 3, 7}) {
    CHECK(d12.order() ==
          d12.orbit_of(v).size() * d12.point_stabilizer(v).order());
  }
  CHECK_THROWS_AS(d12.point_stabilizer(12), std::invalid_argument);

  // stabilizer of a point in a regular group is trivial
  PermGroup c5 = PermGroup::from_generators(5, {Perm{{1, 2, 3, 4, 0}}});
  CHECK(c5.point_stabilizer(2).order() == 1);
}

TEST_CASE("semiregular and transitive") {
  PermGroup rot6 = PermGroup::from_generators(6, {Perm{{1, 2, 3, 4, 5, 0}}});
  CHECK(rot6.is_semiregular(all_points(6)));
  CHECK(rot6.is_transitive(all_points(6)));
  CHECK(rot6.order() == 6);  // semiregular + transitive => order = |domain|

  PermGroup d6 = automorphism_group(cycle_graph(6));
  CHECK(!d6.is_semiregular(all_points(6)));
}

TEST_CASE("arc action") {
  Graph c3 = cycle_graph(3);
  PermGroup id = PermGroup::trivial(3);
  PermGroup arcs_id = action_on_arcs(id, c3);
  CHECK(arcs_id.degree() == 6);
  CHECK(arcs_id.order() == 1);

  PermGroup a3 = automorphism_group(c3);
  PermGroup arcs = action_on_arcs(a3, c3);
  CHECK(arcs.is_transitive(all_points(6)));

  // arc enumeration must follow the vertex action
  auto arc_list = c3.arcs();
  for (std::size_t gi = 0; gi < a3.generators().size(); ++gi) {
    const Perm& s = a3.generators()[gi];
    const Perm& sa = arcs.generators()[gi];
    for (std::size_t ai = 0; ai < arc_list.size(); ++ai) {
      Arc img = arc_list[sa.img[ai]];
      CHECK(img.tail == s.img[arc_list[ai].tail]);
      CHECK(img.head == s.img[arc_list[ai].head]);
    }
  }

  CHECK_THROWS_AS(action_on_arcs(PermGroup::from_generators(3, {Perm{{2, 1, 0}}}),
                                 from_edge_list(3, {{0, 1}})),
                  std::invalid_argument);
}

TEST_CASE("element enumeration and element_of_order") {
  PermGroup d12 = automorphism_group(cycle_graph(12));
  auto elems = d12.elements(5000);
  CHECK(elems.size() == 24);
  CHECK_THROWS(d12.elements(10));
  auto e13 = element_of_order(automorphism_group(cycle_graph(13)), 13, 5000);
  REQUIRE(e13.has_value());
  CHECK(perm_order(*e13) == 13);
  CHECK(!element_of_order(d12, 5, 5000).has_value());
}

TEST_CASE("membership closure oracle on the order-768 group") {
  Graph w = wreath(6);
  PermGroup aut = automorphism_group(w);
  REQUIRE(aut.order() == 768);
  auto closed = oracle::closure(aut.generators(), 12);
  CHECK(closed.size() == 768);
  int checked = 0;
  for (const auto& img : closed) {
    if (++checked % 7 == 0) CHECK(aut.contains(Perm{img}));
  }
  // adjacent transposition is not an automorphism of W(6,2)
  std::vector<int> sw(12);
  std::iota(sw.begin(), sw.end(), 0);
  std::swap(sw[0], sw[1]);
  CHECK(!aut.contains(Perm{sw}));
}

TEST_CASE("semiregular is judged on the domain only") {
  // the stabilizer of a domain point moves only points outside the domain
  PermGroup g = PermGroup::from_generators(10, {Perm{{0, 1, 2, 3, 4, 5, 6, 7, 9, 8}}});
  std::vector<int> inside{0, 1, 2, 3, 4, 5, 6, 7};
  CHECK(g.is_semiregular(inside));
  CHECK(!g.is_semiregular({0, 8, 9}));  // stabilizer of 0 swaps 8 and 9
  CHECK(g.is_semiregular({8, 9}));
  PermGroup d6 = PermGroup::from_generators(6, {Perm{{1, 2, 3, 4, 5, 0}}, Perm{{0, 5, 4, 3, 2, 1}}});
  CHECK(!d6.is_semiregular({0, 1, 2, 3, 4, 5}));
}

TEST_CASE("arc action of the half-arc-transitive 156-vertex graph has two orbits") {
  Graph x = x_rmn(2, 12, 13);
  PermGroup arcs = action_on_arcs(automorphism_group(x), x);
  CHECK(arcs.degree() == 624);
  std::vector<int> all(624);
  std::iota(all.begin(), all.end(), 0);
  auto orbs = arcs.orbits(all);
  REQUIRE(orbs.size() == 2);
  CHECK(orbs[0].size() == 312);
  CHECK(orbs[1].size() == 312);
}

TEST_CASE("orbit queries reject out-of-range points") {
  PermGroup g = PermGroup::from_generators(4, {Perm{{1, 0, 2, 3}}});
  CHECK_THROWS_AS(g.orbits({0, 7}), std::invalid_argument);
  CHECK_THROWS_AS(g.orbit_of(-1), std::invalid_argument);
}

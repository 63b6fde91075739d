#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "hat/aut.hpp"
#include "hat/families.hpp"
#include "hat/graph.hpp"
#include "hat/partition.hpp"
#include "hat/perm_group.hpp"
#include "oracles.hpp"

using namespace hat;

namespace {

Graph circulant(int n, const std::set<int>& jumps) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j : jumps) e.emplace_back(i, (i + j) % n);
  return from_edge_list(n, e);
}

}  // namespace

TEST_CASE("search equals brute force on seeded circulants") {
  std::mt19937 rng(9090);
  int cases = 0;
  for (int n = 8; n <= 13; ++n) {
    for (int t = 0; t < 6; ++t) {
      std::set<int> jumps;
      while (jumps.size() < 1 + rng() % 3) jumps.insert(1 + (int)(rng() % (n / 2)));
      Graph g = circulant(n, jumps);
      CHECK(automorphism_group(g).order() == oracle::count_automorphisms(g));
      ++cases;
    }
  }
  CHECK(cases == 36);
}

TEST_CASE("search equals brute force on dense symmetric fixtures") {
  Graph octahedron = from_edge_list(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 4},
                                        {1, 5}, {2, 3}, {2, 5}, {3, 4}, {3, 5}, {4, 5}});
  CHECK(automorphism_group(octahedron).order() == 48);
  CHECK(automorphism_group(complete_graph(5)).order() == 120);
  CHECK(automorphism_group(complete_graph(7)).order() == 5040);
  Graph k44 = from_edge_list(8, {{0, 4}, {0, 5}, {0, 6}, {0, 7}, {1, 4}, {1, 5}, {1, 6},
                                 {1, 7}, {2, 4}, {2, 5}, {2, 6}, {2, 7}, {3, 4}, {3, 5},
                                 {3, 6}, {3, 7}});
  CHECK(automorphism_group(k44).order() == oracle::count_automorphisms(k44));  // (4!)^2 * 2
}

TEST_CASE("random generator sets: order and membership against full closure") {
  std::mt19937 rng(31337);
  for (int t = 0; t < 50; ++t) {
    const int deg = 5 + (int)(rng() % 4);
    std::vector<Perm> gens;
    for (int k = 0; k < 2 + (int)(rng() % 2); ++k) {
      std::vector<int> img(deg);
      std::iota(img.begin(), img.end(), 0);
      std::shuffle(img.begin(), img.end(), rng);
      gens.push_back(Perm{img});
    }
    auto closed = oracle::closure(gens, deg);
    if (closed.size() > 5000) continue;
    PermGroup g = PermGroup::from_generators(deg, gens);
    REQUIRE(g.order() == closed.size());
    // membership both ways on random permutations
    for (int q = 0; q < 20; ++q) {
      std::vector<int> img(deg);
      std::iota(img.begin(), img.end(), 0);
      std::shuffle(img.begin(), img.end(), rng);
      CHECK(g.contains(Perm{img}) == (closed.count(img) > 0));
    }
    // orbit-stabilizer at every point
    for (int v = 0; v < deg; ++v)
      CHECK(g.order() == g.orbit_of(v).size() * g.point_stabilizer(v).order());
  }
}

TEST_CASE("refinement is idempotent and preserves the partition") {
  std::mt19937 rng(777);
  for (int t = 0; t < 30; ++t) {
    int n = 6 + (int)(rng() % 6);
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 3 == 0) e.emplace_back(u, v);
    Graph g = from_edge_list(n, e);
    OrderedPartition p = refine(g, unit_partition(n));
    OrderedPartition q = refine(g, p);
    CHECK(p.cells == q.cells);
    std::set<int> seen;
    for (const auto& c : p.cells) seen.insert(c.begin(), c.end());
    CHECK((int)seen.size() == n);
  }
}

TEST_CASE("graph6 decoder only ever throws on junk input") {
  std::mt19937 rng(4242);
  int decoded = 0, rejected = 0;
  for (int t = 0; t < 20000; ++t) {
    std::string s;
    int len = (int)(rng() % 12);
    for (int i = 0; i < len; ++i) s.push_back((char)(rng() % 256));
    try {
      Graph g = decode_graph6(s);
      ++decoded;
      CHECK(encode_graph6(g) == s);  // anything accepted must round-trip
    } catch (const std::invalid_argument&) {
      ++rejected;
    }
  }
  CHECK(decoded + rejected == 20000);
}

#include "hat/coverings.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hat/aut.hpp"
#include "hat/families.hpp"

namespace hat {

bool SpanningTree::is_tree_edge(int u, int v) const {
  return parent[u] == v || parent[v] == u;
}

SpanningTree spanning_tree(const Graph& x) {
  const int n = x.vertex_count();
  if (n == 0) throw std::invalid_argument("spanning_tree: empty graph");
  SpanningTree t;
  t.parent.assign(n, -2);
  t.parent[0] = -1;
  std::queue<int> q;
  q.push(0);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : x.neighbors(u))
      if (t.parent[v] == -2) {
        t.parent[v] = u;
        t.arcs.emplace_back(u, v);
        q.push(v);
      }
  }
  if (t.arcs.size() + 1 != static_cast<std::size_t>(n))
    throw std::invalid_argument("spanning_tree: graph is disconnected");
  return t;
}

namespace {

int edge_index(const std::vector<std::pair<int, int>>& edges, int u, int v) {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(u, v));
  if (it == edges.end() || *it != std::make_pair(u, v))
    throw std::invalid_argument("voltage: arc is not an edge of the base");
  return static_cast<int>(it - edges.begin());
}

}  // namespace

FiniteAbelianGroup::Element VoltageAssignment::arc_voltage(int tail, int head) const {
  const auto edges = base.edges();
  const auto& v = edge_volts.at(edge_index(edges, tail, head));
  return tail < head ? v : group.neg(v);
}

VoltageAssignment make_voltage(const Graph& base, const FiniteAbelianGroup& group,
                               const std::vector<std::pair<std::pair<int, int>,
                                                           FiniteAbelianGroup::Element>>& arcs) {
  VoltageAssignment xi{base, group, {}};
  const auto edges = base.edges();
  xi.edge_volts.assign(edges.size(), group.zero());
  std::vector<char> assigned(edges.size(), 0);
  for (const auto& [arc, volt] : arcs) {
    auto [u, v] = arc;
    int e = edge_index(edges, u, v);
    if (assigned[e]) throw std::invalid_argument("voltage: edge assigned twice");
    assigned[e] = 1;
    auto g = group.reduce(volt);
    xi.edge_volts[e] = (u < v) ? g : group.neg(g);
  }
  return xi;
}

VoltageAssignment identity_voltage(const Graph& base, const FiniteAbelianGroup& group) {
  return make_voltage(base, group, {});
}

VoltageAssignment random_voltage(const Graph& base, const FiniteAbelianGroup& group,
                                 std::uint64_t seed) {
  SpanningTree t = spanning_tree(base);
  std::mt19937_64 rng(seed);
  VoltageAssignment xi = identity_voltage(base, group);
  const auto edges = base.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (t.is_tree_edge(edges[e].first, edges[e].second)) continue;
    xi.edge_volts[e] =
        group.element_at(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(group.order())));
  }
  return xi;
}

Graph derived_graph(const VoltageAssignment& xi) {
  const int n = xi.base.vertex_count();
  const int k = static_cast<int>(xi.group.order());
  const auto edges = xi.base.edges();
  std::vector<std::pair<int, int>> out;
  out.reserve(edges.size() * k);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    auto [u, v] = edges[e];
    const auto& volt = xi.edge_volts[e];
    for (int gi = 0; gi < k; ++gi) {
      auto g = xi.group.element_at(gi);
      int a = u * k + gi;
      int b = v * k + static_cast<int>(xi.group.index_of(xi.group.add(volt, g)));
      out.emplace_back(a, b);
    }
  }
  return from_edge_list(n * k, out);
}

PermGroup voltage_action(const VoltageAssignment& xi) {
  const int n = xi.base.vertex_count();
  const int k = static_cast<int>(xi.group.order());
  std::vector<Perm> gens;
  for (std::size_t f = 0; f < xi.group.factors().size(); ++f) {
    if (xi.group.factors()[f] == 1) continue;
    auto unit = xi.group.zero();
    unit[f] = 1;
    Perm p;
    p.img.resize(static_cast<std::size_t>(n) * k);
    for (int u = 0; u < n; ++u)
      for (int gi = 0; gi < k; ++gi)
        p.img[u * k + gi] =
            u * k + static_cast<int>(xi.group.index_of(xi.group.add(xi.group.element_at(gi), unit)));
    gens.push_back(std::move(p));
  }
  return PermGroup::from_generators(n * k, std::move(gens));
}

VoltageAssignment t_reduce(const VoltageAssignment& xi, const SpanningTree& t) {
  const int n = xi.base.vertex_count();
  // Potentials along the tree: phi(child) = xi(parent,child) + phi(parent);
  // then xi'(u,v) = xi(u,v) + phi(u) - phi(v) vanishes on tree arcs.
  std::vector<FiniteAbelianGroup::Element> phi(n, xi.group.zero());
  for (auto [p, c] : t.arcs) phi[c] = xi.group.add(xi.arc_voltage(p, c), phi[p]);
  VoltageAssignment out = xi;
  const auto edges = xi.base.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    auto [u, v] = edges[e];
    out.edge_volts[e] =
        xi.group.add(xi.edge_volts[e], xi.group.add(phi[u], xi.group.neg(phi[v])));
  }
  return out;
}

bool is_connected_cover(const VoltageAssignment& xi) {
  SpanningTree t = spanning_tree(xi.base);
  const auto edges = xi.base.edges();
  std::vector<FiniteAbelianGroup::Element> cotree;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (t.is_tree_edge(edges[e].first, edges[e].second)) {
      if (!xi.group.is_zero(xi.edge_volts[e]))
        throw std::invalid_argument("is_connected_cover: assignment is not T-reduced");
    } else {
      cotree.push_back(xi.edge_volts[e]);
    }
  }
  return xi.group.generates(cotree);
}

bool projection_is_local_bijection(const VoltageAssignment& xi, const Graph& derived) {
  const int k = static_cast<int>(xi.group.order());
  for (int w = 0; w < derived.vertex_count(); ++w) {
    const int u = w / k;
    std::vector<int> proj;
    for (int z : derived.neighbors(w)) proj.push_back(z / k);
    std::sort(proj.begin(), proj.end());
    if (proj != xi.base.neighbors(u)) return false;
  }
  return true;
}

Quotient quotient_graph(const Graph& x, const PermGroup& n) {
  for (const Perm& g : n.generators())
    if (!is_automorphism(x, g))
      throw std::invalid_argument("quotient_graph: generator is not an automorphism");
  std::vector<int> domain(x.vertex_count());
  for (int i = 0; i < x.vertex_count(); ++i) domain[i] = i;
  Quotient q;
  q.cells = n.orbits(domain);
  q.orbit_of.assign(x.vertex_count(), -1);
  for (int ci = 0; ci < static_cast<int>(q.cells.size()); ++ci)
    for (int v : q.cells[ci]) q.orbit_of[v] = ci;
  std::set<std::pair<int, int>> qe;
  for (auto [u, v] : x.edges()) {
    int a = q.orbit_of[u], b = q.orbit_of[v];
    if (a != b) qe.insert({std::min(a, b), std::max(a, b)});
  }
  q.graph = from_edge_list(static_cast<int>(q.cells.size()), {qe.begin(), qe.end()});
  return q;
}

bool is_regular_covering(const Graph& x, const PermGroup& n) {
  for (const Perm& g : n.generators())
    if (!is_automorphism(x, g))
      throw std::invalid_argument("is_regular_covering: generator is not an automorphism");
  const std::uint64_t ord = n.order();

  // Semiregular on vertices: every vertex orbit has full size.
  for (int v = 0; v < x.vertex_count(); ++v)
    if (n.orbit_of(v).size() != ord) return false;

  // Semiregular on edges: every edge orbit under the induced action has full
  // size (an element swapping the endpoints of an edge would shrink one).
  const auto edges = x.edges();
  const auto& gens = n.generators();
  std::vector<char> seen(edges.size(), 0);
  for (std::size_t e0 = 0; e0 < edges.size(); ++e0) {
    if (seen[e0]) continue;
    std::vector<std::size_t> orbit{e0};
    seen[e0] = 1;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      auto [u, v] = edges[orbit[head]];
      for (const Perm& g : gens) {
        int a = g.img[u], b = g.img[v];
        if (a > b) std::swap(a, b);
        auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(a, b));
        std::size_t idx = static_cast<std::size_t>(it - edges.begin());
        if (!seen[idx]) {
          seen[idx] = 1;
          orbit.push_back(idx);
        }
      }
    }
    if (orbit.size() != ord) return false;
  }

  // Projection preserves degrees (no edge inside an orbit, no two parallel
  // orbit edges collapsing).
  Quotient q = quotient_graph(x, n);
  for (int v = 0; v < x.vertex_count(); ++v)
    if (x.degree(v) != q.graph.degree(q.orbit_of[v])) return false;
  return true;
}

std::string write_voltage_file(const VoltageAssignment& xi) {
  std::ostringstream os;
  os << "group";
  for (int k : xi.group.factors()) os << ' ' << k;
  os << '\n';
  const auto edges = xi.base.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (xi.group.is_zero(xi.edge_volts[e])) continue;
    os << edges[e].first << ' ' << edges[e].second;
    for (int g : xi.edge_volts[e]) os << ' ' << g;
    os << '\n';
  }
  return os.str();
}

VoltageAssignment read_voltage_file(const Graph& base, const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line)) throw std::invalid_argument("voltage file: empty");
  std::istringstream head(line);
  std::string tag;
  head >> tag;
  if (tag != "group") throw std::invalid_argument("voltage file: expected 'group k1 k2 ...'");
  std::vector<int> factors;
  int k;
  while (head >> k) factors.push_back(k);
  FiniteAbelianGroup group(factors);
  std::vector<std::pair<std::pair<int, int>, FiniteAbelianGroup::Element>> arcs;
  while (std::getline(is, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream row(line);
    int u, v;
    if (!(row >> u >> v)) throw std::invalid_argument("voltage file: bad arc line");
    FiniteAbelianGroup::Element g;
    int x;
    while (row >> x) g.push_back(x);
    if (g.size() != factors.size())
      throw std::invalid_argument("voltage file: voltage arity mismatch");
    arcs.push_back({{u, v}, g});
  }
  return make_voltage(base, group, arcs);
}

namespace {

// Component sizes of the induced subgraph on `verts`, provided every induced
// degree is exactly 2 (else empty).
std::vector<int> induced_cycle_components(const Graph& x, const std::vector<int>& verts) {
  std::map<int, std::vector<int>> adj;
  std::set<int> vs(verts.begin(), verts.end());
  for (int v : verts)
    for (int w : x.neighbors(v))
      if (vs.count(w)) adj[v].push_back(w);
  for (int v : verts)
    if (adj[v].size() != 2) return {};
  std::set<int> seen;
  std::vector<int> comps;
  for (int v : verts) {
    if (seen.count(v)) continue;
    int size = 0;
    std::vector<int> stack{v};
    seen.insert(v);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      ++size;
      for (int w : adj[u])
        if (!seen.count(w)) {
          seen.insert(w);
          stack.push_back(w);
        }
    }
    comps.push_back(size);
  }
  std::sort(comps.begin(), comps.end());
  return comps;
}

}  // namespace

Fig3Case fig3_classify(const Graph& x, const std::vector<std::vector<int>>& cells) {
  const std::size_t p = cells.size();
  if (p < 3) return Fig3Case::NotApplicable;
  std::vector<char> seen(x.vertex_count(), 0);
  for (const auto& c : cells) {
    if (c.size() != 4) return Fig3Case::NotApplicable;
    for (int v : c) {
      if (v < 0 || v >= x.vertex_count() || seen[v]) return Fig3Case::NotApplicable;
      seen[v] = 1;
    }
  }
  if (static_cast<std::size_t>(x.vertex_count()) != 4 * p) return Fig3Case::NotApplicable;

  std::size_t eight = 0, four_four = 0;
  for (std::size_t i = 0; i < p; ++i) {
    std::vector<int> pair = cells[i];
    const auto& nxt = cells[(i + 1) % p];
    pair.insert(pair.end(), nxt.begin(), nxt.end());
    auto comps = induced_cycle_components(x, pair);
    if (comps == std::vector<int>{8})
      ++eight;
    else if (comps == std::vector<int>{4, 4})
      ++four_four;
    else
      return Fig3Case::NotApplicable;
  }
  if (eight == p) return Fig3Case::EightCycle;
  if (four_four != p) return Fig3Case::NotApplicable;

  if (!is_connected(x)) return Fig3Case::DisconnectedFourCycles;
  if (are_isomorphic(x, lexicographic_product(cycle_graph(2 * static_cast<int>(p)),
                                              edgeless_graph(2))))
    return Fig3Case::LexCycle;
  if (is_prime(static_cast<long>(p)) && p % 2 == 1 &&
      are_isomorphic(x, praeger_xu(static_cast<int>(p))))
    return Fig3Case::PraegerXu;
  return Fig3Case::NotApplicable;
}

}  // namespace hat

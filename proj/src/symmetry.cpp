#include "hat/symmetry.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hat/aut.hpp"

namespace hat {

namespace {

// Number of orbits of the generator closure on 0..count-1 under the images
// given by `image(gen_index, point)`.
template <typename ImageFn>
int orbit_count(int count, std::size_t gen_count, ImageFn image) {
  if (count == 0) return 0;
  std::vector<char> seen(count, 0);
  int orbits = 0;
  std::vector<int> stack;
  for (int s = 0; s < count; ++s) {
    if (seen[s]) continue;
    ++orbits;
    seen[s] = 1;
    stack.assign(1, s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (std::size_t gi = 0; gi < gen_count; ++gi) {
        int y = image(gi, v);
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
  }
  return orbits;
}

struct ArcIndexer {
  std::vector<Arc> arcs;
  std::vector<int> offsets;
  const Graph* x;

  explicit ArcIndexer(const Graph& g) : arcs(g.arcs()), offsets(g.vertex_count() + 1, 0), x(&g) {
    for (int u = 0; u < g.vertex_count(); ++u) offsets[u + 1] = offsets[u] + g.degree(u);
  }
  int index(int tail, int head) const {
    const auto& nb = x->neighbors(tail);
    auto it = std::lower_bound(nb.begin(), nb.end(), head);
    return offsets[tail] + static_cast<int>(it - nb.begin());
  }
};

}  // namespace

TransitivityProfile transitivity_profile_from_gens(const Graph& x,
                                                   const std::vector<Perm>& gens) {
  for (const Perm& g : gens)
    if (!is_automorphism(x, g))
      throw std::invalid_argument("transitivity_profile: generator is not an automorphism");
  TransitivityProfile p;
  const int n = x.vertex_count();
  p.vertex_transitive =
      orbit_count(n, gens.size(), [&](std::size_t gi, int v) { return gens[gi].img[v]; }) <= 1;

  const auto edges = x.edges();
  auto edge_index = [&](int u, int v) {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(u, v));
    return static_cast<int>(it - edges.begin());
  };
  p.edge_transitive = orbit_count(static_cast<int>(edges.size()), gens.size(),
                                  [&](std::size_t gi, int e) {
                                    return edge_index(gens[gi].img[edges[e].first],
                                                      gens[gi].img[edges[e].second]);
                                  }) <= 1;

  ArcIndexer ai(x);
  p.arc_transitive = orbit_count(static_cast<int>(ai.arcs.size()), gens.size(),
                                 [&](std::size_t gi, int a) {
                                   return ai.index(gens[gi].img[ai.arcs[a].tail],
                                                   gens[gi].img[ai.arcs[a].head]);
                                 }) <= 1;

  p.half_arc_transitive = p.vertex_transitive && p.edge_transitive && !p.arc_transitive;
  return p;
}

TransitivityProfile transitivity_profile(const Graph& x, const PermGroup& g) {
  return transitivity_profile_from_gens(x, g.generators());
}

bool is_half_arc_transitive(const Graph& x) {
  return transitivity_profile(x, automorphism_group(x)).half_arc_transitive;
}

Orientation orientation(const Graph& x, const PermGroup& g) {
  TransitivityProfile p = transitivity_profile(x, g);
  if (!p.half_arc_transitive)
    throw std::invalid_argument("orientation: action is not half-arc-transitive");
  ArcIndexer ai(x);
  const int na = static_cast<int>(ai.arcs.size());
  const auto& gens = g.generators();
  std::vector<char> in_one(na, 0);
  std::vector<int> stack{0};
  in_one[0] = 1;
  while (!stack.empty()) {
    int a = stack.back();
    stack.pop_back();
    for (const Perm& s : gens) {
      int y = ai.index(s.img[ai.arcs[a].tail], s.img[ai.arcs[a].head]);
      if (!in_one[y]) {
        in_one[y] = 1;
        stack.push_back(y);
      }
    }
  }
  Orientation o;
  for (int a = 0; a < na; ++a)
    (in_one[a] ? o.orbit_one : o.orbit_two).push_back(ai.arcs[a]);
  if (o.orbit_one.size() != o.orbit_two.size())
    throw std::logic_error("orientation: arc orbits are not paired");
  // The complement must be exactly the reversed arcs of the chosen orbit.
  std::set<std::pair<int, int>> rev;
  for (const Arc& a : o.orbit_one) rev.insert({a.head, a.tail});
  for (const Arc& a : o.orbit_two)
    if (!rev.count({a.tail, a.head}))
      throw std::logic_error("orientation: second orbit is not the reversal of the first");
  return o;
}

AlternatingStructure alternating_structure(const Graph& x, const Orientation& o) {
  const int n = x.vertex_count();
  std::vector<std::vector<int>> out(n), in(n);
  for (const Arc& a : o.orbit_one) {
    out[a.tail].push_back(a.head);
    in[a.head].push_back(a.tail);
  }
  for (int v = 0; v < n; ++v)
    if (out[v].size() != 2 || in[v].size() != 2)
      throw std::invalid_argument("alternating_structure: orientation is not 2-in 2-out");

  auto other = [](const std::vector<int>& pair, int not_this) {
    return pair[0] == not_this ? pair[1] : pair[0];
  };

  // Walk head-role / tail-role steps: from oriented edge (t,h), take the
  // other in-arc (t',h) backwards, then the other out-arc (t',h') forwards.
  // Every oriented edge lies on exactly one alternating cycle.
  std::set<std::pair<int, int>> visited;
  AlternatingStructure as;
  for (const Arc& start : o.orbit_one) {
    if (visited.count({start.tail, start.head})) continue;
    std::vector<int> walk;
    int t = start.tail, h = start.head;
    do {
      visited.insert({t, h});
      walk.push_back(t);
      walk.push_back(h);
      int t2 = other(in[h], t);
      visited.insert({t2, h});
      h = other(out[t2], h);
      t = t2;
    } while (!(t == start.tail && h == start.head));
    as.cycles.push_back(std::move(walk));
  }

  const std::size_t len = as.cycles.front().size();
  for (const auto& c : as.cycles)
    if (c.size() != len)
      throw std::logic_error("alternating_structure: cycle lengths differ");
  as.radius = static_cast<int>(len / 2);

  std::vector<std::set<int>> vsets;
  vsets.reserve(as.cycles.size());
  for (const auto& c : as.cycles) vsets.emplace_back(c.begin(), c.end());
  std::optional<std::size_t> common;
  for (std::size_t i = 0; i < vsets.size(); ++i)
    for (std::size_t j = i + 1; j < vsets.size(); ++j) {
      std::vector<int> inter;
      std::set_intersection(vsets[i].begin(), vsets[i].end(), vsets[j].begin(), vsets[j].end(),
                            std::back_inserter(inter));
      if (inter.empty()) continue;
      if (common && *common != inter.size())
        throw std::logic_error("alternating_structure: attachment sizes disagree");
      common = inter.size();
    }
  // A single alternating cycle intersects no other; the attachment number
  // degenerates to the radius.
  as.attachment_number = common ? static_cast<int>(*common) : as.radius;
  as.tightly_attached = as.attachment_number == as.radius;
  return as;
}

StabilizerCheck stabilizer_order_check(const Graph& x, const PermGroup& g) {
  StabilizerCheck c;
  c.stabilizer_order = g.point_stabilizer(0).order();
  TransitivityProfile p = transitivity_profile(x, g);
  if (p.half_arc_transitive && is_regular(x, 4)) {
    AlternatingStructure as = alternating_structure(x, orientation(x, g));
    c.hypotheses_met = as.attachment_number >= 3;
  }
  return c;
}

HatSubgroupSearch find_hat_subgroup(const Graph& x, std::uint64_t pair_budget) {
  PermGroup aut = automorphism_group(x);
  std::vector<int> all(x.vertex_count());
  for (int i = 0; i < x.vertex_count(); ++i) all[i] = i;
  if (!aut.is_transitive(all))
    throw std::invalid_argument("find_hat_subgroup: graph is not vertex-transitive");

  constexpr std::size_t kPoolCap = 5000;
  HatSubgroupSearch res;
  std::vector<Perm> pool = aut.elements_prefix(kPoolCap + 1);
  res.pool_truncated = pool.size() > kPoolCap;
  if (res.pool_truncated) pool.resize(kPoolCap);
  std::sort(pool.begin(), pool.end());

  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = i; j < pool.size(); ++j) {
      if (res.pairs_tried >= pair_budget) {
        res.status = HatSubgroupSearch::Status::BudgetExhausted;
        return res;
      }
      ++res.pairs_tried;
      std::vector<Perm> gens{pool[i], pool[j]};
      TransitivityProfile p = transitivity_profile_from_gens(x, gens);
      if (p.half_arc_transitive) {
        res.status = HatSubgroupSearch::Status::Found;
        res.subgroup = PermGroup::from_generators(x.vertex_count(), std::move(gens));
        return res;
      }
    }
  }
  res.status = res.pool_truncated ? HatSubgroupSearch::Status::BudgetExhausted
                                  : HatSubgroupSearch::Status::NoneInPool;
  return res;
}

AnalysisReport analyze_graph(const Graph& x) {
  AnalysisReport r;
  r.n = x.vertex_count();
  r.edges = x.edge_count();
  r.valency = common_valency(x);
  PermGroup aut = automorphism_group(x);
  r.aut_order = aut.order();
  r.profile = transitivity_profile(x, aut);
  if (r.profile.half_arc_transitive) {
    AlternatingStructure as = alternating_structure(x, orientation(x, aut));
    r.radius = as.radius;
    r.attachment = as.attachment_number;
    r.tight = as.tightly_attached;
  }
  return r;
}

std::string format_report(const AnalysisReport& r) {
  std::ostringstream os;
  auto b = [](bool v) { return v ? "true" : "false"; };
  os << "n=" << r.n << '\n';
  os << "edges=" << r.edges << '\n';
  os << "regular=";
  if (r.valency)
    os << *r.valency;
  else
    os << '-';
  os << '\n';
  os << "vt=" << b(r.profile.vertex_transitive) << '\n';
  os << "et=" << b(r.profile.edge_transitive) << '\n';
  os << "at=" << b(r.profile.arc_transitive) << '\n';
  os << "hat=" << b(r.profile.half_arc_transitive) << '\n';
  os << "aut_order=" << r.aut_order << '\n';
  os << "radius=";
  if (r.radius)
    os << *r.radius;
  else
    os << '-';
  os << '\n';
  os << "attachment=";
  if (r.attachment)
    os << *r.attachment;
  else
    os << '-';
  os << '\n';
  os << "tight=";
  if (r.tight)
    os << b(*r.tight);
  else
    os << '-';
  os << '\n';
  return os.str();
}

}  // namespace hat

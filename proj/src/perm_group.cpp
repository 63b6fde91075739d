#include "hat/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>
#include <stdexcept>

namespace hat {

namespace {

bool fixes_prefix(const Perm& g, const std::vector<int>& base, std::size_t upto) {
  for (std::size_t i = 0; i < upto; ++i)
    if (g.img[base[i]] != base[i]) return false;
  return true;
}

int least_moved_point(const Perm& g) {
  for (int i = 0; i < g.degree(); ++i)
    if (g.img[i] != i) return i;
  return -1;
}

}  // namespace

PermGroup PermGroup::trivial(int degree) {
  PermGroup g;
  g.degree_ = degree;
  return g;
}

PermGroup PermGroup::from_generators(int degree, std::vector<Perm> gens) {
  return from_generators_with_base(degree, std::move(gens), {});
}

PermGroup PermGroup::from_generators_with_base(int degree, std::vector<Perm> gens,
                                               const std::vector<int>& base_prefix) {
  if (degree < 0) throw std::invalid_argument("group degree negative");
  for (const Perm& g : gens) {
    if (g.degree() != degree) throw std::invalid_argument("generator degree mismatch");
    if (!is_valid_perm(g)) throw std::invalid_argument("generator is not a bijection");
  }
  PermGroup out;
  out.degree_ = degree;
  out.build(std::move(gens), base_prefix);
  return out;
}

void PermGroup::ensure_level_for(const Perm& g) {
  int b = least_moved_point(g);
  Level lv;
  lv.base_point = b;
  chain_.push_back(std::move(lv));
  base_.push_back(b);
}

void PermGroup::rebuild_orbit(std::size_t i) {
  Level& L = chain_[i];
  L.orbit.clear();
  L.transversal.assign(degree_, Perm{});
  L.in_orbit.assign(degree_, 0);
  L.orbit.push_back(L.base_point);
  L.in_orbit[L.base_point] = 1;
  L.transversal[L.base_point] = Perm::identity(degree_);
  for (std::size_t head = 0; head < L.orbit.size(); ++head) {
    int x = L.orbit[head];
    for (const Perm& s : L.gens) {
      int y = s.img[x];
      if (!L.in_orbit[y]) {
        L.in_orbit[y] = 1;
        L.orbit.push_back(y);
        L.transversal[y] = compose(L.transversal[x], s);
      }
    }
  }
}

std::pair<Perm, std::size_t> PermGroup::sift(Perm g, std::size_t from) const {
  for (std::size_t i = from; i < chain_.size(); ++i) {
    const Level& L = chain_[i];
    int x = g.img[L.base_point];
    if (x == L.base_point) continue;
    if (!L.in_orbit[x]) return {std::move(g), i};
    g = compose(g, inverse(L.transversal[x]));
  }
  return {std::move(g), chain_.size()};
}

void PermGroup::build(std::vector<Perm> gens, const std::vector<int>& base_prefix) {
  gens_.clear();
  for (Perm& g : gens)
    if (!is_identity(g)) gens_.push_back(std::move(g));
  chain_.clear();
  base_.clear();
  for (int b : base_prefix) {
    if (b < 0 || b >= degree_) throw std::invalid_argument("base point out of range");
    Level lv;
    lv.base_point = b;
    chain_.push_back(lv);
    base_.push_back(b);
  }
  for (std::size_t i = 0; i < chain_.size(); ++i) rebuild_orbit(i);

  // The generator set of level i is every strong generator fixing base[0..i-1];
  // adding one therefore dirties level `lev` and everything above it.
  auto add_strong = [&](Perm g, std::size_t lev) {
    if (lev == chain_.size()) ensure_level_for(g);
    for (std::size_t i = 0; i <= lev; ++i)
      if (fixes_prefix(g, base_, i)) chain_[i].gens.push_back(g);
    for (std::size_t i = 0; i <= lev && i < chain_.size(); ++i) rebuild_orbit(i);
  };

  for (const Perm& g : gens_) {
    auto [res, lev] = sift(g, 0);
    if (!is_identity(res)) add_strong(std::move(res), lev);
  }

  // Randomized warm-up: sift pseudo-random products so that deep strong
  // generators appear before the verification sweep.
  if (!gens_.empty()) {
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ (std::uint64_t)degree_);
    std::vector<Perm> pool = gens_;
    while (pool.size() < 8) pool.push_back(gens_[pool.size() % gens_.size()]);
    for (int iter = 0; iter < 48; ++iter) {
      std::size_t a = rng() % pool.size(), b = rng() % pool.size();
      pool[a] = compose(pool[a], pool[b]);
      auto [res, lev] = sift(pool[a], 0);
      if (!is_identity(res)) add_strong(std::move(res), lev);
    }
  }

  // Deterministic Schreier-Sims verification: every Schreier generator of
  // every level must sift to the identity. add_strong may reallocate the
  // chain, so the level is re-fetched by index and the loops bail out first.
  std::size_t i = chain_.size();
  while (i > 0) {
    std::size_t lvl = i - 1;
    rebuild_orbit(lvl);
    bool dirty = false;
    for (std::size_t oi = 0; !dirty && oi < chain_[lvl].orbit.size(); ++oi) {
      for (std::size_t gi = 0; !dirty && gi < chain_[lvl].gens.size(); ++gi) {
        const Level& L = chain_[lvl];
        const int x = L.orbit[oi];
        const Perm& s = L.gens[gi];
        const int y = s.img[x];
        Perm schreier = compose(compose(L.transversal[x], s), inverse(L.transversal[y]));
        auto [res, lev] = sift(std::move(schreier), lvl + 1);
        if (!is_identity(res)) {
          add_strong(std::move(res), lev);
          i = lev + 1;
          dirty = true;
        }
      }
    }
    if (!dirty) --i;
  }

  // Drop empty trailing structure and compute the order.
  order_ = 1;
  for (std::size_t l = 0; l < chain_.size(); ++l) {
    rebuild_orbit(l);
    std::uint64_t sz = chain_[l].orbit.size();
    if (order_ > UINT64_MAX / sz) throw std::overflow_error("group order exceeds 64 bits");
    order_ *= sz;
  }
}

bool PermGroup::contains(const Perm& p) const {
  if (p.degree() != degree_) return false;
  if (!is_valid_perm(p)) return false;
  auto [res, lev] = sift(p, 0);
  (void)lev;
  return is_identity(res);
}

std::vector<Perm> PermGroup::strong_generators() const {
  std::vector<Perm> out;
  std::set<std::vector<int>> seen;
  for (const Level& L : chain_)
    for (const Perm& g : L.gens)
      if (seen.insert(g.img).second) out.push_back(g);
  return out;
}

std::vector<int> PermGroup::orbit_of(int v) const {
  if (v < 0 || v >= degree_) throw std::invalid_argument("orbit_of: point out of range");
  std::vector<char> seen(degree_, 0);
  std::vector<int> orb{v};
  seen[v] = 1;
  for (std::size_t head = 0; head < orb.size(); ++head)
    for (const Perm& g : gens_) {
      int y = g.img[orb[head]];
      if (!seen[y]) {
        seen[y] = 1;
        orb.push_back(y);
      }
    }
  std::sort(orb.begin(), orb.end());
  return orb;
}

std::vector<std::vector<int>> PermGroup::orbits(const std::vector<int>& domain) const {
  std::vector<char> in_domain(degree_, 0);
  for (int v : domain) {
    if (v < 0 || v >= degree_) throw std::invalid_argument("orbits: point out of range");
    in_domain[v] = 1;
  }
  std::vector<char> done(degree_, 0);
  std::vector<int> sorted_domain = domain;
  std::sort(sorted_domain.begin(), sorted_domain.end());
  sorted_domain.erase(std::unique(sorted_domain.begin(), sorted_domain.end()),
                      sorted_domain.end());
  std::vector<std::vector<int>> out;
  for (int v : sorted_domain) {
    if (done[v]) continue;
    std::vector<int> orb = orbit_of(v);
    std::vector<int> cell;
    for (int u : orb) {
      done[u] = 1;
      if (in_domain[u]) cell.push_back(u);
    }
    out.push_back(std::move(cell));
  }
  return out;
}

PermGroup PermGroup::point_stabilizer(int v) const {
  if (v < 0 || v >= degree_) throw std::invalid_argument("point_stabilizer: out of range");
  PermGroup rebased = from_generators_with_base(degree_, gens_, {v});
  std::vector<Perm> st;
  for (const Perm& s : rebased.strong_generators())
    if (s.img[v] == v) st.push_back(s);
  return from_generators(degree_, std::move(st));
}

bool PermGroup::is_transitive(const std::vector<int>& domain) const {
  if (domain.empty()) return true;
  return orbits(domain).size() == 1;
}

bool PermGroup::is_semiregular(const std::vector<int>& domain) const {
  bool all_full = true;
  for (int v : domain)
    if (static_cast<std::uint64_t>(orbit_of(v).size()) != order_) {
      all_full = false;
      break;
    }
  if (all_full) return true;
  for (int v : domain) {
    PermGroup st = point_stabilizer(v);
    if (st.order() == 1) continue;
    for (const Perm& s : st.generators())
      for (int u : domain)
        if (s.img[u] != u) return false;
  }
  return true;
}

std::vector<Perm> PermGroup::elements_prefix(std::size_t count) const {
  std::vector<Perm> out;
  if (count == 0) return out;
  std::set<std::vector<int>> seen;
  std::deque<Perm> q;
  Perm id = Perm::identity(degree_);
  seen.insert(id.img);
  out.push_back(id);
  q.push_back(std::move(id));
  while (!q.empty() && out.size() < count) {
    Perm cur = std::move(q.front());
    q.pop_front();
    for (const Perm& g : gens_) {
      Perm nxt = compose(cur, g);
      if (seen.insert(nxt.img).second) {
        out.push_back(nxt);
        if (out.size() >= count) return out;
        q.push_back(std::move(nxt));
      }
    }
  }
  return out;
}

std::vector<Perm> PermGroup::elements(std::size_t limit) const {
  auto res = elements_prefix(limit + 1);
  if (res.size() > limit) throw std::runtime_error("element enumeration exceeds limit");
  return res;
}

bool is_automorphism(const Graph& x, const Perm& p) {
  if (p.degree() != x.vertex_count()) return false;
  for (int u = 0; u < x.vertex_count(); ++u)
    for (int v : x.neighbors(u))
      if (!x.has_edge(p.img[u], p.img[v])) return false;
  return true;
}

namespace {

std::vector<int> arc_offsets(const Graph& x) {
  std::vector<int> off(x.vertex_count() + 1, 0);
  for (int u = 0; u < x.vertex_count(); ++u) off[u + 1] = off[u] + x.degree(u);
  return off;
}

int arc_index(const Graph& x, const std::vector<int>& off, int tail, int head) {
  const auto& nb = x.neighbors(tail);
  auto it = std::lower_bound(nb.begin(), nb.end(), head);
  return off[tail] + static_cast<int>(it - nb.begin());
}

}  // namespace

PermGroup action_on_arcs(const PermGroup& g, const Graph& x) {
  const auto off = arc_offsets(x);
  const auto arcs = x.arcs();
  std::vector<Perm> images;
  for (const Perm& s : g.generators()) {
    if (!is_automorphism(x, s))
      throw std::invalid_argument("action_on_arcs: generator is not an automorphism");
    Perm a;
    a.img.resize(arcs.size());
    for (std::size_t i = 0; i < arcs.size(); ++i)
      a.img[i] = arc_index(x, off, s.img[arcs[i].tail], s.img[arcs[i].head]);
    images.push_back(std::move(a));
  }
  return PermGroup::from_generators(static_cast<int>(arcs.size()), std::move(images));
}

PermGroup action_on_edges(const PermGroup& g, const Graph& x) {
  const auto edges = x.edges();
  auto edge_index = [&](int u, int v) {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(u, v));
    return static_cast<int>(it - edges.begin());
  };
  std::vector<Perm> images;
  for (const Perm& s : g.generators()) {
    if (!is_automorphism(x, s))
      throw std::invalid_argument("action_on_edges: generator is not an automorphism");
    Perm a;
    a.img.resize(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i)
      a.img[i] = edge_index(s.img[edges[i].first], s.img[edges[i].second]);
    images.push_back(std::move(a));
  }
  return PermGroup::from_generators(static_cast<int>(edges.size()), std::move(images));
}

std::optional<Perm> element_of_order(const PermGroup& g, int p, std::size_t enumeration_limit) {
  if (p < 2) throw std::invalid_argument("element_of_order: p must be >= 2");
  for (const Perm& e : g.elements_prefix(enumeration_limit)) {
    std::uint64_t k = perm_order(e);
    if (k > 1 && k % static_cast<std::uint64_t>(p) == 0)
      return perm_power(e, k / static_cast<std::uint64_t>(p));
  }
  return std::nullopt;
}

}  // namespace hat

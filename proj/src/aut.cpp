#include "hat/aut.hpp"

#include <algorithm>

namespace hat {

namespace {

// Invariant of a refined partition: cell sizes plus the quotient counts taken
// from one representative per cell (well defined since the partition is
// equitable). Equal for isomorphic search-tree nodes.
struct NodeInvariant {
  std::vector<int> shape;
  std::vector<std::vector<std::pair<int, int>>> rows;
  friend bool operator==(const NodeInvariant&, const NodeInvariant&) = default;
};

NodeInvariant invariant_of(const Graph& x, const OrderedPartition& p) {
  NodeInvariant inv;
  inv.shape = p.shape();
  const int n = x.vertex_count();
  std::vector<int> cell_of(n, -1);
  for (int ci = 0; ci < static_cast<int>(p.cells.size()); ++ci)
    for (int v : p.cells[ci]) cell_of[v] = ci;
  inv.rows.reserve(p.cells.size());
  for (const auto& cell : p.cells) {
    std::vector<int> cs;
    for (int w : x.neighbors(cell[0])) cs.push_back(cell_of[w]);
    std::sort(cs.begin(), cs.end());
    std::vector<std::pair<int, int>> row;
    for (std::size_t i = 0; i < cs.size();) {
      std::size_t j = i;
      while (j < cs.size() && cs[j] == cs[i]) ++j;
      row.emplace_back(cs[i], static_cast<int>(j - i));
      i = j;
    }
    inv.rows.push_back(std::move(row));
  }
  return inv;
}

struct AutCtx {
  const Graph& x;
  std::vector<OrderedPartition> path;  // refined partitions along the first path
  std::vector<int> tcell;              // target cell position per non-leaf depth
  std::vector<int> bvert;              // vertex individualized along the first path
  std::vector<NodeInvariant> inv;      // invariant of path[d]
  std::vector<int> first_leaf;
  std::vector<Perm> gens;
};

// Search for any automorphism whose leaf matches the first leaf; p is refined,
// depth counts individualized vertices.
bool find_mapping(AutCtx& c, const OrderedPartition& p, std::size_t depth, Perm* out) {
  if (!(invariant_of(c.x, p) == c.inv[depth])) return false;
  if (p.is_discrete()) {
    const int n = c.x.vertex_count();
    Perm s;
    s.img.assign(n, 0);
    for (int i = 0; i < n; ++i) s.img[c.first_leaf[i]] = p.cells[i][0];
    if (is_automorphism(c.x, s)) {
      *out = std::move(s);
      return true;
    }
    return false;
  }
  const int tc = target_cell(p);
  for (int w : p.cells[tc]) {
    OrderedPartition child = refine(c.x, individualize(p, tc, w));
    if (find_mapping(c, child, depth + 1, out)) return true;
  }
  return false;
}

// Orbit closure of the handled candidates under the found generators that fix
// the first d base vertices pointwise.
std::vector<char> coverage(const AutCtx& c, std::size_t d, const std::vector<int>& handled) {
  const int n = c.x.vertex_count();
  std::vector<const Perm*> hgens;
  for (const Perm& g : c.gens) {
    bool ok = true;
    for (std::size_t i = 0; i < d && ok; ++i) ok = g.img[c.bvert[i]] == c.bvert[i];
    if (ok) hgens.push_back(&g);
  }
  std::vector<char> cov(n, 0);
  std::vector<int> stack;
  for (int h : handled)
    if (!cov[h]) {
      cov[h] = 1;
      stack.push_back(h);
    }
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const Perm* g : hgens) {
      int y = g->img[v];
      if (!cov[y]) {
        cov[y] = 1;
        stack.push_back(y);
      }
    }
  }
  return cov;
}

void explore(AutCtx& c, std::size_t d) {
  if (d >= c.tcell.size()) return;
  explore(c, d + 1);
  const OrderedPartition& part = c.path[d];
  const int tc = c.tcell[d];
  std::vector<int> handled{c.bvert[d]};
  std::vector<char> cov = coverage(c, d, handled);
  for (int w : part.cells[tc]) {
    if (cov[w]) continue;
    OrderedPartition child = refine(c.x, individualize(part, tc, w));
    Perm s;
    if (find_mapping(c, child, d + 1, &s)) c.gens.push_back(std::move(s));
    handled.push_back(w);
    cov = coverage(c, d, handled);
  }
}

}  // namespace

PermGroup automorphism_group(const Graph& x) {
  const int n = x.vertex_count();
  if (n == 0) return PermGroup::trivial(0);
  AutCtx c{x, {}, {}, {}, {}, {}, {}};
  OrderedPartition cur = refine(x, unit_partition(n));
  c.path.push_back(cur);
  c.inv.push_back(invariant_of(x, cur));
  while (!cur.is_discrete()) {
    const int tc = target_cell(cur);
    const int v = cur.cells[tc][0];
    c.tcell.push_back(tc);
    c.bvert.push_back(v);
    cur = refine(x, individualize(cur, tc, v));
    c.path.push_back(cur);
    c.inv.push_back(invariant_of(x, cur));
  }
  c.first_leaf = cur.labeling();
  explore(c, 0);
  return PermGroup::from_generators(n, std::move(c.gens));
}

namespace {

std::optional<std::vector<int>> iso_search(const Graph& x, const Graph& y,
                                           const OrderedPartition& px,
                                           const OrderedPartition& py) {
  if (!(invariant_of(x, px) == invariant_of(y, py))) return std::nullopt;
  if (px.is_discrete()) {
    const int n = x.vertex_count();
    std::vector<int> map(n);
    for (int i = 0; i < n; ++i) map[px.cells[i][0]] = py.cells[i][0];
    for (int u = 0; u < n; ++u)
      for (int v : x.neighbors(u))
        if (!y.has_edge(map[u], map[v])) return std::nullopt;
    return map;
  }
  const int tc = target_cell(px);
  const int v = px.cells[tc][0];
  for (int u : py.cells[tc]) {
    auto r = iso_search(x, y, refine(x, individualize(px, tc, v)),
                        refine(y, individualize(py, tc, u)));
    if (r) return r;
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<int>> are_isomorphic(const Graph& x, const Graph& y) {
  if (x.vertex_count() != y.vertex_count()) return std::nullopt;
  if (x.edge_count() != y.edge_count()) return std::nullopt;
  if (x.vertex_count() == 0) return std::vector<int>{};
  return iso_search(x, y, refine(x, unit_partition(x.vertex_count())),
                    refine(y, unit_partition(y.vertex_count())));
}

}  // namespace hat

#include "hat/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace hat {

std::size_t Graph::edge_count() const {
  std::size_t s = 0;
  for (const auto& nb : adj_) s += nb.size();
  return s / 2;
}

bool Graph::has_edge(int u, int v) const {
  const auto& nb = adj_.at(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_count());
  for (int u = 0; u < vertex_count(); ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::vector<Arc> Graph::arcs() const {
  std::vector<Arc> out;
  out.reserve(2 * edge_count());
  for (int u = 0; u < vertex_count(); ++u)
    for (int v : adj_[u]) out.push_back({u, v});
  return out;
}

Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  Graph g;
  g.adj_.assign(n, {});
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("loop edge rejected");
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (auto& nb : g.adj_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return from_edge_list(n, e);
}

Graph edgeless_graph(int k) {
  if (k < 1) throw std::invalid_argument("edgeless graph needs k >= 1");
  return from_edge_list(k, {});
}

Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return from_edge_list(n, e);
}

Graph lexicographic_product(const Graph& g, const Graph& h) {
  const int ng = g.vertex_count(), nh = h.vertex_count();
  if (ng == 0 || nh == 0) throw std::invalid_argument("empty factor in lexicographic product");
  std::vector<std::pair<int, int>> e;
  for (int x = 0; x < ng; ++x) {
    for (int y = 0; y < nh; ++y) {
      const int a = x * nh + y;
      for (int v : g.neighbors(x))
        for (int w = 0; w < nh; ++w)
          if (x * nh + y < v * nh + w) e.emplace_back(a, v * nh + w);
      for (int w : h.neighbors(y))
        if (y < w) e.emplace_back(a, x * nh + w);
    }
  }
  return from_edge_list(ng * nh, e);
}

bool is_connected(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int cnt = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : g.neighbors(u))
      if (!seen[v]) {
        seen[v] = 1;
        ++cnt;
        q.push(v);
      }
  }
  return cnt == n;
}

bool is_regular(const Graph& g, int k) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != k) return false;
  return true;
}

std::optional<int> common_valency(const Graph& g) {
  if (g.vertex_count() == 0) return std::nullopt;
  int k = g.degree(0);
  return is_regular(g, k) ? std::optional<int>(k) : std::nullopt;
}

std::string encode_graph6(const Graph& g) {
  const long n = g.vertex_count();
  if (n > 258047) throw std::invalid_argument("graph6: n > 258047 unsupported");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  }
  int acc = 0, nbits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
  return out;
}

Graph decode_graph6(const std::string& line) {
  std::size_t pos = 0;
  auto need = [&](std::size_t k) {
    if (line.size() < pos + k) throw std::invalid_argument("graph6: truncated input");
  };
  auto data = [&](std::size_t i) {
    unsigned char c = static_cast<unsigned char>(line[i]);
    if (c < 63 || c > 126) throw std::invalid_argument("graph6: byte out of range");
    return static_cast<long>(c - 63);
  };
  need(1);
  long n;
  if (static_cast<unsigned char>(line[0]) == 126) {
    need(4);
    if (static_cast<unsigned char>(line[1]) == 126)
      throw std::invalid_argument("graph6: n > 258047 unsupported");
    n = (data(1) << 12) | (data(2) << 6) | data(3);
    if (n <= 62) throw std::invalid_argument("graph6: non-canonical long header");
    pos = 4;
  } else {
    n = data(0);
    pos = 1;
  }
  const long nbits = n * (n - 1) / 2;
  const std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
  if (line.size() != pos + nbytes) throw std::invalid_argument("graph6: length mismatch");
  std::vector<std::pair<int, int>> e;
  long bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      long group = data(pos + bit / 6);
      if ((group >> (5 - bit % 6)) & 1) e.emplace_back(i, j);
    }
  }
  // remaining padding bits must be zero
  for (; bit < static_cast<long>(nbytes) * 6; ++bit) {
    long group = data(pos + bit / 6);
    if ((group >> (5 - bit % 6)) & 1) throw std::invalid_argument("graph6: nonzero padding");
  }
  return from_edge_list(static_cast<int>(n), e);
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream os;
  auto e = g.edges();
  os << g.vertex_count() << ' ' << e.size() << '\n';
  for (auto [u, v] : e) os << u << ' ' << v << '\n';
  return os.str();
}

Graph read_edge_list(const std::string& text) {
  std::istringstream is(text);
  long n, m;
  if (!(is >> n >> m)) throw std::invalid_argument("edge list: missing n m header");
  if (n < 0 || m < 0) throw std::invalid_argument("edge list: negative counts");
  std::vector<std::pair<int, int>> e;
  e.reserve(m);
  for (long i = 0; i < m; ++i) {
    int u, v;
    if (!(is >> u >> v)) throw std::invalid_argument("edge list: truncated");
    e.emplace_back(u, v);
  }
  std::string rest;
  if (is >> rest) throw std::invalid_argument("edge list: trailing tokens");
  return from_edge_list(static_cast<int>(n), e);
}

}  // namespace hat

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hat {

// Ordered pair (tail, head); each edge {u,v} yields the two arcs (u,v), (v,u).
struct Arc {
  int tail = 0;
  int head = 0;
  Arc reversed() const { return {head, tail}; }
  friend bool operator==(const Arc&, const Arc&) = default;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

// Finite simple undirected graph on vertices 0..n-1.
// Neighbor lists are sorted ascending and adjacency is symmetric; every
// construction path goes through from_edge_list, which enforces both.
class Graph {
public:
  Graph() = default;

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  std::size_t edge_count() const;
  const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
  int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
  bool has_edge(int u, int v) const;

  // Unordered edges as (min,max) pairs in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;
  // All arcs sorted by (tail, head).
  std::vector<Arc> arcs() const;

  friend bool operator==(const Graph&, const Graph&) = default;

  friend Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);

private:
  std::vector<std::vector<int>> adj_;
};

// Duplicate edges collapse; loops and out-of-range endpoints are rejected.
Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);

Graph cycle_graph(int n);     // n >= 3
Graph edgeless_graph(int k);  // k >= 1
Graph complete_graph(int n);

// G[H]: (x,y) ~ (v,w) iff x~v in g, or x=v and y~w in h.
// Vertex (x,y) is indexed as x*|V(h)| + y.
Graph lexicographic_product(const Graph& g, const Graph& h);

bool is_connected(const Graph& g);  // empty graph counts as connected
bool is_regular(const Graph& g, int k);
std::optional<int> common_valency(const Graph& g);

// graph6 codec, bit-exact per the standard format (n <= 258047).
std::string encode_graph6(const Graph& g);
Graph decode_graph6(const std::string& line);

// Plain text edge list: first line "n m", then m lines "u v".
std::string write_edge_list(const Graph& g);
Graph read_edge_list(const std::string& text);

}  // namespace hat

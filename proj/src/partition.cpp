#include "hat/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hat {

bool OrderedPartition::is_discrete() const {
  for (const auto& c : cells)
    if (c.size() != 1) return false;
  return true;
}

std::vector<int> OrderedPartition::labeling() const {
  std::vector<int> lab;
  lab.reserve(cells.size());
  for (const auto& c : cells) {
    if (c.size() != 1) throw std::logic_error("labeling: partition not discrete");
    lab.push_back(c[0]);
  }
  return lab;
}

std::vector<int> OrderedPartition::shape() const {
  std::vector<int> s;
  s.reserve(cells.size());
  for (const auto& c : cells) s.push_back(static_cast<int>(c.size()));
  return s;
}

OrderedPartition unit_partition(int n) {
  OrderedPartition p;
  if (n > 0) {
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    p.cells.push_back(std::move(all));
  }
  return p;
}

OrderedPartition refine(const Graph& x, OrderedPartition p) {
  const int n = x.vertex_count();
  if (n == 0) return p;
  std::vector<int> cell_of(n, -1);
  // sparse neighbor-count signature: sorted (cell, count) pairs
  std::vector<std::vector<std::pair<int, int>>> sig(n);
  for (;;) {
    const int c_count = static_cast<int>(p.cells.size());
    if (c_count == n) return p;
    for (int ci = 0; ci < c_count; ++ci)
      for (int v : p.cells[ci]) cell_of[v] = ci;
    for (int v = 0; v < n; ++v) {
      auto& s = sig[v];
      s.clear();
      std::vector<int> cs;
      cs.reserve(x.degree(v));
      for (int w : x.neighbors(v)) cs.push_back(cell_of[w]);
      std::sort(cs.begin(), cs.end());
      for (std::size_t i = 0; i < cs.size();) {
        std::size_t j = i;
        while (j < cs.size() && cs[j] == cs[i]) ++j;
        s.emplace_back(cs[i], static_cast<int>(j - i));
        i = j;
      }
    }
    bool changed = false;
    std::vector<std::vector<int>> next;
    next.reserve(c_count);
    for (auto& cell : p.cells) {
      if (cell.size() == 1) {
        next.push_back(std::move(cell));
        continue;
      }
      std::stable_sort(cell.begin(), cell.end(),
                       [&](int a, int b) { return sig[a] < sig[b]; });
      std::size_t i = 0;
      std::size_t fragments = 0;
      while (i < cell.size()) {
        std::size_t j = i;
        while (j < cell.size() && sig[cell[j]] == sig[cell[i]]) ++j;
        next.emplace_back(cell.begin() + i, cell.begin() + j);
        ++fragments;
        i = j;
      }
      if (fragments > 1) changed = true;
    }
    p.cells = std::move(next);
    if (!changed) return p;
  }
}

OrderedPartition individualize(const OrderedPartition& p, int cell, int v) {
  OrderedPartition out;
  out.cells.reserve(p.cells.size() + 1);
  for (int ci = 0; ci < static_cast<int>(p.cells.size()); ++ci) {
    if (ci != cell) {
      out.cells.push_back(p.cells[ci]);
      continue;
    }
    std::vector<int> rest;
    bool found = false;
    for (int u : p.cells[ci]) {
      if (u == v)
        found = true;
      else
        rest.push_back(u);
    }
    if (!found) throw std::invalid_argument("individualize: vertex not in cell");
    out.cells.push_back({v});
    if (!rest.empty()) out.cells.push_back(std::move(rest));
  }
  return out;
}

int target_cell(const OrderedPartition& p) {
  int best = -1;
  std::size_t best_size = 1;
  for (int ci = 0; ci < static_cast<int>(p.cells.size()); ++ci)
    if (p.cells[ci].size() > best_size) {
      best = ci;
      best_size = p.cells[ci].size();
    }
  return best;
}

}  // namespace hat

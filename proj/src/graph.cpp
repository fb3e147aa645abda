#include "pathstar/graph.hpp"

#include <bit>
#include <stdexcept>

namespace pathstar {

Graph::Graph(int n) : n_(n), words_((n + 63) / 64) {
  if (n < 0)
    throw std::invalid_argument("graph order must be nonnegative");
  bits_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(words_),
               0);
}

Graph Graph::complete(int n) {
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      b.add_edge(u, v);
  return std::move(b).finish();
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges)
    b.add_edge(u, v);
  return std::move(b).finish();
}

int Graph::degree(int v) const {
  int d = 0;
  for (auto w : row(v))
    d += std::popcount(w);
  return d;
}

Count Graph::edge_count() const {
  Count total = 0;
  for (auto w : bits_)
    total += std::popcount(w);
  return total / 2;
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  auto r = row(v);
  for (int w = 0; w < words_; ++w) {
    auto bits = r[w];
    while (bits) {
      out.push_back(w * 64 + std::countr_zero(bits));
      bits &= bits - 1;
    }
  }
  return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v : neighbors(u))
      if (u < v)
        out.emplace_back(u, v);
  return out;
}

Graph Graph::relabeled(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_)
    throw std::invalid_argument("permutation size does not match graph order");
  GraphBuilder b(n_);
  for (auto [u, v] : edges())
    b.add_edge(perm[u], perm[v]);
  return std::move(b).finish();
}

Graph Graph::with_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v)
    throw std::invalid_argument("invalid edge");
  Graph g = *this;
  g.bits_[g.row_offset(u) + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  g.bits_[g.row_offset(v) + (u >> 6)] |= std::uint64_t{1} << (u & 63);
  return g;
}

void GraphBuilder::add_edge(int u, int v) {
  const int n = g_.n_;
  if (u < 0 || v < 0 || u >= n || v >= n)
    throw std::out_of_range("edge endpoint out of range");
  if (u == v)
    throw std::invalid_argument("loops are not allowed");
  g_.bits_[g_.row_offset(u) + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  g_.bits_[g_.row_offset(v) + (u >> 6)] |= std::uint64_t{1} << (u & 63);
}

bool is_simple(const Graph &g) {
  for (int u = 0; u < g.order(); ++u) {
    if (g.adjacent(u, u))
      return false;
    for (int v = u + 1; v < g.order(); ++v)
      if (g.adjacent(u, v) != g.adjacent(v, u))
        return false;
  }
  return true;
}

} // namespace pathstar

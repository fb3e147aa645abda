#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace pathstar {

using Count = std::int64_t;

/// Simple undirected graph on vertices 0..n-1, adjacency stored as bitmask
/// rows of ceil(n/64) words each. Values are immutable once built; use
/// GraphBuilder (or the composition helpers) to make new ones.
class Graph {
public:
  Graph() = default;

  /// Empty graph on n vertices.
  explicit Graph(int n);

  static Graph complete(int n);
  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);

  int order() const { return n_; }
  int words_per_row() const { return words_; }

  bool adjacent(int u, int v) const {
    return (bits_[row_offset(u) + (v >> 6)] >> (v & 63)) & 1U;
  }

  std::span<const std::uint64_t> row(int v) const {
    return {bits_.data() + row_offset(v), static_cast<std::size_t>(words_)};
  }

  int degree(int v) const;
  Count edge_count() const;
  std::vector<int> neighbors(int v) const;
  std::vector<std::pair<int, int>> edges() const;

  /// New graph where vertex v of this graph becomes vertex perm[v].
  Graph relabeled(std::span<const int> perm) const;
  /// New graph with edge {u,v} added (no-op copy if already present).
  Graph with_edge(int u, int v) const;

  bool operator==(const Graph &other) const = default;

private:
  friend class GraphBuilder;

  std::size_t row_offset(int v) const {
    return static_cast<std::size_t>(v) * static_cast<std::size_t>(words_);
  }

  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;
};

class GraphBuilder {
public:
  explicit GraphBuilder(int n) : g_(n) {}

  int order() const { return g_.n_; }
  void add_edge(int u, int v);
  bool adjacent(int u, int v) const { return g_.adjacent(u, v); }

  Graph finish() && { return std::move(g_); }

private:
  Graph g_;
};

/// True iff the adjacency relation is symmetric and loop-free.
bool is_simple(const Graph &g);

inline Count edge_count(const Graph &g) { return g.edge_count(); }

inline Count choose2(Count a) { return a < 2 ? 0 : a * (a - 1) / 2; }

} // namespace pathstar

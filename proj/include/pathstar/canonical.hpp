#pragma once

#include "pathstar/graph.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <string>

namespace pathstar {

/// Largest order accepted by canonical_form and the enumerator.
inline constexpr int kCanonicalMaxOrder = 10;

/// Fixed-capacity graph used by the canonical labeling and enumeration
/// kernels. Row v holds the neighbor mask of v.
struct SmallGraph {
  static constexpr int kCapacity = 16;

  int n = 0;
  std::array<std::uint16_t, kCapacity> rows{};

  int edge_count() const {
    int total = 0;
    for (int v = 0; v < n; ++v)
      total += std::popcount(rows[v]);
    return total / 2;
  }
  void add_edge(int u, int v) {
    rows[u] |= static_cast<std::uint16_t>(1U << v);
    rows[v] |= static_cast<std::uint16_t>(1U << u);
  }
  bool operator==(const SmallGraph &) const = default;
};

SmallGraph to_small(const Graph &g);
Graph to_graph(const SmallGraph &g);

struct CanonicalLabeling {
  /// position -> vertex: vertex lab[i] receives canonical index i.
  std::array<std::uint8_t, SmallGraph::kCapacity> lab{};
  /// The relabeled (canonical) graph.
  SmallGraph canonical;
  /// Smallest vertex in each vertex's automorphism orbit.
  std::array<std::uint8_t, SmallGraph::kCapacity> orbit{};
};

/// Individualization-refinement canonical labeling with automorphism
/// pruning. Works for any n up to SmallGraph::kCapacity.
CanonicalLabeling canonical_labeling(const SmallGraph &g);

/// graph6 of the canonical relabeling; equal iff the graphs are isomorphic.
/// Throws std::invalid_argument when g.order() > kCanonicalMaxOrder.
std::string canonical_form(const Graph &g);

/// Same, for the small representation (no order bound beyond capacity).
std::string canonical_form(const SmallGraph &g);

} // namespace pathstar

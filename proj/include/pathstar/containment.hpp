#pragma once

#include "pathstar/forest_spec.hpp"
#include "pathstar/graph.hpp"

#include <optional>
#include <vector>

namespace pathstar {

/// Vertex lists certifying a copy of a forest, one list per spec component
/// in the spec's normalized order. Paths are listed in traversal order,
/// stars as center followed by leaves.
struct Embedding {
  std::vector<std::vector<int>> parts;
  bool operator==(const Embedding &) const = default;
};

/// Complete backtracking search for a copy of `spec` in `g`.
///
/// Paths are placed first (components in spec order), then star centers;
/// leaves for the chosen centers are assigned by bipartite matching. Twin
/// vertices (equal open or closed neighborhoods) are interchangeable, so
/// only the lowest unused vertex of each twin class is tried, and repeated
/// identical components are placed in nondecreasing twin-class order.
/// Deterministic for fixed inputs.
std::optional<Embedding> contains_forest(const Graph &g, const ForestSpec &spec);

/// True iff g has no subgraph isomorphic to the forest.
bool is_free(const Graph &g, const ForestSpec &spec);

/// Independent certificate check: sizes match the spec, vertices are
/// distinct and in range, consecutive path vertices and center-leaf pairs
/// are edges of g.
bool verify_embedding(const Graph &g, const ForestSpec &spec, const Embedding &emb);

/// Twin classes used by the search: entry v is the smallest vertex with the
/// same open or the same closed neighborhood as v.
std::vector<int> twin_classes(const Graph &g);

} // namespace pathstar

#pragma once

#include "pathstar/canonical.hpp"
#include "pathstar/forest_spec.hpp"
#include "pathstar/graph.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace pathstar {

enum class Execution { Serial, Parallel };

/// Orders up to this are enumerated by default.
inline constexpr int kOracleMaxOrder = 9;
/// Order 10 (~12 million classes) needs OracleOptions::allow_long.
inline constexpr int kOracleLongOrder = 10;

/// Canonical children of one canonical parent on n-1 vertices: every
/// isomorphism class on n vertices whose canonical deletion vertex leaves
/// this parent, each exactly once, in a fixed order. Children with fewer
/// than `min_edges` edges are skipped before any canonical labeling.
void augment_parent(const SmallGraph &parent, int min_edges,
                    const std::function<void(const SmallGraph &)> &emit);

/// One representative (canonically labeled) per isomorphism class on n
/// vertices, 1 <= n <= kOracleMaxOrder. Order is deterministic and identical
/// for both execution modes.
std::vector<SmallGraph> enumerate_graphs(int n, Execution exec = Execution::Parallel);

/// Serial reference for one augmentation level.
std::vector<SmallGraph> extend_level_serial(const std::vector<SmallGraph> &parents);
/// OpenMP kernel for one augmentation level; same output as the serial one.
std::vector<SmallGraph> extend_level_parallel(const std::vector<SmallGraph> &parents);

struct OracleResult {
  int n = 0;
  ForestSpec spec;
  Count max_edges = 0;
  /// Canonical graph6 of every extremal class, sorted.
  std::vector<std::string> extremal_classes;
  /// Classes generated at order n with at least `seed` edges.
  Count graphs_examined = 0;
  /// Edge bound used to prune; classes below it are never generated.
  Count seed = 0;
};

struct OracleOptions {
  Execution exec = Execution::Parallel;
  bool allow_long = false;
  /// Known spec-free graphs on n vertices; the largest edge count among those
  /// that really are free seeds the pruning bound.
  std::vector<Graph> seeds;
  /// For long runs: progress is appended here after each parent block and
  /// picked up again when the file already exists.
  std::string checkpoint_path;
  int checkpoint_block = 4096;
};

/// Exact ex(n, spec) by enumerating isomorphism classes.
OracleResult turan_oracle(int n, const ForestSpec &spec, const OracleOptions &options = {});

/// JSON-lines result cache: one line per extremal class,
/// {"n":..,"spec":..,"max_edges":..,"class":graph6,"graphs_examined":..}.
std::optional<OracleResult> cache_lookup(const std::string &path, int n, const ForestSpec &spec);
void cache_store(const std::string &path, const OracleResult &result);

} // namespace pathstar

#pragma once

#include "pathstar/graph.hpp"

#include <string>
#include <vector>

namespace pathstar {

/// Symbolic description of a graph built from cliques and independent sets
/// with disjoint union, join and repetition.
///
/// Leaves are `Complete(a)` (K_a) and `Empty(a)` (a isolated vertices). A
/// leaf of size zero is allowed; it contributes no vertices, which lets
/// formulas such as `dK_{l-1} u K_r` be written down uniformly when r = 0.
class ConstructionExpr {
public:
  enum class Kind { Complete, Empty, Union, Join, Copies };

  static ConstructionExpr complete(Count a);
  static ConstructionExpr empty(Count a);
  static ConstructionExpr disjoint_union(std::vector<ConstructionExpr> parts);
  static ConstructionExpr join(ConstructionExpr left, ConstructionExpr right);
  static ConstructionExpr copies(Count count, ConstructionExpr sub);

  Kind kind() const { return kind_; }
  /// Leaf size for Complete/Empty, repetition count for Copies, 0 otherwise.
  Count size() const { return size_; }
  const std::vector<ConstructionExpr> &children() const { return children_; }

  Count vertex_count() const;
  /// Edge count from the recursive rules, without materializing the graph.
  Count edge_count() const;

  std::string to_string() const;

  /// Rewrites into a normal form using K_a v K_b = K_{a+b}, associativity
  /// and commutativity of join and union, merging of isolated vertices and
  /// removal of empty parts. Equal normal forms imply isomorphic graphs; the
  /// converse is not guaranteed.
  ConstructionExpr normalized() const;

  bool operator==(const ConstructionExpr &other) const = default;

private:
  ConstructionExpr(Kind kind, Count size, std::vector<ConstructionExpr> children)
      : kind_(kind), size_(size), children_(std::move(children)) {}

  Kind kind_ = Kind::Empty;
  Count size_ = 0;
  std::vector<ConstructionExpr> children_;
};

/// Largest graph `build` will materialize.
inline constexpr Count kMaxBuildVertices = 8192;

/// Materializes the expression. Leaves get contiguous vertex ranges in
/// left-to-right traversal order (Copies repeats its child in sequence).
Graph build(const ConstructionExpr &expr);

} // namespace pathstar

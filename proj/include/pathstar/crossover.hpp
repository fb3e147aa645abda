#pragma once

#include "pathstar/graph.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pathstar {

/// A named integer function of n that the crossover scanner can evaluate.
///
/// Identifiers:
///   bracket_path:m,l   n -> [n,m,l]        (defined for n >= m)
///   bracket_star:s     n -> [n,s]          (defined for n >= s)
///   linear:a,b         n -> a*n + b
///   const:c            n -> c
class ScalarFormula {
public:
  enum class Kind { BracketPath, BracketStar, Linear, Constant };

  static ScalarFormula parse(std::string_view id);
  static ScalarFormula bracket_path(Count m, Count l);
  static ScalarFormula bracket_star(Count s);
  static ScalarFormula linear(Count a, Count b);
  static ScalarFormula constant(Count c);

  Count operator()(Count n) const;
  /// Smallest n where the function is defined.
  Count domain_start() const;
  std::string id() const;

private:
  Kind kind_ = Kind::Constant;
  Count a_ = 0;
  Count b_ = 0;
};

struct CrossoverPoint {
  Count n;
  Count f;
  Count g;
};

struct CrossoverResult {
  Count lo = 0;
  Count hi = 0;
  /// Smallest N in [lo,hi] with f(n) < g(n) for every n in [N,hi]; empty when
  /// f(hi) >= g(hi), i.e. the inequality never stabilizes within the range.
  std::optional<Count> stabilization;
  /// Number of scanned n with f(n) >= g(n).
  Count violations = 0;
  std::optional<Count> claimed_threshold;
  /// First n >= claimed_threshold with f(n) >= g(n), if any.
  std::optional<Count> first_violation_above_claim;
  bool claim_holds() const { return !first_violation_above_claim.has_value(); }
  /// Per-n values, filled only for the first `trace_limit` points.
  std::vector<CrossoverPoint> trace;
};

struct CrossoverRequest {
  ScalarFormula f;
  ScalarFormula g;
  Count lo = 0;
  Count hi = 0;
  std::optional<Count> claimed_threshold;
  std::size_t trace_limit = 0;
};

/// OpenMP kernel: the range is split across threads; the result does not
/// depend on the number of threads.
CrossoverResult crossover_scan(const CrossoverRequest &request);

/// Single-threaded reference implementation of crossover_scan.
CrossoverResult crossover_scan_serial(const CrossoverRequest &request);

} // namespace pathstar

#pragma once

#include "pathstar/constructions.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pathstar {

enum class Applicability {
  Proven,       ///< n is at or above the proven threshold for these parameters
  OutsideRange, ///< no closed form is claimed here
  Conjectured,  ///< value of the open max{e(G1), e(G2)} conjecture
};

std::string to_string(Applicability a);

struct FormulaResult {
  /// Empty when applicable == OutsideRange.
  std::optional<Count> value;
  Applicability applicable = Applicability::OutsideRange;
  /// Smallest n covered by the proven statement for these parameters.
  std::optional<Count> threshold;
  /// Every construction attaining `value` (ties list all of them).
  std::vector<ExtremalDescriptor> extremal;
  /// Short machine-readable name of the rule that produced the result.
  std::string regime;
};

/// [n,m,l] = C(m-1,2) + d C(l-1,2) + C(r,2), n = (m-1) + d(l-1) + r.
Count bracket_path(Count n, Count m, Count l);

/// [n,s] = C(s-1,2) + (s-1)(n-s+1).
Count bracket_star(Count n, Count s);

/// ex(n, P_l) for every n >= 1; C(n,2) below l.
FormulaResult ex_path(Count n, int l);

/// ex(n, 2P_5) = max{[n,10,5], 3n-5} for n >= 10.
FormulaResult ex_two_p5(Count n);

/// ex(n, kP_L) = max{[n,Lk,L], [n,Lk/2]} for even L, k >= 2, n >= Lk.
/// `threshold` carries the bound above which the second term alone wins.
FormulaResult ex_k_even_paths(Count n, Count k, int path_order);

/// ex(n, kS_t) for k >= 2 and t >= 3 leaves (four regimes); k = 1 gives
/// floor((t-1)n/2) for n >= t+1 and C(n,2) below.
FormulaResult ex_k_stars(Count n, Count k, int leaves);

/// ex(n, k1 P_l u k2 S_{l-1}) where l is the path order. Dispatches to the
/// single-path regime (k1 = 1), the even-path regime (k1 >= 2), the
/// 2P_5 regime (k1 = 2, l = 5), then the conjectured max for even l.
FormulaResult ex_path_star(Count n, Count k1, Count k2, int l);

/// Threshold helpers, in the path-order convention used by ex_path_star.
Count threshold_one_path(Count k2, Count l);
Count threshold_even_paths(Count k1, Count k2, Count path_order);
Count threshold_two_p5(Count k2);
/// n-bound above which [n, Lk, L] < [n, Lk/2] is claimed (L = path order).
Count threshold_k_paths_crossover(Count k, Count path_order);

} // namespace pathstar

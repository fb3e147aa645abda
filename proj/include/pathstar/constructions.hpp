#pragma once

#include "pathstar/construction_expr.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pathstar {

/// n - base = d(l-1) + r with 0 <= r < l-1.
struct Decomposition {
  Count d = 0;
  Count r = 0;
};

Decomposition decompose(Count remaining, int l);

enum class ExtremalName {
  G1,
  G2,
  G3,
  H,
  ErdosGallai,    ///< dK_{l-1}
  FaudreeCliques, ///< K_{m-1} u dK_{l-1} u K_r (m = l for the plain path case)
  FaudreeSFamily, ///< (d-s-1)K_{l-1} u (K_{(l-2)/2} v Kbar_{l/2+s(l-1)+r})
  K9PlusExP5,     ///< K_9 u EX(n-9, P_5)
};

std::string to_string(ExtremalName name);

struct ExtremalDescriptor {
  ExtremalName name;
  std::vector<Count> params;
  ConstructionExpr expr;

  Count order() const { return expr.vertex_count(); }
  /// e.g. "G2(20,2,1,4)"
  std::string label() const;
};

/// Thrown by edge_formula for descriptors that only have a counted size.
struct NoClosedFormError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// K_k v (dK_{l-1} u K_r), n - k = d(l-1) + r.
ExtremalDescriptor g1(Count n, Count k, int l);

/// K_{h k1 + k2 - 1} v Kbar_{n - h k1 - k2 + 1} where h = path_order / 2.
/// The last argument is the (even) order of the forbidden paths.
ExtremalDescriptor g2(Count n, Count k1, Count k2, int path_order);

/// K_{k+3} v (K_2 u Kbar_{n-k-5}).
ExtremalDescriptor g3(Count n, Count k);

/// K_k v ((d-s-1)K_{l-1} u (K_{(l-2)/2} v Kbar_{l/2+s(l-1)+r})), l even.
ExtremalDescriptor h_family(Count n, Count k, int l, Count s);

/// K_{m-1} u dK_{l-1} u K_r with n = (m-1) + d(l-1) + r; the graph counted
/// by the bracket [n,m,l].
ExtremalDescriptor clique_decomposition(Count n, Count m, int l);

/// K_9 u (dK_4 u K_r) on n vertices, n >= 10.
ExtremalDescriptor k9_plus_ex_p5(Count n);

/// All P_l-extremal graphs on n vertices: dK_{l-1} u K_r, and for even l
/// with r in {l/2, (l-2)/2} the s-family for s = 0..d-1. Entries may be
/// isomorphic to each other in degenerate cases (l = 2).
std::vector<ExtremalDescriptor> faudree_extremal_set(Count n, int l);

/// Closed-form edge count for G1, G2, G3 descriptors.
Count edge_formula(const ExtremalDescriptor &descriptor);

/// Parses the inline forms `g1:n,k,l`, `g2:n,k1,k2,L`, `g3:n,k`,
/// `h:n,k,l,s`. Throws std::invalid_argument on anything else.
ExtremalDescriptor parse_construction(std::string_view text);

/// Divides, throwing std::logic_error if the division is not exact.
Count exact_div(Count numerator, Count denominator, const char *what);

} // namespace pathstar

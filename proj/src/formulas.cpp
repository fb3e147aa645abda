#include "pathstar/formulas.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace pathstar {

std::string to_string(Applicability a) {
  switch (a) {
  case Applicability::Proven:
    return "PROVEN";
  case Applicability::OutsideRange:
    return "OUTSIDE_RANGE";
  case Applicability::Conjectured:
    return "CONJECTURED";
  }
  return "?";
}

Count bracket_path(Count n, Count m, Count l) {
  if (!(n >= m && m >= l && l >= 2))
    throw std::invalid_argument("bracket_path: need n >= m >= l >= 2");
  const auto [d, r] = decompose(n - (m - 1), static_cast<int>(l));
  return choose2(m - 1) + d * choose2(l - 1) + choose2(r);
}

Count bracket_star(Count n, Count s) {
  if (!(n >= s && s >= 1))
    throw std::invalid_argument("bracket_star: need n >= s >= 1");
  return choose2(s - 1) + (s - 1) * (n - s + 1);
}

Count threshold_one_path(Count k2, Count l) {
  return (l * l - l + 1) * k2 + exact_div(l * l + 3 * l - 2, 2, "single-path threshold");
}

Count threshold_even_paths(Count k1, Count k2, Count path_order) {
  const Count h = path_order / 2;
  return (2 * h * h + 3 * h - 4) * k1 + (4 * h * h - 2 * h + 1) * k2 + 3;
}

Count threshold_two_p5(Count k2) { return 21 * k2 + 38; }

Count threshold_k_paths_crossover(Count k, Count path_order) {
  const Count h = path_order / 2;
  return (2 * h * h + 3 * h - 4) * k + 3;
}

namespace {

// Drops descriptors isomorphic to an earlier one (by normalized expression).
std::vector<ExtremalDescriptor> unique_shapes(std::vector<ExtremalDescriptor> in) {
  std::vector<ExtremalDescriptor> out;
  std::set<std::string> seen;
  for (auto &d : in)
    if (seen.insert(d.expr.normalized().to_string()).second)
      out.push_back(std::move(d));
  return out;
}

} // namespace

FormulaResult ex_path(Count n, int l) {
  if (l < 2)
    throw std::invalid_argument("ex_path: path order must be at least 2");
  if (n < 1)
    throw std::invalid_argument("ex_path: need n >= 1");
  FormulaResult res;
  res.value = n < l ? choose2(n) : bracket_path(n, l, l);
  res.applicable = Applicability::Proven;
  res.threshold = 1;
  res.extremal = unique_shapes(faudree_extremal_set(n, l));
  res.regime = "path";
  return res;
}

FormulaResult ex_two_p5(Count n) {
  FormulaResult res;
  res.threshold = 10;
  res.regime = "two-p5";
  if (n < 10)
    return res;
  const Count cliques = bracket_path(n, 10, 5);
  const Count dominated = 3 * n - 5;
  const Count best = std::max(cliques, dominated);
  res.value = best;
  res.applicable = Applicability::Proven;
  if (cliques == best)
    res.extremal.push_back(k9_plus_ex_p5(n));
  if (dominated == best)
    res.extremal.push_back(g3(n, 0));
  return res;
}

FormulaResult ex_k_even_paths(Count n, Count k, int path_order) {
  if (path_order < 2 || path_order % 2 != 0)
    throw std::invalid_argument("ex_k_even_paths: path order must be even");
  if (k < 2)
    throw std::invalid_argument("ex_k_even_paths: need k >= 2");
  const Count m = static_cast<Count>(path_order) * k;
  if (n < m)
    throw std::invalid_argument("ex_k_even_paths: need n >= k * path order");
  const Count cliques = bracket_path(n, m, path_order);
  const Count dominated = bracket_star(n, m / 2);
  const Count best = std::max(cliques, dominated);
  FormulaResult res;
  res.value = best;
  res.applicable = Applicability::Proven;
  res.threshold = threshold_k_paths_crossover(k, path_order);
  res.regime = "k-even-paths";
  if (cliques == best)
    res.extremal.push_back(clique_decomposition(n, m, path_order));
  if (dominated == best)
    res.extremal.push_back(g2(n, k, 0, path_order));
  return res;
}

FormulaResult ex_k_stars(Count n, Count k, int leaves) {
  if (k < 1)
    throw std::invalid_argument("ex_k_stars: need k >= 1");
  if (leaves < 3)
    throw std::invalid_argument("ex_k_stars: need at least 3 leaves");
  if (n < 1)
    throw std::invalid_argument("ex_k_stars: need n >= 1");
  const Count t = leaves;
  FormulaResult res;
  res.applicable = Applicability::Proven;
  res.threshold = 1;
  if (k == 1) {
    // A graph with maximum degree t-1; complete when that is no restriction.
    res.regime = "single-star";
    res.value = n < t + 1 ? choose2(n) : (t - 1) * n / 2;
    return res;
  }
  res.regime = "k-stars";
  const Count big = k * t + k - 1;
  if (n < k * (t + 1)) {
    res.value = choose2(n);
  } else if (n <= (k + 1) * t + k - 1) {
    res.value = choose2(big) + choose2(n - big);
  } else if (2 * n < k * t * t + 2 * k * t + 2 * k - 2) {
    res.value = choose2(big) + (t - 1) * (n - big) / 2;
  } else {
    res.value = choose2(k - 1) + (n - k + 1) * (k - 1) + (t - 1) * (n - k + 1) / 2;
  }
  return res;
}

FormulaResult ex_path_star(Count n, Count k1, Count k2, int l) {
  if (k1 < 1 || k2 < 0 || l < 2)
    throw std::invalid_argument("ex_path_star: need k1 >= 1, k2 >= 0, l >= 2");
  if (n < 1)
    throw std::invalid_argument("ex_path_star: need n >= 1");
  FormulaResult res;
  const bool even = l % 2 == 0;

  if (k1 == 1 && l >= 4) {
    res.threshold = threshold_one_path(k2, l);
    if (n >= *res.threshold) {
      auto first = g1(n, k2, l);
      res.value = edge_formula(first);
      res.applicable = Applicability::Proven;
      res.regime = "one-path";
      res.extremal.push_back(std::move(first));
      const Count r = decompose(n - k2, l).r;
      if (even && (r == l / 2 || r == (l - 2) / 2))
        res.extremal.push_back(g2(n, 1, k2, l));
      return res;
    }
  }
  if (k1 >= 2 && even && l >= 4) {
    res.threshold = threshold_even_paths(k1, k2, l);
    if (n >= *res.threshold) {
      auto only = g2(n, k1, k2, l);
      res.value = edge_formula(only);
      res.applicable = Applicability::Proven;
      res.regime = "even-paths";
      res.extremal.push_back(std::move(only));
      return res;
    }
  }
  if (k1 == 2 && l == 5) {
    res.threshold = threshold_two_p5(k2);
    if (n >= *res.threshold) {
      auto only = g3(n, k2);
      res.value = edge_formula(only);
      res.applicable = Applicability::Proven;
      res.regime = "two-p5-stars";
      res.extremal.push_back(std::move(only));
      return res;
    }
  }
  if (even && l >= 4 && k2 < n && n > (l / 2) * k1 + k2 - 1) {
    auto first = g1(n, k2, l);
    auto second = g2(n, k1, k2, l);
    const Count a = edge_formula(first);
    const Count b = edge_formula(second);
    res.value = std::max(a, b);
    res.applicable = Applicability::Conjectured;
    res.regime = "conjectured-max";
    if (a == *res.value)
      res.extremal.push_back(std::move(first));
    if (b == *res.value)
      res.extremal.push_back(std::move(second));
    return res;
  }
  res.regime = "none";
  return res;
}

} // namespace pathstar

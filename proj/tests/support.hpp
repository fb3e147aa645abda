#pragma once

// Reference implementations used only by the tests. None of them share code
// with the library kernels they check.

#include "pathstar/forest_spec.hpp"
#include "pathstar/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace testing {

using pathstar::Graph;

inline Graph random_graph(int n, double p, std::mt19937_64 &rng) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng))
        edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

inline std::vector<int> random_perm(int n, std::mt19937_64 &rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Labeled graph on n <= 8 vertices as a bitmask over the upper-triangle pairs.
inline int pair_index(int u, int v, int n) {
  if (u > v)
    std::swap(u, v);
  return u * n - u * (u + 1) / 2 + (v - u - 1);
}

inline std::uint64_t permute_mask(std::uint64_t mask, int n, const std::vector<int> &perm) {
  std::uint64_t out = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if ((mask >> pair_index(u, v, n)) & 1U)
        out |= std::uint64_t{1} << pair_index(perm[u], perm[v], n);
  return out;
}

// Number of isomorphism classes of labeled graphs on n vertices: union-find
// over all 2^C(n,2) graphs, joined along a transposition and an n-cycle
// (which generate the symmetric group).
inline std::size_t orbit_count(int n) {
  const int pairs = n * (n - 1) / 2;
  const std::size_t total = std::size_t{1} << pairs;
  std::vector<std::uint32_t> parent(total);
  std::iota(parent.begin(), parent.end(), 0U);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  std::vector<int> swap01(n), cycle(n);
  std::iota(swap01.begin(), swap01.end(), 0);
  if (n >= 2)
    std::swap(swap01[0], swap01[1]);
  for (int i = 0; i < n; ++i)
    cycle[i] = (i + 1) % n;
  // Precomputed pair maps keep this fast at n = 7.
  auto pair_map = [&](const std::vector<int> &perm) {
    std::vector<int> m(pairs);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        m[pair_index(u, v, n)] = pair_index(perm[u], perm[v], n);
    return m;
  };
  const auto m1 = pair_map(swap01);
  const auto m2 = pair_map(cycle);
  std::size_t classes = total;
  for (std::size_t g = 0; g < total; ++g) {
    for (const auto *m : {&m1, &m2}) {
      std::uint32_t h = 0;
      for (int b = 0; b < pairs; ++b)
        if ((g >> b) & 1U)
          h |= 1U << (*m)[b];
      auto a = find(static_cast<std::uint32_t>(g));
      auto c = find(h);
      if (a != c) {
        parent[a] = c;
        --classes;
      }
    }
  }
  return classes;
}

// Number of graphs on n vertices up to isomorphism by Burnside's lemma,
// summing over cycle types of S_n.
inline std::uint64_t burnside_count(int n) {
  // Sum of 2^{edge cycles} * (permutations of that type), divided by n!.
  long double total = 0;
  std::vector<int> parts;
  auto fact = [](int k) {
    long double f = 1;
    for (int i = 2; i <= k; ++i)
      f *= i;
    return f;
  };
  auto recurse = [&](auto &&self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      long long cycles = 0;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        cycles += parts[i] / 2;
        for (std::size_t j = i + 1; j < parts.size(); ++j)
          cycles += std::gcd(parts[i], parts[j]);
      }
      long double denom = 1;
      for (int p : parts)
        denom *= p;
      for (int len = 1; len <= n; ++len)
        denom *= fact(static_cast<int>(std::count(parts.begin(), parts.end(), len)));
      total += std::ldexp(1.0L, static_cast<int>(cycles)) / denom;
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      parts.push_back(p);
      self(self, remaining - p, p);
      parts.pop_back();
    }
  };
  recurse(recurse, n, n);
  return static_cast<std::uint64_t>(std::llround(total));
}

// Canonical string by trying every permutation: lexicographically smallest
// adjacency matrix string.
inline std::string brute_canonical(const Graph &g) {
  const int n = g.order();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::string s;
    s.reserve(n * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        s.push_back(g.adjacent(perm[i], perm[j]) ? '1' : '0');
    if (best.empty() || s < best)
      best = s;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Forest containment by extending partial injections vertex by vertex,
// checking edges to already placed forest vertices as it goes.
inline bool brute_contains(const Graph &g, const pathstar::ForestSpec &spec) {
  const int total = spec.total_vertices();
  if (total > g.order())
    return false;
  std::vector<std::vector<int>> back(total); // earlier forest neighbours
  int base = 0;
  for (const auto &c : spec.components()) {
    for (int i = 1; i < c.vertex_count(); ++i)
      back[base + i].push_back(c.is_path() ? base + i - 1 : base);
    base += c.vertex_count();
  }
  std::vector<int> image(total, -1);
  std::vector<char> used(g.order(), 0);
  auto place = [&](auto &&self, int i) -> bool {
    if (i == total)
      return true;
    for (int v = 0; v < g.order(); ++v) {
      if (used[v])
        continue;
      bool ok = true;
      for (int j : back[i])
        ok = ok && g.adjacent(image[j], v);
      if (!ok)
        continue;
      used[v] = 1;
      image[i] = v;
      if (self(self, i + 1))
        return true;
      used[v] = 0;
    }
    return false;
  };
  return place(place, 0);
}

} // namespace testing

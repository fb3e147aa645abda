#include "pathstar/canonical.hpp"

#include "pathstar/graph6.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace pathstar {

namespace {

constexpr int kCap = SmallGraph::kCapacity;
using Mask = std::uint16_t;
using Perm = std::array<std::uint8_t, kCap>;

struct Partition {
  int cells = 0;
  std::array<Mask, kCap> cell{};
};

// Splits cells by neighbor counts into splitter cells until the ordered
// partition is equitable. Subcells replace their parent in place, ordered by
// ascending count, so the result commutes with relabeling.
void refine(const SmallGraph &g, Partition &p) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int s = 0; s < p.cells && !changed; ++s) {
      const Mask splitter = p.cell[s];
      for (int c = 0; c < p.cells; ++c) {
        const Mask cell = p.cell[c];
        if (std::popcount(cell) < 2)
          continue;
        std::array<Mask, kCap + 1> by_count{};
        int lo = kCap + 1;
        int hi = -1;
        for (Mask rest = cell; rest; rest &= rest - 1) {
          const int v = std::countr_zero(rest);
          const int k = std::popcount(static_cast<Mask>(g.rows[v] & splitter));
          by_count[k] |= static_cast<Mask>(1U << v);
          lo = std::min(lo, k);
          hi = std::max(hi, k);
        }
        if (lo == hi)
          continue;
        std::array<Mask, kCap + 1> parts{};
        int np = 0;
        for (int k = lo; k <= hi; ++k)
          if (by_count[k])
            parts[np++] = by_count[k];
        for (int i = p.cells - 1; i > c; --i)
          p.cell[i + np - 1] = p.cell[i];
        for (int i = 0; i < np; ++i)
          p.cell[c + i] = parts[i];
        p.cells += np - 1;
        changed = true;
        break;
      }
    }
  }
}

struct Certificate {
  std::array<Mask, kCap> rows{};
  auto operator<=>(const Certificate &) const = default;
};

class Search {
public:
  explicit Search(const SmallGraph &g) : g_(g) {}

  void run() {
    Partition p;
    if (g_.n > 0) {
      p.cells = 1;
      p.cell[0] = static_cast<Mask>((1U << g_.n) - 1);
    }
    Perm prefix{};
    descend(p, prefix, 0);
  }

  const Perm &best_lab() const { return best_lab_; }
  const Certificate &best_cert() const { return best_cert_; }
  const std::vector<Perm> &generators() const { return gens_; }

private:
  void descend(Partition p, Perm &prefix, int depth) {
    refine(g_, p);
    int target = -1;
    for (int c = 0; c < p.cells; ++c)
      if (std::popcount(p.cell[c]) > 1) {
        target = c;
        break;
      }
    if (target < 0) {
      leaf(p);
      return;
    }
    const Mask cell = p.cell[target];
    Mask explored = 0;
    for (Mask rest = cell; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      if (explored && equivalent_to_explored(v, explored, prefix, depth))
        continue;
      explored |= static_cast<Mask>(1U << v);

      Partition child;
      child.cells = p.cells + 1;
      for (int i = 0; i < target; ++i)
        child.cell[i] = p.cell[i];
      child.cell[target] = static_cast<Mask>(1U << v);
      child.cell[target + 1] = static_cast<Mask>(cell & ~(1U << v));
      for (int i = target + 1; i < p.cells; ++i)
        child.cell[i + 1] = p.cell[i];
      prefix[depth] = static_cast<std::uint8_t>(v);
      descend(child, prefix, depth + 1);
    }
  }

  // Orbit test under the subgroup of found automorphisms fixing the current
  // prefix pointwise.
  bool equivalent_to_explored(int v, Mask explored, const Perm &prefix, int depth) const {
    std::array<std::uint8_t, kCap> parent{};
    for (int i = 0; i < g_.n; ++i)
      parent[i] = static_cast<std::uint8_t>(i);
    auto find = [&](int x) {
      while (parent[x] != x)
        x = parent[x] = parent[parent[x]];
      return x;
    };
    bool any = false;
    for (const auto &gamma : gens_) {
      bool fixes = true;
      for (int i = 0; i < depth && fixes; ++i)
        fixes = gamma[prefix[i]] == prefix[i];
      if (!fixes)
        continue;
      any = true;
      for (int x = 0; x < g_.n; ++x) {
        const int a = find(x);
        const int b = find(gamma[x]);
        if (a != b)
          parent[std::max(a, b)] = static_cast<std::uint8_t>(std::min(a, b));
      }
    }
    if (!any)
      return false;
    const int root = find(v);
    for (Mask rest = explored; rest; rest &= rest - 1)
      if (find(std::countr_zero(rest)) == root)
        return true;
    return false;
  }

  void leaf(const Partition &p) {
    Perm lab{};
    Perm pos{};
    for (int i = 0; i < g_.n; ++i) {
      lab[i] = static_cast<std::uint8_t>(std::countr_zero(p.cell[i]));
      pos[lab[i]] = static_cast<std::uint8_t>(i);
    }
    Certificate cert;
    for (int i = 0; i < g_.n; ++i) {
      Mask row = 0;
      for (Mask rest = g_.rows[lab[i]]; rest; rest &= rest - 1)
        row |= static_cast<Mask>(1U << pos[std::countr_zero(rest)]);
      cert.rows[i] = row;
    }
    if (!have_leaf_) {
      have_leaf_ = true;
      first_lab_ = best_lab_ = lab;
      first_cert_ = best_cert_ = cert;
      return;
    }
    if (cert == first_cert_) {
      record(first_lab_, lab);
    } else if (cert == best_cert_) {
      record(best_lab_, lab);
    } else if (cert > best_cert_) {
      best_cert_ = cert;
      best_lab_ = lab;
    }
  }

  // Automorphism sending from[i] to to[i] for every position i.
  void record(const Perm &from, const Perm &to) {
    Perm gamma{};
    bool identity = true;
    for (int i = 0; i < g_.n; ++i) {
      gamma[from[i]] = to[i];
      identity = identity && from[i] == to[i];
    }
    if (!identity)
      gens_.push_back(gamma);
  }

  const SmallGraph &g_;
  bool have_leaf_ = false;
  Perm first_lab_{};
  Perm best_lab_{};
  Certificate first_cert_;
  Certificate best_cert_;
  std::vector<Perm> gens_;
};

} // namespace

SmallGraph to_small(const Graph &g) {
  if (g.order() > SmallGraph::kCapacity)
    throw std::invalid_argument("graph too large for the small representation");
  SmallGraph s;
  s.n = g.order();
  for (int v = 0; v < s.n; ++v)
    s.rows[v] = static_cast<std::uint16_t>(g.row(v)[0]);
  return s;
}

Graph to_graph(const SmallGraph &g) {
  GraphBuilder b(g.n);
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v)
      if ((g.rows[u] >> v) & 1U)
        b.add_edge(u, v);
  return std::move(b).finish();
}

CanonicalLabeling canonical_labeling(const SmallGraph &g) {
  if (g.n < 0 || g.n > SmallGraph::kCapacity)
    throw std::invalid_argument("order outside canonical labeling range");
  Search search(g);
  search.run();

  CanonicalLabeling out;
  out.lab = search.best_lab();
  out.canonical.n = g.n;
  out.canonical.rows = search.best_cert().rows;

  std::array<std::uint8_t, kCap> parent{};
  for (int i = 0; i < g.n; ++i)
    parent[i] = static_cast<std::uint8_t>(i);
  auto find = [&](int x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto &gamma : search.generators())
    for (int x = 0; x < g.n; ++x) {
      const int a = find(x);
      const int b = find(gamma[x]);
      if (a != b)
        parent[std::max(a, b)] = static_cast<std::uint8_t>(std::min(a, b));
    }
  for (int x = 0; x < g.n; ++x)
    out.orbit[x] = static_cast<std::uint8_t>(find(x));
  return out;
}

std::string canonical_form(const SmallGraph &g) {
  return graph6_encode(to_graph(canonical_labeling(g).canonical));
}

std::string canonical_form(const Graph &g) {
  if (g.order() > kCanonicalMaxOrder)
    throw std::invalid_argument("canonical_form supports at most " +
                                std::to_string(kCanonicalMaxOrder) + " vertices, got " +
                                std::to_string(g.order()));
  return canonical_form(to_small(g));
}

} // namespace pathstar

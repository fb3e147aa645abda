#include "pathstar/construction_expr.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace pathstar {

ConstructionExpr ConstructionExpr::complete(Count a) {
  if (a < 0)
    throw std::invalid_argument("clique size must be nonnegative");
  return {Kind::Complete, a, {}};
}

ConstructionExpr ConstructionExpr::empty(Count a) {
  if (a < 0)
    throw std::invalid_argument("independent set size must be nonnegative");
  return {Kind::Empty, a, {}};
}

ConstructionExpr
ConstructionExpr::disjoint_union(std::vector<ConstructionExpr> parts) {
  return {Kind::Union, 0, std::move(parts)};
}

ConstructionExpr ConstructionExpr::join(ConstructionExpr left,
                                        ConstructionExpr right) {
  std::vector<ConstructionExpr> kids;
  kids.push_back(std::move(left));
  kids.push_back(std::move(right));
  return {Kind::Join, 0, std::move(kids)};
}

ConstructionExpr ConstructionExpr::copies(Count count, ConstructionExpr sub) {
  if (count < 0)
    throw std::invalid_argument("copy count must be nonnegative");
  std::vector<ConstructionExpr> kids;
  kids.push_back(std::move(sub));
  return {Kind::Copies, count, std::move(kids)};
}

Count ConstructionExpr::vertex_count() const {
  switch (kind_) {
  case Kind::Complete:
  case Kind::Empty:
    return size_;
  case Kind::Copies:
    return size_ * children_.front().vertex_count();
  case Kind::Union:
  case Kind::Join: {
    Count total = 0;
    for (const auto &c : children_)
      total += c.vertex_count();
    return total;
  }
  }
  return 0;
}

Count ConstructionExpr::edge_count() const {
  switch (kind_) {
  case Kind::Complete:
    return choose2(size_);
  case Kind::Empty:
    return 0;
  case Kind::Copies:
    return size_ * children_.front().edge_count();
  case Kind::Union: {
    Count total = 0;
    for (const auto &c : children_)
      total += c.edge_count();
    return total;
  }
  case Kind::Join: {
    // Generalizes e(A v B) = e(A) + e(B) + v(A)v(B) to a join of many parts.
    Count total = 0;
    Count seen = 0;
    for (const auto &c : children_) {
      const Count v = c.vertex_count();
      total += c.edge_count() + seen * v;
      seen += v;
    }
    return total;
  }
  }
  return 0;
}

std::string ConstructionExpr::to_string() const {
  switch (kind_) {
  case Kind::Complete:
    return "K" + std::to_string(size_);
  case Kind::Empty:
    return "Kbar" + std::to_string(size_);
  case Kind::Copies: {
    const auto &c = children_.front();
    const bool leaf = c.kind_ == Kind::Complete || c.kind_ == Kind::Empty;
    return std::to_string(size_) + (leaf ? c.to_string() : "(" + c.to_string() + ")");
  }
  case Kind::Union:
  case Kind::Join: {
    if (children_.empty())
      return "Kbar0";
    const char *sep = kind_ == Kind::Union ? " u " : " v ";
    std::string out;
    for (std::size_t i = 0; i < children_.size(); ++i) {
      const auto &c = children_[i];
      if (i)
        out += sep;
      const bool wrap = c.kind_ == Kind::Union || c.kind_ == Kind::Join;
      out += wrap ? "(" + c.to_string() + ")" : c.to_string();
    }
    return out;
  }
  }
  return {};
}

namespace {

using Expr = ConstructionExpr;
using Kind = ConstructionExpr::Kind;

bool is_void(const Expr &e) {
  return (e.kind() == Kind::Empty || e.kind() == Kind::Complete) && e.size() == 0;
}

// K1 and Kbar1 are the same graph; K1 is the spelling kept.
bool is_single(const Expr &e) {
  return (e.kind() == Kind::Empty || e.kind() == Kind::Complete) && e.size() == 1;
}

// Collects a normalized expression into union parts with multiplicity.
void collect_union(const Expr &e, Count mult, std::map<std::string, std::pair<Expr, Count>> &parts,
                   Count &isolated) {
  if (is_void(e) || mult == 0)
    return;
  if (is_single(e)) {
    isolated += mult;
    return;
  }
  switch (e.kind()) {
  case Kind::Empty:
    isolated += mult * e.size();
    return;
  case Kind::Union:
    for (const auto &c : e.children())
      collect_union(c, mult, parts, isolated);
    return;
  case Kind::Copies:
    collect_union(e.children().front(), mult * e.size(), parts, isolated);
    return;
  default: {
    auto key = e.to_string();
    auto it = parts.find(key);
    if (it == parts.end())
      parts.emplace(std::move(key), std::pair{e, mult});
    else
      it->second.second += mult;
  }
  }
}

Expr make_union(std::map<std::string, std::pair<Expr, Count>> parts, Count isolated) {
  std::vector<Expr> out;
  for (auto &[key, entry] : parts) {
    auto &[expr, mult] = entry;
    out.push_back(mult == 1 ? expr : Expr::copies(mult, expr));
  }
  if (isolated == 1)
    out.push_back(Expr::complete(1));
  else if (isolated > 1)
    out.push_back(Expr::empty(isolated));
  if (out.empty())
    return Expr::empty(0);
  if (out.size() == 1)
    return out.front();
  std::sort(out.begin(), out.end(),
            [](const Expr &a, const Expr &b) { return a.to_string() < b.to_string(); });
  return Expr::disjoint_union(std::move(out));
}

void collect_join(const Expr &e, std::vector<Expr> &parts, Count &clique) {
  if (is_void(e))
    return;
  if (e.kind() == Kind::Complete) {
    clique += e.size();
    return;
  }
  if (is_single(e)) {
    clique += 1;
    return;
  }
  if (e.kind() == Kind::Join) {
    for (const auto &c : e.children())
      collect_join(c, parts, clique);
    return;
  }
  parts.push_back(e);
}

} // namespace

ConstructionExpr ConstructionExpr::normalized() const {
  switch (kind_) {
  case Kind::Complete:
    return size_ == 0 ? empty(0) : *this;
  case Kind::Empty:
    return size_ == 1 ? complete(1) : *this;
  case Kind::Copies:
  case Kind::Union: {
    std::map<std::string, std::pair<Expr, Count>> parts;
    Count isolated = 0;
    if (kind_ == Kind::Copies) {
      collect_union(children_.front().normalized(), size_, parts, isolated);
    } else {
      for (const auto &c : children_)
        collect_union(c.normalized(), 1, parts, isolated);
    }
    return make_union(std::move(parts), isolated);
  }
  case Kind::Join: {
    std::vector<Expr> parts;
    Count clique = 0;
    for (const auto &c : children_)
      collect_join(c.normalized(), parts, clique);
    if (clique > 0)
      parts.push_back(complete(clique).normalized());
    if (parts.empty())
      return empty(0);
    std::sort(parts.begin(), parts.end(),
              [](const Expr &a, const Expr &b) { return a.to_string() < b.to_string(); });
    Expr acc = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i)
      acc = Expr(Kind::Join, 0, [&] {
        std::vector<Expr> kids;
        if (acc.kind() == Kind::Join)
          kids = acc.children();
        else
          kids.push_back(acc);
        kids.push_back(parts[i]);
        return kids;
      }());
    return acc;
  }
  }
  return *this;
}

namespace {

int add_to(const Expr &e, GraphBuilder &b, int offset) {
  switch (e.kind()) {
  case Kind::Complete: {
    const int a = static_cast<int>(e.size());
    for (int u = 0; u < a; ++u)
      for (int v = u + 1; v < a; ++v)
        b.add_edge(offset + u, offset + v);
    return a;
  }
  case Kind::Empty:
    return static_cast<int>(e.size());
  case Kind::Copies: {
    int used = 0;
    for (Count i = 0; i < e.size(); ++i)
      used += add_to(e.children().front(), b, offset + used);
    return used;
  }
  case Kind::Union: {
    int used = 0;
    for (const auto &c : e.children())
      used += add_to(c, b, offset + used);
    return used;
  }
  case Kind::Join: {
    int used = 0;
    for (const auto &c : e.children()) {
      const int part = add_to(c, b, offset + used);
      for (int u = offset; u < offset + used; ++u)
        for (int v = offset + used; v < offset + used + part; ++v)
          b.add_edge(u, v);
      used += part;
    }
    return used;
  }
  }
  return 0;
}

} // namespace

Graph build(const ConstructionExpr &expr) {
  const Count n = expr.vertex_count();
  if (n < 1)
    throw std::invalid_argument("construction has no vertices");
  if (n > kMaxBuildVertices)
    throw std::invalid_argument("construction too large to materialize (" +
                                std::to_string(n) + " vertices)");
  GraphBuilder b(static_cast<int>(n));
  add_to(expr, b, 0);
  return std::move(b).finish();
}

} // namespace pathstar

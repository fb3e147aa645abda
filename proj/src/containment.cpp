#include "pathstar/containment.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace pathstar {

std::vector<int> twin_classes(const Graph &g) {
  const int n = g.order();
  std::map<std::vector<std::uint64_t>, std::vector<int>> open_groups;
  std::map<std::vector<std::uint64_t>, std::vector<int>> closed_groups;
  for (int v = 0; v < n; ++v) {
    auto row = g.row(v);
    std::vector<std::uint64_t> key(row.begin(), row.end());
    open_groups[key].push_back(v);
    key[v >> 6] |= std::uint64_t{1} << (v & 63);
    closed_groups[key].push_back(v);
  }
  std::vector<int> cls(n);
  for (int v = 0; v < n; ++v)
    cls[v] = v;
  // A vertex cannot have both an open twin and a closed twin, so the two
  // groupings never overlap in classes of size >= 2.
  for (auto *groups : {&open_groups, &closed_groups})
    for (const auto &[key, members] : *groups)
      if (members.size() > 1)
        for (int v : members)
          cls[v] = members.front();
  return cls;
}

namespace {

class Search {
public:
  Search(const Graph &g, const ForestSpec &spec)
      : g_(g), n_(g.order()), words_(g.words_per_row()) {
    // Internally all paths come before all stars; order_ maps back to the
    // spec's component order.
    const auto &spec_comps = spec.components();
    for (int pass = 0; pass < 2; ++pass)
      for (std::size_t i = 0; i < spec_comps.size(); ++i)
        if (spec_comps[i].is_path() == (pass == 0)) {
          comps_.push_back(spec_comps[i]);
          order_.push_back(i);
        }
    cls_ = twin_classes(g);
    rank_.assign(n_, 0);
    used_in_class_.assign(n_, 0);
    std::vector<int> seen(n_, 0);
    for (int v = 0; v < n_; ++v)
      rank_[v] = seen[cls_[v]]++;
    free_.assign(words_, 0);
    for (int v = 0; v < n_; ++v)
      free_[v >> 6] |= std::uint64_t{1} << (v & 63);
    free_count_ = n_;
    remaining_ = 0;
    for (const auto &c : comps_) {
      remaining_ += c.vertex_count();
      if (c.is_path())
        ++paths_;
    }
    parts_.resize(comps_.size());
    keys_.assign(comps_.size(), -1);
  }

  std::optional<Embedding> run() {
    if (remaining_ > n_)
      return std::nullopt;
    if (!place(0))
      return std::nullopt;
    Embedding emb;
    emb.parts.resize(parts_.size());
    for (std::size_t i = 0; i < parts_.size(); ++i)
      emb.parts[order_[i]] = parts_[i];
    return emb;
  }

private:
  bool is_free(int v) const { return (free_[v >> 6] >> (v & 63)) & 1U; }

  bool allowed(int v, int class_floor) const {
    return is_free(v) && cls_[v] >= class_floor && rank_[v] == used_in_class_[cls_[v]];
  }

  void take(int v) {
    free_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    ++used_in_class_[cls_[v]];
    --free_count_;
  }

  void release(int v) {
    free_[v >> 6] |= std::uint64_t{1} << (v & 63);
    --used_in_class_[cls_[v]];
    ++free_count_;
  }

  int free_degree(int v) const {
    auto row = g_.row(v);
    int d = 0;
    for (int w = 0; w < words_; ++w)
      d += std::popcount(row[w] & free_[w]);
    return d;
  }

  int class_floor(std::size_t ci) const {
    if (ci > 0 && comps_[ci] == comps_[ci - 1])
      return keys_[ci - 1];
    return -1;
  }

  bool place(std::size_t ci) {
    if (ci == static_cast<std::size_t>(paths_))
      return place_stars();
    if (free_count_ < remaining_)
      return false;
    const int floor = class_floor(ci);
    auto &path = parts_[ci];
    for (int v = 0; v < n_; ++v) {
      if (!allowed(v, floor))
        continue;
      take(v);
      path.assign(1, v);
      if (extend(ci, floor))
        return true;
      release(v);
    }
    path.clear();
    return false;
  }

  bool extend(std::size_t ci, int floor) {
    auto &path = parts_[ci];
    const int len = comps_[ci].size;
    if (static_cast<int>(path.size()) == len) {
      int key = n_;
      for (int v : path)
        key = std::min(key, cls_[v]);
      keys_[ci] = key;
      remaining_ -= len;
      const bool ok = place(ci + 1);
      remaining_ += len;
      return ok;
    }
    const int last = path.back();
    auto row = g_.row(last);
    for (int w = 0; w < words_; ++w) {
      for (auto bits = row[w] & free_[w]; bits; bits &= bits - 1) {
        const int u = w * 64 + std::countr_zero(bits);
        if (!allowed(u, floor))
          continue;
        take(u);
        path.push_back(u);
        if (extend(ci, floor))
          return true;
        path.pop_back();
        release(u);
      }
    }
    return false;
  }

  // Stars: centers by search, leaves by matching.
  bool place_stars() {
    const std::size_t first = static_cast<std::size_t>(paths_);
    if (first == comps_.size())
      return true;
    if (free_count_ < remaining_)
      return false;
    // For the j-th remaining star (leaves sorted descending) at least j+1
    // free vertices need free degree >= its leaf count.
    std::vector<int> deg(n_, -1);
    for (int v = 0; v < n_; ++v)
      if (is_free(v))
        deg[v] = free_degree(v);
    for (std::size_t j = first; j < comps_.size(); ++j) {
      const int t = comps_[j].size;
      const auto enough = std::count_if(deg.begin(), deg.end(), [t](int d) { return d >= t; });
      if (enough < static_cast<long>(j - first + 1))
        return false;
    }
    degrees_ = std::move(deg);
    centers_.clear();
    return choose_center(first);
  }

  bool choose_center(std::size_t ci) {
    if (ci == comps_.size())
      return assign_leaves();
    const int t = comps_[ci].size;
    const int floor = class_floor(ci);
    for (int v = 0; v < n_; ++v) {
      if (degrees_[v] < t || !allowed(v, floor))
        continue;
      take(v);
      keys_[ci] = cls_[v];
      centers_.push_back(v);
      if (choose_center(ci + 1))
        return true;
      centers_.pop_back();
      release(v);
    }
    return false;
  }

  // Each star is split into one slot per leaf; augmenting paths match slots
  // to free vertices that are adjacent to the slot's center.
  bool assign_leaves() {
    const std::size_t first = static_cast<std::size_t>(paths_);
    std::vector<int> slot_center;
    for (std::size_t j = first; j < comps_.size(); ++j)
      slot_center.insert(slot_center.end(), comps_[j].size, centers_[j - first]);
    std::vector<int> owner(n_, -1);
    for (std::size_t s = 0; s < slot_center.size(); ++s) {
      std::vector<char> visited(n_, 0);
      if (!augment(static_cast<int>(s), slot_center, owner, visited))
        return false;
    }
    std::size_t slot = 0;
    for (std::size_t j = first; j < comps_.size(); ++j) {
      auto &star = parts_[j];
      star.assign(1, centers_[j - first]);
      std::vector<int> leaves;
      for (int v = 0; v < n_; ++v)
        if (owner[v] >= static_cast<int>(slot) &&
            owner[v] < static_cast<int>(slot) + comps_[j].size)
          leaves.push_back(v);
      star.insert(star.end(), leaves.begin(), leaves.end());
      slot += comps_[j].size;
    }
    return true;
  }

  bool augment(int s, const std::vector<int> &slot_center, std::vector<int> &owner,
               std::vector<char> &visited) {
    auto row = g_.row(slot_center[s]);
    for (int w = 0; w < words_; ++w) {
      for (auto bits = row[w] & free_[w]; bits; bits &= bits - 1) {
        const int v = w * 64 + std::countr_zero(bits);
        if (visited[v])
          continue;
        visited[v] = 1;
        if (owner[v] < 0 || augment(owner[v], slot_center, owner, visited)) {
          owner[v] = s;
          return true;
        }
      }
    }
    return false;
  }

  const Graph &g_;
  std::vector<Component> comps_;
  std::vector<std::size_t> order_;
  int n_;
  int words_;
  int paths_ = 0;
  int remaining_ = 0;
  int free_count_ = 0;
  std::vector<int> cls_;
  std::vector<int> rank_;
  std::vector<int> used_in_class_;
  std::vector<std::uint64_t> free_;
  std::vector<std::vector<int>> parts_;
  std::vector<int> keys_;
  std::vector<int> degrees_;
  std::vector<int> centers_;
};

} // namespace

std::optional<Embedding> contains_forest(const Graph &g, const ForestSpec &spec) {
  return Search(g, spec).run();
}

bool is_free(const Graph &g, const ForestSpec &spec) {
  return !contains_forest(g, spec).has_value();
}

bool verify_embedding(const Graph &g, const ForestSpec &spec, const Embedding &emb) {
  const auto &comps = spec.components();
  if (emb.parts.size() != comps.size())
    return false;
  std::vector<char> used(g.order(), 0);
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const auto &part = emb.parts[i];
    if (static_cast<int>(part.size()) != comps[i].vertex_count())
      return false;
    for (int v : part) {
      if (v < 0 || v >= g.order() || used[v])
        return false;
      used[v] = 1;
    }
    if (comps[i].is_path()) {
      for (std::size_t j = 1; j < part.size(); ++j)
        if (!g.adjacent(part[j - 1], part[j]))
          return false;
    } else {
      for (std::size_t j = 1; j < part.size(); ++j)
        if (!g.adjacent(part[0], part[j]))
          return false;
    }
  }
  return true;
}

} // namespace pathstar

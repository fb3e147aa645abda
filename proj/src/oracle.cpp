#include "pathstar/oracle.hpp"

#include "pathstar/containment.hpp"
#include "pathstar/graph6.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <bit>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace pathstar {

namespace {

using Rows = std::array<std::uint16_t, SmallGraph::kCapacity>;

} // namespace

void augment_parent(const SmallGraph &parent, int min_edges,
                    const std::function<void(const SmallGraph &)> &emit) {
  const int m = parent.n;
  if (m + 1 > SmallGraph::kCapacity)
    throw std::invalid_argument("augment_parent: order exceeds capacity");
  const int base_edges = parent.edge_count();
  std::array<int, SmallGraph::kCapacity> deg{};
  for (int v = 0; v < m; ++v)
    deg[v] = std::popcount(parent.rows[v]);

  std::vector<Rows> accepted;
  for (std::uint32_t subset = 0; subset < (1U << m); ++subset) {
    const int k = std::popcount(subset);
    if (base_edges + k < min_edges)
      continue;
    // The canonical deletion vertex always has maximum degree, so the new
    // vertex must have maximum degree too.
    bool max_degree = true;
    for (int v = 0; v < m && max_degree; ++v)
      max_degree = deg[v] + static_cast<int>((subset >> v) & 1U) <= k;
    if (!max_degree)
      continue;

    SmallGraph child = parent;
    child.n = m + 1;
    child.rows[m] = static_cast<std::uint16_t>(subset);
    for (int v = 0; v < m; ++v)
      if ((subset >> v) & 1U)
        child.rows[v] |= static_cast<std::uint16_t>(1U << m);

    const auto labeling = canonical_labeling(child);
    // Canonical deletion vertex: the maximum-degree vertex placed first by
    // the canonical labeling. Accept iff the new vertex is in its orbit.
    int deletion = -1;
    for (int i = 0; i <= m; ++i) {
      const int v = labeling.lab[i];
      if (std::popcount(child.rows[v]) == k) {
        deletion = v;
        break;
      }
    }
    if (labeling.orbit[m] != labeling.orbit[deletion])
      continue;
    accepted.push_back(labeling.canonical.rows);
  }
  // Augmentations related by an automorphism of the parent give the same
  // class; keep one.
  std::sort(accepted.begin(), accepted.end());
  accepted.erase(std::unique(accepted.begin(), accepted.end()), accepted.end());
  SmallGraph out;
  out.n = m + 1;
  for (const auto &rows : accepted) {
    out.rows = rows;
    emit(out);
  }
}

std::vector<SmallGraph> extend_level_serial(const std::vector<SmallGraph> &parents) {
  std::vector<SmallGraph> out;
  for (const auto &p : parents)
    augment_parent(p, 0, [&](const SmallGraph &c) { out.push_back(c); });
  return out;
}

std::vector<SmallGraph> extend_level_parallel(const std::vector<SmallGraph> &parents) {
  std::vector<std::vector<SmallGraph>> per_parent(parents.size());
  const long count = static_cast<long>(parents.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (long i = 0; i < count; ++i)
    augment_parent(parents[i], 0, [&](const SmallGraph &c) { per_parent[i].push_back(c); });
  std::vector<SmallGraph> out;
  for (auto &chunk : per_parent)
    out.insert(out.end(), chunk.begin(), chunk.end());
  return out;
}

std::vector<SmallGraph> enumerate_graphs(int n, Execution exec) {
  if (n < 1 || n > kOracleMaxOrder)
    throw std::invalid_argument("enumerate_graphs: n must be in [1, " +
                                std::to_string(kOracleMaxOrder) + "]");
  SmallGraph single;
  single.n = 1;
  std::vector<SmallGraph> level{single};
  for (int order = 2; order <= n; ++order)
    level = exec == Execution::Serial ? extend_level_serial(level) : extend_level_parallel(level);
  return level;
}

namespace {

struct Found {
  Count edges;
  std::string g6;
};

struct Progress {
  std::size_t next_parent = 0;
  Count best = -1;
  std::vector<std::string> classes;
  Count examined = 0;
};

void record(Progress &p, Count edges, std::string g6) {
  if (edges > p.best) {
    p.best = edges;
    p.classes.clear();
  }
  if (edges == p.best)
    p.classes.push_back(std::move(g6));
}

std::optional<Progress> load_checkpoint(const std::string &path, int n, const std::string &spec,
                                        Count seed) {
  std::ifstream in(path);
  if (!in)
    return std::nullopt;
  std::optional<Progress> last;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty())
      continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error &) {
      break; // torn final line from an interrupted run
    }
    if (j.at("n").get<int>() != n || j.at("spec").get<std::string>() != spec ||
        j.at("seed").get<Count>() != seed)
      throw std::runtime_error("checkpoint " + path + " belongs to a different oracle run");
    Progress p;
    p.next_parent = j.at("next_parent").get<std::size_t>();
    p.best = j.at("max_edges").get<Count>();
    p.classes = j.at("classes").get<std::vector<std::string>>();
    p.examined = j.at("graphs_examined").get<Count>();
    last = std::move(p);
  }
  return last;
}

void save_checkpoint(const std::string &path, int n, const std::string &spec, Count seed,
                     const Progress &p) {
  std::ofstream out(path, std::ios::app);
  nlohmann::json j = {{"n", n},
                      {"spec", spec},
                      {"seed", seed},
                      {"next_parent", p.next_parent},
                      {"max_edges", p.best},
                      {"classes", p.classes},
                      {"graphs_examined", p.examined}};
  out << j.dump() << '\n';
}

} // namespace

OracleResult turan_oracle(int n, const ForestSpec &spec, const OracleOptions &options) {
  if (n < 1 || n > kOracleLongOrder)
    throw std::invalid_argument("turan_oracle: n must be in [1, " +
                                std::to_string(kOracleLongOrder) + "]");
  if (n > kOracleMaxOrder && !options.allow_long)
    throw std::invalid_argument("turan_oracle: n = " + std::to_string(n) +
                                " is a long-running job; enable it explicitly");
  if (spec.empty())
    throw std::invalid_argument("turan_oracle: empty forest");

  OracleResult res;
  res.n = n;
  res.spec = spec;

  // K_{v-1} plus isolated vertices never contains a forest on v vertices
  // without isolated components.
  Count seed = choose2(std::min(n, spec.total_vertices() - 1));
  for (const auto &g : options.seeds)
    if (g.order() == n && g.edge_count() > seed && is_free(g, spec))
      seed = g.edge_count();
  res.seed = seed;

  if (n == 1) {
    res.max_edges = 0;
    res.extremal_classes = {graph6_encode(Graph(1))};
    res.graphs_examined = 1;
    return res;
  }

  const auto all_parents = enumerate_graphs(n - 1, options.exec);
  std::vector<SmallGraph> parents;
  for (const auto &p : all_parents)
    if (p.edge_count() + (n - 1) >= seed)
      parents.push_back(p);

  const std::string spec_text = spec.to_string();
  Progress progress;
  if (!options.checkpoint_path.empty())
    if (auto loaded = load_checkpoint(options.checkpoint_path, n, spec_text, seed))
      progress = std::move(*loaded);

  std::atomic<Count> bound{std::max(seed, progress.best)};
  const int min_edges = static_cast<int>(seed);
  const std::size_t block = std::max(1, options.checkpoint_block);

  while (progress.next_parent < parents.size()) {
    const std::size_t begin = progress.next_parent;
    const std::size_t end = std::min(parents.size(), begin + block);
    const long count = static_cast<long>(end - begin);
    std::vector<std::vector<Found>> found(count);
    std::vector<Count> examined(count, 0);

    auto work = [&](long i) {
      augment_parent(parents[begin + i], min_edges, [&](const SmallGraph &child) {
        ++examined[i];
        const Count e = child.edge_count();
        if (e < bound.load(std::memory_order_relaxed))
          return;
        const Graph g = to_graph(child);
        if (!is_free(g, spec))
          return;
        Count cur = bound.load(std::memory_order_relaxed);
        while (e > cur && !bound.compare_exchange_weak(cur, e)) {
        }
        found[i].push_back({e, graph6_encode(g)});
      });
    };
    if (options.exec == Execution::Serial) {
      for (long i = 0; i < count; ++i)
        work(i);
    } else {
#pragma omp parallel for schedule(dynamic, 8)
      for (long i = 0; i < count; ++i)
        work(i);
    }

    for (long i = 0; i < count; ++i) {
      progress.examined += examined[i];
      for (auto &f : found[i])
        record(progress, f.edges, std::move(f.g6));
    }
    progress.next_parent = end;
    if (!options.checkpoint_path.empty())
      save_checkpoint(options.checkpoint_path, n, spec_text, seed, progress);
  }

  res.max_edges = progress.best;
  res.extremal_classes = std::move(progress.classes);
  std::sort(res.extremal_classes.begin(), res.extremal_classes.end());
  res.graphs_examined = progress.examined;
  if (res.max_edges < 0)
    throw std::logic_error("turan_oracle: no free graph found above the seed bound");
  return res;
}

std::optional<OracleResult> cache_lookup(const std::string &path, int n, const ForestSpec &spec) {
  std::ifstream in(path);
  if (!in)
    return std::nullopt;
  const std::string key = spec.to_string();
  std::optional<OracleResult> res;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty())
      continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error &) {
      continue;
    }
    if (j.value("n", -1) != n || j.value("spec", std::string{}) != key)
      continue;
    if (!res) {
      res.emplace();
      res->n = n;
      res->spec = spec;
      res->max_edges = j.at("max_edges").get<Count>();
      res->graphs_examined = j.value("graphs_examined", Count{0});
      res->seed = j.value("seed", Count{0});
    }
    const auto g6 = j.at("class").get<std::string>();
    if (std::find(res->extremal_classes.begin(), res->extremal_classes.end(), g6) ==
        res->extremal_classes.end())
      res->extremal_classes.push_back(g6);
  }
  if (res)
    std::sort(res->extremal_classes.begin(), res->extremal_classes.end());
  return res;
}

void cache_store(const std::string &path, const OracleResult &result) {
  const auto parent = std::filesystem::path(path).parent_path();
  if (!parent.empty())
    std::filesystem::create_directories(parent);
  std::ofstream out(path, std::ios::app);
  if (!out)
    throw std::runtime_error("cannot write oracle cache " + path);
  for (const auto &g6 : result.extremal_classes) {
    nlohmann::json j = {{"n", result.n},
                        {"spec", result.spec.to_string()},
                        {"max_edges", result.max_edges},
                        {"class", g6},
                        {"graphs_examined", result.graphs_examined},
                        {"seed", result.seed}};
    out << j.dump() << '\n';
  }
}

} // namespace pathstar

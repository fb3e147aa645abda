#pragma once

#include "pathstar/constructions.hpp"
#include "pathstar/forest_spec.hpp"
#include "pathstar/graph.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace pathstar {

enum class PointStatus { Pass, Fail, Skipped };

std::string to_string(PointStatus s);

struct Counterexample {
  std::string graph6;
  /// Whatever makes the failure reproducible: an embedding, two edge
  /// counts, the offending labels.
  nlohmann::json certificate;
};

struct CheckPoint {
  nlohmann::json params;
  PointStatus status = PointStatus::Pass;
  /// Why a point was skipped or failed.
  std::string reason;
  std::optional<Counterexample> counterexample;
  /// Informational values (oracle results, observed slack, ...).
  nlohmann::json data;
};

struct CheckReport {
  std::string id;
  std::string description;
  nlohmann::json grid;
  std::vector<CheckPoint> points;
  std::vector<std::string> notes;

  std::size_t count(PointStatus s) const;
  bool passed() const { return count(PointStatus::Fail) == 0; }
  nlohmann::json to_json() const;
};

struct VerifyOptions {
  /// "default" reproduces the acceptance grids, "quick" is a cut-down
  /// version for smoke tests.
  std::string grid = "default";
  bool parallel = true;
  /// Directory for the oracle JSON-lines cache; empty disables caching.
  std::string cache_dir;
};

/// Suites run by `all`, in order.
std::vector<std::string> suite_ids();
/// Opt-in suites that are not part of `all` (the order-10 oracle run).
std::vector<std::string> long_suite_ids();
std::vector<std::string> grid_presets();

/// Runs one suite by id. Throws std::invalid_argument for unknown ids or
/// grid presets.
CheckReport run_suite(const std::string &id, const VerifyOptions &options = {});

/// One construction that is claimed to be free of a forest.
struct FreenessCase {
  nlohmann::json params;
  ExtremalDescriptor construction;
  ForestSpec forest;
};

/// PASS when the built construction is free; FAIL with the embedding found
/// otherwise.
CheckReport check_freeness(const std::string &id, const std::vector<FreenessCase> &cases,
                           bool parallel = true);

/// Reference containment test that tries every injective map from the
/// forest's vertices into g. Only meant for tiny graphs.
bool naive_contains(const Graph &g, const ForestSpec &spec);

/// Every forest spec with at most `max_vertices` vertices in total.
std::vector<ForestSpec> all_specs_up_to(int max_vertices);

} // namespace pathstar

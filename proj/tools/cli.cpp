#include "cli.hpp"

#include "pathstar/canonical.hpp"
#include "pathstar/containment.hpp"
#include "pathstar/crossover.hpp"
#include "pathstar/formulas.hpp"
#include "pathstar/graph6.hpp"
#include "pathstar/oracle.hpp"
#include "pathstar/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <omp.h>

#include <algorithm>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <random>

namespace pathstar::cli {

using nlohmann::json;

namespace {

struct Usage : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Shared {
  bool json = false;
  int jobs = 0;
  std::optional<std::uint64_t> seed;
  std::string cache_dir;
};

void add_shared(CLI::App *sub, Shared &s) {
  sub->add_flag("--json", s.json, "Emit one JSON document on stdout");
  sub->add_option("--jobs", s.jobs, "Worker threads (0 = OpenMP default)")->check(CLI::NonNegativeNumber);
  sub->add_option("--seed", s.seed, "Seed for label shuffles");
  sub->add_option("--cache-dir", s.cache_dir, "Directory for cached oracle results");
}

json descriptor_json(const ExtremalDescriptor &d) {
  json j = {{"name", to_string(d.name)}, {"params", d.params}, {"label", d.label()}, {"n", d.order()}};
  try {
    j["edges"] = edge_formula(d);
  } catch (const NoClosedFormError &) {
    j["edges"] = d.expr.edge_count();
  }
  return j;
}

Graph read_graph(const std::string &text, std::istream &in) {
  std::string line = text;
  if (line.empty() || line == "-") {
    if (!std::getline(in, line))
      throw Usage("no graph on standard input");
  }
  if (line.find(':') != std::string::npos)
    return build(parse_construction(line).expr);
  try {
    return graph6_decode(line);
  } catch (const Graph6Error &e) {
    throw Usage(std::string("bad graph6: ") + e.what());
  }
}

ForestSpec read_spec(const std::string &text) {
  try {
    return parse_spec(text);
  } catch (const ForestSpecError &e) {
    throw Usage(std::string("bad forest spec: ") + e.what());
  }
}

// ---------------------------------------------------------------------------

struct FormulaArgs {
  std::string family;
  Count n = 0;
  Count k1 = 1;
  Count k2 = 0;
  int l = 0;
};

int cmd_formula(const FormulaArgs &a, const Shared &s, std::ostream &out) {
  FormulaResult r;
  json params = {{"n", a.n}};
  if (a.family == "path") {
    r = ex_path(a.n, a.l);
    params["l"] = a.l;
  } else if (a.family == "two-p5") {
    r = ex_two_p5(a.n);
  } else if (a.family == "k-paths") {
    r = ex_k_even_paths(a.n, a.k1, a.l);
    params["k"] = a.k1;
    params["L"] = a.l;
  } else if (a.family == "k-stars") {
    r = ex_k_stars(a.n, a.k1, a.l);
    params["k"] = a.k1;
    params["t"] = a.l;
  } else {
    r = ex_path_star(a.n, a.k1, a.k2, a.l);
    params["k1"] = a.k1;
    params["k2"] = a.k2;
    params["l"] = a.l;
  }
  json extremal = json::array();
  for (const auto &d : r.extremal)
    extremal.push_back(descriptor_json(d));
  if (s.json) {
    out << json{{"family", a.family},
                {"params", params},
                {"value", r.value ? json(*r.value) : json(nullptr)},
                {"applicable", to_string(r.applicable)},
                {"threshold", r.threshold ? json(*r.threshold) : json(nullptr)},
                {"regime", r.regime},
                {"extremal", extremal}}
               .dump()
        << '\n';
    return kExitOk;
  }
  out << "value " << (r.value ? std::to_string(*r.value) : std::string("none")) << " ("
      << to_string(r.applicable);
  if (r.threshold)
    out << ", threshold " << *r.threshold;
  out << ", " << r.regime << ")\n";
  for (const auto &e : extremal)
    out << "  " << e["label"].get<std::string>() << "  " << e["edges"] << " edges\n";
  return kExitOk;
}

int cmd_construct(const std::string &text, const Shared &s, std::ostream &out) {
  const auto d = parse_construction(text);
  const Graph g = build(d.expr);
  json formula = nullptr;
  try {
    formula = edge_formula(d);
  } catch (const NoClosedFormError &) {
  }
  json desc = {{"name", to_string(d.name)},
               {"params", d.params},
               {"n", g.order()},
               {"expr", d.expr.to_string()},
               {"expr_normalized", d.expr.normalized().to_string()},
               {"edges_formula", formula},
               {"edges_counted", g.edge_count()}};
  if (s.json)
    out << json{{"graph6", graph6_encode(g)}, {"descriptor", desc}}.dump() << '\n';
  else
    out << graph6_encode(g) << '\n' << desc.dump() << '\n';
  return kExitOk;
}

int cmd_check_free(const std::string &graph, const std::string &forest, const Shared &s, std::istream &in,
                   std::ostream &out) {
  const ForestSpec spec = read_spec(forest);
  const Graph original = read_graph(graph, in);
  Graph g = original;
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  if (s.seed) {
    std::mt19937_64 rng(*s.seed);
    std::shuffle(perm.begin(), perm.end(), rng);
    g = original.relabeled(perm);
  }
  auto emb = contains_forest(g, spec);
  if (emb) {
    // Report the certificate in the caller's labels.
    std::vector<int> back(perm.size());
    for (std::size_t v = 0; v < perm.size(); ++v)
      back[perm[v]] = static_cast<int>(v);
    for (auto &part : emb->parts)
      for (auto &v : part)
        v = back[v];
    if (!verify_embedding(original, spec, *emb))
      throw std::logic_error("containment produced an invalid certificate");
  }
  if (s.json) {
    out << json{{"free", !emb},
                {"forest", spec.to_string()},
                {"n", original.order()},
                {"edges", original.edge_count()},
                {"embedding", emb ? json(emb->parts) : json(nullptr)}}
               .dump()
        << '\n';
  } else if (emb) {
    out << "contains " << spec.to_string() << ": " << json(emb->parts).dump() << '\n';
  } else {
    out << spec.to_string() << "-free\n";
  }
  return emb ? kExitFail : kExitOk;
}

struct OracleArgs {
  int n = 0;
  std::string forest;
  std::string resume;
  bool allow_long = false;
  bool serial = false;
};

int cmd_oracle(const OracleArgs &a, const Shared &s, std::ostream &out) {
  const ForestSpec spec = read_spec(a.forest);
  if (a.n < 1 || a.n > kOracleLongOrder)
    throw Usage("--n must be between 1 and " + std::to_string(kOracleLongOrder));
  if (a.n > kOracleMaxOrder && !a.allow_long)
    throw Usage("n = " + std::to_string(a.n) + " is a long run; pass --allow-long");
  const std::string cache = s.cache_dir.empty() ? std::string{} : s.cache_dir + "/oracle.jsonl";
  std::optional<OracleResult> res;
  bool cached = false;
  if (!cache.empty() && (res = cache_lookup(cache, a.n, spec)))
    cached = true;
  if (!res) {
    OracleOptions oo;
    oo.exec = a.serial ? Execution::Serial : Execution::Parallel;
    oo.allow_long = a.allow_long;
    oo.checkpoint_path = a.resume;
    res = turan_oracle(a.n, spec, oo);
    if (!cache.empty())
      cache_store(cache, *res);
  }
  if (s.json) {
    out << json{{"n", res->n},
                {"spec", res->spec.to_string()},
                {"max_edges", res->max_edges},
                {"extremal_classes", res->extremal_classes},
                {"graphs_examined", res->graphs_examined},
                {"pruning_bound", res->seed},
                {"cached", cached}}
               .dump()
        << '\n';
  } else {
    out << "ex(" << res->n << ", " << res->spec.to_string() << ") = " << res->max_edges << "  ("
        << res->extremal_classes.size() << " extremal classes, " << res->graphs_examined
        << " graphs examined" << (cached ? ", cached" : "") << ")\n";
    for (const auto &c : res->extremal_classes)
      out << "  " << c << '\n';
  }
  return kExitOk;
}

struct VerifyArgs {
  std::string suite = "all";
  std::string grid = "default";
  std::string report;
};

int cmd_verify(const VerifyArgs &a, const Shared &s, std::ostream &out) {
  std::vector<std::string> ids;
  if (a.suite == "all") {
    ids = suite_ids();
  } else {
    auto known = suite_ids();
    auto extra = long_suite_ids();
    known.insert(known.end(), extra.begin(), extra.end());
    if (std::find(known.begin(), known.end(), a.suite) == known.end())
      throw Usage("unknown suite '" + a.suite + "'");
    ids = {a.suite};
  }
  const auto presets = grid_presets();
  if (std::find(presets.begin(), presets.end(), a.grid) == presets.end())
    throw Usage("unknown grid preset '" + a.grid + "'");
  VerifyOptions vo;
  vo.grid = a.grid;
  vo.cache_dir = s.cache_dir;
  json reports = json::array();
  bool ok = true;
  if (!s.json)
    out << std::left << std::setw(16) << "suite" << std::setw(8) << "pass" << std::setw(8) << "fail"
        << std::setw(9) << "skipped" << "status\n";
  for (const auto &id : ids) {
    const auto rep = run_suite(id, vo);
    ok = ok && rep.passed();
    reports.push_back(rep.to_json());
    if (!s.json) {
      out << std::left << std::setw(16) << id << std::setw(8) << rep.count(PointStatus::Pass) << std::setw(8)
          << rep.count(PointStatus::Fail) << std::setw(9) << rep.count(PointStatus::Skipped)
          << (rep.passed() ? "PASS" : "FAIL") << '\n';
      for (const auto &p : rep.points)
        if (p.status == PointStatus::Fail)
          out << "    FAIL " << p.params.dump() << ": " << p.reason << '\n';
    }
  }
  const json doc = {{"grid", a.grid}, {"status", ok ? "PASS" : "FAIL"}, {"suites", reports}};
  if (!a.report.empty()) {
    const auto dir = std::filesystem::path(a.report).parent_path();
    if (!dir.empty())
      std::filesystem::create_directories(dir);
    std::ofstream f(a.report);
    if (!f)
      throw std::runtime_error("cannot write " + a.report);
    f << doc.dump(2) << '\n';
  }
  if (s.json)
    out << doc.dump() << '\n';
  return ok ? kExitOk : kExitFail;
}

struct CrossoverArgs {
  std::string f;
  std::string g;
  Count lo = 0;
  Count hi = 0;
  std::optional<Count> claim;
  std::size_t trace = 0;
  bool serial = false;
};

int cmd_crossover(const CrossoverArgs &a, const Shared &s, std::ostream &out) {
  CrossoverRequest req{ScalarFormula::parse(a.f), ScalarFormula::parse(a.g), a.lo, a.hi, a.claim, a.trace};
  const auto r = a.serial ? crossover_scan_serial(req) : crossover_scan(req);
  json trace = json::array();
  for (const auto &p : r.trace)
    trace.push_back({{"n", p.n}, {"f", p.f}, {"g", p.g}});
  auto opt = [](const std::optional<Count> &v) { return v ? json(*v) : json(nullptr); };
  if (s.json) {
    out << json{{"f", req.f.id()},
                {"g", req.g.id()},
                {"lo", r.lo},
                {"hi", r.hi},
                {"stabilization", opt(r.stabilization)},
                {"violations", r.violations},
                {"claimed_threshold", opt(r.claimed_threshold)},
                {"first_violation_above_claim", opt(r.first_violation_above_claim)},
                {"claim_holds", r.claim_holds()},
                {"trace", trace}}
               .dump()
        << '\n';
  } else {
    out << req.f.id() << " < " << req.g.id() << " on [" << r.lo << ", " << r.hi << "]: ";
    if (r.stabilization)
      out << "holds from n = " << *r.stabilization;
    else
      out << "fails at n = " << r.hi;
    out << " (" << r.violations << " violations)\n";
    if (r.claimed_threshold)
      out << "claim n >= " << *r.claimed_threshold << ": "
          << (r.claim_holds() ? std::string("holds")
                              : "fails at n = " + std::to_string(*r.first_violation_above_claim))
          << '\n';
    for (const auto &p : r.trace)
      out << "  " << p.n << ' ' << p.f << ' ' << p.g << '\n';
  }
  return r.claim_holds() ? kExitOk : kExitFail;
}

} // namespace

int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err) {
  CLI::App app{"Turan numbers of path-star forests: formulas, constructions, containment and an "
               "exhaustive oracle"};
  app.require_subcommand(1);
  Shared shared;

  FormulaArgs fa;
  auto *formula = app.add_subcommand("formula", "Closed-form Turan number");
  formula->add_option("--family", fa.family, "path | two-p5 | k-paths | k-stars | path-star")
      ->required()
      ->check(CLI::IsMember({"path", "two-p5", "k-paths", "k-stars", "path-star"}));
  formula->add_option("--n", fa.n, "Order of the host graph")->required()->check(CLI::Range(Count{1}, Count{1} << 40));
  formula->add_option("--k1", fa.k1, "Number of paths (k for k-paths and k-stars)");
  formula->add_option("--k2", fa.k2, "Number of stars");
  formula->add_option("--l", fa.l, "Path order (leaves for k-stars)");
  add_shared(formula, shared);

  std::string construction;
  auto *construct = app.add_subcommand("construct", "Build a named construction");
  construct->add_option("construction", construction, "g1:n,k,l | g2:n,k1,k2,L | g3:n,k | h:n,k,l,s")->required();
  add_shared(construct, shared);

  std::string graph;
  std::string forest;
  auto *check = app.add_subcommand("check-free", "Decide whether a graph contains a forest");
  auto *graph_opt = check->add_option("--graph", graph, "graph6, inline construction, or - for stdin");
  check->add_option("--construct", graph, "Inline construction (same as --graph)")->excludes(graph_opt);
  check->add_option("--forest", forest, "Forest spec, e.g. 2P5+S4")->required();
  add_shared(check, shared);

  OracleArgs oa;
  auto *oracle = app.add_subcommand("oracle", "Exact Turan number by exhaustive enumeration");
  oracle->add_option("--n", oa.n, "Order, 1..10")->required();
  oracle->add_option("--forest", oa.forest, "Forest spec")->required();
  oracle->add_option("--resume", oa.resume, "Checkpoint file; progress is appended and resumed");
  oracle->add_flag("--allow-long", oa.allow_long, "Permit the order-10 run");
  oracle->add_flag("--serial", oa.serial, "Use the single-threaded reference kernels");
  add_shared(oracle, shared);

  VerifyArgs va;
  auto *verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", va.suite, "Suite id or all");
  verify->add_option("--grid", va.grid, "Grid preset: default | quick");
  verify->add_option("--report", va.report, "Write the JSON report here");
  add_shared(verify, shared);

  CrossoverArgs ca;
  auto *crossover = app.add_subcommand("crossover", "Scan where f(n) < g(n) holds");
  crossover->add_option("--f", ca.f, "bracket_path:m,l | bracket_star:s | linear:a,b | const:c")->required();
  crossover->add_option("--g", ca.g, "Same forms as --f")->required();
  crossover->add_option("--lo", ca.lo, "First n")->required();
  crossover->add_option("--hi", ca.hi, "Last n")->required();
  crossover->add_option("--claim", ca.claim, "Threshold claimed for f < g");
  crossover->add_option("--trace", ca.trace, "Print values for the first N points");
  crossover->add_flag("--serial", ca.serial, "Use the single-threaded reference scan");
  add_shared(crossover, shared);

  const bool json_mode = std::find(args.begin(), args.end(), "--json") != args.end();
  auto usage = [&](const std::string &msg) {
    err << "error: " << msg << '\n';
    if (json_mode)
      out << json{{"error", msg}, {"exit", kExitUsage}}.dump() << '\n';
    return kExitUsage;
  };

  std::vector<char *> argv;
  std::vector<std::string> storage(args);
  for (auto &a : storage)
    argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError &e) {
    err << app.help();
    return usage(e.what());
  }

  if (shared.jobs > 0)
    omp_set_num_threads(shared.jobs);
  try {
    if (formula->parsed())
      return cmd_formula(fa, shared, out);
    if (construct->parsed())
      return cmd_construct(construction, shared, out);
    if (check->parsed())
      return cmd_check_free(graph, forest, shared, in, out);
    if (oracle->parsed())
      return cmd_oracle(oa, shared, out);
    if (verify->parsed())
      return cmd_verify(va, shared, out);
    return cmd_crossover(ca, shared, out);
  } catch (const std::invalid_argument &e) {
    // Bad parameters for a formula or construction are usage errors too.
    return usage(e.what());
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    if (json_mode)
      out << json{{"error", e.what()}, {"exit", kExitFail}}.dump() << '\n';
    return kExitFail;
  }
}

} // namespace pathstar::cli

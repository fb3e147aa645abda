#include "pathstar/crossover.hpp"

#include "pathstar/formulas.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <stdexcept>

namespace pathstar {

namespace {

std::vector<Count> parse_args(std::string_view text, std::size_t expected, std::string_view id) {
  std::vector<Count> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto piece = text.substr(0, comma);
    Count value = 0;
    const auto *end = piece.data() + piece.size();
    auto [ptr, ec] = std::from_chars(piece.data(), end, value);
    if (ec != std::errc{} || ptr != end)
      throw std::invalid_argument("bad number in formula id '" + std::string(id) + "'");
    out.push_back(value);
    if (comma == std::string_view::npos)
      break;
    text.remove_prefix(comma + 1);
  }
  if (out.size() != expected)
    throw std::invalid_argument("formula id '" + std::string(id) + "' expects " +
                                std::to_string(expected) + " arguments");
  return out;
}

} // namespace

ScalarFormula ScalarFormula::parse(std::string_view id) {
  const auto colon = id.find(':');
  if (colon == std::string_view::npos)
    throw std::invalid_argument("formula id needs the form name:args, got '" + std::string(id) + "'");
  const auto name = id.substr(0, colon);
  const auto args = id.substr(colon + 1);
  if (name == "bracket_path") {
    auto v = parse_args(args, 2, id);
    return bracket_path(v[0], v[1]);
  }
  if (name == "bracket_star")
    return bracket_star(parse_args(args, 1, id)[0]);
  if (name == "linear") {
    auto v = parse_args(args, 2, id);
    return linear(v[0], v[1]);
  }
  if (name == "const")
    return constant(parse_args(args, 1, id)[0]);
  throw std::invalid_argument("unknown formula '" + std::string(name) + "'");
}

ScalarFormula ScalarFormula::bracket_path(Count m, Count l) {
  if (!(m >= l && l >= 2))
    throw std::invalid_argument("bracket_path needs m >= l >= 2");
  ScalarFormula f;
  f.kind_ = Kind::BracketPath;
  f.a_ = m;
  f.b_ = l;
  return f;
}

ScalarFormula ScalarFormula::bracket_star(Count s) {
  if (s < 1)
    throw std::invalid_argument("bracket_star needs s >= 1");
  ScalarFormula f;
  f.kind_ = Kind::BracketStar;
  f.a_ = s;
  return f;
}

ScalarFormula ScalarFormula::linear(Count a, Count b) {
  ScalarFormula f;
  f.kind_ = Kind::Linear;
  f.a_ = a;
  f.b_ = b;
  return f;
}

ScalarFormula ScalarFormula::constant(Count c) {
  ScalarFormula f;
  f.kind_ = Kind::Constant;
  f.a_ = c;
  return f;
}

Count ScalarFormula::operator()(Count n) const {
  switch (kind_) {
  case Kind::BracketPath:
    return pathstar::bracket_path(n, a_, b_);
  case Kind::BracketStar:
    return pathstar::bracket_star(n, a_);
  case Kind::Linear:
    return a_ * n + b_;
  case Kind::Constant:
    return a_;
  }
  return 0;
}

Count ScalarFormula::domain_start() const {
  switch (kind_) {
  case Kind::BracketPath:
  case Kind::BracketStar:
    return a_;
  default:
    return std::numeric_limits<Count>::min();
  }
}

std::string ScalarFormula::id() const {
  switch (kind_) {
  case Kind::BracketPath:
    return "bracket_path:" + std::to_string(a_) + "," + std::to_string(b_);
  case Kind::BracketStar:
    return "bracket_star:" + std::to_string(a_);
  case Kind::Linear:
    return "linear:" + std::to_string(a_) + "," + std::to_string(b_);
  case Kind::Constant:
    return "const:" + std::to_string(a_);
  }
  return {};
}

namespace {

void validate(const CrossoverRequest &req) {
  if (req.lo > req.hi)
    throw std::invalid_argument("crossover range is empty");
  const Count start = std::max(req.f.domain_start(), req.g.domain_start());
  if (req.lo < start)
    throw std::invalid_argument("crossover range starts at " + std::to_string(req.lo) +
                                " but the formulas are defined from " + std::to_string(start));
}

CrossoverResult assemble(const CrossoverRequest &req, Count last_violation, Count violations,
                         Count first_above) {
  CrossoverResult res;
  res.lo = req.lo;
  res.hi = req.hi;
  res.violations = violations;
  res.claimed_threshold = req.claimed_threshold;
  if (last_violation < req.lo)
    res.stabilization = req.lo;
  else if (last_violation < req.hi)
    res.stabilization = last_violation + 1;
  if (first_above <= req.hi)
    res.first_violation_above_claim = first_above;
  const Count trace_end =
      std::min(req.hi, req.lo + static_cast<Count>(req.trace_limit) - 1);
  for (Count n = req.lo; req.trace_limit > 0 && n <= trace_end; ++n)
    res.trace.push_back({n, req.f(n), req.g(n)});
  return res;
}

} // namespace

CrossoverResult crossover_scan_serial(const CrossoverRequest &req) {
  validate(req);
  const Count claim = req.claimed_threshold.value_or(std::numeric_limits<Count>::max());
  Count last_violation = req.lo - 1;
  Count violations = 0;
  Count first_above = std::numeric_limits<Count>::max();
  for (Count n = req.lo; n <= req.hi; ++n) {
    if (req.f(n) < req.g(n))
      continue;
    ++violations;
    last_violation = n;
    if (n >= claim && first_above == std::numeric_limits<Count>::max())
      first_above = n;
  }
  return assemble(req, last_violation, violations, first_above);
}

CrossoverResult crossover_scan(const CrossoverRequest &req) {
  validate(req);
  const Count claim = req.claimed_threshold.value_or(std::numeric_limits<Count>::max());
  Count last_violation = req.lo - 1;
  Count violations = 0;
  Count first_above = std::numeric_limits<Count>::max();
  const Count lo = req.lo;
  const Count hi = req.hi;
#pragma omp parallel for schedule(static) reduction(max : last_violation)                  \
    reduction(+ : violations) reduction(min : first_above)
  for (Count n = lo; n <= hi; ++n) {
    if (req.f(n) < req.g(n))
      continue;
    ++violations;
    last_violation = std::max(last_violation, n);
    if (n >= claim)
      first_above = std::min(first_above, n);
  }
  return assemble(req, last_violation, violations, first_above);
}

} // namespace pathstar

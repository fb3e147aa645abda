#include "pathstar/constructions.hpp"

#include <charconv>
#include <stdexcept>

namespace pathstar {

using Expr = ConstructionExpr;

Count exact_div(Count numerator, Count denominator, const char *what) {
  if (denominator == 0 || numerator % denominator != 0)
    throw std::logic_error(std::string("inexact division in ") + what);
  return numerator / denominator;
}

Decomposition decompose(Count remaining, int l) {
  if (l < 2)
    throw std::invalid_argument("path order must be at least 2");
  if (remaining < 0)
    throw std::invalid_argument("cannot decompose a negative vertex count");
  return {remaining / (l - 1), remaining % (l - 1)};
}

std::string to_string(ExtremalName name) {
  switch (name) {
  case ExtremalName::G1:
    return "G1";
  case ExtremalName::G2:
    return "G2";
  case ExtremalName::G3:
    return "G3";
  case ExtremalName::H:
    return "H";
  case ExtremalName::ErdosGallai:
    return "ERDOS_GALLAI";
  case ExtremalName::FaudreeCliques:
    return "FAUDREE_CLIQUES";
  case ExtremalName::FaudreeSFamily:
    return "FAUDREE_S_FAMILY";
  case ExtremalName::K9PlusExP5:
    return "K9_PLUS_EX_P5";
  }
  return "?";
}

std::string ExtremalDescriptor::label() const {
  std::string out = to_string(name) + "(";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i)
      out += ',';
    out += std::to_string(params[i]);
  }
  return out + ")";
}

ExtremalDescriptor g1(Count n, Count k, int l) {
  if (l < 2)
    throw std::invalid_argument("g1: path order must be at least 2");
  if (k < 0 || k >= n)
    throw std::invalid_argument("g1: need 0 <= k < n");
  const auto [d, r] = decompose(n - k, l);
  auto inner = Expr::disjoint_union({Expr::copies(d, Expr::complete(l - 1)), Expr::complete(r)});
  return {ExtremalName::G1, {n, k, l}, Expr::join(Expr::complete(k), std::move(inner))};
}

ExtremalDescriptor g2(Count n, Count k1, Count k2, int path_order) {
  if (path_order < 2 || path_order % 2 != 0)
    throw std::invalid_argument("g2: path order must be even and at least 2");
  if (k1 < 0 || k2 < 0)
    throw std::invalid_argument("g2: k1, k2 must be nonnegative");
  const Count half = path_order / 2;
  const Count core = half * k1 + k2 - 1;
  if (core < 1)
    throw std::invalid_argument("g2: dominating clique would be empty");
  if (n <= core)
    throw std::invalid_argument("g2: need n > l*k1 + k2 - 1");
  return {ExtremalName::G2,
          {n, k1, k2, path_order},
          Expr::join(Expr::complete(core), Expr::empty(n - core))};
}

ExtremalDescriptor g3(Count n, Count k) {
  if (k < 0 || n < k + 6)
    throw std::invalid_argument("g3: need k >= 0 and n >= k + 6");
  return {ExtremalName::G3,
          {n, k},
          Expr::join(Expr::complete(k + 3),
                     Expr::disjoint_union({Expr::complete(2), Expr::empty(n - k - 5)}))};
}

ExtremalDescriptor h_family(Count n, Count k, int l, Count s) {
  if (l < 4 || l % 2 != 0)
    throw std::invalid_argument("h_family: l must be even and at least 4");
  if (k < 0 || k >= n)
    throw std::invalid_argument("h_family: need 0 <= k < n");
  const auto [d, r] = decompose(n - k, l);
  if (s < 0 || s > d - 1)
    throw std::invalid_argument("h_family: need 0 <= s <= d-1");
  auto tail = Expr::join(Expr::complete((l - 2) / 2), Expr::empty(l / 2 + s * (l - 1) + r));
  auto inner = Expr::disjoint_union({Expr::copies(d - s - 1, Expr::complete(l - 1)), std::move(tail)});
  return {ExtremalName::H, {n, k, l, s}, Expr::join(Expr::complete(k), std::move(inner))};
}

ExtremalDescriptor clique_decomposition(Count n, Count m, int l) {
  if (!(n >= m && m >= l && l >= 2))
    throw std::invalid_argument("clique_decomposition: need n >= m >= l >= 2");
  const auto [d, r] = decompose(n - (m - 1), l);
  return {ExtremalName::FaudreeCliques,
          {n, m, l},
          Expr::disjoint_union({Expr::complete(m - 1), Expr::copies(d, Expr::complete(l - 1)),
                                Expr::complete(r)})};
}

ExtremalDescriptor k9_plus_ex_p5(Count n) {
  if (n < 10)
    throw std::invalid_argument("k9_plus_ex_p5: need n >= 10");
  const auto [d, r] = decompose(n - 9, 5);
  return {ExtremalName::K9PlusExP5,
          {n},
          Expr::disjoint_union(
              {Expr::complete(9), Expr::copies(d, Expr::complete(4)), Expr::complete(r)})};
}

std::vector<ExtremalDescriptor> faudree_extremal_set(Count n, int l) {
  if (l < 2)
    throw std::invalid_argument("faudree_extremal_set: path order must be at least 2");
  if (n < 1)
    throw std::invalid_argument("faudree_extremal_set: need n >= 1");
  const auto [d, r] = decompose(n, l);
  std::vector<ExtremalDescriptor> out;
  out.push_back({r == 0 ? ExtremalName::ErdosGallai : ExtremalName::FaudreeCliques,
                 {n, l},
                 Expr::disjoint_union({Expr::copies(d, Expr::complete(l - 1)), Expr::complete(r)})});
  if (l % 2 == 0 && (r == l / 2 || r == (l - 2) / 2)) {
    for (Count s = 0; s < d; ++s) {
      auto tail = Expr::join(Expr::complete((l - 2) / 2), Expr::empty(l / 2 + s * (l - 1) + r));
      out.push_back({ExtremalName::FaudreeSFamily,
                     {n, l, s},
                     Expr::disjoint_union(
                         {Expr::copies(d - s - 1, Expr::complete(l - 1)), std::move(tail)})});
    }
  }
  return out;
}

Count edge_formula(const ExtremalDescriptor &desc) {
  const auto &p = desc.params;
  switch (desc.name) {
  case ExtremalName::G1: {
    const Count n = p[0], k = p[1], l = p[2];
    const Count r = (n - k) % (l - 1);
    // (k + l/2 - 1)n - (k^2 + (l-1)(k+r) - r^2)/2, doubled to stay integral.
    const Count twice = (2 * k + l - 2) * n - (k * k + (l - 1) * (k + r) - r * r);
    return exact_div(twice, 2, "G1 edge formula");
  }
  case ExtremalName::G2: {
    const Count n = p[0], k1 = p[1], k2 = p[2], half = p[3] / 2;
    const Count a = half * k1 + k2;
    return (a - 1) * n - exact_div(a * (a - 1), 2, "G2 edge formula");
  }
  case ExtremalName::G3: {
    const Count n = p[0], k = p[1];
    return (k + 3) * n - exact_div(k * k + 7 * k + 10, 2, "G3 edge formula");
  }
  default:
    throw NoClosedFormError("no closed-form edge count for " + desc.label());
  }
}

} // namespace pathstar

namespace pathstar {

ExtremalDescriptor parse_construction(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw std::invalid_argument("construction needs the form name:args");
  const auto name = text.substr(0, colon);
  std::vector<Count> args;
  auto rest = text.substr(colon + 1);
  while (true) {
    const auto comma = rest.find(',');
    const auto piece = rest.substr(0, comma);
    Count v = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
    if (piece.empty() || ec != std::errc{} || ptr != piece.data() + piece.size())
      throw std::invalid_argument("bad number '" + std::string(piece) + "' in construction");
    args.push_back(v);
    if (comma == std::string_view::npos)
      break;
    rest.remove_prefix(comma + 1);
  }
  auto want = [&](std::size_t count) {
    if (args.size() != count)
      throw std::invalid_argument(std::string(name) + " takes " + std::to_string(count) + " arguments");
  };
  auto small = [](Count v) {
    if (v < 0 || v > 1'000'000)
      throw std::invalid_argument("construction parameter out of range");
    return static_cast<int>(v);
  };
  if (name == "g1") {
    want(3);
    return g1(args[0], args[1], small(args[2]));
  }
  if (name == "g2") {
    want(4);
    return g2(args[0], args[1], args[2], small(args[3]));
  }
  if (name == "g3") {
    want(2);
    return g3(args[0], args[1]);
  }
  if (name == "h") {
    want(4);
    return h_family(args[0], args[1], small(args[2]), args[3]);
  }
  throw std::invalid_argument("unknown construction '" + std::string(name) + "'");
}

} // namespace pathstar

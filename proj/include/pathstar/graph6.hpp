#pragma once

#include "pathstar/graph.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace pathstar {

struct Graph6Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Decoding refuses larger orders; the dense representation would not fit.
inline constexpr int kMaxGraph6Order = 8192;

/// Standard graph6 line (no trailing newline, no ">>graph6<<" header).
std::string graph6_encode(const Graph &g);

/// Parses one graph6 line. An optional ">>graph6<<" header and trailing
/// whitespace are accepted. Throws Graph6Error on malformed input.
Graph graph6_decode(std::string_view line);

} // namespace pathstar

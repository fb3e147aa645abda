#include "pathstar/graph6.hpp"

#include <cstdint>

namespace pathstar {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

void put_size(std::string &out, std::uint64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.append("~~");
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
}

int sextet(char c, std::size_t pos) {
  if (c < 63 || c > 126)
    throw Graph6Error("invalid graph6 character at position " + std::to_string(pos));
  return c - 63;
}

} // namespace

std::string graph6_encode(const Graph &g) {
  const int n = g.order();
  std::string out;
  put_size(out, static_cast<std::uint64_t>(n));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0)
    out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

Graph graph6_decode(std::string_view line) {
  if (line.starts_with(kHeader))
    line.remove_prefix(kHeader.size());
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r' ||
                           line.back() == ' ' || line.back() == '\t'))
    line.remove_suffix(1);
  if (line.empty())
    throw Graph6Error("empty graph6 string");

  std::size_t pos = 0;
  std::uint64_t n = 0;
  if (line[0] != '~') {
    n = static_cast<std::uint64_t>(sextet(line[0], 0));
    pos = 1;
  } else if (line.size() >= 2 && line[1] == '~') {
    if (line.size() < 8)
      throw Graph6Error("truncated graph6 size field");
    for (pos = 2; pos < 8; ++pos)
      n = (n << 6) | static_cast<std::uint64_t>(sextet(line[pos], pos));
  } else {
    if (line.size() < 4)
      throw Graph6Error("truncated graph6 size field");
    for (pos = 1; pos < 4; ++pos)
      n = (n << 6) | static_cast<std::uint64_t>(sextet(line[pos], pos));
  }
  if (n > static_cast<std::uint64_t>(kMaxGraph6Order))
    throw Graph6Error("graph6 order " + std::to_string(n) + " too large");

  const std::uint64_t bits = n * (n - (n ? 1 : 0)) / 2;
  const std::uint64_t expected = (bits + 5) / 6;
  if (line.size() - pos != expected)
    throw Graph6Error("graph6 length mismatch: expected " + std::to_string(expected) +
                      " data characters, found " + std::to_string(line.size() - pos));

  GraphBuilder b(static_cast<int>(n));
  std::uint64_t k = 0;
  for (int j = 1; j < static_cast<int>(n); ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const auto c = line[pos + k / 6];
      const int value = sextet(c, pos + k / 6);
      if ((value >> (5 - k % 6)) & 1)
        b.add_edge(i, j);
    }
  }
  // Padding bits must be zero.
  if (bits % 6 != 0) {
    const int tail = sextet(line.back(), line.size() - 1);
    if (tail & ((1 << (6 - bits % 6)) - 1))
      throw Graph6Error("nonzero padding bits in graph6 string");
  }
  return std::move(b).finish();
}

} // namespace pathstar

#pragma once

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hypereig/error.hpp"
#include "hypereig/hypergraph.hpp"

namespace hypereig {

// Text format:
//   # comment lines anywhere, blank lines ignored
//   n r m
//   m lines of r whitespace-separated 0-based vertex ids

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::size_t parse_count(std::string_view tok, std::size_t line, const char* what) {
  std::size_t v = 0;
  const auto* end = tok.data() + tok.size();
  auto [p, ec] = std::from_chars(tok.data(), end, v);
  if (ec != std::errc() || p != end) {
    throw ParseError(line, std::string("expected a non-negative integer for ") + what + ", got '" +
                               std::string(tok) + "'");
  }
  return v;
}

}  // namespace detail

inline Hypergraph read_hypergraph(std::istream& in) {
  std::string raw;
  std::size_t lineno = 0;
  bool have_header = false;
  std::size_t n = 0, r = 0, m = 0;
  std::vector<Edge> edges;
  std::map<Edge, std::size_t> first_seen;

  while (std::getline(in, raw)) {
    ++lineno;
    const auto toks = detail::split_ws(raw);
    if (toks.empty() || toks.front().front() == '#') continue;

    if (!have_header) {
      if (toks.size() != 3) throw ParseError(lineno, "header must be 'n r m'");
      n = detail::parse_count(toks[0], lineno, "n");
      r = detail::parse_count(toks[1], lineno, "r");
      m = detail::parse_count(toks[2], lineno, "m");
      if (n < 1) throw ParseError(lineno, "n must be at least 1");
      if (r < 2) throw ParseError(lineno, "r must be at least 2");
      have_header = true;
      continue;
    }

    if (edges.size() == m) throw ParseError(lineno, "more edge lines than m=" + std::to_string(m));
    if (toks.size() != r) {
      throw ParseError(lineno, "edge has " + std::to_string(toks.size()) + " vertices, expected r=" +
                                   std::to_string(r));
    }
    Edge e;
    e.reserve(r);
    for (auto tok : toks) {
      const std::size_t v = detail::parse_count(tok, lineno, "vertex id");
      if (v >= n) {
        throw ParseError(lineno, "vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n));
      }
      e.push_back(static_cast<Vertex>(v));
    }
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
      throw ParseError(lineno, "edge repeats a vertex");
    }
    if (auto [it, fresh] = first_seen.emplace(e, lineno); !fresh) {
      throw ParseError(lineno, "duplicate of the edge on line " + std::to_string(it->second));
    }
    edges.push_back(std::move(e));
  }
  if (!have_header) throw ParseError(lineno + 1, "missing 'n r m' header");
  if (edges.size() != m) {
    throw ParseError(lineno + 1, "expected " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }
  return Hypergraph::build(n, r, std::move(edges));
}

inline Hypergraph parse_hypergraph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_hypergraph(in);
}

/// Canonical form; `comment` (if any) is written as a leading '#' line.
inline void write_hypergraph(std::ostream& out, const Hypergraph& h, std::string_view comment = {}) {
  if (!comment.empty()) out << "# " << comment << '\n';
  out << h.num_vertices() << ' ' << h.rank() << ' ' << h.num_edges() << '\n';
  for (const Edge& e : h.edges()) {
    for (std::size_t k = 0; k < e.size(); ++k) out << (k ? " " : "") << e[k];
    out << '\n';
  }
}

inline std::string serialize_hypergraph(const Hypergraph& h) {
  std::ostringstream out;
  write_hypergraph(out, h);
  return out.str();
}

}  // namespace hypereig

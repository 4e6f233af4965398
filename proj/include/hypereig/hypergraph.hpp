#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hypereig/error.hpp"

namespace hypereig {

using Vertex = std::uint32_t;
using Edge = std::vector<Vertex>;  // strictly increasing, size == rank

inline constexpr std::size_t unreachable = std::numeric_limits<std::size_t>::max();

/**
 * An r-uniform hypergraph on vertices 0..n-1.
 *
 * Values are immutable once built. Edges are kept in canonical form: each
 * edge sorted ascending, the edge list sorted lexicographically. Two
 * hypergraphs built from the same edge sets in any order compare equal.
 */
class Hypergraph {
 public:
  /// Validates and canonicalizes. Throws Error with EdgeWrongSize,
  /// VertexOutOfRange, DuplicateEdge or InvalidParameters.
  static Hypergraph build(std::size_t n, std::size_t r, std::vector<Edge> edges) {
    if (n < 1) throw Error(Errc::InvalidParameters, "vertex count must be at least 1");
    if (r < 2) throw Error(Errc::InvalidParameters, "edge size r must be at least 2");
    for (std::size_t i = 0; i < edges.size(); ++i) {
      Edge& e = edges[i];
      for (Vertex v : e) {
        if (v >= n) {
          throw Error(Errc::VertexOutOfRange, "edge " + std::to_string(i) + " has vertex " +
                                                  std::to_string(v) + " >= n=" + std::to_string(n));
        }
      }
      std::sort(e.begin(), e.end());
      if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
        throw Error(Errc::EdgeWrongSize,
                    "edge " + std::to_string(i) + " repeats a vertex");
      }
      if (e.size() != r) {
        throw Error(Errc::EdgeWrongSize, "edge " + std::to_string(i) + " has " +
                                             std::to_string(e.size()) + " vertices, expected " +
                                             std::to_string(r));
      }
    }
    std::sort(edges.begin(), edges.end());
    if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
      std::string s;
      for (Vertex v : *dup) s += (s.empty() ? "" : ",") + std::to_string(v);
      throw Error(Errc::DuplicateEdge, "edge {" + s + "} appears twice");
    }
    return Hypergraph(n, r, std::move(edges));
  }

  std::size_t num_vertices() const noexcept { return n_; }
  std::size_t rank() const noexcept { return r_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_.at(i); }

  /// Indices of the edges containing v, ascending.
  std::span<const std::size_t> incident(Vertex v) const {
    return {incidence_.at(v).data(), incidence_[v].size()};
  }
  std::size_t degree(Vertex v) const { return incidence_.at(v).size(); }

  bool contains(std::size_t e, Vertex v) const {
    return std::binary_search(edges_.at(e).begin(), edges_[e].end(), v);
  }

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.n_ == b.n_ && a.r_ == b.r_ && a.edges_ == b.edges_;
  }

 private:
  Hypergraph(std::size_t n, std::size_t r, std::vector<Edge> edges)
      : n_(n), r_(r), edges_(std::move(edges)), incidence_(n) {
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      for (Vertex v : edges_[i]) incidence_[v].push_back(i);
    }
  }

  std::size_t n_;
  std::size_t r_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> incidence_;
};

/// 2-section of a hypergraph: u ~ v iff some edge contains both. Edge
/// multiplicities are dropped since they do not affect distances.
struct ShadowGraph {
  std::size_t n = 0;
  std::vector<std::vector<Vertex>> adjacency;  // sorted, no duplicates
};

inline std::vector<std::size_t> degrees(const Hypergraph& h) {
  std::vector<std::size_t> d(h.num_vertices());
  for (std::size_t v = 0; v < d.size(); ++v) d[v] = h.degree(static_cast<Vertex>(v));
  return d;
}

inline std::size_t max_degree(const Hypergraph& h) {
  auto d = degrees(h);
  return *std::max_element(d.begin(), d.end());
}

inline std::size_t min_degree(const Hypergraph& h) {
  auto d = degrees(h);
  return *std::min_element(d.begin(), d.end());
}

/// True iff every pair of edges shares at most one vertex.
inline bool is_linear(const Hypergraph& h) {
  // Two edges share two vertices iff some vertex pair is covered twice.
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (const Edge& e : h.edges()) {
    for (std::size_t a = 0; a < e.size(); ++a) {
      for (std::size_t b = a + 1; b < e.size(); ++b) pairs.emplace_back(e[a], e[b]);
    }
  }
  std::sort(pairs.begin(), pairs.end());
  return std::adjacent_find(pairs.begin(), pairs.end()) == pairs.end();
}

inline ShadowGraph shadow(const Hypergraph& h) {
  ShadowGraph g;
  g.n = h.num_vertices();
  g.adjacency.resize(g.n);
  for (const Edge& e : h.edges()) {
    for (Vertex u : e) {
      for (Vertex v : e) {
        if (u != v) g.adjacency[u].push_back(v);
      }
    }
  }
  for (auto& nb : g.adjacency) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
  return g;
}

/// BFS distances from `source` on the shadow graph; `unreachable` marks
/// vertices in other components.
inline std::vector<std::size_t> distances_from(const ShadowGraph& g, Vertex source) {
  if (source >= g.n) throw Error(Errc::VertexOutOfRange, "source " + std::to_string(source));
  std::vector<std::size_t> dist(g.n, unreachable);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.adjacency[u]) {
      if (dist[w] == unreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

/// All-pairs distance table, row per source vertex.
inline std::vector<std::vector<std::size_t>> all_distances(const Hypergraph& h) {
  const ShadowGraph g = shadow(h);
  std::vector<std::vector<std::size_t>> table;
  table.reserve(g.n);
  for (std::size_t v = 0; v < g.n; ++v) table.push_back(distances_from(g, static_cast<Vertex>(v)));
  return table;
}

/// Shortest path length in edges; nullopt when u and v are disconnected.
inline std::optional<std::size_t> distance(const Hypergraph& h, Vertex u, Vertex v) {
  if (u >= h.num_vertices() || v >= h.num_vertices()) {
    throw Error(Errc::VertexOutOfRange, "distance query (" + std::to_string(u) + ", " +
                                            std::to_string(v) + ")");
  }
  const std::size_t d = distances_from(shadow(h), u)[v];
  if (d == unreachable) return std::nullopt;
  return d;
}

inline bool is_connected(const Hypergraph& h) {
  const auto dist = distances_from(shadow(h), 0);
  return std::none_of(dist.begin(), dist.end(), [](std::size_t d) { return d == unreachable; });
}

/// Throws DisconnectedInput when h is disconnected.
inline std::size_t diameter(const Hypergraph& h) {
  std::size_t diam = 0;
  for (const auto& row : all_distances(h)) {
    for (std::size_t d : row) {
      if (d == unreachable) throw Error(Errc::DisconnectedInput, "diameter of a disconnected hypergraph");
      diam = std::max(diam, d);
    }
  }
  return diam;
}

/// A connected component relabeled to 0..k-1. `vertices[i]` is the original
/// id of local vertex i (ascending).
struct Component {
  Hypergraph graph;
  std::vector<Vertex> vertices;
};

/// Components ordered by smallest original vertex id. Isolated vertices come
/// back as edgeless singletons.
inline std::vector<Component> components(const Hypergraph& h) {
  const ShadowGraph g = shadow(h);
  const std::size_t n = h.num_vertices();
  std::vector<std::size_t> label(n, unreachable);
  std::vector<std::vector<Vertex>> members;
  for (std::size_t s = 0; s < n; ++s) {
    if (label[s] != unreachable) continue;
    const auto dist = distances_from(g, static_cast<Vertex>(s));
    std::vector<Vertex> comp;
    for (std::size_t v = 0; v < n; ++v) {
      if (dist[v] != unreachable) {
        label[v] = members.size();
        comp.push_back(static_cast<Vertex>(v));
      }
    }
    members.push_back(std::move(comp));
  }

  std::vector<Vertex> local(n);
  for (const auto& comp : members) {
    for (std::size_t i = 0; i < comp.size(); ++i) local[comp[i]] = static_cast<Vertex>(i);
  }
  std::vector<std::vector<Edge>> comp_edges(members.size());
  for (const Edge& e : h.edges()) {
    Edge mapped;
    mapped.reserve(e.size());
    for (Vertex v : e) mapped.push_back(local[v]);
    comp_edges[label[e.front()]].push_back(std::move(mapped));
  }

  std::vector<Component> out;
  out.reserve(members.size());
  for (std::size_t c = 0; c < members.size(); ++c) {
    out.push_back(Component{Hypergraph::build(members[c].size(), h.rank(), std::move(comp_edges[c])),
                            std::move(members[c])});
  }
  return out;
}

/// Same vertex set, edge i removed. The result may be disconnected.
inline Hypergraph delete_edge(const Hypergraph& h, std::size_t i) {
  if (i >= h.num_edges()) {
    throw Error(Errc::EdgeIndexOutOfRange,
                "edge index " + std::to_string(i) + " >= " + std::to_string(h.num_edges()));
  }
  std::vector<Edge> rest;
  rest.reserve(h.num_edges() - 1);
  for (std::size_t j = 0; j < h.num_edges(); ++j) {
    if (j != i) rest.push_back(h.edge(j));
  }
  return Hypergraph::build(h.num_vertices(), h.rank(), std::move(rest));
}

}  // namespace hypereig

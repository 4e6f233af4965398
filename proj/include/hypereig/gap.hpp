#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hypereig/error.hpp"
#include "hypereig/hypergraph.hpp"
#include "hypereig/spectral.hpp"

namespace hypereig {

inline constexpr double gap_tolerance = 1e-8;

struct GapBound {
  double bound;              // min of the two terms
  double term_connected;     // r / (n rho^{r(r-1)(D+1)})
  double term_disconnected;  // 1 / (n rho^{rD} (rho^{r-1} + r - 1))
};

/// Lower bound on rho(H) - rho(H') for any proper sub-hypergraph H' of a
/// connected H with n vertices, diameter D and spectral radius rho.
inline GapBound gap_lower_bound(std::size_t n, std::size_t r, std::size_t diam, double rho) {
  if (r < 2 || n < r || !(rho >= 1.0 - 1e-9) || !std::isfinite(rho)) {
    throw Error(Errc::InvalidParameters, "need n >= r >= 2 and rho >= 1");
  }
  const double nd = static_cast<double>(n);
  const double rd = static_cast<double>(r);
  const double dd = static_cast<double>(diam);
  GapBound g;
  g.term_connected = rd / (nd * std::pow(rho, rd * (rd - 1.0) * (dd + 1.0)));
  g.term_disconnected = 1.0 / (nd * std::pow(rho, rd * dd) * (std::pow(rho, rd - 1.0) + rd - 1.0));
  g.bound = std::min(g.term_connected, g.term_disconnected);
  return g;
}

/// Spectral radius of a possibly disconnected hypergraph: the max over its
/// components. Edgeless components contribute 0.
inline double spectral_radius_general(const Hypergraph& h, const IterationOptions& opts = {}) {
  double rho = 0.0;
  for (const Component& c : components(h)) {
    if (c.graph.num_edges() == 0) continue;
    IterationOptions local = opts;
    local.initial.reset();
    local.observer = nullptr;
    rho = std::max(rho, power_iteration(c.graph, local).rho);
  }
  return rho;
}

struct DiameterLemmaCheck {
  std::size_t diameter_after = 0;
  std::size_t diameter_limit = 0;  // r(D+1)
  bool diameter_ok = false;
  std::size_t distance_sum = 0;    // max_w sum_{v in e} d_{H-e}(w, v)
  Vertex distance_sum_vertex = 0;  // the maximizing w
  std::size_t distance_sum_limit = 0;  // r(r-1)(D+1)
  bool distance_sum_ok = false;
};

/// Diameter and distance-sum checks for H - e. nullopt when H - e is
/// disconnected, where neither statement applies.
inline std::optional<DiameterLemmaCheck> check_diameter_lemmas(const Hypergraph& h, std::size_t e_index) {
  if (e_index >= h.num_edges()) {
    throw Error(Errc::EdgeIndexOutOfRange, "edge index " + std::to_string(e_index));
  }
  const std::size_t diam = diameter(h);  // throws DisconnectedInput
  const Hypergraph rest = delete_edge(h, e_index);
  const auto dist = all_distances(rest);
  const std::size_t r = h.rank();

  DiameterLemmaCheck c;
  for (const auto& row : dist) {
    for (std::size_t d : row) {
      if (d == unreachable) return std::nullopt;
      c.diameter_after = std::max(c.diameter_after, d);
    }
  }
  const Edge& removed = h.edge(e_index);
  for (std::size_t w = 0; w < dist.size(); ++w) {
    std::size_t sum = 0;
    for (Vertex v : removed) sum += dist[w][v];
    if (sum > c.distance_sum) {
      c.distance_sum = sum;
      c.distance_sum_vertex = static_cast<Vertex>(w);
    }
  }
  c.diameter_limit = r * (diam + 1);
  c.distance_sum_limit = r * (r - 1) * (diam + 1);
  c.diameter_ok = c.diameter_after <= c.diameter_limit;
  c.distance_sum_ok = c.distance_sum <= c.distance_sum_limit;
  return c;
}

struct EdgeDeletionRecord {
  std::size_t edge_index = 0;
  Edge edge;
  double rho_sub = 0.0;
  bool connected_after = false;
  std::size_t component_count = 0;
  double gap = 0.0;
  GapBound bound{};
  double slack = 0.0;  // gap - bound
  bool pass = false;
  std::optional<DiameterLemmaCheck> lemmas;
};

struct GapReport {
  std::size_t n = 0;
  std::size_t r = 0;
  std::size_t diameter = 0;
  double rho = 0.0;
  std::vector<EdgeDeletionRecord> records;  // edge-index order
  std::size_t connected_deletions = 0;
  std::size_t disconnected_deletions = 0;
  bool pass = false;
};

/**
 * Compares rho(H) - rho(H - e) with gap_lower_bound for every edge e.
 *
 * Every proper sub-hypergraph sits inside some H - e, so single-edge
 * deletions are the binding cases. D is the diameter of the original H.
 * Pass `rho` to reuse an already converged spectral radius of H.
 */
inline GapReport audit_edge_deletions(const Hypergraph& h, const IterationOptions& opts = {},
                                      std::optional<double> rho = std::nullopt) {
  if (!is_connected(h)) throw Error(Errc::DisconnectedInput, "gap audit needs a connected hypergraph");
  GapReport rep;
  rep.n = h.num_vertices();
  rep.r = h.rank();
  rep.diameter = diameter(h);
  rep.rho = rho ? *rho : power_iteration(h, opts).rho;
  const GapBound bound = gap_lower_bound(rep.n, rep.r, rep.diameter, rep.rho);

  rep.pass = true;
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    EdgeDeletionRecord rec;
    rec.edge_index = i;
    rec.edge = h.edge(i);
    const Hypergraph rest = delete_edge(h, i);
    rec.component_count = components(rest).size();
    rec.connected_after = rec.component_count == 1;
    rec.rho_sub = spectral_radius_general(rest, opts);
    rec.gap = rep.rho - rec.rho_sub;
    rec.bound = bound;
    rec.slack = rec.gap - bound.bound;
    rec.pass = rec.slack >= -gap_tolerance;
    if (rec.connected_after) {
      rec.lemmas = check_diameter_lemmas(h, i);
      ++rep.connected_deletions;
    } else {
      ++rep.disconnected_deletions;
    }
    const bool lemmas_ok = !rec.lemmas || (rec.lemmas->diameter_ok && rec.lemmas->distance_sum_ok);
    rep.pass = rep.pass && rec.pass && lemmas_ok;
    rep.records.push_back(std::move(rec));
  }
  return rep;
}

}  // namespace hypereig

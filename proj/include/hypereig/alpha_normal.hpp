#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <deque>
#include <limits>
#include <string>
#include <vector>

#include "hypereig/error.hpp"
#include "hypereig/hypergraph.hpp"
#include "hypereig/spectral.hpp"

namespace hypereig {

/// Weighted incidence matrix B together with its edge constant alpha.
/// `weights[e][k]` is B(edges[e][k], e); every other entry is zero.
struct WeightedIncidence {
  double alpha = 0.0;
  std::vector<std::vector<double>> weights;

  double at(const Hypergraph& h, Vertex v, std::size_t e) const {
    const Edge& edge = h.edge(e);
    auto it = std::lower_bound(edge.begin(), edge.end(), v);
    if (it == edge.end() || *it != v) return 0.0;
    return weights[e][static_cast<std::size_t>(it - edge.begin())];
  }
};

// Largest residual (relative to max(1, rho)) accepted by build_incidence.
inline constexpr double incidence_residual_limit = 1e-8;

/**
 * Consistently alpha-normal B realized from the Perron pair:
 * B(v, e) = x^e / (rho x_v^r), alpha = rho^{-r}.
 *
 * Row sums are sum_{e ni v} x^e / (rho x_v^r) = (A x)_v / (rho x_v^{r-1}),
 * which is 1 exactly at an eigenpair. Edge products are rho^{-r} by algebra.
 */
inline WeightedIncidence build_incidence(const Hypergraph& h, const SpectralResult& s) {
  detail::check_dimension(h, s.x.size());
  if (!(s.rho > 0.0) || s.residual_inf > incidence_residual_limit * std::max(1.0, s.rho)) {
    throw Error(Errc::NotConverged, "eigenpair residual " + std::to_string(s.residual_inf) +
                                        " too large to build the incidence matrix");
  }
  const std::size_t r = h.rank();
  WeightedIncidence b;
  b.alpha = std::pow(s.rho, -static_cast<double>(r));
  b.weights.reserve(h.num_edges());
  for (const Edge& e : h.edges()) {
    const double xe = edge_product(e, s.x);
    std::vector<double> row;
    row.reserve(e.size());
    for (Vertex v : e) row.push_back(xe / (s.rho * detail::ipow(s.x[v], r)));
    b.weights.push_back(std::move(row));
  }
  return b;
}

enum class IdentityKind { RowSum, EdgeProduct, WithinEdgeSpread, Alpha };

constexpr const char* to_string(IdentityKind k) noexcept {
  switch (k) {
    case IdentityKind::RowSum: return "row_sum";
    case IdentityKind::EdgeProduct: return "edge_product";
    case IdentityKind::WithinEdgeSpread: return "within_edge_spread";
    case IdentityKind::Alpha: return "alpha";
  }
  return "unknown";
}

/// One identity that exceeded tolerance. `index` is a vertex for RowSum, an
/// edge index for EdgeProduct and WithinEdgeSpread, and 0 for Alpha.
struct IdentityViolation {
  IdentityKind kind;
  std::size_t index;
  double deviation;
};

struct AlphaNormalReport {
  double row_sum_deviation = 0.0;  // max_v |sum_e B(v,e) - 1|
  Vertex row_sum_vertex = 0;
  double edge_product_deviation = 0.0;  // max_e |prod_v B(v,e) rho^r - 1|
  std::size_t edge_product_edge = 0;
  double spread_deviation = 0.0;  // max_e relative spread of B(v,e)^{1/r} x_v
  std::size_t spread_edge = 0;
  double alpha_deviation = 0.0;  // |alpha rho^r - 1|
  double tolerance = 0.0;
  std::vector<IdentityViolation> violations;
  bool pass = false;
};

/// Identity tolerance: never looser than 1e-8, never tighter than the
/// eigenpair supports (20 residual / rho), floored at 1e-9.
inline double identity_tolerance(const SpectralResult& s) {
  return std::min(1e-8, std::max(1e-9, 20.0 * s.residual_inf / s.rho));
}

inline AlphaNormalReport verify_alpha_normal(const WeightedIncidence& b, const Hypergraph& h,
                                             const SpectralResult& s) {
  detail::check_dimension(h, s.x.size());
  if (b.weights.size() != h.num_edges()) {
    throw Error(Errc::DimensionMismatch, "incidence has " + std::to_string(b.weights.size()) +
                                             " edges, hypergraph " + std::to_string(h.num_edges()));
  }
  const std::size_t r = h.rank();
  const double rho_r = detail::ipow(s.rho, r);
  const double inv_r = 1.0 / static_cast<double>(r);

  AlphaNormalReport rep;
  rep.tolerance = identity_tolerance(s);

  std::vector<double> row(h.num_vertices(), 0.0);
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    const Edge& edge = h.edge(e);
    if (b.weights[e].size() != edge.size()) {
      throw Error(Errc::DimensionMismatch, "incidence row for edge " + std::to_string(e));
    }
    double prod = 1.0;
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (std::size_t k = 0; k < edge.size(); ++k) {
      const double w = b.weights[e][k];
      row[edge[k]] += w;
      prod *= w;
      const double scaled = std::pow(w, inv_r) * s.x[edge[k]];
      lo = std::min(lo, scaled);
      hi = std::max(hi, scaled);
    }
    const double pdev = std::abs(prod * rho_r - 1.0);
    if (pdev > rep.edge_product_deviation) {
      rep.edge_product_deviation = pdev;
      rep.edge_product_edge = e;
    }
    if (!(pdev <= rep.tolerance)) rep.violations.push_back({IdentityKind::EdgeProduct, e, pdev});

    const double spread = (hi - lo) / hi;
    if (spread > rep.spread_deviation) {
      rep.spread_deviation = spread;
      rep.spread_edge = e;
    }
    if (!(spread <= rep.tolerance)) rep.violations.push_back({IdentityKind::WithinEdgeSpread, e, spread});
  }
  for (std::size_t v = 0; v < row.size(); ++v) {
    const double dev = std::abs(row[v] - 1.0);
    if (dev > rep.row_sum_deviation) {
      rep.row_sum_deviation = dev;
      rep.row_sum_vertex = static_cast<Vertex>(v);
    }
    if (!(dev <= rep.tolerance)) rep.violations.push_back({IdentityKind::RowSum, v, dev});
  }
  rep.alpha_deviation = std::abs(b.alpha * rho_r - 1.0);
  if (!(rep.alpha_deviation <= rep.tolerance)) {
    rep.violations.push_back({IdentityKind::Alpha, 0, rep.alpha_deviation});
  }
  rep.pass = rep.violations.empty();
  return rep;
}

struct ConsistencyReport {
  std::size_t cycles_total = 0;    // dimension of the incidence-graph cycle space
  std::size_t cycles_checked = 0;
  double max_deviation = 0.0;      // max |alternating product - 1|
  std::vector<std::size_t> worst_cycle;  // node ids: v for vertices, n + e for edges
  std::size_t failures = 0;
  double tolerance = 1e-8;
  bool pass = true;
};

/**
 * Checks prod B(v_i, e_i) / B(v_{i-1}, e_i) = 1 around the fundamental
 * cycles of the vertex-edge incidence graph.
 *
 * A BFS spanning forest is grown over the bipartite graph (vertex nodes
 * 0..n-1, edge nodes n..n+m-1). Every incidence outside the forest closes
 * exactly one cycle, and those cycles span the cycle space, so at most
 * `cycle_budget` of them are walked explicitly.
 */
inline ConsistencyReport verify_consistency(const WeightedIncidence& b, const Hypergraph& h,
                                            std::size_t cycle_budget = 1000) {
  const std::size_t n = h.num_vertices();
  const std::size_t m = h.num_edges();
  const std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent(n + m, none);
  std::vector<std::size_t> depth(n + m, 0);
  std::vector<bool> seen(n + m, false);

  auto neighbors = [&](std::size_t node) {
    std::vector<std::size_t> out;
    if (node < n) {
      for (std::size_t e : h.incident(static_cast<Vertex>(node))) out.push_back(n + e);
    } else {
      for (Vertex v : h.edge(node - n)) out.push_back(v);
    }
    return out;
  };

  for (std::size_t root = 0; root < n + m; ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t w : neighbors(u)) {
        if (!seen[w]) {
          seen[w] = true;
          parent[w] = u;
          depth[w] = depth[u] + 1;
          queue.push_back(w);
        }
      }
    }
  }

  ConsistencyReport rep;
  std::size_t incidences = 0;
  for (std::size_t e = 0; e < m; ++e) incidences += h.edge(e).size();
  std::size_t trees = 0;
  for (std::size_t v = 0; v < n + m; ++v) trees += (parent[v] == none);
  rep.cycles_total = incidences + trees - (n + m);

  auto weight = [&](std::size_t vnode, std::size_t enode) {
    return b.at(h, static_cast<Vertex>(vnode), enode - n);
  };

  for (std::size_t e = 0; e < m && rep.cycles_checked < cycle_budget; ++e) {
    const std::size_t enode = n + e;
    for (Vertex v : h.edge(e)) {
      if (rep.cycles_checked >= cycle_budget) break;
      if (parent[v] == enode || parent[enode] == v) continue;

      // v -> ... -> lca <- ... <- enode, then the closing incidence enode -> v.
      std::vector<std::size_t> up_v{v};
      std::vector<std::size_t> up_e{enode};
      while (up_v.back() != up_e.back()) {
        if (depth[up_v.back()] >= depth[up_e.back()]) {
          up_v.push_back(parent[up_v.back()]);
        } else {
          up_e.push_back(parent[up_e.back()]);
        }
      }
      std::vector<std::size_t> cycle = up_v;
      for (std::size_t i = up_e.size() - 1; i-- > 0;) cycle.push_back(up_e[i]);
      cycle.push_back(v);

      double prod = 1.0;
      for (std::size_t i = 1; i + 1 < cycle.size(); ++i) {
        if (cycle[i] >= n) prod *= weight(cycle[i + 1], cycle[i]) / weight(cycle[i - 1], cycle[i]);
      }
      const double dev = std::abs(prod - 1.0);
      ++rep.cycles_checked;
      if (dev > rep.max_deviation || rep.worst_cycle.empty()) {
        rep.max_deviation = std::max(rep.max_deviation, dev);
        rep.worst_cycle = cycle;
      }
      if (!(dev <= rep.tolerance)) ++rep.failures;
    }
  }
  rep.pass = rep.failures == 0;
  return rep;
}

}  // namespace hypereig

#pragma once

// Brute-force reference computations that share no code path with the
// library's sparse engine.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <set>
#include <vector>

#include "hypereig/hypergraph.hpp"

namespace hypereig::testkit {

/// (A x^{r-1})_i by summing over all n^{r-1} index tuples with the dense
/// entry 1/(r-1)! on every permutation of every edge.
inline std::vector<double> dense_apply(const Hypergraph& h, const std::vector<double>& x) {
  const std::size_t n = h.num_vertices();
  const std::size_t r = h.rank();
  const std::set<Edge> edges(h.edges().begin(), h.edges().end());
  double fact = 1.0;
  for (std::size_t k = 2; k < r; ++k) fact *= static_cast<double>(k);
  const double entry = 1.0 / fact;

  std::vector<double> y(n, 0.0);
  std::vector<std::size_t> idx(r, 0);
  std::size_t total = 1;
  for (std::size_t k = 0; k < r; ++k) total *= n;
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (std::size_t k = 0; k < r; ++k) {
      idx[k] = c % n;
      c /= n;
    }
    Edge key(idx.begin(), idx.end());
    std::sort(key.begin(), key.end());
    if (std::adjacent_find(key.begin(), key.end()) != key.end() || !edges.count(key)) continue;
    double p = entry;
    for (std::size_t k = 1; k < r; ++k) p *= x[idx[k]];
    y[idx[0]] += p;
  }
  return y;
}

struct DensePair {
  double rho;
  std::vector<double> x;
};

/// Fixed-count shifted iteration on the dense tensor; rho from the Rayleigh
/// form sum_i x_i (A x)_i with ||x||_r = 1.
inline DensePair dense_tensor_power(const Hypergraph& h, std::size_t iterations = 4000) {
  const std::size_t n = h.num_vertices();
  const std::size_t r = h.rank();
  std::vector<double> x(n, 1.0);
  auto normalize = [&] {
    double s = 0.0;
    for (double v : x) s += std::pow(v, static_cast<double>(r));
    const double scale = std::pow(s, 1.0 / static_cast<double>(r));
    for (double& v : x) v /= scale;
  };
  normalize();
  for (std::size_t it = 0; it < iterations; ++it) {
    const auto y = dense_apply(h, x);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = std::pow(y[i] + std::pow(x[i], static_cast<double>(r - 1)), 1.0 / static_cast<double>(r - 1));
    }
    normalize();
  }
  const auto y = dense_apply(h, x);
  double rho = 0.0;
  for (std::size_t i = 0; i < n; ++i) rho += x[i] * y[i];
  return {rho, x};
}

/// r = 2 only: power iteration on the dense matrix A + I with 2-norm
/// scaling, run until the iterate stops moving.
inline DensePair dense_matrix_power(const Hypergraph& g, std::size_t max_iterations = 200000) {
  const std::size_t n = g.num_vertices();
  std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
  for (const Edge& e : g.edges()) {
    a[e[0]][e[1]] = 1.0;
    a[e[1]][e[0]] = 1.0;
  }
  std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> w(n);
  for (std::size_t it = 0; it < max_iterations; ++it) {
    for (std::size_t i = 0; i < n; ++i) {
      double s = v[i];
      for (std::size_t j = 0; j < n; ++j) s += a[i][j] * v[j];
      w[i] = s;
    }
    double norm = 0.0;
    for (double t : w) norm += t * t;
    norm = std::sqrt(norm);
    double change = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      w[i] /= norm;
      change = std::max(change, std::abs(w[i] - v[i]));
    }
    v.swap(w);
    if (change < 1e-15) break;
  }
  double rho = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) rho += v[i] * a[i][j] * v[j];
  }
  return {rho, v};
}

/// All-pairs distances by Floyd-Warshall over explicit edge membership,
/// independent of the shadow-graph BFS.
inline std::vector<std::vector<std::size_t>> floyd_distances(const Hypergraph& h) {
  const std::size_t n = h.num_vertices();
  const std::size_t inf = unreachable / 4;
  std::vector<std::vector<std::size_t>> d(n, std::vector<std::size_t>(n, inf));
  for (std::size_t v = 0; v < n; ++v) d[v][v] = 0;
  for (const Edge& e : h.edges()) {
    for (Vertex u : e) {
      for (Vertex v : e) {
        if (u != v) d[u][v] = 1;
      }
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    }
  }
  for (auto& row : d) {
    for (auto& v : row) {
      if (v >= inf) v = unreachable;
    }
  }
  return d;
}

}  // namespace hypereig::testkit

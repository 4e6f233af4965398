#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hypereig/error.hpp"
#include "hypereig/hypergraph.hpp"

namespace hypereig {

struct IterationOptions {
  double tolerance = 1e-12;            // relative Collatz-Wielandt bracket width
  std::size_t max_iterations = 100000;
  double shift = 1.0;                  // diagonal shift, subtracted out of the bracket
  std::optional<std::vector<double>> initial;  // empty: uniform start

  /// Called once per iteration with the unshifted bracket of the current iterate.
  std::function<void(std::size_t iteration, double lo, double hi)> observer;
};

/// Perron pair of a connected uniform hypergraph.
struct SpectralResult {
  double rho = 0.0;
  std::vector<double> x;  // positive, sum of x_i^r == 1
  double residual_inf = 0.0;
  std::size_t iterations = 0;
  double lambda_lo = 0.0;
  double lambda_hi = 0.0;

  // Ties go to the lowest vertex id.
  Vertex argmax() const {
    return static_cast<Vertex>(std::max_element(x.begin(), x.end()) - x.begin());
  }
  Vertex argmin() const {
    return static_cast<Vertex>(std::min_element(x.begin(), x.end()) - x.begin());
  }
  double x_max() const { return x[argmax()]; }
  double x_min() const { return x[argmin()]; }
};

/// Raised when the bracket does not close within max_iterations. Carries the
/// last iterate so callers can still report the best enclosure.
class NonConvergence : public Error {
 public:
  explicit NonConvergence(SpectralResult best)
      : Error(Errc::MaxIterationsExceeded,
              "bracket [" + std::to_string(best.lambda_lo) + ", " + std::to_string(best.lambda_hi) +
                  "] after " + std::to_string(best.iterations) + " iterations"),
        best_(std::move(best)) {}

  const SpectralResult& best() const noexcept { return best_; }

 private:
  SpectralResult best_;
};

namespace detail {

inline void check_dimension(const Hypergraph& h, std::size_t size) {
  if (size != h.num_vertices()) {
    throw Error(Errc::DimensionMismatch, "vector of length " + std::to_string(size) +
                                             " for n=" + std::to_string(h.num_vertices()));
  }
}

inline double ipow(double base, std::size_t exp) {
  double out = 1.0;
  for (std::size_t i = 0; i < exp; ++i) out *= base;
  return out;
}

}  // namespace detail

/**
 * y = A x^{r-1} for the adjacency tensor.
 *
 * With entries 1/(r-1)! on each permutation of an edge, the (r-1)! ordered
 * terms of an edge collapse to a single product, so
 * y_i = sum over edges e containing i of prod_{u in e, u != i} x_u.
 */
inline std::vector<double> apply_adjacency(const Hypergraph& h, std::span<const double> x) {
  detail::check_dimension(h, x.size());
  std::vector<double> y(h.num_vertices(), 0.0);
  for (const Edge& e : h.edges()) {
    for (std::size_t k = 0; k < e.size(); ++k) {
      double p = 1.0;
      for (std::size_t j = 0; j < e.size(); ++j) {
        if (j != k) p *= x[e[j]];
      }
      y[e[k]] += p;
    }
  }
  return y;
}

/// x^e = prod_{v in e} x_v, multiplied in ascending vertex order.
inline double edge_product(const Edge& e, std::span<const double> x) {
  double p = 1.0;
  for (Vertex v : e) p *= x[v];
  return p;
}

/// sum_i x_i^r
inline double r_norm_power(std::span<const double> x, std::size_t r) {
  double s = 0.0;
  for (double v : x) s += detail::ipow(v, r);
  return s;
}

/// x^T (A x) = r * sum_e x^e. Requires ||x||_r = 1 within 1e-9.
inline double rayleigh(const Hypergraph& h, std::span<const double> x) {
  detail::check_dimension(h, x.size());
  const double norm = r_norm_power(x, h.rank());
  if (std::abs(norm - 1.0) > 1e-9) {
    throw Error(Errc::NotNormalized, "sum x_i^r = " + std::to_string(norm));
  }
  double s = 0.0;
  for (const Edge& e : h.edges()) s += edge_product(e, x);
  return static_cast<double>(h.rank()) * s;
}

/// max_i |(A x)_i - rho x_i^{r-1}|
inline double residual(const Hypergraph& h, std::span<const double> x, double rho) {
  const auto y = apply_adjacency(h, x);
  double worst = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    worst = std::max(worst, std::abs(y[i] - rho * detail::ipow(x[i], h.rank() - 1)));
  }
  return worst;
}

/// Scales x in place so that sum x_i^r = 1.
inline void normalize_r(std::vector<double>& x, std::size_t r) {
  const double scale = std::pow(r_norm_power(x, r), 1.0 / static_cast<double>(r));
  for (double& v : x) v /= scale;
}

/**
 * Shifted higher-order power method for the Perron pair.
 *
 * Each step forms y = A x + s x^{[r-1]} and takes x <- y^{[1/(r-1)]},
 * renormalized in the r-norm. The Collatz-Wielandt quotients
 * (A x)_i / x_i^{r-1} bracket rho for every positive x; iteration stops once
 * (hi - lo) <= tolerance * hi and reports the midpoint. The shift keeps the
 * map primitive so bipartite-like structures cannot oscillate.
 *
 * Throws NoEdges, DisconnectedInput, InvalidParameters, DimensionMismatch,
 * or NonConvergence.
 */
inline SpectralResult power_iteration(const Hypergraph& h, const IterationOptions& opts = {}) {
  if (h.num_edges() == 0) throw Error(Errc::NoEdges, "spectral radius needs at least one edge");
  if (!is_connected(h)) throw Error(Errc::DisconnectedInput, "power iteration needs a connected hypergraph");
  if (!(opts.tolerance > 0.0)) throw Error(Errc::InvalidParameters, "tolerance must be positive");
  if (!(opts.shift >= 0.0)) throw Error(Errc::InvalidParameters, "shift must be nonnegative");

  const std::size_t n = h.num_vertices();
  const std::size_t r = h.rank();
  const double inv = 1.0 / static_cast<double>(r - 1);

  std::vector<double> x;
  if (opts.initial) {
    detail::check_dimension(h, opts.initial->size());
    x = *opts.initial;
    for (double v : x) {
      if (!(v > 0.0) || !std::isfinite(v)) {
        throw Error(Errc::InvalidParameters, "initial vector must be strictly positive");
      }
    }
  } else {
    x.assign(n, 1.0);
  }
  normalize_r(x, r);

  SpectralResult out;
  std::vector<double> powed(n);
  for (std::size_t it = 0;; ++it) {
    const auto y = apply_adjacency(h, x);
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (std::size_t i = 0; i < n; ++i) {
      powed[i] = detail::ipow(x[i], r - 1);
      const double q = y[i] / powed[i];
      lo = std::min(lo, q);
      hi = std::max(hi, q);
    }
    if (opts.observer) opts.observer(it, lo, hi);

    out.lambda_lo = lo;
    out.lambda_hi = hi;
    out.iterations = it;
    if (hi - lo <= opts.tolerance * hi) {
      out.rho = 0.5 * (lo + hi);
      out.x = std::move(x);
      out.residual_inf = residual(h, out.x, out.rho);
      return out;
    }
    if (it >= opts.max_iterations) {
      out.rho = 0.5 * (lo + hi);
      out.x = std::move(x);
      out.residual_inf = residual(h, out.x, out.rho);
      throw NonConvergence(std::move(out));
    }

    for (std::size_t i = 0; i < n; ++i) {
      const double shifted = y[i] + opts.shift * powed[i];
      x[i] = (r == 2) ? shifted : std::pow(shifted, inv);
    }
    normalize_r(x, r);
  }
}

}  // namespace hypereig

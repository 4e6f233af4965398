#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hypereig/error.hpp"
#include "hypereig/hypergraph.hpp"

namespace hypereig {

/// C(n, k), saturating at SIZE_MAX.
inline std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::size_t c = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    const std::size_t num = n - k + i;
    if (c > std::numeric_limits<std::size_t>::max() / num) return std::numeric_limits<std::size_t>::max();
    c = c * num / i;  // exact: c * num is divisible by i
  }
  return c;
}

namespace detail {

// Unbiased draw in [0, bound). Written out instead of using
// std::uniform_int_distribution so sequences are identical across standard
// libraries.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % bound;
}

// Lexicographic successor of a k-combination of {0..n-1}; false at the end.
inline bool next_combination(Edge& c, std::size_t n) {
  const std::size_t k = c.size();
  std::size_t i = k;
  while (i > 0 && c[i - 1] == n - k + i - 1) --i;
  if (i == 0) return false;
  ++c[i - 1];
  for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  return true;
}

inline void check_rank(std::size_t r) {
  if (r < 2) throw Error(Errc::InfeasibleParameters, "r must be at least 2");
}

}  // namespace detail

inline Hypergraph single_edge(std::size_t r) {
  detail::check_rank(r);
  Edge e(r);
  for (std::size_t i = 0; i < r; ++i) e[i] = static_cast<Vertex>(i);
  return Hypergraph::build(r, r, {e});
}

/// All r-subsets of n vertices.
inline Hypergraph complete(std::size_t n, std::size_t r) {
  detail::check_rank(r);
  if (n < r) throw Error(Errc::InfeasibleParameters, "complete hypergraph needs n >= r");
  if (binomial(n, r) > 5'000'000) throw Error(Errc::InfeasibleParameters, "too many edges");
  std::vector<Edge> edges;
  Edge c(r);
  for (std::size_t i = 0; i < r; ++i) c[i] = static_cast<Vertex>(i);
  do {
    edges.push_back(c);
  } while (detail::next_combination(c, n));
  return Hypergraph::build(n, r, std::move(edges));
}

/// k edges, consecutive edges sharing exactly one vertex; n = k(r-1)+1.
inline Hypergraph loose_path(std::size_t k, std::size_t r) {
  detail::check_rank(r);
  if (k < 1) throw Error(Errc::InfeasibleParameters, "loose path needs at least one edge");
  std::vector<Edge> edges;
  for (std::size_t j = 0; j < k; ++j) {
    Edge e(r);
    for (std::size_t i = 0; i < r; ++i) e[i] = static_cast<Vertex>(j * (r - 1) + i);
    edges.push_back(std::move(e));
  }
  return Hypergraph::build(k * (r - 1) + 1, r, std::move(edges));
}

/**
 * m distinct edges drawn uniformly from all C(n, r) candidates.
 *
 * Small candidate spaces are enumerated and partially shuffled; large ones
 * fall back to rejection sampling of random r-subsets. Output is a pure
 * function of (n, r, m, seed). The result need not be connected.
 */
inline Hypergraph random_uniform(std::size_t n, std::size_t r, std::size_t m, std::uint64_t seed) {
  detail::check_rank(r);
  if (n < r) throw Error(Errc::InfeasibleParameters, "random hypergraph needs n >= r");
  const std::size_t total = binomial(n, r);
  if (m > total) {
    throw Error(Errc::InfeasibleParameters,
                "m=" + std::to_string(m) + " exceeds C(n,r)=" + std::to_string(total));
  }
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;

  if (total <= 200'000) {
    std::vector<Edge> all;
    all.reserve(total);
    Edge c(r);
    for (std::size_t i = 0; i < r; ++i) c[i] = static_cast<Vertex>(i);
    do {
      all.push_back(c);
    } while (detail::next_combination(c, n));
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t j = i + detail::uniform_below(rng, total - i);
      std::swap(all[i], all[j]);
    }
    edges.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(m));
  } else {
    if (m > total / 2) throw Error(Errc::InfeasibleParameters, "too dense for rejection sampling");
    std::set<Edge> seen;
    std::vector<Vertex> pool(n);
    while (edges.size() < m) {
      for (std::size_t i = 0; i < n; ++i) pool[i] = static_cast<Vertex>(i);
      for (std::size_t i = 0; i < r; ++i) {
        std::swap(pool[i], pool[i + detail::uniform_below(rng, n - i)]);
      }
      Edge e(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(r));
      std::sort(e.begin(), e.end());
      if (seen.insert(e).second) edges.push_back(std::move(e));
    }
  }
  return Hypergraph::build(n, r, std::move(edges));
}

}  // namespace hypereig

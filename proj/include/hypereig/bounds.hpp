#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "hypereig/error.hpp"
#include "hypereig/hypergraph.hpp"
#include "hypereig/spectral.hpp"

namespace hypereig {

// Half-width of the band around rho^r = 4 treated as the degenerate case.
inline constexpr double sigma_branch_epsilon = 1e-9;
// Absolute slack (scaled by max(1, |bound|)) allowed when comparing a computed
// eigenvector against a closed-form bound.
inline constexpr double certificate_tolerance = 1e-8;

struct Interval {
  double lo;
  double hi;
};

namespace detail {

inline void check_bound_args(double rho, std::size_t d, std::size_t r) {
  if (!(rho > 0.0) || !std::isfinite(rho) || d < 1 || r < 2) {
    throw Error(Errc::InvalidParameters, "need rho > 0, degree >= 1, r >= 2");
  }
}

inline double factorial(std::size_t k) {
  double f = 1.0;
  for (std::size_t i = 2; i <= k; ++i) f *= static_cast<double>(i);
  return f;
}

}  // namespace detail

/// Upper bound on x_v for a linear hypergraph, v of degree d:
/// [1 + (r-1)(rho^r/d)^{1/(r-1)}]^{-1/r}.
inline double bound_entry_linear(double rho, std::size_t d, std::size_t r) {
  detail::check_bound_args(rho, d, r);
  const double rd = static_cast<double>(r);
  const double t = std::pow(std::pow(rho, rd) / static_cast<double>(d), 1.0 / (rd - 1.0));
  return std::pow(1.0 + (rd - 1.0) * t, -1.0 / rd);
}

/// r^{-1/r}: the degree-free form of bound_entry_linear using rho^r >= Delta.
inline double bound_entry_linear_uniform(std::size_t r) {
  if (r < 2) throw Error(Errc::InvalidParameters, "r >= 2");
  const double rd = static_cast<double>(r);
  return std::pow(rd, -1.0 / rd);
}

/// Bound for arbitrary uniform hypergraphs: (d / [rho^r (r-1)!]^{1/(r-1)})^{1/r}.
inline double bound_entry_general(double rho, std::size_t d, std::size_t r) {
  detail::check_bound_args(rho, d, r);
  const double rd = static_cast<double>(r);
  const double denom = std::pow(std::pow(rho, rd) * detail::factorial(r - 1), 1.0 / (rd - 1.0));
  return std::pow(static_cast<double>(d) / denom, 1.0 / rd);
}

/// Upper bound on x_min for a linear hypergraph with minimum degree delta:
/// [(r-1)(rho^r/delta)^{1/(r-1)} + n - delta(r-1)]^{-1/r}.
/// Throws NonPositiveDenominator when the bracket is not positive.
inline double bound_min_entry(double rho, std::size_t delta, std::size_t n, std::size_t r) {
  detail::check_bound_args(rho, delta, r);
  const double rd = static_cast<double>(r);
  const double t = std::pow(std::pow(rho, rd) / static_cast<double>(delta), 1.0 / (rd - 1.0));
  const double denom = (rd - 1.0) * t + static_cast<double>(n) -
                       static_cast<double>(delta) * (rd - 1.0);
  if (!(denom > 0.0)) {
    throw Error(Errc::NonPositiveDenominator, "x_min bound denominator " + std::to_string(denom));
  }
  return std::pow(denom, -1.0 / rd);
}

/// rho^{-l} <= x_u / x_v <= rho^l for d(u, v) = l.
inline Interval ratio_bound_pow(double rho, std::size_t ell) {
  if (!(rho > 0.0)) throw Error(Errc::InvalidParameters, "rho must be positive");
  const double hi = std::pow(rho, static_cast<double>(ell));
  return {1.0 / hi, hi};
}

enum class SigmaBranch { Strict, Degenerate, Inapplicable };

constexpr const char* to_string(SigmaBranch b) noexcept {
  switch (b) {
    case SigmaBranch::Strict: return "strict";
    case SigmaBranch::Degenerate: return "degenerate";
    case SigmaBranch::Inapplicable: return "inapplicable";
  }
  return "unknown";
}

struct SigmaBound {
  SigmaBranch branch = SigmaBranch::Inapplicable;
  double sigma = 0.0;  // set on the strict branch only
  double lo = 0.0;
  double hi = 0.0;
};

inline SigmaBranch sigma_branch(double rho, std::size_t r) {
  const double t = std::pow(rho, static_cast<double>(r)) - 4.0;
  if (t > sigma_branch_epsilon) return SigmaBranch::Strict;
  if (std::abs(t) <= sigma_branch_epsilon) return SigmaBranch::Degenerate;
  return SigmaBranch::Inapplicable;
}

/// sigma = (sqrt(rho^r) + sqrt(rho^r - 4)) / 2, the larger root of
/// s + 1/s = sqrt(rho^r).
inline double sigma_of(double rho, std::size_t r) {
  const double p = std::pow(rho, static_cast<double>(r));
  return 0.5 * (std::sqrt(p) + std::sqrt(std::max(0.0, p - 4.0)));
}

/// (sigma^{l+1} - sigma^{-(l+1)}) / (sigma - sigma^{-1}) summed as
/// sum_{i=0}^{l} sigma^{l-2i}, which has no cancellation near sigma = 1.
inline double sigma_ratio(double sigma, std::size_t ell) {
  double s = 0.0;
  for (std::size_t i = 0; i <= ell; ++i) {
    s += std::pow(sigma, static_cast<double>(ell) - 2.0 * static_cast<double>(i));
  }
  return s;
}

/// Ratio bound for rho >= 4^{1/r}; tagged Inapplicable below that.
inline SigmaBound ratio_bound_sigma(double rho, std::size_t ell, std::size_t r) {
  if (!(rho > 0.0) || r < 2) throw Error(Errc::InvalidParameters, "need rho > 0 and r >= 2");
  SigmaBound out;
  out.branch = sigma_branch(rho, r);
  const double e = 2.0 / static_cast<double>(r);
  switch (out.branch) {
    case SigmaBranch::Strict:
      out.sigma = sigma_of(rho, r);
      out.hi = std::pow(sigma_ratio(out.sigma, ell), e);
      break;
    case SigmaBranch::Degenerate:
      out.hi = std::pow(static_cast<double>(ell + 1), e);
      break;
    case SigmaBranch::Inapplicable:
      return out;
  }
  out.lo = 1.0 / out.hi;
  return out;
}

/// Upper bound on gamma = x_max / x_min when rho > 4^{1/r}, where ell is the
/// distance between a maximizing and a minimizing vertex.
inline double principal_ratio_bound(double rho, std::size_t ell, std::size_t r) {
  if (!(rho > 0.0) || r < 2) throw Error(Errc::InvalidParameters, "need rho > 0 and r >= 2");
  if (sigma_branch(rho, r) != SigmaBranch::Strict) {
    throw Error(Errc::Inapplicable, "principal ratio bound needs rho^r > 4");
  }
  return std::pow(sigma_ratio(sigma_of(rho, r), ell), 2.0 / static_cast<double>(r));
}

/// rho >= Delta^{1/r}.
inline double rho_max_degree_bound(std::size_t max_deg, std::size_t r) {
  return std::pow(static_cast<double>(max_deg), 1.0 / static_cast<double>(r));
}

// ---------------------------------------------------------------------------
// Certification

enum class BoundId {
  EntryLinear,
  EntryLinearUniform,
  EntryGeneral,
  MinEntryLinear,
  RatioPow,
  RatioSigma,
  RatioSigmaDegenerate,
  PrincipalRatio,
  RhoVsMaxDegree,
};

constexpr const char* to_string(BoundId id) noexcept {
  switch (id) {
    case BoundId::EntryLinear: return "EntryLinear";
    case BoundId::EntryLinearUniform: return "EntryLinearUniform";
    case BoundId::EntryGeneral: return "EntryGeneral";
    case BoundId::MinEntryLinear: return "MinEntryLinear";
    case BoundId::RatioPow: return "RatioPow";
    case BoundId::RatioSigma: return "RatioSigma";
    case BoundId::RatioSigmaDegenerate: return "RatioSigmaDegenerate";
    case BoundId::PrincipalRatio: return "PrincipalRatio";
    case BoundId::RhoVsMaxDegree: return "RhoVsMaxDegree";
  }
  return "Unknown";
}

enum class Direction { Upper, Lower };

/// Vertex or ordered vertex pair a certificate talks about. Ratio
/// certificates use (u, v) for x_u / x_v; the reversed pair carries the lower
/// side since every ratio interval is [1/hi, hi].
struct Subject {
  std::optional<Vertex> u;
  std::optional<Vertex> v;

  friend auto operator<=>(const Subject&, const Subject&) = default;
};

struct BoundCertificate {
  BoundId id{};
  Direction direction = Direction::Upper;
  Subject subject;
  std::optional<std::size_t> distance;  // l for ratio-type bounds
  double bound_value = 0.0;
  double actual_value = 0.0;
  double slack = 0.0;  // bound - actual for upper bounds, actual - bound for lower
  bool applicable = false;
  std::string reason;  // why inapplicable; empty otherwise
  bool pass = false;

  bool failed() const noexcept { return applicable && !pass; }
};

namespace detail {

inline BoundCertificate make_certificate(BoundId id, Direction dir, Subject subject, double bound,
                                         double actual, bool applicable, std::string reason = {}) {
  BoundCertificate c;
  c.id = id;
  c.direction = dir;
  c.subject = subject;
  c.bound_value = bound;
  c.actual_value = actual;
  c.slack = (dir == Direction::Upper) ? bound - actual : actual - bound;
  c.applicable = applicable;
  c.reason = std::move(reason);
  const double tol = certificate_tolerance * std::max(1.0, std::abs(bound));
  c.pass = applicable && std::isfinite(c.slack) && c.slack >= -tol;
  return c;
}

inline BoundCertificate inapplicable(BoundId id, Direction dir, Subject subject, double actual,
                                     std::string reason) {
  BoundCertificate c;
  c.id = id;
  c.direction = dir;
  c.subject = subject;
  c.actual_value = actual;
  c.reason = std::move(reason);
  return c;
}

}  // namespace detail

struct CertifyOptions {
  std::size_t exhaustive_pair_limit = 12;  // all ordered pairs when n <= this
  std::size_t sampled_pairs = 256;
  std::uint64_t sample_seed = 0x5eed;
  double tie_tolerance = 1e-9;  // relative, for argmax/argmin sets
};

/// Vertices whose entry is within relative `tol` of the max (resp. min).
inline std::pair<std::vector<Vertex>, std::vector<Vertex>> extreme_sets(const SpectralResult& s,
                                                                        double tol) {
  const double mx = s.x_max();
  const double mn = s.x_min();
  std::vector<Vertex> top, bottom;
  for (std::size_t v = 0; v < s.x.size(); ++v) {
    if (s.x[v] >= mx * (1.0 - tol)) top.push_back(static_cast<Vertex>(v));
    if (s.x[v] <= mn * (1.0 + tol)) bottom.push_back(static_cast<Vertex>(v));
  }
  return {top, bottom};
}

/**
 * Evaluates every closed-form bound against the computed eigenvector.
 *
 * Per-vertex bounds run at every vertex. Ratio bounds run on all ordered
 * pairs when n <= exhaustive_pair_limit, otherwise on a seeded sample plus
 * every (max vertex, min vertex) pair. Linear-only bounds are emitted as
 * inapplicable on non-linear input. Output is sorted by (bound, subject).
 */
inline std::vector<BoundCertificate> certify_all(const Hypergraph& h, const SpectralResult& s,
                                                 const CertifyOptions& opts = {}) {
  detail::check_dimension(h, s.x.size());
  const std::size_t n = h.num_vertices();
  const std::size_t r = h.rank();
  const double rho = s.rho;
  const bool linear = is_linear(h);
  const auto dist = all_distances(h);
  std::vector<BoundCertificate> out;

  const double uniform = bound_entry_linear_uniform(r);
  for (std::size_t i = 0; i < n; ++i) {
    const auto v = static_cast<Vertex>(i);
    const Subject subj{v, std::nullopt};
    const std::size_t d = h.degree(v);
    const double xv = s.x[v];
    if (d == 0) {
      out.push_back(detail::inapplicable(BoundId::EntryGeneral, Direction::Upper, subj, xv, "isolated vertex"));
      continue;
    }
    if (linear) {
      out.push_back(detail::make_certificate(BoundId::EntryLinear, Direction::Upper, subj,
                                             bound_entry_linear(rho, d, r), xv, true));
      out.push_back(detail::make_certificate(BoundId::EntryLinearUniform, Direction::Upper, subj,
                                             uniform, xv, true));
    } else {
      out.push_back(detail::inapplicable(BoundId::EntryLinear, Direction::Upper, subj, xv, "not linear"));
      out.push_back(
          detail::inapplicable(BoundId::EntryLinearUniform, Direction::Upper, subj, xv, "not linear"));
    }
    out.push_back(detail::make_certificate(BoundId::EntryGeneral, Direction::Upper, subj,
                                           bound_entry_general(rho, d, r), xv, true));
  }

  {
    const Vertex vmin = s.argmin();
    const Subject subj{vmin, std::nullopt};
    if (!linear) {
      out.push_back(detail::inapplicable(BoundId::MinEntryLinear, Direction::Upper, subj, s.x_min(), "not linear"));
    } else {
      try {
        out.push_back(detail::make_certificate(BoundId::MinEntryLinear, Direction::Upper, subj,
                                               bound_min_entry(rho, min_degree(h), n, r), s.x_min(), true));
      } catch (const Error& e) {
        if (e.code() != Errc::NonPositiveDenominator) throw;
        out.push_back(detail::inapplicable(BoundId::MinEntryLinear, Direction::Upper, subj, s.x_min(),
                                           "non-positive denominator"));
      }
    }
  }

  // Ordered pairs for ratio certificates.
  std::vector<std::pair<Vertex, Vertex>> pairs;
  const auto [top, bottom] = extreme_sets(s, opts.tie_tolerance);
  if (n <= opts.exhaustive_pair_limit) {
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = 0; v < n; ++v) {
        if (u != v) pairs.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
      }
    }
  } else {
    std::mt19937_64 rng(opts.sample_seed);
    for (std::size_t k = 0; k < opts.sampled_pairs; ++k) {
      const auto u = static_cast<Vertex>(rng() % n);
      const auto v = static_cast<Vertex>(rng() % n);
      if (u != v) pairs.emplace_back(u, v);
    }
    for (Vertex a : top) {
      for (Vertex b : bottom) {
        if (a != b) {
          pairs.emplace_back(a, b);
          pairs.emplace_back(b, a);
        }
      }
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  }

  const SigmaBranch branch = sigma_branch(rho, r);
  for (auto [u, v] : pairs) {
    const std::size_t ell = dist[u][v];
    const Subject subj{u, v};
    const double ratio = s.x[u] / s.x[v];
    if (ell == unreachable) {
      out.push_back(detail::inapplicable(BoundId::RatioPow, Direction::Upper, subj, ratio, "disconnected pair"));
      continue;
    }
    auto c = detail::make_certificate(BoundId::RatioPow, Direction::Upper, subj,
                                      ratio_bound_pow(rho, ell).hi, ratio, true);
    c.distance = ell;
    out.push_back(std::move(c));

    const SigmaBound sb = ratio_bound_sigma(rho, ell, r);
    if (branch == SigmaBranch::Inapplicable) {
      auto ic = detail::inapplicable(BoundId::RatioSigma, Direction::Upper, subj, ratio, "rho^r < 4");
      ic.distance = ell;
      out.push_back(std::move(ic));
    } else {
      const BoundId id =
          (branch == SigmaBranch::Strict) ? BoundId::RatioSigma : BoundId::RatioSigmaDegenerate;
      auto sc = detail::make_certificate(id, Direction::Upper, subj, sb.hi, ratio, true);
      sc.distance = ell;
      out.push_back(std::move(sc));
    }
  }

  {
    // l = shortest distance between a maximizing and a minimizing vertex.
    std::size_t best = unreachable;
    Subject subj{s.argmax(), s.argmin()};
    for (Vertex a : top) {
      for (Vertex b : bottom) {
        if (dist[a][b] < best) {
          best = dist[a][b];
          subj = {a, b};
        }
      }
    }
    const double gamma = s.x_max() / s.x_min();
    BoundCertificate c;
    if (branch != SigmaBranch::Strict) {
      c = detail::inapplicable(BoundId::PrincipalRatio, Direction::Upper, subj, gamma, "rho^r <= 4");
    } else if (best == unreachable) {
      c = detail::inapplicable(BoundId::PrincipalRatio, Direction::Upper, subj, gamma, "disconnected pair");
    } else {
      c = detail::make_certificate(BoundId::PrincipalRatio, Direction::Upper, subj,
                                   principal_ratio_bound(rho, best, r), gamma, true);
    }
    if (best != unreachable) c.distance = best;
    out.push_back(std::move(c));
  }

  {
    const auto deg = degrees(h);
    const auto vmax = static_cast<Vertex>(std::max_element(deg.begin(), deg.end()) - deg.begin());
    out.push_back(detail::make_certificate(BoundId::RhoVsMaxDegree, Direction::Lower,
                                           Subject{vmax, std::nullopt},
                                           rho_max_degree_bound(deg[vmax], r), rho, true));
  }

  std::stable_sort(out.begin(), out.end(), [](const BoundCertificate& a, const BoundCertificate& b) {
    return std::tie(a.id, a.subject) < std::tie(b.id, b.subject);
  });
  return out;
}

struct CertificateSummary {
  std::size_t total = 0;
  std::size_t applicable = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
};

inline CertificateSummary summarize(const std::vector<BoundCertificate>& certs) {
  CertificateSummary s;
  for (const auto& c : certs) {
    ++s.total;
    s.applicable += c.applicable;
    s.passed += c.pass;
    s.failed += c.failed();
  }
  return s;
}

}  // namespace hypereig

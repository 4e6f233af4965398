#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "hypereig/hypereig.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace hypereig;

namespace {

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

}  // namespace

TEST(Adjacency, MatchesDenseTensor) {
  std::mt19937_64 rng(11);
  for (int s = 0; s < 40; ++s) {
    const std::size_t r = 2 + s % 3;
    const auto h = testkit::random_connected(5 + s % 3, r, 3, 2000 + s);
    const auto x = testkit::random_unit_vector(h.num_vertices(), r, rng);
    EXPECT_LT(max_abs_diff(apply_adjacency(h, x), testkit::dense_apply(h, x)), 1e-14);
  }
}

TEST(Adjacency, DimensionMismatch) {
  const auto h = single_edge(3);
  const std::vector<double> x{1.0, 1.0};
  try {
    apply_adjacency(h, x);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DimensionMismatch);
  }
}

TEST(Rayleigh, RequiresNormalizedInput) {
  const auto h = single_edge(3);
  const std::vector<double> x{1.0, 1.0, 1.0};
  try {
    rayleigh(h, x);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotNormalized);
  }
  std::vector<double> y = x;
  normalize_r(y, 3);
  EXPECT_NEAR(rayleigh(h, y), 1.0, 1e-15);
}

TEST(PowerIteration, SingleEdge) {
  for (std::size_t r = 2; r <= 6; ++r) {
    const auto s = power_iteration(single_edge(r));
    EXPECT_NEAR(s.rho, 1.0, 1e-12) << r;
    for (double v : s.x) EXPECT_NEAR(v, std::pow(double(r), -1.0 / double(r)), 1e-12);
  }
}

TEST(PowerIteration, CompleteK43) {
  const auto s = power_iteration(complete(4, 3));
  EXPECT_NEAR(s.rho, 3.0, 1e-11);
  for (double v : s.x) EXPECT_NEAR(v, std::pow(4.0, -1.0 / 3.0), 1e-12);
}

TEST(PowerIteration, LoosePath) {
  const auto s = power_iteration(loose_path(2, 3));
  EXPECT_NEAR(s.rho, std::cbrt(2.0), 1e-11);
  const double a = std::pow(6.0, -1.0 / 3.0);
  const double b = std::pow(3.0, -1.0 / 3.0);
  const std::vector<double> want{a, a, b, a, a};
  EXPECT_LT(max_abs_diff(s.x, want), 1e-10);
  EXPECT_EQ(s.argmax(), 2u);
  EXPECT_EQ(s.argmin(), 0u);
}

TEST(PowerIteration, GraphClosedForms) {
  // K_n has rho = n - 1; the cycle C_n has rho = 2; the star K_{1,k} has sqrt(k).
  for (std::size_t n = 3; n <= 7; ++n) EXPECT_NEAR(power_iteration(complete(n, 2)).rho, n - 1.0, 1e-10);
  const auto c6 = Hypergraph::build(6, 2, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
  EXPECT_NEAR(power_iteration(c6).rho, 2.0, 1e-10);
  const auto star = Hypergraph::build(5, 2, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  EXPECT_NEAR(power_iteration(star).rho, 2.0, 1e-10);
}

TEST(PowerIteration, EigenpairProperties) {
  for (const auto& inst : testkit::general_corpus(15, 77)) {
    const auto& h = inst.graph;
    const auto s = power_iteration(h);
    EXPECT_LE(s.lambda_lo, s.rho) << inst.name;
    EXPECT_GE(s.lambda_hi, s.rho) << inst.name;
    EXPECT_NEAR(r_norm_power(s.x, h.rank()), 1.0, 1e-12) << inst.name;
    for (double v : s.x) EXPECT_GT(v, 0.0);
    EXPECT_LT(s.residual_inf, 1e-10 * s.rho) << inst.name;
    EXPECT_NEAR(rayleigh(h, s.x), s.rho, 1e-10 * s.rho) << inst.name;
    // rho >= average degree-type lower bound: Rayleigh of the uniform vector.
    std::vector<double> u(h.num_vertices(), 1.0);
    normalize_r(u, h.rank());
    EXPECT_GE(s.rho, rayleigh(h, u) - 1e-12) << inst.name;
  }
}

TEST(PowerIteration, MatchesDenseTensorOracle) {
  for (int s = 0; s < 12; ++s) {
    const std::size_t r = 3 + s % 2;
    const auto h = testkit::random_connected(5 + s % 2, r, 2, 3100 + s);
    const auto got = power_iteration(h);
    const auto ref = testkit::dense_tensor_power(h, 3000);
    EXPECT_NEAR(got.rho, ref.rho, 1e-9) << s;
    EXPECT_LT(max_abs_diff(got.x, ref.x), 1e-8) << s;
  }
}

TEST(PowerIteration, MatchesDenseMatrixOracle) {
  for (int s = 0; s < 20; ++s) {
    const auto h = testkit::random_connected(4 + s % 7, 2, 4, 3300 + s);
    const auto got = power_iteration(h);
    const auto ref = testkit::dense_matrix_power(h);
    EXPECT_NEAR(got.rho, ref.rho, 1e-9) << s;
  }
}

TEST(PowerIteration, IndependentOfStart) {
  std::mt19937_64 rng(5);
  const auto h = testkit::random_connected(9, 3, 5, 4242);
  const auto base = power_iteration(h);
  for (int k = 0; k < 5; ++k) {
    IterationOptions opts;
    opts.initial = testkit::random_unit_vector(h.num_vertices(), 3, rng);
    const auto s = power_iteration(h, opts);
    EXPECT_NEAR(s.rho, base.rho, 1e-11);
    EXPECT_LT(max_abs_diff(s.x, base.x), 1e-9);
  }
}

TEST(PowerIteration, RelabelingPermutesVector) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 10; ++t) {
    const auto h = testkit::random_connected(8, 3, 4, 5150 + t);
    std::vector<Vertex> perm(h.num_vertices());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<Vertex>(i);
    std::shuffle(perm.begin(), perm.end(), rng);
    auto edges = h.edges();
    for (auto& e : edges) {
      for (auto& v : e) v = perm[v];
    }
    const auto g = Hypergraph::build(h.num_vertices(), 3, edges);
    const auto a = power_iteration(h);
    const auto b = power_iteration(g);
    EXPECT_NEAR(a.rho, b.rho, 1e-11);
    for (std::size_t v = 0; v < perm.size(); ++v) EXPECT_NEAR(a.x[v], b.x[perm[v]], 1e-9);
  }
}

TEST(PowerIteration, BracketIsMonotone) {
  for (int t = 0; t < 10; ++t) {
    const auto h = testkit::random_connected(10, 2 + t % 3, 6, 6100 + t);
    double prev_lo = -1.0, prev_hi = 1e300;
    bool ok = true;
    IterationOptions opts;
    opts.observer = [&](std::size_t, double lo, double hi) {
      ok = ok && lo >= prev_lo - 1e-13 * hi && hi <= prev_hi + 1e-13 * hi;
      prev_lo = lo;
      prev_hi = hi;
    };
    power_iteration(h, opts);
    EXPECT_TRUE(ok) << t;
  }
}

TEST(PowerIteration, Errors) {
  const auto empty = Hypergraph::build(3, 3, {});
  try {
    power_iteration(empty);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NoEdges);
  }
  const auto two = Hypergraph::build(6, 3, {{0, 1, 2}, {3, 4, 5}});
  try {
    power_iteration(two);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DisconnectedInput);
  }
  IterationOptions bad;
  bad.tolerance = 0.0;
  EXPECT_THROW(power_iteration(single_edge(3), bad), Error);
  IterationOptions neg;
  neg.initial = std::vector<double>{1.0, -1.0, 1.0};
  EXPECT_THROW(power_iteration(single_edge(3), neg), Error);
}

TEST(PowerIteration, NonConvergenceCarriesBracket) {
  const auto h = loose_path(6, 3);
  IterationOptions opts;
  opts.max_iterations = 2;
  try {
    power_iteration(h, opts);
    FAIL();
  } catch (const NonConvergence& e) {
    EXPECT_EQ(e.code(), Errc::MaxIterationsExceeded);
    const double rho = power_iteration(h).rho;
    EXPECT_LE(e.best().lambda_lo, rho + 1e-12);
    EXPECT_GE(e.best().lambda_hi, rho - 1e-12);
    EXPECT_EQ(e.best().iterations, 2u);
  }
}

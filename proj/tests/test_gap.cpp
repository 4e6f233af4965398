#include <gtest/gtest.h>

#include <cmath>

#include "hypereig/hypereig.hpp"
#include "support/corpus.hpp"

using namespace hypereig;

TEST(GapBound, LoosePathTerms) {
  const double rho = std::cbrt(2.0);
  const auto g = gap_lower_bound(5, 3, 2, rho);
  // rho^{r(r-1)(D+1)} = rho^18 = 64.
  EXPECT_NEAR(g.term_connected, 3.0 / 320.0, 1e-15);
  // rho^{rD} = 4, rho^{r-1} = 2^{2/3}.
  EXPECT_NEAR(g.term_disconnected, 1.0 / (20.0 * (std::pow(2.0, 2.0 / 3.0) + 2.0)), 1e-15);
  EXPECT_NEAR(g.term_disconnected, 0.0139377, 1e-7);
  EXPECT_DOUBLE_EQ(g.bound, g.term_connected);
}

TEST(GapBound, RejectsBadParameters) {
  EXPECT_THROW(gap_lower_bound(2, 3, 1, 1.0), Error);
  EXPECT_THROW(gap_lower_bound(5, 1, 1, 1.0), Error);
  EXPECT_THROW(gap_lower_bound(5, 3, 1, 0.5), Error);
  EXPECT_THROW(gap_lower_bound(5, 3, 1, std::nan("")), Error);
  EXPECT_NO_THROW(gap_lower_bound(3, 3, 1, 1.0));
}

TEST(GapBound, DecreasesWithRhoAndDiameter) {
  for (double rho = 1.0; rho < 4.0; rho += 0.25) {
    EXPECT_GE(gap_lower_bound(10, 3, 2, rho).bound, gap_lower_bound(10, 3, 2, rho + 0.25).bound);
    EXPECT_GE(gap_lower_bound(10, 3, 2, rho).bound, gap_lower_bound(10, 3, 3, rho).bound);
  }
}

TEST(SpectralRadiusGeneral, Components) {
  EXPECT_EQ(spectral_radius_general(Hypergraph::build(4, 2, {})), 0.0);
  const auto h = Hypergraph::build(9, 3, {{0, 1, 2}, {3, 4, 5}, {3, 6, 7}, {0, 1, 8}});
  // Two components with different spectral radii.
  const double rho = spectral_radius_general(h);
  const auto comps = components(h);
  double want = 0.0;
  for (const auto& c : comps) {
    if (c.graph.num_edges()) want = std::max(want, power_iteration(c.graph).rho);
  }
  EXPECT_DOUBLE_EQ(rho, want);
  EXPECT_NEAR(spectral_radius_general(delete_edge(loose_path(2, 3), 0)), 1.0, 1e-12);
}

TEST(DiameterLemmas, Examples) {
  const auto k = complete(4, 3);
  const auto c = check_diameter_lemmas(k, 0);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->diameter_after, 1u);
  EXPECT_EQ(c->diameter_limit, 6u);
  EXPECT_EQ(c->distance_sum_limit, 12u);
  EXPECT_TRUE(c->diameter_ok);
  EXPECT_TRUE(c->distance_sum_ok);

  EXPECT_FALSE(check_diameter_lemmas(loose_path(2, 3), 0).has_value());
  EXPECT_THROW(check_diameter_lemmas(k, 9), Error);
}

TEST(DiameterLemmas, CycleGraph) {
  // C_8 minus an edge is the path P_8.
  std::vector<Edge> edges;
  for (Vertex j = 0; j < 8; ++j) edges.push_back({j, static_cast<Vertex>((j + 1) % 8)});
  const auto h = Hypergraph::build(8, 2, edges);
  EXPECT_EQ(diameter(h), 4u);
  const auto c = check_diameter_lemmas(h, 0);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->diameter_after, 7u);
  EXPECT_EQ(c->diameter_limit, 10u);
  EXPECT_EQ(c->distance_sum, 7u);
  EXPECT_TRUE(c->diameter_ok);
  EXPECT_TRUE(c->distance_sum_ok);
}

TEST(DiameterLemmas, HoldOnCorpus) {
  for (const auto& inst : testkit::general_corpus(20, 4100)) {
    const auto& h = inst.graph;
    for (std::size_t e = 0; e < h.num_edges(); ++e) {
      const auto c = check_diameter_lemmas(h, e);
      if (!c) continue;
      EXPECT_TRUE(c->diameter_ok) << inst.name;
      EXPECT_TRUE(c->distance_sum_ok) << inst.name;
    }
  }
}

TEST(Audit, LoosePath) {
  const auto rep = audit_edge_deletions(loose_path(2, 3));
  EXPECT_TRUE(rep.pass);
  EXPECT_EQ(rep.diameter, 2u);
  ASSERT_EQ(rep.records.size(), 2u);
  EXPECT_EQ(rep.disconnected_deletions, 2u);
  for (const auto& r : rep.records) {
    EXPECT_NEAR(r.gap, std::cbrt(2.0) - 1.0, 1e-10);
    EXPECT_NEAR(r.gap, 0.259921, 1e-6);
    EXPECT_NEAR(r.bound.bound, 0.009375, 1e-12);
    EXPECT_FALSE(r.connected_after);
    EXPECT_EQ(r.component_count, 3u);
    EXPECT_FALSE(r.lemmas.has_value());
  }
}

TEST(Audit, ReusesSuppliedRho) {
  const auto h = complete(5, 3);
  const double rho = power_iteration(h).rho;
  const auto rep = audit_edge_deletions(h, {}, rho);
  EXPECT_EQ(rep.rho, rho);
  EXPECT_EQ(rep.connected_deletions, 10u);
  EXPECT_TRUE(rep.pass);
}

TEST(Audit, PassesOnCorpus) {
  for (const auto& inst : testkit::general_corpus(10, 4300)) {
    const auto rep = audit_edge_deletions(inst.graph);
    EXPECT_TRUE(rep.pass) << inst.name;
    for (const auto& r : rep.records) EXPECT_GT(r.gap, 0.0) << inst.name;
  }
}

TEST(Audit, RejectsDisconnected) {
  EXPECT_THROW(audit_edge_deletions(Hypergraph::build(6, 3, {{0, 1, 2}, {3, 4, 5}})), Error);
}

#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rtspan/cover_basic.hpp"
#include "rtspan/errors.hpp"
#include "rtspan/verifier.hpp"

namespace rtspan {
namespace {

using testing::kInf;
using testing::random_graph;
using testing::triangle;

TEST(AllPairsRoundtrip, MatchesFloydWarshall) {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const Graph g = testing::with_integer_weights(random_graph(seed, 5 + seed * 2, 0.2, 50, Model::kGnpDirected));
    const auto fw = testing::floyd_warshall(g);
    const RoundtripMatrix m = all_pairs_roundtrip(g, 1 + seed % 3);
    for (Vertex u = 0; u < g.vertex_count(); ++u)
      for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const double expected = u == v ? 0.0 : fw[u][v] + fw[v][u];
        EXPECT_EQ(m.at(u, v), expected);
      }
  }
}

TEST(AllPairsRoundtrip, SymmetricWithTriangleInequality) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = random_graph(seed, 25, 0.12, 100);
    const RoundtripMatrix m = all_pairs_roundtrip(g);
    for (Vertex u = 0; u < 25; ++u)
      for (Vertex v = 0; v < 25; ++v) {
        EXPECT_EQ(m.at(u, v), m.at(v, u));
        for (Vertex w = 0; w < 25; ++w) EXPECT_LE(m.at(u, v), (m.at(u, w) + m.at(w, v)) * (1 + 1e-12));
      }
  }
}

TEST(VerifyStretch, AllEdgesIsExact) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = random_graph(seed, 20, 0.15, 100, Model::kGnpDirected);
    const StretchReport rep = verify_stretch(g, EdgeSet::all(g), 1);
    EXPECT_TRUE(rep.violations.empty());
    EXPECT_EQ(rep.max_stretch, 1.0);
    EXPECT_EQ(rep.spanner_edges, g.edge_count());
  }
}

TEST(VerifyStretch, BrokenTriangle) {
  const Graph g = triangle();
  EdgeSet two(3);
  two.insert(EdgeId{0});
  two.insert(EdgeId{1});
  const StretchReport rep = verify_stretch(g, two, 1e6);
  EXPECT_EQ(rep.finite_pairs, 3u);
  EXPECT_EQ(rep.violations.size(), 3u);
  EXPECT_EQ(rep.max_stretch, kInf);
  EXPECT_EQ(rep.violations[0].d_spanner, kInf);
}

TEST(VerifyStretch, ForeignEdgeSet) {
  EXPECT_THROW(verify_stretch(triangle(), EdgeSet(4), 3), ContainmentError);
}

TEST(VerifyStretch, BasicSpannerOnSixtyVertices) {
  const Graph g = random_graph(60, 60, 0.15, 100);
  EXPECT_EQ(strongly_connected_components(g), std::vector<std::uint32_t>(60, 0));
  const StretchReport rep = verify_stretch(g, spanner_basic(g, 2).edges, 3);
  EXPECT_TRUE(rep.violations.empty());
  EXPECT_GE(rep.max_stretch, 1.0);
}

TEST(VerifyStretch, ToleranceAbsorbsRounding) {
  // d_G = 3 and d_H = 9 exactly: bound 3 holds with no slack needed.
  const Graph g = build_graph(2, std::vector<Edge>{{0, 1, 1}, {1, 0, 2}, {0, 1, 7}});
  EdgeSet h(3);
  h.insert(EdgeId{1});
  h.insert(EdgeId{2});
  EXPECT_TRUE(verify_stretch(g, h, 3).violations.empty());
  EXPECT_EQ(verify_stretch(g, h, 2.9).violations.size(), 1u);
}

TEST(VerifySize, Examples) {
  const SizeCheck a = verify_size(100, 1, 2, 6644, SizeMode::kStrong);
  EXPECT_NEAR(a.bound_value, 13287.7, 0.1);
  EXPECT_NEAR(a.ratio, 0.5, 1e-3);
  const SizeCheck b = verify_size(2, 1, 2, 2, SizeMode::kBasic);
  EXPECT_NEAR(b.bound_value, 5.657, 1e-3);
  EXPECT_NEAR(b.ratio, 0.354, 1e-3);
  EXPECT_EQ(verify_size(50, 10, 3, 0, SizeMode::kBasic).ratio, 0.0);
  EXPECT_THROW(verify_size(1, 1, 2, 0, SizeMode::kBasic), PreconditionError);
}

TEST(VerifyStretchProperties, AddingEdgesNeverHurts) {
  std::mt19937_64 rng(17);
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const Graph g = random_graph(seed, 18, 0.25, 100);
    EdgeSet h(g.edge_count());
    double previous = kInf;
    std::vector<std::uint32_t> order(g.edge_count());
    for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t i = 0; i < order.size(); ++i) {
      h.insert(EdgeId{order[i]});
      if (i % 5 != 4 && i + 1 != order.size()) continue;
      const double s = verify_stretch(g, h, 3).max_stretch;
      EXPECT_LE(s, previous);
      previous = s;
    }
    EXPECT_EQ(previous, 1.0);
  }
}

TEST(MatchEdges, ParallelCopiesMapToDistinctIds) {
  const Graph g = build_graph(2, std::vector<Edge>{{0, 1, 2}, {0, 1, 2}, {1, 0, 1}});
  const Graph s = build_graph(2, std::vector<Edge>{{0, 1, 2}, {0, 1, 2}});
  EXPECT_EQ(match_edges(g, s).members(), (std::vector<EdgeId>{{0}, {1}}));
  const Graph one = build_graph(2, std::vector<Edge>{{0, 1, 2}});
  EXPECT_EQ(match_edges(g, one).members(), (std::vector<EdgeId>{{0}}));
}

TEST(MatchEdges, MissingEdgeIsAContainmentError) {
  const Graph g = triangle();
  EXPECT_THROW(match_edges(g, build_graph(3, std::vector<Edge>{{1, 0, 1}})), ContainmentError);
  EXPECT_THROW(match_edges(g, build_graph(3, std::vector<Edge>{{0, 1, 2}})), ContainmentError);
  EXPECT_THROW(match_edges(g, build_graph(3, std::vector<Edge>{{0, 1, 1}, {0, 1, 1}})), ContainmentError);
  EXPECT_THROW(match_edges(g, build_graph(4, std::vector<Edge>{})), ContainmentError);
}

}  // namespace
}  // namespace rtspan

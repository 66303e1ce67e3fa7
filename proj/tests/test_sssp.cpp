#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rtspan/errors.hpp"
#include "rtspan/sssp.hpp"

namespace rtspan {
namespace {

using testing::kInf;
using testing::random_graph;
using testing::triangle;
using testing::two_cycle;

std::vector<Edge> edges_of(const Graph& g, const EdgeSet& s) {
  std::vector<Edge> out;
  for (EdgeId e : s.members()) out.push_back(g.edge(e));
  return out;
}

TEST(Dijkstra, TwoCycleForward) {
  const Graph g = two_cycle();
  const DistanceMap d = dijkstra(GraphView(g), 0, Direction::kForward);
  EXPECT_EQ(d.dist, (std::vector<double>{0, 2}));
  EXPECT_EQ(d.parent[1], EdgeId{0});
  EXPECT_FALSE(d.parent[0].has_value());
}

TEST(Dijkstra, TwoCycleBackward) {
  const Graph g = two_cycle();
  const DistanceMap d = dijkstra(GraphView(g), 0, Direction::kBackward);
  EXPECT_EQ(d.dist, (std::vector<double>{0, 3}));
  EXPECT_EQ(d.parent[1], EdgeId{1});
}

TEST(Dijkstra, CapPrunesAtBoundary) {
  const Graph g = two_cycle();
  const DistanceMap d = dijkstra(GraphView(g), 0, Direction::kForward, 2.0);
  EXPECT_EQ(d.dist[0], 0.0);
  EXPECT_EQ(d.dist[1], kInf);
  EXPECT_FALSE(d.parent[1].has_value());
}

TEST(Dijkstra, SourceOutsideViewIsAnError) {
  const Graph g = two_cycle();
  const VertexSet u = VertexSet::of(2, std::vector<Vertex>{1});
  EXPECT_THROW(dijkstra(GraphView(g, u), 0, Direction::kForward), PreconditionError);
  EXPECT_THROW(dijkstra(GraphView(g), 0, Direction::kRoundtrip), ParameterError);
}

TEST(Dijkstra, ParallelEdgesPreferLowestIdOnTies) {
  const Graph g = build_graph(2, std::vector<Edge>{{0, 1, 5}, {0, 1, 2}, {0, 1, 2}});
  const DistanceMap d = dijkstra(GraphView(g), 0, Direction::kForward);
  EXPECT_EQ(d.dist[1], 2.0);
  EXPECT_EQ(d.parent[1], EdgeId{1});
}

TEST(Dijkstra, EqualKeysSettleSmallerVertexFirst) {
  // 0->1 and 0->2 both at 1; 1->3 and 2->3 both reach 3 at 2. Vertex 1 is
  // settled first, so its edge is kept.
  const Graph g = build_graph(4, std::vector<Edge>{{0, 2, 1}, {0, 1, 1}, {2, 3, 1}, {1, 3, 1}});
  const DistanceMap d = dijkstra(GraphView(g), 0, Direction::kForward);
  EXPECT_EQ(d.parent[3], EdgeId{3});
}

TEST(RoundtripFrom, TwoCycle) {
  const Graph g = two_cycle();
  EXPECT_EQ(roundtrip_from(GraphView(g), 0).dist, (std::vector<double>{0, 5}));
}

TEST(RoundtripFrom, TriangleIsWholeCycle) {
  const Graph g = triangle();
  EXPECT_EQ(roundtrip_from(GraphView(g), 0).dist, (std::vector<double>{0, 3, 3}));
}

TEST(RoundtripFrom, NoReturnPathIsInfinite) {
  const Graph g = build_graph(2, std::vector<Edge>{{0, 1, 1}});
  const DistanceMap d = roundtrip_from(GraphView(g), 0);
  EXPECT_EQ(d.dist[0], 0.0);
  EXPECT_EQ(d.dist[1], kInf);
  EXPECT_EQ(d.direction, Direction::kRoundtrip);
}

TEST(Ball, OpenExcludesBoundary) {
  const Graph g = two_cycle();
  EXPECT_EQ(ball(GraphView(g), 0, 5, false).members(), (std::vector<Vertex>{0}));
}

TEST(Ball, ClosedIncludesBoundary) {
  const Graph g = two_cycle();
  EXPECT_EQ(ball(GraphView(g), 0, 5, true).members(), (std::vector<Vertex>{0, 1}));
}

TEST(Ball, ClosedZeroRadiusIsCenter) {
  const Graph g = triangle();
  EXPECT_EQ(ball(GraphView(g), 0, 0, true).members(), (std::vector<Vertex>{0}));
}

TEST(InOutTrees, TwoCycleInsideBall) {
  const Graph g = two_cycle();
  EXPECT_EQ(in_out_trees(GraphView(g), 0, 6).size(), 2u);
}

TEST(InOutTrees, TwoCycleOnBoundaryIsEmpty) {
  const Graph g = two_cycle();
  EXPECT_TRUE(in_out_trees(GraphView(g), 0, 5).empty());
}

TEST(InOutTrees, TriangleNeedsAllEdges) {
  // Outward tree {0->1, 1->2}; inward tree {2->0, 1->2}.
  const Graph g = triangle();
  EXPECT_EQ(in_out_trees(GraphView(g), 0, 4).size(), 3u);
}

TEST(InOutTrees, ZeroRadiusIsEmpty) {
  const Graph g = triangle();
  EXPECT_TRUE(in_out_trees(GraphView(g), 0, 0).empty());
}

struct Instance {
  Graph g;
  VertexSet alive;
};

std::vector<Instance> random_instances() {
  std::vector<Instance> out;
  std::mt19937_64 rng(11);
  const Model models[] = {Model::kGnpBidirected, Model::kGnpDirected, Model::kLayered};
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const std::size_t n = 5 + seed % 46;
    const Model model = models[seed % 3];
    const double p = model == Model::kGnpBidirected ? 0.12 : 0.2;
    Graph g = random_graph(seed, n, p, seed % 2 ? 100.0 : 1.0, model);
    VertexSet alive(n, true);
    if (seed % 4 == 3)
      for (Vertex v = 0; v < n; ++v)
        if (rng() % 4 == 0) alive.erase(v);
    out.push_back({std::move(g), std::move(alive)});
  }
  return out;
}

TEST(DijkstraProperties, MatchesBellmanFordExactly) {
  for (const auto& [g, alive] : random_instances()) {
    const GraphView view(g, alive);
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
      if (!alive.contains(s)) continue;
      EXPECT_EQ(dijkstra(view, s, Direction::kForward).dist, testing::bellman_ford_from(g, s, &alive));
      EXPECT_EQ(dijkstra(view, s, Direction::kBackward).dist, testing::bellman_ford_to(g, s, &alive));
    }
  }
}

TEST(DijkstraProperties, ParentsFormShortestPathTrees) {
  for (const auto& [g, alive] : random_instances()) {
    const GraphView view(g, alive);
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
      if (!alive.contains(s)) continue;
      const DistanceMap d = dijkstra(view, s, Direction::kForward);
      for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (!d.reached(v) || v == s) continue;
        // Walk to the source, re-adding weights in path order.
        std::vector<double> weights;
        Vertex x = v;
        while (x != s) {
          ASSERT_TRUE(d.parent[x].has_value());
          const Edge& e = g.edge(*d.parent[x]);
          ASSERT_EQ(e.head, x);
          weights.push_back(e.weight);
          x = e.tail;
        }
        double len = 0.0;
        for (auto it = weights.rbegin(); it != weights.rend(); ++it) len += *it;
        EXPECT_EQ(len, d.dist[v]);
      }
    }
  }
}

TEST(DijkstraProperties, CappedSearchAgreesBelowCap) {
  for (const auto& [g, alive] : random_instances()) {
    const GraphView view(g, alive);
    const Vertex s = alive.members().front();
    const DistanceMap full = dijkstra(view, s, Direction::kForward);
    for (double cap : {1.0, 3.0, 20.0, 150.0}) {
      const DistanceMap part = dijkstra(view, s, Direction::kForward, cap);
      for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (full.dist[v] < cap) {
          EXPECT_EQ(part.dist[v], full.dist[v]);
          EXPECT_EQ(part.parent[v], full.parent[v]);
        } else {
          EXPECT_EQ(part.dist[v], kInf);
        }
      }
    }
  }
}

TEST(RoundtripProperties, SymmetricAndTriangleInequality) {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const Graph g = testing::with_integer_weights(random_graph(seed, 20, 0.15, 50, Model::kGnpDirected));
    const GraphView view(g);
    std::vector<std::vector<double>> rt;
    for (Vertex u = 0; u < 20; ++u) rt.push_back(roundtrip_from(view, u).dist);
    for (Vertex u = 0; u < 20; ++u) {
      EXPECT_EQ(rt[u][u], 0.0);
      for (Vertex v = 0; v < 20; ++v) {
        EXPECT_EQ(rt[u][v], rt[v][u]);
        for (Vertex w = 0; w < 20; ++w) EXPECT_LE(rt[u][v], rt[u][w] + rt[w][v]);
      }
    }
  }
}

TEST(BallProperties, OpenInsideClosedAndMonotone) {
  for (const auto& [g, alive] : random_instances()) {
    const GraphView view(g, alive);
    const Vertex u = alive.members().back();
    const DistanceMap rt = roundtrip_from(view, u);
    VertexSet previous(g.vertex_count());
    for (double r : {0.0, 2.0, 5.0, 17.0, 60.0, 400.0}) {
      const VertexSet open = ball(view, u, r, false);
      const VertexSet closed = ball(view, u, r, true);
      for (Vertex v : open.members()) EXPECT_TRUE(closed.contains(v));
      for (Vertex v : previous.members()) EXPECT_TRUE(open.contains(v) || closed.contains(v));
      for (Vertex v = 0; v < g.vertex_count(); ++v) {
        EXPECT_EQ(open.contains(v), rt.dist[v] < r);
        EXPECT_EQ(closed.contains(v), rt.dist[v] <= r);
      }
      previous = closed;
    }
  }
}

TEST(InOutTreesProperties, TreesStayInBallAndRealizeDistances) {
  for (const auto& [g, alive] : random_instances()) {
    const GraphView view(g, alive);
    for (Vertex u : alive.members()) {
      const DistanceMap out = dijkstra(view, u, Direction::kForward);
      const DistanceMap in = dijkstra(view, u, Direction::kBackward);
      for (double r : {4.0, 40.0, 250.0}) {
        const VertexSet b = ball(view, u, r, false);
        const EdgeSet trees = in_out_trees(view, u, r);
        EXPECT_LE(trees.size(), 2 * (b.size() - 1));
        for (EdgeId e : trees.members()) {
          EXPECT_TRUE(b.contains(g.edge(e).tail));
          EXPECT_TRUE(b.contains(g.edge(e).head));
        }
        const Graph sub = build_graph(g.vertex_count(), edges_of(g, trees));
        const auto from_u = testing::bellman_ford_from(sub, u);
        const auto to_u = testing::bellman_ford_to(sub, u);
        for (Vertex v : b.members()) {
          EXPECT_EQ(from_u[v], out.dist[v]);
          EXPECT_EQ(to_u[v], in.dist[v]);
        }
      }
    }
  }
}

}  // namespace
}  // namespace rtspan

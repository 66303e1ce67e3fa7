#include "rtspan/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <string>
#include <tuple>

#include "rtspan/errors.hpp"
#include "rtspan/parallel.hpp"

namespace rtspan {

namespace {

std::vector<double> plain_dijkstra(const std::vector<std::vector<std::pair<Vertex, double>>>& adj,
                                   Vertex source) {
  std::vector<double> dist(adj.size(), kInfinity);
  using Item = std::pair<double, Vertex>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist[source] = 0.0;
  queue.emplace(0.0, source);
  while (!queue.empty()) {
    auto [d, v] = queue.top();
    queue.pop();
    if (d > dist[v]) continue;
    for (auto [w, weight] : adj[v]) {
      const double nd = d + weight;
      if (nd < dist[w]) {
        dist[w] = nd;
        queue.emplace(nd, w);
      }
    }
  }
  return dist;
}

}  // namespace

RoundtripMatrix all_pairs_roundtrip(const Graph& g, unsigned threads) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::pair<Vertex, double>>> adj(n);
  for (const Edge& e : g.edges()) adj[e.tail].emplace_back(e.head, e.weight);

  std::vector<double> one_way(n * n);
  parallel_for(n, threads, [&](std::size_t u) {
    const std::vector<double> dist = plain_dijkstra(adj, static_cast<Vertex>(u));
    std::copy(dist.begin(), dist.end(), one_way.begin() + static_cast<std::ptrdiff_t>(u * n));
  });

  RoundtripMatrix m;
  m.n = n;
  m.d.assign(n * n, 0.0);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) {
      const double rt = one_way[u * n + v] + one_way[v * n + u];
      m.d[u * n + v] = rt;
      m.d[v * n + u] = rt;
    }
  return m;
}

StretchReport verify_stretch(const Graph& g, const EdgeSet& spanner, double bound, unsigned threads) {
  if (spanner.universe() != g.edge_count())
    throw ContainmentError("verify_stretch: spanner edge set belongs to a different graph");
  const Graph h = edge_subgraph(g, spanner);
  const RoundtripMatrix dg = all_pairs_roundtrip(g, threads);
  const RoundtripMatrix dh = all_pairs_roundtrip(h, threads);

  StretchReport report;
  report.spanner_edges = spanner.size();
  report.original_edges = g.edge_count();
  bool first = true;
  const std::size_t n = g.vertex_count();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const double d = dg.at(u, v);
      if (d == kInfinity) continue;
      ++report.finite_pairs;
      const double dspan = dh.at(u, v);
      const double stretch = dspan / d;
      if (first || stretch > report.max_stretch) {
        report.max_stretch = stretch;
        report.argmax_pair = {u, v};
        first = false;
      }
      if (dspan > bound * d * (1.0 + kStretchTolerance)) report.violations.push_back({u, v, d, dspan});
    }
  }
  return report;
}

SizeCheck verify_size(std::size_t n, double max_weight, int k, std::size_t spanner_edges, SizeMode mode) {
  if (n < 2) throw PreconditionError("verify_size: n must be at least 2");
  if (k < 1) throw ParameterError("verify_size: k must be positive");
  const double nd = static_cast<double>(n);
  const double log_term = mode == SizeMode::kBasic ? std::log2(nd * max_weight) : std::log2(nd);
  SizeCheck check;
  check.bound_value = static_cast<double>(k) * std::pow(nd, 1.0 + 1.0 / k) * log_term;
  check.ratio = static_cast<double>(spanner_edges) / check.bound_value;
  return check;
}

EdgeSet match_edges(std::span<const Edge> graph_edges, std::span<const Edge> spanner_edges) {
  std::map<std::tuple<Vertex, Vertex, double>, std::vector<EdgeId>> pool;
  for (std::uint32_t i = static_cast<std::uint32_t>(graph_edges.size()); i-- > 0;) {
    const Edge& e = graph_edges[i];
    pool[{e.tail, e.head, e.weight}].push_back(EdgeId{i});
  }
  EdgeSet out(graph_edges.size());
  for (const Edge& e : spanner_edges) {
    auto it = pool.find({e.tail, e.head, e.weight});
    if (it == pool.end() || it->second.empty())
      throw ContainmentError("spanner edge " + std::to_string(e.tail) + "->" + std::to_string(e.head) +
                             " is not an edge of the graph");
    out.insert(it->second.back());  // lowest remaining id
    it->second.pop_back();
  }
  return out;
}

EdgeSet match_edges(const Graph& g, const Graph& spanner) {
  if (spanner.vertex_count() != g.vertex_count())
    throw ContainmentError("spanner has " + std::to_string(spanner.vertex_count()) +
                           " vertices, graph has " + std::to_string(g.vertex_count()));
  return match_edges(g.edges(), spanner.edges());
}

}  // namespace rtspan

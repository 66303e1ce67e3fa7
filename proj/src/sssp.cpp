#include "rtspan/sssp.hpp"

#include <cmath>
#include <functional>
#include <queue>
#include <string>
#include <utility>

#include "rtspan/errors.hpp"

namespace rtspan {

namespace {

using QueueItem = std::pair<double, Vertex>;
using MinQueue = std::priority_queue<QueueItem, std::vector<QueueItem>, std::greater<>>;

DistanceMap run_dijkstra(const GraphView& view, std::span<const Vertex> sources,
                         Direction direction, double radius_cap) {
  if (direction == Direction::kRoundtrip)
    throw ParameterError("dijkstra: direction must be forward or backward");
  if (sources.empty()) throw PreconditionError("dijkstra: no source vertex");
  const std::size_t n = view.vertex_universe();

  DistanceMap map;
  map.source = sources.front();
  map.direction = direction;
  map.dist.assign(n, kInfinity);
  map.parent.assign(n, std::nullopt);
  std::vector<std::uint8_t> settled(n, 0);

  MinQueue queue;
  for (Vertex s : sources) {
    if (!view.contains(s))
      throw PreconditionError("dijkstra: source " + std::to_string(s) + " is not in the view");
    if (!(0.0 < radius_cap)) continue;
    if (map.dist[s] != 0.0) {
      map.dist[s] = 0.0;
      queue.emplace(0.0, s);
    }
  }

  const bool forward = direction == Direction::kForward;
  while (!queue.empty()) {
    auto [d, v] = queue.top();
    queue.pop();
    if (settled[v] || d > map.dist[v]) continue;
    settled[v] = 1;
    auto relax = [&](EdgeId id, const Edge& e) {
      Vertex w = forward ? e.head : e.tail;
      if (settled[w]) return;
      double nd = d + e.weight;
      if (nd < map.dist[w] && nd < radius_cap) {
        map.dist[w] = nd;
        map.parent[w] = id;
        queue.emplace(nd, w);
      }
    };
    if (forward)
      view.for_each_out(v, relax);
    else
      view.for_each_in(v, relax);
  }
  return map;
}

}  // namespace

DistanceMap dijkstra(const GraphView& view, Vertex source, Direction direction, double radius_cap) {
  const Vertex sources[] = {source};
  return run_dijkstra(view, sources, direction, radius_cap);
}

DistanceMap multi_source_dijkstra(const GraphView& view, std::span<const Vertex> sources,
                                  Direction direction, double radius_cap) {
  return run_dijkstra(view, sources, direction, radius_cap);
}

RoundtripSearch roundtrip_search(const GraphView& view, Vertex u, double radius_cap) {
  RoundtripSearch s;
  s.radius_cap = radius_cap;
  s.out = dijkstra(view, u, Direction::kForward, radius_cap);
  s.in = dijkstra(view, u, Direction::kBackward, radius_cap);
  s.roundtrip.resize(s.out.dist.size());
  for (std::size_t v = 0; v < s.roundtrip.size(); ++v) s.roundtrip[v] = s.out.dist[v] + s.in.dist[v];
  return s;
}

DistanceMap roundtrip_from(const GraphView& view, Vertex u, double radius_cap) {
  RoundtripSearch s = roundtrip_search(view, u, radius_cap);
  DistanceMap map;
  map.source = u;
  map.direction = Direction::kRoundtrip;
  map.dist = std::move(s.roundtrip);
  map.parent.assign(map.dist.size(), std::nullopt);
  return map;
}

double closed_cap(double radius) { return std::nextafter(radius, kInfinity); }

VertexSet ball(const GraphView& view, Vertex u, double radius, bool closed) {
  if (!(radius >= 0.0)) throw ParameterError("ball: radius must be non-negative");
  const double cap = closed ? closed_cap(radius) : radius;
  RoundtripSearch s = roundtrip_search(view, u, cap);
  VertexSet out(view.vertex_universe());
  for (Vertex v = 0; v < s.roundtrip.size(); ++v) {
    const double d = s.roundtrip[v];
    if (closed ? d <= radius : d < radius) out.insert(v);
  }
  return out;
}

void add_tree_path(const Graph& g, const DistanceMap& tree, Vertex v,
                   std::vector<std::uint8_t>& visited, EdgeSet& out) {
  const bool forward = tree.direction == Direction::kForward;
  while (!visited[v]) {
    visited[v] = 1;
    const auto& p = tree.parent[v];
    if (!p) break;
    out.insert(*p);
    const Edge& e = g.edge(*p);
    v = forward ? e.tail : e.head;
  }
}

EdgeSet in_out_trees(const Graph& g, const RoundtripSearch& search, double radius) {
  if (radius > search.radius_cap)
    throw PreconditionError("in_out_trees: search cap is below the requested radius");
  EdgeSet out(g.edge_count());
  const std::size_t n = search.roundtrip.size();
  std::vector<std::uint8_t> seen_out(n, 0), seen_in(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    if (!(search.roundtrip[v] < radius)) continue;
    add_tree_path(g, search.out, v, seen_out, out);
    add_tree_path(g, search.in, v, seen_in, out);
  }
  return out;
}

EdgeSet in_out_trees(const GraphView& view, Vertex u, double radius) {
  if (!(radius >= 0.0)) throw ParameterError("in_out_trees: radius must be non-negative");
  return in_out_trees(view.graph(), roundtrip_search(view, u, radius), radius);
}

}  // namespace rtspan

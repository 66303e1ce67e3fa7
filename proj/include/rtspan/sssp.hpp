#pragma once

#include <optional>
#include <span>
#include <vector>

#include "rtspan/graph.hpp"

namespace rtspan {

enum class Direction { kForward, kBackward, kRoundtrip };

/// Distances from (forward), to (backward) or around (roundtrip) a source.
///
/// For one-way maps `parent[v]` is the tree edge through which v was settled:
/// forward trees point at the tail of the edge entering v, backward trees at
/// the head of the edge leaving v. Roundtrip maps carry no parents.
struct DistanceMap {
  Vertex source = 0;
  Direction direction = Direction::kForward;
  std::vector<double> dist;
  std::vector<std::optional<EdgeId>> parent;

  bool reached(Vertex v) const { return dist[v] != kInfinity; }
};

/// Single-source Dijkstra over a view.
///
/// Ties on the key pop the smaller vertex id first and a vertex keeps the first
/// edge that reached its final distance. Vertices whose key is >= radius_cap are
/// never settled and are reported as kInfinity.
DistanceMap dijkstra(const GraphView& view, Vertex source, Direction direction,
                     double radius_cap = kInfinity);

/// Dijkstra started from every vertex of `sources` at distance zero. The
/// returned map's `source` is the first entry of `sources`.
DistanceMap multi_source_dijkstra(const GraphView& view, std::span<const Vertex> sources,
                                  Direction direction, double radius_cap = kInfinity);

/// Both one-way searches around a center plus their sum.
struct RoundtripSearch {
  DistanceMap out;  // forward, from the center
  DistanceMap in;   // backward, towards the center
  std::vector<double> roundtrip;
  double radius_cap = kInfinity;
};

RoundtripSearch roundtrip_search(const GraphView& view, Vertex u, double radius_cap = kInfinity);

/// d(u->v) + d(v->u) for every v; exact wherever the sum is below radius_cap.
DistanceMap roundtrip_from(const GraphView& view, Vertex u, double radius_cap = kInfinity);

/// Open (d < R) or closed (d <= R) roundtrip ball around u.
VertexSet ball(const GraphView& view, Vertex u, double radius, bool closed);

/// Outward plus inward shortest-path tree edges spanning the open ball
/// Ball(u, R).
EdgeSet in_out_trees(const GraphView& view, Vertex u, double radius);

/// Same as above but reuses a finished search whose cap is at least `radius`.
EdgeSet in_out_trees(const Graph& g, const RoundtripSearch& search, double radius);

/// Adds to `out` the tree path from v back to the root of a one-way search,
/// stopping early at vertices already marked in `visited`.
void add_tree_path(const Graph& g, const DistanceMap& tree, Vertex v,
                   std::vector<std::uint8_t>& visited, EdgeSet& out);

/// Smallest cap under which a search still settles every vertex at distance
/// exactly R.
double closed_cap(double radius);

}  // namespace rtspan

#include "rtspan/radius_hitting.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rtspan/errors.hpp"
#include "rtspan/parallel.hpp"
#include "rtspan/sssp.hpp"

namespace rtspan {

long double snapped_root_power(std::size_t n, long double num, long double den) {
  const long double x = std::pow(static_cast<long double>(n), num / den);
  const long double nearest = std::round(x);
  if (std::fabs(x - nearest) < 1e-9L) return nearest;
  return x;
}

std::size_t rank_threshold(std::size_t n, int k) {
  if (k < 1) throw ParameterError("k must be at least 1");
  const long double x = snapped_root_power(n, static_cast<long double>(k - 1), k);
  return static_cast<std::size_t>(std::ceil(x));
}

RadiusMap compute_radii(const Graph& g, int k, unsigned threads) {
  if (k < 2) throw ParameterError("compute_radii: k must be at least 2, got " + std::to_string(k));
  const std::size_t n = g.vertex_count();
  if (n == 0) throw PreconditionError("compute_radii: graph has no vertices");

  RadiusMap radii;
  radii.k = k;
  radii.threshold = rank_threshold(n, k);
  radii.r.assign(n, kInfinity);
  const GraphView view(g);
  parallel_for(n, threads, [&](std::size_t u) {
    DistanceMap rt = roundtrip_from(view, static_cast<Vertex>(u));
    std::vector<double> finite;
    finite.reserve(n);
    for (double d : rt.dist)
      if (d != kInfinity) finite.push_back(d);
    if (finite.size() < radii.threshold) return;
    auto nth = finite.begin() + static_cast<std::ptrdiff_t>(radii.threshold - 1);
    std::nth_element(finite.begin(), nth, finite.end());
    radii.r[u] = *nth;
  });
  return radii;
}

HittingSet hitting_set(std::size_t n, const std::vector<VertexSet>& sets, std::size_t p) {
  std::vector<std::vector<std::size_t>> containing(n);
  std::vector<std::vector<Vertex>> members(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (sets[i].universe() != n)
      throw PreconditionError("hitting_set: set " + std::to_string(i) + " has the wrong universe");
    if (sets[i].size() <= p)
      throw PreconditionError("hitting_set: set " + std::to_string(i) + " has " +
                              std::to_string(sets[i].size()) + " members, need more than " +
                              std::to_string(p));
    members[i] = sets[i].members();
    for (Vertex v : members[i]) containing[v].push_back(i);
  }

  std::vector<std::size_t> unhit_count(n);
  for (Vertex v = 0; v < n; ++v) unhit_count[v] = containing[v].size();
  std::vector<std::uint8_t> hit(sets.size(), 0);
  std::size_t remaining = sets.size();

  HittingSet result{VertexSet(n)};
  while (remaining > 0) {
    Vertex best = 0;
    for (Vertex v = 1; v < n; ++v)
      if (unhit_count[v] > unhit_count[best]) best = v;
    result.members.insert(best);
    for (std::size_t s : containing[best]) {
      if (hit[s]) continue;
      hit[s] = 1;
      --remaining;
      for (Vertex w : members[s]) --unhit_count[w];
    }
  }
  return result;
}

Preprocessing build_e0(const Graph& g, const RadiusMap& radii, unsigned threads) {
  const std::size_t n = g.vertex_count();
  if (radii.r.size() != n) throw PreconditionError("build_e0: radius map does not match the graph");
  if (radii.threshold != rank_threshold(n, radii.k))
    throw PreconditionError("build_e0: radius map threshold is inconsistent with k");

  const GraphView view(g);
  std::vector<VertexSet> balls(n);
  parallel_for(n, threads, [&](std::size_t u) {
    if (radii.r[u] != kInfinity) balls[u] = ball(view, static_cast<Vertex>(u), radii.r[u], true);
  });

  Preprocessing pre;
  for (Vertex u = 0; u < n; ++u)
    if (radii.r[u] != kInfinity) pre.family.push_back(std::move(balls[u]));

  // Every family member has at least `threshold` vertices.
  const std::size_t p = radii.threshold - 1;
  pre.hitting = hitting_set(n, pre.family, p);

  const std::vector<Vertex> centers = pre.hitting.members.members();
  std::vector<EdgeSet> trees(centers.size());
  parallel_for(centers.size(), threads, [&](std::size_t i) {
    EdgeSet edges(g.edge_count());
    for (Direction dir : {Direction::kForward, Direction::kBackward}) {
      DistanceMap tree = dijkstra(view, centers[i], dir);
      for (const auto& parent : tree.parent)
        if (parent) edges.insert(*parent);
    }
    trees[i] = std::move(edges);
  });
  pre.e0 = EdgeSet(g.edge_count());
  for (const EdgeSet& t : trees) pre.e0.merge(t);
  return pre;
}

}  // namespace rtspan

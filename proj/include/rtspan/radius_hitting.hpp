#pragma once

#include <cstddef>
#include <vector>

#include "rtspan/graph.hpp"

namespace rtspan {

/// n^(num/den) with values within 1e-9 of an integer snapped onto it.
long double snapped_root_power(std::size_t n, long double num, long double den);

/// ceil(n^(1-1/k)), the rank that defines R(u).
std::size_t rank_threshold(std::size_t n, int k);

/// Per-vertex radius R(u): roundtrip distance from u to the threshold-th
/// closest vertex (u itself is first), or kInfinity when fewer vertices are
/// reachable in both directions.
struct RadiusMap {
  std::vector<double> r;
  int k = 2;
  std::size_t threshold = 1;
};

RadiusMap compute_radii(const Graph& g, int k, unsigned threads = 1);

struct HittingSet {
  VertexSet members;
};

/// Greedy hitting set: repeatedly takes the vertex contained in the most sets
/// not yet hit, smallest id on ties. Every set must have more than p members.
HittingSet hitting_set(std::size_t n, const std::vector<VertexSet>& sets, std::size_t p);

struct Preprocessing {
  EdgeSet e0;
  HittingSet hitting;
  /// closedBall(u, R(u)) for each u with finite R(u), in vertex order.
  std::vector<VertexSet> family;
};

/// Hitting set of the finite-radius closed balls and the union E0 of full
/// inward and outward shortest-path trees rooted at its members.
Preprocessing build_e0(const Graph& g, const RadiusMap& radii, unsigned threads = 1);

}  // namespace rtspan

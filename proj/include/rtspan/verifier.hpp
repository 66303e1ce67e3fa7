#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "rtspan/graph.hpp"

namespace rtspan {

/// Dense n x n matrix of roundtrip distances, row-major.
struct RoundtripMatrix {
  std::size_t n = 0;
  std::vector<double> d;

  double at(Vertex u, Vertex v) const { return d[static_cast<std::size_t>(u) * n + v]; }
};

/// d(u->v) + d(v->u) for all pairs from n plain forward Dijkstra runs. This
/// deliberately shares no search code with the construction algorithms.
RoundtripMatrix all_pairs_roundtrip(const Graph& g, unsigned threads = 1);

struct StretchViolation {
  Vertex u = 0;
  Vertex v = 0;
  double d_graph = 0.0;
  double d_spanner = 0.0;
};

struct StretchReport {
  double max_stretch = 1.0;
  std::pair<Vertex, Vertex> argmax_pair{0, 0};
  std::size_t finite_pairs = 0;
  std::vector<StretchViolation> violations;
  std::size_t spanner_edges = 0;
  std::size_t original_edges = 0;
};

inline constexpr double kStretchTolerance = 1e-9;

/// Compares roundtrip distances of (V, spanner) against g over all unordered
/// pairs with finite distance in g. A pair violates the bound only if
/// d_H > bound * d_G * (1 + 1e-9).
StretchReport verify_stretch(const Graph& g, const EdgeSet& spanner, double bound,
                             unsigned threads = 1);

enum class SizeMode { kBasic, kStrong };

struct SizeCheck {
  double bound_value = 0.0;
  double ratio = 0.0;
};

/// k n^(1+1/k) log2(nW) (basic) or k n^(1+1/k) log2(n) (strong), and the
/// spanner size as a fraction of it.
SizeCheck verify_size(std::size_t n, double max_weight, int k, std::size_t spanner_edges, SizeMode mode);

/// Maps each edge of `spanner` onto a distinct edge of `g` with identical
/// endpoints and weight. Throws ContainmentError when one has no match.
EdgeSet match_edges(const Graph& g, const Graph& spanner);

/// Same matching on raw edge lists, with no weight validation. Returned ids
/// index `graph_edges`.
EdgeSet match_edges(std::span<const Edge> graph_edges, std::span<const Edge> spanner_edges);

}  // namespace rtspan

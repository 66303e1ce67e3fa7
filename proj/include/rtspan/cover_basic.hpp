#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "rtspan/graph.hpp"
#include "rtspan/radius_hitting.hpp"

namespace rtspan {

/// One center processed by a cover loop.
struct CoverIteration {
  Vertex center = 0;
  double step = 0.0;
  int h = 1;
  int phase = 2;  // 1: contracted loop of cover2, 2: plain loop
  std::size_t ball_size = 0;     // |Ball(center, h*step)|, supervertices in phase 1
  std::size_t removed_size = 0;  // original vertices removed from U
  std::size_t tree_edges = 0;
};

struct CoverTrace {
  double L = 0.0;
  int p = 0;
  std::vector<CoverIteration> iterations;
  std::size_t edges_added = 0;  // sum of per-iteration tree sizes

  std::size_t removed_total() const;
  int max_h() const;
};

struct SpannerOptions {
  unsigned threads = 1;
  /// Drop edges whose girth exceeds 2(k-1)L before the contracted searches.
  bool delete_long_edges = true;
  /// Keep per-iteration traces in the result.
  bool keep_traces = true;
};

struct SpannerStats {
  std::string algorithm;  // "basic", "strong", or "passthrough" for k = 1
  bool fell_back = false;  // strong requested, basic ran
  int k = 1;
  double epsilon = 0.0;
  std::size_t p_iterations = 0;
  std::size_t edge_count = 0;
  std::size_t e0_edges = 0;
  std::size_t hitting_set_size = 0;
  std::vector<CoverTrace> traces;
};

struct SpannerResult {
  EdgeSet edges;
  SpannerStats stats;
};

/// Least h >= 1 with ball_size_at(h) < n^(h/k).
int select_h(const std::function<std::size_t(int)>& ball_size_at, std::size_t n, int k);

/// The greedy ball-carving loop over G[alive]: centers in decreasing R(u)
/// order, step = min(R(u)/(k-1), L), trees over Ball(u, h*step), removal of
/// closedBall(u, (h-1)*step). Empties `alive`; tree edges go to `out`.
void cover_loop(const Graph& g, const RadiusMap& radii, double L, VertexSet& alive, EdgeSet& out,
                CoverTrace& trace);

/// Cover over the whole vertex set at scale L.
std::pair<EdgeSet, CoverTrace> cover(const Graph& g, const RadiusMap& radii, int k, double L);

/// Scaling driver with epsilon = 1/(2k-2); returns E0 plus every cover call
/// for L = (1+epsilon)^p, p = 0 .. floor(log_{1+epsilon}(2nW)) + 1.
SpannerResult spanner_basic(const Graph& g, int k, const SpannerOptions& options = {});

/// Vertices ordered by decreasing radius (infinite first), then by id.
std::vector<Vertex> center_order(const RadiusMap& radii);

/// Number of scaling levels: floor(log_{1+epsilon}(2nW)) + 2.
std::size_t scale_count(std::size_t n, double max_weight, double epsilon);

/// Throws InvariantViolation if a cover call added more than
/// 4 * n^(1/k) * (vertices removed) tree edges.
void check_cover_size(const CoverTrace& trace, std::size_t n, int k);

}  // namespace rtspan

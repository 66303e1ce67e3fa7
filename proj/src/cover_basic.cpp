#include "rtspan/cover_basic.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "rtspan/errors.hpp"
#include "rtspan/parallel.hpp"
#include "rtspan/sssp.hpp"

namespace rtspan {

std::size_t CoverTrace::removed_total() const {
  std::size_t total = 0;
  for (const auto& it : iterations) total += it.removed_size;
  return total;
}

int CoverTrace::max_h() const {
  int h = 0;
  for (const auto& it : iterations) h = std::max(h, it.h);
  return h;
}

int select_h(const std::function<std::size_t(int)>& ball_size_at, std::size_t n, int k) {
  if (k < 1) throw ParameterError("select_h: k must be positive");
  if (n <= 1) return 1;
  for (int h = 1;; ++h) {
    const long double limit = snapped_root_power(n, h, k);
    if (static_cast<long double>(ball_size_at(h)) < limit) return h;
    if (h > k + 1) throw InvariantViolation("select_h: ball sizes exceed n");
  }
}

std::vector<Vertex> center_order(const RadiusMap& radii) {
  std::vector<Vertex> order(radii.r.size());
  for (Vertex v = 0; v < order.size(); ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return radii.r[a] > radii.r[b]; });
  return order;
}

std::size_t scale_count(std::size_t n, double max_weight, double epsilon) {
  const double top = std::log(2.0 * static_cast<double>(n) * max_weight) / std::log1p(epsilon);
  return static_cast<std::size_t>(std::floor(top)) + 2;
}

void check_cover_size(const CoverTrace& trace, std::size_t n, int k) {
  const long double limit =
      4.0L * snapped_root_power(n, 1, k) * static_cast<long double>(trace.removed_total());
  if (static_cast<long double>(trace.edges_added) > limit)
    throw InvariantViolation("cover at L=" + std::to_string(trace.L) + " added " +
                             std::to_string(trace.edges_added) + " tree edges, above 4*n^(1/k)*" +
                             std::to_string(trace.removed_total()));
}

namespace {

// Ball radius h*step. When the step comes from R(u) the (k-1)-th multiple is
// pinned to R(u) itself so rounding can never push it past R(u).
struct StepScale {
  double step = 0.0;
  double radius_value = 0.0;  // R(u) when radius-based
  bool radius_based = false;
  int k = 2;

  double at(int h) const {
    if (h <= 0) return 0.0;
    if (!radius_based) return static_cast<double>(h) * step;
    if (h == k - 1) return radius_value;
    return radius_value * static_cast<double>(h) / static_cast<double>(k - 1);
  }
};

StepScale make_scale(double radius, double L, int k) {
  const double by_radius = radius / static_cast<double>(k - 1);
  if (by_radius <= L) return {by_radius, radius, true, k};
  return {L, 0.0, false, k};
}

std::size_t count_below(const std::vector<double>& values, double bound) {
  return static_cast<std::size_t>(
      std::count_if(values.begin(), values.end(), [&](double d) { return d < bound; }));
}

}  // namespace

void cover_loop(const Graph& g, const RadiusMap& radii, double L, VertexSet& alive, EdgeSet& out,
                CoverTrace& trace) {
  const int k = radii.k;
  const std::size_t n = g.vertex_count();
  const GraphView view(g, alive);
  for (Vertex u : center_order(radii)) {
    if (!alive.contains(u)) continue;
    const StepScale scale = make_scale(radii.r[u], L, k);
    const RoundtripSearch search = roundtrip_search(view, u, scale.at(k - 1));

    std::optional<std::vector<double>> uncapped;
    auto ball_size_at = [&](int h) -> std::size_t {
      if (h <= k - 1) return count_below(search.roundtrip, scale.at(h));
      if (!uncapped) uncapped = roundtrip_search(view, u).roundtrip;
      return count_below(*uncapped, scale.at(h));
    };
    const int h = select_h(ball_size_at, n, k);
    if (h > k - 1)
      throw InvariantViolation("cover: selected h=" + std::to_string(h) + " exceeds k-1 at center " +
                               std::to_string(u));

    const double tree_radius = scale.at(h);
    const EdgeSet trees = in_out_trees(g, search, tree_radius);
    out.merge(trees);

    const double removal_radius = scale.at(h - 1);
    std::size_t removed = alive.erase(u) ? 1 : 0;
    for (Vertex v = 0; v < n; ++v)
      if (search.roundtrip[v] <= removal_radius && alive.erase(v)) ++removed;

    trace.iterations.push_back(
        {u, scale.step, h, 2, ball_size_at(h), removed, trees.size()});
    trace.edges_added += trees.size();
  }
}

std::pair<EdgeSet, CoverTrace> cover(const Graph& g, const RadiusMap& radii, int k, double L) {
  if (k < 2) throw ParameterError("cover: k must be at least 2");
  if (radii.k != k) throw PreconditionError("cover: radii were computed for a different k");
  if (!(L > 0.0)) throw ParameterError("cover: L must be positive");
  VertexSet alive(g.vertex_count(), true);
  EdgeSet edges(g.edge_count());
  CoverTrace trace;
  trace.L = L;
  cover_loop(g, radii, L, alive, edges, trace);
  check_cover_size(trace, g.vertex_count(), k);
  return {std::move(edges), std::move(trace)};
}

SpannerResult spanner_basic(const Graph& g, int k, const SpannerOptions& options) {
  if (k < 1) throw ParameterError("spanner: k must be at least 1, got " + std::to_string(k));
  SpannerResult result;
  result.stats.k = k;
  if (k == 1 || g.vertex_count() == 0) {
    result.edges = EdgeSet::all(g);
    result.stats.algorithm = "passthrough";
    result.stats.edge_count = result.edges.size();
    return result;
  }
  result.stats.algorithm = "basic";
  const double epsilon = 1.0 / static_cast<double>(2 * k - 2);
  result.stats.epsilon = epsilon;

  const RadiusMap radii = compute_radii(g, k, options.threads);
  Preprocessing pre = build_e0(g, radii, options.threads);
  result.stats.e0_edges = pre.e0.size();
  result.stats.hitting_set_size = pre.hitting.members.size();

  const std::size_t levels = scale_count(g.vertex_count(), g.max_weight(), epsilon);
  result.stats.p_iterations = levels;
  std::vector<EdgeSet> per_level(levels);
  std::vector<CoverTrace> traces(levels);
  parallel_for(levels, options.threads, [&](std::size_t p) {
    const double L = std::pow(1.0 + epsilon, static_cast<double>(p));
    auto [edges, trace] = cover(g, radii, k, L);
    trace.p = static_cast<int>(p);
    per_level[p] = std::move(edges);
    traces[p] = std::move(trace);
  });

  result.edges = std::move(pre.e0);
  for (const EdgeSet& e : per_level) result.edges.merge(e);
  result.stats.edge_count = result.edges.size();
  if (options.keep_traces) result.stats.traces = std::move(traces);
  return result;
}

}  // namespace rtspan

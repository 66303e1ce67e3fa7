#include "rtspan/cover_strong.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>

#include "rtspan/errors.hpp"
#include "rtspan/parallel.hpp"

namespace rtspan {

GirthMap compute_girths(const Graph& g, unsigned threads) {
  GirthMap girths;
  girths.g.assign(g.edge_count(), kInfinity);
  const GraphView view(g);
  parallel_for(g.vertex_count(), threads, [&](std::size_t tail) {
    const auto out = g.out_edges(static_cast<Vertex>(tail));
    if (out.empty()) return;
    // d(x -> tail) for every x.
    const DistanceMap back = dijkstra(view, static_cast<Vertex>(tail), Direction::kBackward);
    for (EdgeId e : out) {
      const Edge& ed = g.edge(e);
      girths.g[e.index] = ed.weight + back.dist[ed.head];
    }
  });
  return girths;
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), 0u);
  }

  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
  }

 private:
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint8_t> rank_;
};

void fill_members(ContractedGraph& cg, std::size_t count) {
  cg.members.assign(count, {});
  for (Vertex v = 0; v < cg.component_of.size(); ++v) cg.members[cg.component_of[v]].push_back(v);
}

}  // namespace

ContractedGraph contract(const Graph& g, const GirthMap& girths, double contract_threshold,
                         double delete_threshold) {
  if (girths.g.size() != g.edge_count()) throw PreconditionError("contract: girth map size mismatch");
  if (!(contract_threshold <= delete_threshold))
    throw PreconditionError("contract: contract_threshold exceeds delete_threshold");
  const std::size_t n = g.vertex_count();
  DisjointSets dsu(n);
  for (std::uint32_t i = 0; i < g.edge_count(); ++i) {
    if (girths.g[i] <= contract_threshold) dsu.unite(g.edges()[i].tail, g.edges()[i].head);
  }

  ContractedGraph cg;
  cg.contract_threshold = contract_threshold;
  cg.delete_threshold = delete_threshold;
  cg.component_of.resize(n);
  constexpr Supervertex kUnset = std::numeric_limits<Supervertex>::max();
  std::vector<Supervertex> label_of_root(n, kUnset);
  Supervertex next = 0;
  for (Vertex v = 0; v < n; ++v) {
    const std::uint32_t root = dsu.find(v);
    if (label_of_root[root] == kUnset) label_of_root[root] = next++;
    cg.component_of[v] = label_of_root[root];
  }
  fill_members(cg, next);

  for (std::uint32_t i = 0; i < g.edge_count(); ++i) {
    const double girth = girths.g[i];
    if (!(girth > contract_threshold && girth <= delete_threshold)) continue;
    const Edge& e = g.edges()[i];
    const Supervertex a = cg.component_of[e.tail];
    const Supervertex b = cg.component_of[e.head];
    if (a != b) cg.super_edges.push_back({a, b, e.weight, EdgeId{i}});
  }
  return cg;
}

ContractedGraph partition_graph(const Graph& g, std::vector<Supervertex> component_of) {
  if (component_of.size() != g.vertex_count())
    throw PreconditionError("partition_graph: one label per vertex required");
  ContractedGraph cg;
  cg.contract_threshold = 0.0;
  cg.delete_threshold = kInfinity;
  Supervertex expected = 0;
  for (Supervertex c : component_of) {
    if (c > expected) throw PreconditionError("partition_graph: labels must follow smallest-member order");
    if (c == expected) ++expected;
  }
  cg.component_of = std::move(component_of);
  fill_members(cg, expected);
  for (std::uint32_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edges()[i];
    const Supervertex a = cg.component_of[e.tail];
    const Supervertex b = cg.component_of[e.head];
    if (a != b) cg.super_edges.push_back({a, b, e.weight, EdgeId{i}});
  }
  return cg;
}

ContractedSearch contracted_search(const Graph& g, const VertexSet& alive, const ContractedGraph& cg,
                                   Supervertex center, double radius_cap,
                                   const std::vector<std::uint8_t>* edge_mask) {
  if (center >= cg.supervertex_count()) throw PreconditionError("contracted_search: bad supervertex");
  const auto& sources = cg.members[center];
  for (Vertex v : sources)
    if (!alive.contains(v))
      throw PreconditionError("contracted_search: center supervertex is not fully alive");

  const GraphView view(g, &alive, edge_mask);
  ContractedSearch s;
  s.center = center;
  s.radius_cap = radius_cap;
  s.out = multi_source_dijkstra(view, sources, Direction::kForward, radius_cap);
  s.in = multi_source_dijkstra(view, sources, Direction::kBackward, radius_cap);
  const std::size_t n = g.vertex_count();
  s.vertex_value.resize(n);
  s.super_value.assign(cg.supervertex_count(), kInfinity);
  for (Vertex v = 0; v < n; ++v) {
    s.vertex_value[v] = s.out.dist[v] + s.in.dist[v];
    double& best = s.super_value[cg.component_of[v]];
    best = std::min(best, s.vertex_value[v]);
  }
  return s;
}

std::vector<double> contracted_roundtrip_from(const Graph& g, const VertexSet& alive,
                                              const ContractedGraph& cg, Supervertex center,
                                              double radius_cap) {
  return contracted_search(g, alive, cg, center, radius_cap).super_value;
}

namespace {

// For every supervertex, the tree edge through which the search first crosses
// into it (outward) or out of it (inward). Candidates are members whose own
// tree edge crosses the component boundary; members with value < R are
// preferred, then the smallest one-way distance, then the smallest id.
std::vector<std::optional<EdgeId>> boundary_edges(const Graph& g, const ContractedGraph& cg,
                                                  const ContractedSearch& s, const DistanceMap& tree,
                                                  double radius) {
  const bool forward = tree.direction == Direction::kForward;
  using Key = std::tuple<int, double, Vertex>;
  std::vector<std::optional<Key>> best(cg.supervertex_count());
  std::vector<std::optional<EdgeId>> chosen(cg.supervertex_count());
  for (Vertex y = 0; y < g.vertex_count(); ++y) {
    const auto& parent = tree.parent[y];
    if (!parent) continue;
    const Edge& e = g.edge(*parent);
    const Vertex other = forward ? e.tail : e.head;
    const Supervertex c = cg.component_of[y];
    if (cg.component_of[other] == c) continue;
    const Key key{s.vertex_value[y] < radius ? 0 : 1, tree.dist[y], y};
    if (!best[c] || key < *best[c]) {
      best[c] = key;
      chosen[c] = *parent;
    }
  }
  return chosen;
}

}  // namespace

EdgeSet new_in_out_trees(const Graph& g, const ContractedGraph& cg, const ContractedSearch& s,
                         double radius) {
  if (radius > s.radius_cap) throw PreconditionError("new_in_out_trees: radius above search cap");
  EdgeSet out(g.edge_count());
  for (const DistanceMap* tree : {&s.out, &s.in}) {
    const bool forward = tree->direction == Direction::kForward;
    const auto chosen = boundary_edges(g, cg, s, *tree, radius);
    std::vector<std::uint8_t> visited(cg.supervertex_count(), 0);
    visited[s.center] = 1;
    for (Supervertex c = 0; c < cg.supervertex_count(); ++c) {
      if (!(s.super_value[c] < radius)) continue;
      Supervertex cur = c;
      while (!visited[cur] && chosen[cur]) {
        visited[cur] = 1;
        out.insert(*chosen[cur]);
        const Edge& e = g.edge(*chosen[cur]);
        cur = cg.component_of[forward ? e.tail : e.head];
      }
    }
  }
  return out;
}

EdgeSet new_in_out_trees(const Graph& g, const VertexSet& alive, const ContractedGraph& cg,
                         Supervertex center, double radius) {
  if (!(radius >= 0.0)) throw ParameterError("new_in_out_trees: radius must be non-negative");
  return new_in_out_trees(g, cg, contracted_search(g, alive, cg, center, radius), radius);
}

std::pair<EdgeSet, CoverTrace> cover2(const Graph& g, const RadiusMap& radii, const GirthMap& girths,
                                      int k, int p, double epsilon, bool delete_long_edges) {
  if (k < 2) throw ParameterError("cover2: k must be at least 2");
  if (radii.k != k) throw PreconditionError("cover2: radii were computed for a different k");
  if (!(epsilon > 0.0)) throw ParameterError("cover2: epsilon must be positive");
  const std::size_t n = g.vertex_count();
  const double nd = static_cast<double>(n);
  const double L = std::pow(1.0 + epsilon, static_cast<double>(p));
  const double long_cycle = 2.0 * static_cast<double>(k - 1) * L;

  const ContractedGraph cg = contract(g, girths, L / (nd * nd * nd), long_cycle);
  std::vector<std::uint8_t> short_edges;
  if (delete_long_edges) {
    short_edges.resize(g.edge_count());
    for (std::size_t i = 0; i < short_edges.size(); ++i) short_edges[i] = girths.g[i] <= long_cycle;
  }
  const std::vector<std::uint8_t>* mask = delete_long_edges ? &short_edges : nullptr;

  VertexSet alive(n, true);
  EdgeSet edges(g.edge_count());
  CoverTrace trace;
  trace.L = L;
  trace.p = p;

  const double step = (1.0 + 1.0 / (nd * nd)) * L;
  for (Vertex u : center_order(radii)) {
    if (!alive.contains(u)) continue;
    if (radii.r[u] < long_cycle) break;  // the rest of the order is smaller still
    const Supervertex center = cg.component_of[u];
    const ContractedSearch search =
        contracted_search(g, alive, cg, center, static_cast<double>(k - 1) * step, mask);

    std::optional<std::vector<double>> uncapped;
    auto ball_size_at = [&](int h) -> std::size_t {
      const double radius = static_cast<double>(h) * step;
      const std::vector<double>* values = &search.super_value;
      if (h > k - 1) {
        if (!uncapped) uncapped = contracted_search(g, alive, cg, center, kInfinity, mask).super_value;
        values = &*uncapped;
      }
      return static_cast<std::size_t>(
          std::count_if(values->begin(), values->end(), [&](double d) { return d < radius; }));
    };
    const int h = select_h(ball_size_at, n, k);
    if (h > k - 1)
      throw InvariantViolation("cover2: selected h=" + std::to_string(h) + " exceeds k-1 at center " +
                               std::to_string(u));

    const EdgeSet trees = new_in_out_trees(g, cg, search, static_cast<double>(h) * step);
    edges.merge(trees);

    const double removal_radius = static_cast<double>(h - 1) * step;
    std::size_t removed = 0;
    for (Supervertex c = 0; c < cg.supervertex_count(); ++c) {
      if (c != center && !(search.super_value[c] <= removal_radius)) continue;
      for (Vertex v : cg.members[c])
        if (alive.erase(v)) ++removed;
    }
    trace.iterations.push_back({u, step, h, 1, ball_size_at(h), removed, trees.size()});
    trace.edges_added += trees.size();
  }

  for (Vertex v = 0; v < n; ++v)
    if (radii.r[v] < L / 8.0) alive.erase(v);

  cover_loop(g, radii, L, alive, edges, trace);
  check_cover_size(trace, n, k);
  return {std::move(edges), std::move(trace)};
}

SpannerResult spanner_strong(const Graph& g, int k, const SpannerOptions& options) {
  if (k < 1) throw ParameterError("spanner: k must be at least 1, got " + std::to_string(k));
  const std::size_t n = g.vertex_count();
  if (k == 1 || n == 0) return spanner_basic(g, k, options);
  if (n < 12 || static_cast<std::size_t>(k) > n) {
    SpannerResult fallback = spanner_basic(g, k, options);
    fallback.stats.fell_back = true;
    return fallback;
  }

  SpannerResult result;
  result.stats.algorithm = "strong";
  result.stats.k = k;
  const double epsilon = 1.0 / static_cast<double>(4 * (k - 1));
  result.stats.epsilon = epsilon;

  const RadiusMap radii = compute_radii(g, k, options.threads);
  const GirthMap girths = compute_girths(g, options.threads);
  Preprocessing pre = build_e0(g, radii, options.threads);
  result.stats.e0_edges = pre.e0.size();
  result.stats.hitting_set_size = pre.hitting.members.size();

  const std::size_t levels = scale_count(n, g.max_weight(), epsilon);
  result.stats.p_iterations = levels;
  std::vector<EdgeSet> per_level(levels);
  std::vector<CoverTrace> traces(levels);
  parallel_for(levels, options.threads, [&](std::size_t p) {
    auto [edges, trace] =
        cover2(g, radii, girths, k, static_cast<int>(p), epsilon, options.delete_long_edges);
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

#pragma once

#include <cstddef>
#include <cstdint>
#include <compare>
#include <limits>
#include <span>
#include <vector>

namespace rtspan {

using Vertex = std::uint32_t;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Stable identity of an edge: its position in the graph's edge list.
struct EdgeId {
  std::uint32_t index = 0;

  friend constexpr auto operator<=>(EdgeId, EdgeId) = default;
};

struct Edge {
  Vertex tail = 0;
  Vertex head = 0;
  double weight = 1.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Immutable directed multigraph with weights in [1, W].
///
/// Forward and backward adjacency are stored as CSR arrays of edge ids; within
/// each vertex the ids are in increasing order, which is what makes every
/// search in the library deterministic.
class Graph {
 public:
  Graph() = default;

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  double max_weight() const { return max_weight_; }

  const Edge& edge(EdgeId e) const { return edges_[e.index]; }
  std::span<const Edge> edges() const { return edges_; }

  std::span<const EdgeId> out_edges(Vertex v) const {
    return {out_ids_.data() + out_offsets_[v], out_offsets_[v + 1] - out_offsets_[v]};
  }
  std::span<const EdgeId> in_edges(Vertex v) const {
    return {in_ids_.data() + in_offsets_[v], in_offsets_[v + 1] - in_offsets_[v]};
  }

 private:
  friend Graph build_graph(std::size_t n, std::span<const Edge> edges);

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> out_offsets_{0};
  std::vector<EdgeId> out_ids_;
  std::vector<std::size_t> in_offsets_{0};
  std::vector<EdgeId> in_ids_;
  double max_weight_ = 1.0;
};

/// Validates and indexes an edge list.
/// Throws MalformedInput for out-of-range endpoints and WeightDomainError for
/// weights below 1 (NaN included).
Graph build_graph(std::size_t n, std::span<const Edge> edges);

/// Vertex subset with O(1) membership.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe, bool full = false);
  static VertexSet of(std::size_t universe, std::span<const Vertex> members);

  std::size_t universe() const { return mask_.size(); }
  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }
  bool contains(Vertex v) const { return v < mask_.size() && mask_[v] != 0; }

  /// Returns true if v was newly inserted.
  bool insert(Vertex v);
  /// Returns true if v was present.
  bool erase(Vertex v);

  std::vector<Vertex> members() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<std::uint8_t> mask_;
  std::size_t count_ = 0;
};

/// Set of edge identities of one graph; iteration is in increasing id order.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(std::size_t edge_universe) : mask_(edge_universe, 0) {}
  static EdgeSet all(const Graph& g);

  std::size_t universe() const { return mask_.size(); }
  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }
  bool contains(EdgeId e) const { return e.index < mask_.size() && mask_[e.index] != 0; }

  bool insert(EdgeId e);
  /// Set union; universes must match.
  void merge(const EdgeSet& other);

  std::vector<EdgeId> members() const;

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

 private:
  std::vector<std::uint8_t> mask_;
  std::size_t count_ = 0;
};

/// Read-only restriction of a graph to a vertex subset and, optionally, to an
/// edge subset. Both filters are borrowed and must outlive the view.
class GraphView {
 public:
  explicit GraphView(const Graph& g) : g_(&g) {}
  GraphView(const Graph& g, const VertexSet& alive) : g_(&g), alive_(&alive) {}
  GraphView(const Graph& g, const VertexSet* alive, const std::vector<std::uint8_t>* edge_mask)
      : g_(&g), alive_(alive), edge_mask_(edge_mask) {}

  const Graph& graph() const { return *g_; }
  std::size_t vertex_universe() const { return g_->vertex_count(); }

  bool contains(Vertex v) const {
    return v < g_->vertex_count() && (alive_ == nullptr || alive_->contains(v));
  }

  bool edge_usable(EdgeId e) const {
    if (edge_mask_ != nullptr && (*edge_mask_)[e.index] == 0) return false;
    const Edge& ed = g_->edge(e);
    return contains(ed.tail) && contains(ed.head);
  }

  template <typename Fn>
  void for_each_out(Vertex v, Fn&& fn) const {
    for (EdgeId e : g_->out_edges(v))
      if (edge_usable(e)) fn(e, g_->edge(e));
  }

  template <typename Fn>
  void for_each_in(Vertex v, Fn&& fn) const {
    for (EdgeId e : g_->in_edges(v))
      if (edge_usable(e)) fn(e, g_->edge(e));
  }

  /// All usable edges in increasing id order.
  std::vector<EdgeId> edges() const;

 private:
  const Graph* g_;
  const VertexSet* alive_ = nullptr;
  const std::vector<std::uint8_t>* edge_mask_ = nullptr;
};

/// G[U]: traversals skip edges with an endpoint outside u_set.
inline GraphView induced_view(const Graph& g, const VertexSet& u_set) { return GraphView(g, u_set); }

/// The subgraph (V, edges) as a graph of its own. Edge ids are renumbered in
/// increasing order of the original ids.
Graph edge_subgraph(const Graph& g, const EdgeSet& edges);

/// Graph with every edge reversed; edge ids are preserved.
Graph reversed(const Graph& g);

/// Strongly connected component label per vertex; labels are numbered in order
/// of each component's smallest vertex.
std::vector<std::uint32_t> strongly_connected_components(const Graph& g);

}  // namespace rtspan

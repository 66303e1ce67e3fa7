#include "rtspan/graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "rtspan/errors.hpp"

namespace rtspan {

namespace {

void build_csr(std::size_t n, const std::vector<Edge>& edges, bool forward,
               std::vector<std::size_t>& offsets, std::vector<EdgeId>& ids) {
  offsets.assign(n + 1, 0);
  for (const Edge& e : edges) ++offsets[(forward ? e.tail : e.head) + 1];
  for (std::size_t v = 0; v < n; ++v) offsets[v + 1] += offsets[v];
  ids.assign(edges.size(), EdgeId{});
  std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
  // Scanning edges in id order keeps each bucket sorted by id.
  for (std::uint32_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    ids[cursor[forward ? e.tail : e.head]++] = EdgeId{i};
  }
}

}  // namespace

Graph build_graph(std::size_t n, std::span<const Edge> edges) {
  if (edges.size() > std::numeric_limits<std::uint32_t>::max())
    throw MalformedInput("too many edges");
  Graph g;
  g.n_ = n;
  g.edges_.assign(edges.begin(), edges.end());
  g.max_weight_ = 1.0;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (e.tail >= n || e.head >= n)
      throw MalformedInput("edge " + std::to_string(i) + ": vertex id out of range (n=" +
                           std::to_string(n) + ")");
    if (!(e.weight >= 1.0) || std::isinf(e.weight))
      throw WeightDomainError("edge " + std::to_string(i) + ": weight " +
                              std::to_string(e.weight) + " is outside [1, inf)");
    g.max_weight_ = std::max(g.max_weight_, e.weight);
  }
  build_csr(n, g.edges_, true, g.out_offsets_, g.out_ids_);
  build_csr(n, g.edges_, false, g.in_offsets_, g.in_ids_);
  return g;
}

VertexSet::VertexSet(std::size_t universe, bool full)
    : mask_(universe, full ? 1 : 0), count_(full ? universe : 0) {}

VertexSet VertexSet::of(std::size_t universe, std::span<const Vertex> members) {
  VertexSet s(universe);
  for (Vertex v : members) {
    if (v >= universe) throw MalformedInput("vertex " + std::to_string(v) + " out of range");
    s.insert(v);
  }
  return s;
}

bool VertexSet::insert(Vertex v) {
  if (mask_[v] != 0) return false;
  mask_[v] = 1;
  ++count_;
  return true;
}

bool VertexSet::erase(Vertex v) {
  if (mask_[v] == 0) return false;
  mask_[v] = 0;
  --count_;
  return true;
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(count_);
  for (Vertex v = 0; v < mask_.size(); ++v)
    if (mask_[v] != 0) out.push_back(v);
  return out;
}

EdgeSet EdgeSet::all(const Graph& g) {
  EdgeSet s(g.edge_count());
  std::fill(s.mask_.begin(), s.mask_.end(), 1);
  s.count_ = g.edge_count();
  return s;
}

bool EdgeSet::insert(EdgeId e) {
  if (mask_[e.index] != 0) return false;
  mask_[e.index] = 1;
  ++count_;
  return true;
}

void EdgeSet::merge(const EdgeSet& other) {
  if (other.mask_.size() != mask_.size())
    throw PreconditionError("EdgeSet::merge: edge universes differ");
  for (std::size_t i = 0; i < mask_.size(); ++i) {
    if (other.mask_[i] != 0 && mask_[i] == 0) {
      mask_[i] = 1;
      ++count_;
    }
  }
}

std::vector<EdgeId> EdgeSet::members() const {
  std::vector<EdgeId> out;
  out.reserve(count_);
  for (std::uint32_t i = 0; i < mask_.size(); ++i)
    if (mask_[i] != 0) out.push_back(EdgeId{i});
  return out;
}

std::vector<EdgeId> GraphView::edges() const {
  std::vector<EdgeId> out;
  for (std::uint32_t i = 0; i < g_->edge_count(); ++i)
    if (edge_usable(EdgeId{i})) out.push_back(EdgeId{i});
  return out;
}

Graph edge_subgraph(const Graph& g, const EdgeSet& edges) {
  if (edges.universe() != g.edge_count())
    throw ContainmentError("edge set does not belong to this graph");
  std::vector<Edge> kept;
  kept.reserve(edges.size());
  for (EdgeId e : edges.members()) kept.push_back(g.edge(e));
  return build_graph(g.vertex_count(), kept);
}

Graph reversed(const Graph& g) {
  std::vector<Edge> flipped;
  flipped.reserve(g.edge_count());
  for (const Edge& e : g.edges()) flipped.push_back({e.head, e.tail, e.weight});
  return build_graph(g.vertex_count(), flipped);
}

std::vector<std::uint32_t> strongly_connected_components(const Graph& g) {
  // Kosaraju with explicit stacks.
  const std::size_t n = g.vertex_count();
  std::vector<Vertex> order;
  order.reserve(n);
  std::vector<std::uint8_t> seen(n, 0);
  std::vector<std::pair<Vertex, std::size_t>> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    seen[s] = 1;
    stack.emplace_back(s, 0);
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      auto out = g.out_edges(v);
      if (next < out.size()) {
        Vertex w = g.edge(out[next++]).head;
        if (!seen[w]) {
          seen[w] = 1;
          stack.emplace_back(w, 0);
        }
      } else {
        order.push_back(v);
        stack.pop_back();
      }
    }
  }

  constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> raw(n, kUnset);
  std::uint32_t count = 0;
  std::vector<Vertex> dfs;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (raw[*it] != kUnset) continue;
    raw[*it] = count;
    dfs.push_back(*it);
    while (!dfs.empty()) {
      Vertex v = dfs.back();
      dfs.pop_back();
      for (EdgeId e : g.in_edges(v)) {
        Vertex w = g.edge(e).tail;
        if (raw[w] == kUnset) {
          raw[w] = count;
          dfs.push_back(w);
        }
      }
    }
    ++count;
  }

  std::vector<std::uint32_t> relabel(count, kUnset);
  std::uint32_t next = 0;
  std::vector<std::uint32_t> label(n);
  for (Vertex v = 0; v < n; ++v) {
    if (relabel[raw[v]] == kUnset) relabel[raw[v]] = next++;
    label[v] = relabel[raw[v]];
  }
  return label;
}

}  // namespace rtspan

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "rtspan/cover_basic.hpp"
#include "rtspan/graph.hpp"
#include "rtspan/radius_hitting.hpp"
#include "rtspan/sssp.hpp"

namespace rtspan {

/// Girth of each edge: length of the shortest directed cycle through it,
/// w(u,v) + d(v->u), or kInfinity when the edge lies on no cycle.
struct GirthMap {
  std::vector<double> g;
};

GirthMap compute_girths(const Graph& g, unsigned threads = 1);

using Supervertex = std::uint32_t;

struct SuperEdge {
  Supervertex tail = 0;
  Supervertex head = 0;
  double weight = 1.0;
  EdgeId original;
};

/// Quotient of G by the undirected components of its short-girth edges.
/// Supervertex ids follow the order of each component's smallest vertex.
struct ContractedGraph {
  std::vector<Supervertex> component_of;
  std::vector<std::vector<Vertex>> members;
  std::vector<SuperEdge> super_edges;
  double contract_threshold = 0.0;
  double delete_threshold = kInfinity;

  std::size_t supervertex_count() const { return members.size(); }
};

/// Merges the endpoints of every edge with girth <= contract_threshold and
/// keeps, as super edges, the edges between different components whose girth
/// lies in (contract_threshold, delete_threshold].
ContractedGraph contract(const Graph& g, const GirthMap& girths, double contract_threshold,
                         double delete_threshold);

/// Contracted graph for an explicit vertex partition. Labels must be dense
/// (0..c-1) and numbered by smallest member. Every edge between two different
/// parts becomes a super edge.
ContractedGraph partition_graph(const Graph& g, std::vector<Supervertex> component_of);

/// Multi-source forward and multi-sink backward searches from one supervertex
/// over G[alive], and the per-vertex / per-supervertex roundtrip values they
/// induce.
struct ContractedSearch {
  Supervertex center = 0;
  DistanceMap out;
  DistanceMap in;
  std::vector<double> vertex_value;  // out + in, per original vertex
  std::vector<double> super_value;   // min over alive members
  double radius_cap = kInfinity;
};

/// `edge_mask`, when given, restricts the searches to edges whose entry is
/// nonzero.
ContractedSearch contracted_search(const Graph& g, const VertexSet& alive, const ContractedGraph& cg,
                                   Supervertex center, double radius_cap,
                                   const std::vector<std::uint8_t>* edge_mask = nullptr);

/// d-hat-prime from `center` to every supervertex; exact below radius_cap.
std::vector<double> contracted_roundtrip_from(const Graph& g, const VertexSet& alive,
                                              const ContractedGraph& cg, Supervertex center,
                                              double radius_cap = kInfinity);

/// Inter-component tree edges reaching every supervertex with value < R:
/// at most one entering edge (outward) and one leaving edge (inward) per
/// supervertex.
EdgeSet new_in_out_trees(const Graph& g, const VertexSet& alive, const ContractedGraph& cg,
                         Supervertex center, double radius);
EdgeSet new_in_out_trees(const Graph& g, const ContractedGraph& cg, const ContractedSearch& search,
                         double radius);

/// Two-phase cover at scale L = (1+epsilon)^p.
std::pair<EdgeSet, CoverTrace> cover2(const Graph& g, const RadiusMap& radii, const GirthMap& girths,
                                      int k, int p, double epsilon, bool delete_long_edges = true);

/// W-independent construction with epsilon = 1/(4(k-1)). Inputs with n < 12 or
/// k > n are delegated to spanner_basic.
SpannerResult spanner_strong(const Graph& g, int k, const SpannerOptions& options = {});

}  // namespace rtspan

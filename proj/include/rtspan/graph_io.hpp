#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "rtspan/graph.hpp"

namespace rtspan {

/// Syntactic content of a graph file: "n m" header, then m "tail head weight"
/// records. Blank lines and lines starting with '#' are ignored.
struct EdgeList {
  std::size_t n = 0;
  std::vector<Edge> edges;
  std::vector<std::size_t> lines;  // file line of each edge; empty if built in memory
};

/// Throws MalformedInput with the offending line number.
EdgeList read_edge_list(std::istream& in);

struct ParseOptions {
  /// Divide every weight by the minimum weight so the lightest edge weighs 1.
  bool rescale = false;
};

/// Builds a graph from a parsed list, applying the weight checks (and the
/// optional rescale). Weight errors name the file line of the edge.
Graph to_graph(const EdgeList& list, const ParseOptions& options = {});

Graph parse_graph(std::istream& in, const ParseOptions& options = {});

/// Shortest decimal string that parses back to exactly `w`.
std::string format_weight(double w);

void write_graph(std::ostream& out, const Graph& g);
/// Only the edges in `subset`, in increasing id order, with the original n.
void write_graph(std::ostream& out, const Graph& g, const EdgeSet& subset);
void write_graph(std::ostream& out, const EdgeList& list, const EdgeSet& subset);

EdgeList read_edge_list_file(const std::filesystem::path& path);

/// Writes `contents` to a sibling temp file and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

}  // namespace rtspan

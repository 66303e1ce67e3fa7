#include "rtspan/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>
#include <system_error>

#include "rtspan/errors.hpp"

namespace rtspan {

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw MalformedInput("line " + std::to_string(line) + ": " + what);
}

template <typename T>
T parse_number(std::string_view token, std::size_t line, const char* what) {
  T value{};
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end)
    fail(line, std::string("expected ") + what + ", got '" + std::string(token) + "'");
  return value;
}

}  // namespace

EdgeList read_edge_list(std::istream& in) {
  EdgeList list;
  std::string raw;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t expected_m = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto tokens = split_tokens(raw);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    if (!have_header) {
      if (tokens.size() != 2) fail(line_no, "header must be 'n m'");
      list.n = parse_number<std::size_t>(tokens[0], line_no, "vertex count");
      expected_m = parse_number<std::size_t>(tokens[1], line_no, "edge count");
      have_header = true;
      list.edges.reserve(std::min<std::size_t>(expected_m, 1u << 24));
      continue;
    }
    if (list.edges.size() == expected_m) fail(line_no, "more edge records than the header's m");
    if (tokens.size() != 3) fail(line_no, "edge record must be 'tail head weight'");
    const auto tail = parse_number<std::uint64_t>(tokens[0], line_no, "tail vertex id");
    const auto head = parse_number<std::uint64_t>(tokens[1], line_no, "head vertex id");
    const double weight = parse_number<double>(tokens[2], line_no, "weight");
    if (!std::isfinite(weight)) fail(line_no, "weight must be finite");
    for (std::uint64_t v : {tail, head})
      if (v >= list.n)
        fail(line_no, "vertex id " + std::to_string(v) + " out of range (n=" + std::to_string(list.n) + ")");
    list.edges.push_back({static_cast<Vertex>(tail), static_cast<Vertex>(head), weight});
    list.lines.push_back(line_no);
  }
  if (!have_header) throw MalformedInput("line " + std::to_string(line_no + 1) + ": missing 'n m' header");
  if (list.edges.size() != expected_m)
    throw MalformedInput("line " + std::to_string(line_no + 1) + ": header declares " +
                         std::to_string(expected_m) + " edges, found " + std::to_string(list.edges.size()));
  if (list.n > std::numeric_limits<Vertex>::max()) throw MalformedInput("line 1: vertex count too large");
  return list;
}

Graph to_graph(const EdgeList& list, const ParseOptions& options) {
  std::vector<Edge> edges = list.edges;
  if (options.rescale && !edges.empty()) {
    const double lightest =
        std::min_element(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
          return a.weight < b.weight;
        })->weight;
    if (!(lightest > 0.0)) throw WeightDomainError("cannot rescale: minimum weight is not positive");
    for (Edge& e : edges) e.weight /= lightest;
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (!(edges[i].weight >= 1.0)) {
      const std::string where = list.lines.size() == edges.size()
                                    ? "line " + std::to_string(list.lines[i])
                                    : "edge " + std::to_string(i);
      throw WeightDomainError(where + ": weight " + format_weight(list.edges[i].weight) +
                              " is below 1 (use --rescale)");
    }
  }
  return build_graph(list.n, edges);
}

Graph parse_graph(std::istream& in, const ParseOptions& options) {
  return to_graph(read_edge_list(in), options);
}

std::string format_weight(double w) {
  char buf[512];
  const bool plain = std::isfinite(w) && std::abs(w) >= 1e-4 && std::abs(w) < 1e21;
  auto [ptr, ec] = plain ? std::to_chars(buf, buf + sizeof(buf), w, std::chars_format::fixed)
                         : std::to_chars(buf, buf + sizeof(buf), w);
  if (ec != std::errc()) throw Error("format_weight: conversion failed");
  return std::string(buf, ptr);
}

namespace {

void write_records(std::ostream& out, std::size_t n, std::span<const Edge> edges, const EdgeSet* subset) {
  std::string text;
  const std::size_t m = subset ? subset->size() : edges.size();
  text += std::to_string(n) + " " + std::to_string(m) + "\n";
  for (std::uint32_t i = 0; i < edges.size(); ++i) {
    if (subset && !subset->contains(EdgeId{i})) continue;
    const Edge& e = edges[i];
    text += std::to_string(e.tail);
    text += ' ';
    text += std::to_string(e.head);
    text += ' ';
    text += format_weight(e.weight);
    text += '\n';
  }
  out << text;
}

}  // namespace

void write_graph(std::ostream& out, const Graph& g) { write_records(out, g.vertex_count(), g.edges(), nullptr); }

void write_graph(std::ostream& out, const Graph& g, const EdgeSet& subset) {
  if (subset.universe() != g.edge_count()) throw ContainmentError("write_graph: edge set does not match graph");
  write_records(out, g.vertex_count(), g.edges(), &subset);
}

void write_graph(std::ostream& out, const EdgeList& list, const EdgeSet& subset) {
  if (subset.universe() != list.edges.size())
    throw ContainmentError("write_graph: edge set does not match edge list");
  write_records(out, list.n, list.edges, &subset);
}

EdgeList read_edge_list_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot open " + path.string());
  try {
    return read_edge_list(in);
  } catch (const MalformedInput& e) {
    throw MalformedInput(path.string() + ": " + e.what());
  }
}

void write_file_atomic(const std::filesystem::path& path, const std::string& contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw MalformedInput("cannot write " + tmp.string());
    out << contents;
    out.flush();
    if (!out) throw MalformedInput("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw MalformedInput("cannot rename " + tmp.string() + " to " + path.string() + ": " + ec.message());
}

}  // namespace rtspan

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "rtspan/graph.hpp"

namespace rtspan {

enum class Model { kGnpBidirected, kGnpDirected, kCycle, kLayered, kGridTorus };

Model parse_model(std::string_view name);
std::string model_name(Model model);

struct GeneratorParams {
  std::size_t n = 0;
  double p = 0.15;  // edge probability; unused by `cycle`
  double wmin = 1.0;
  double wmax = 1.0;
};

/// Deterministic random graph. Randomness comes from std::mt19937_64 seeded
/// through std::seed_seq with (seed, stream), one stream for structure and one
/// for weights, so the output is a fixed function of (model, params, seed).
///
///   gnp-bidirected  each unordered pair with probability p, as two directed
///                   edges with independent weights
///   gnp-directed    each ordered pair u != v with probability p
///   cycle           0 -> 1 -> ... -> n-1 -> 0
///   layered         layers of round(sqrt(n)) vertices; edges between
///                   consecutive layers and from the last layer back to the
///                   first, each with probability p
///   grid-torus      sqrt(n) x sqrt(n) torus with all right/down edges and
///                   each left/up edge with probability p
Graph generate(Model model, const GeneratorParams& params, std::uint64_t seed);

}  // namespace rtspan

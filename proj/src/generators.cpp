#include "rtspan/generators.hpp"

#include <cmath>
#include <random>
#include <vector>

#include "rtspan/errors.hpp"

namespace rtspan {

Model parse_model(std::string_view name) {
  if (name == "gnp-bidirected") return Model::kGnpBidirected;
  if (name == "gnp-directed") return Model::kGnpDirected;
  if (name == "cycle") return Model::kCycle;
  if (name == "layered") return Model::kLayered;
  if (name == "grid-torus") return Model::kGridTorus;
  throw ParameterError("unknown graph model '" + std::string(name) + "'");
}

std::string model_name(Model model) {
  switch (model) {
    case Model::kGnpBidirected: return "gnp-bidirected";
    case Model::kGnpDirected: return "gnp-directed";
    case Model::kCycle: return "cycle";
    case Model::kLayered: return "layered";
    case Model::kGridTorus: return "grid-torus";
  }
  return "unknown";
}

namespace {

class Stream {
 public:
  Stream(std::uint64_t seed, std::uint32_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), stream};
    engine_.seed(seq);
  }

  // 53 random bits mapped onto [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  bool coin(double p) { return uniform() < p; }

 private:
  std::mt19937_64 engine_;
};

struct Builder {
  const GeneratorParams& params;
  Stream structure;
  Stream weights;
  std::vector<Edge> edges;

  void add(std::size_t tail, std::size_t head) {
    double w = params.wmin;
    if (params.wmax > params.wmin) w = std::min(params.wmax, params.wmin + (params.wmax - params.wmin) * weights.uniform());
    edges.push_back({static_cast<Vertex>(tail), static_cast<Vertex>(head), w});
  }
};

}  // namespace

Graph generate(Model model, const GeneratorParams& params, std::uint64_t seed) {
  const std::size_t n = params.n;
  if (!(params.p >= 0.0 && params.p <= 1.0)) throw ParameterError("edge probability must lie in [0, 1]");
  if (!(params.wmin >= 1.0 && params.wmin <= params.wmax && std::isfinite(params.wmax)))
    throw ParameterError("weights need 1 <= wmin <= wmax < inf");
  if (n == 0) throw ParameterError("n must be positive");

  Builder b{params, Stream(seed, 0), Stream(seed, 1), {}};
  switch (model) {
    case Model::kGnpBidirected:
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
          if (b.structure.coin(params.p)) {
            b.add(u, v);
            b.add(v, u);
          }
      break;
    case Model::kGnpDirected:
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
          if (u != v && b.structure.coin(params.p)) b.add(u, v);
      break;
    case Model::kCycle:
      if (n < 2) throw ParameterError("cycle needs n >= 2");
      for (std::size_t u = 0; u < n; ++u) b.add(u, (u + 1) % n);
      break;
    case Model::kLayered: {
      const std::size_t width = std::max<std::size_t>(1, static_cast<std::size_t>(std::lround(std::sqrt(n))));
      const std::size_t layers = (n + width - 1) / width;
      if (layers < 2) throw ParameterError("layered needs at least two layers");
      auto layer_range = [&](std::size_t layer) {
        return std::pair{layer * width, std::min(n, (layer + 1) * width)};
      };
      for (std::size_t layer = 0; layer < layers; ++layer) {
        const auto [from_lo, from_hi] = layer_range(layer);
        const auto [to_lo, to_hi] = layer_range((layer + 1) % layers);
        for (std::size_t u = from_lo; u < from_hi; ++u)
          for (std::size_t v = to_lo; v < to_hi; ++v)
            if (b.structure.coin(params.p)) b.add(u, v);
      }
      break;
    }
    case Model::kGridTorus: {
      const auto side = static_cast<std::size_t>(std::lround(std::sqrt(n)));
      if (side < 2 || side * side != n) throw ParameterError("grid-torus needs n = s*s with s >= 2");
      auto id = [&](std::size_t r, std::size_t c) { return (r % side) * side + (c % side); };
      for (std::size_t r = 0; r < side; ++r)
        for (std::size_t c = 0; c < side; ++c) {
          b.add(id(r, c), id(r, c + 1));
          b.add(id(r, c), id(r + 1, c));
          if (b.structure.coin(params.p)) b.add(id(r, c + 1), id(r, c));
          if (b.structure.coin(params.p)) b.add(id(r + 1, c), id(r, c));
        }
      break;
    }
  }
  return build_graph(n, b.edges);
}

}  // namespace rtspan

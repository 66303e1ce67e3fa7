#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

namespace rtspan {

/// One build or verify run. Unknown or non-finite numbers serialize as null.
struct RunStats {
  std::size_t n = 0;
  std::size_t m = 0;
  int k = 1;
  std::string algorithm;
  std::optional<double> epsilon;
  std::optional<std::size_t> p_iterations;
  std::size_t spanner_edges = 0;
  std::optional<double> max_stretch;
  std::optional<std::size_t> violations;
  std::optional<double> bound_ratio;
  double wall_time_ms = 0.0;
  std::optional<std::uint64_t> seed;
};

/// Keys in a fixed order.
nlohmann::ordered_json to_json(const RunStats& stats);

void write_stats(const std::filesystem::path& path, const RunStats& stats);

}  // namespace rtspan

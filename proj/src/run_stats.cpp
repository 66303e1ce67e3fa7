#include "rtspan/run_stats.hpp"

#include <cmath>

#include "rtspan/graph_io.hpp"

namespace rtspan {

namespace {

template <typename T>
nlohmann::ordered_json number_or_null(const std::optional<T>& value) {
  if (!value) return nullptr;
  if constexpr (std::is_floating_point_v<T>) {
    if (!std::isfinite(*value)) return nullptr;
  }
  return *value;
}

}  // namespace

nlohmann::ordered_json to_json(const RunStats& s) {
  nlohmann::ordered_json j;
  j["n"] = s.n;
  j["m"] = s.m;
  j["k"] = s.k;
  j["algorithm"] = s.algorithm;
  j["epsilon"] = number_or_null(s.epsilon);
  j["p_iterations"] = number_or_null(s.p_iterations);
  j["spanner_edges"] = s.spanner_edges;
  j["max_stretch"] = number_or_null(s.max_stretch);
  j["violations"] = number_or_null(s.violations);
  j["bound_ratio"] = number_or_null(s.bound_ratio);
  j["wall_time_ms"] = number_or_null(std::optional<double>(s.wall_time_ms));
  j["seed"] = number_or_null(s.seed);
  return j;
}

void write_stats(const std::filesystem::path& path, const RunStats& stats) {
  write_file_atomic(path, to_json(stats).dump(2) + "\n");
}

}  // namespace rtspan

#pragma once
// Benchmark harness shared by the CLI and the acceptance suite: timed
// listing runs emitting one structured record each, plus the log-log slope
// fit used to judge scaling.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fourcycle/graph.hpp"
#include "fourcycle/listing.hpp"

namespace fourcycle {

struct BenchRecord {
  std::string family;
  std::string parameters;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::string algo;
  std::uint64_t t = 0;
  double wall_time = 0;  // seconds, clamped above zero
  std::uint64_t useful_2path_count = 0;
  std::uint64_t raw_candidates = 0;
  std::uint64_t dedup_hits = 0;
  std::uint64_t seed = 0;
};

// One timed listing run with a discarding sink.
inline BenchRecord bench_listing(const Graph& g, const std::string& algo) {
  BenchRecord rec;
  rec.n = g.vertex_count();
  rec.m = g.edge_count();
  rec.algo = algo;
  ListStats stats;
  const auto discard = [](const CanonicalCycle&) {};
  const auto start = std::chrono::steady_clock::now();
  if (algo == "n2") {
    rec.t = list_n2(g, discard, &stats);
  } else if (algo == "m43") {
    rec.t = list_m43(g, discard, &stats);
  } else {
    throw std::invalid_argument("bench: unknown algo '" + algo + "'");
  }
  const auto stop = std::chrono::steady_clock::now();
  rec.wall_time = std::max(std::chrono::duration<double>(stop - start).count(), 1e-9);
  rec.useful_2path_count = stats.useful_two_paths;
  rec.raw_candidates = stats.raw_candidates;
  rec.dedup_hits = stats.dedup_hits;
  return rec;
}

// Least-squares slope of log y against log x.
inline double fit_loglog_slope(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 2) throw std::invalid_argument("slope fit needs at least two points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [x, y] : points) {
    const double lx = std::log(x);
    const double ly = std::log(y);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double k = static_cast<double>(points.size());
  const double denom = k * sxx - sx * sx;
  if (denom == 0) throw std::invalid_argument("slope fit: degenerate x values");
  return (k * sxy - sx * sy) / denom;
}

}  // namespace fourcycle

#pragma once
// Shared helpers for the unit suites: tiny named graphs and the seeded
// random corpus reused across suites.

#include <cstdint>
#include <vector>

#include "fourcycle/fourcycle.hpp"

namespace fourcycle::testutil {

inline Graph make_graph(const std::vector<EdgePair>& edges, std::size_t n_hint = 0) {
  return build_graph(edges, n_hint);
}

// Outer 5-cycle, inner pentagram, five spokes; girth 5, so no 4-cycles.
inline Graph petersen() {
  return build_graph({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                      {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                      {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
}

// k vertices in a row, k-1 edges.
inline Graph path_graph(std::size_t k) {
  std::vector<EdgePair> edges;
  for (Vertex v = 0; v + 1 < k; ++v) edges.push_back({v, static_cast<Vertex>(v + 1)});
  return build_graph(edges, k);
}

struct CorpusEntry {
  std::uint64_t n;
  std::uint64_t m;
  std::uint64_t seed;
};

// 200 seeded random graphs, n in [4, 40], densities 0.1 through 1.0.
inline std::vector<CorpusEntry> random_corpus_params(std::size_t count = 200) {
  std::vector<CorpusEntry> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t n = 4 + (i * 7) % 37;
    const std::uint64_t max_m = choose2(n);
    const double density = static_cast<double>(i % 10 + 1) / 10.0;
    const auto m = static_cast<std::uint64_t>(density * static_cast<double>(max_m));
    out.push_back({n, m < max_m ? m : max_m, 1000 + i});
  }
  return out;
}

}  // namespace fourcycle::testutil

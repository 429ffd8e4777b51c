#pragma once
// Graph families used by tests and benchmarks: closed-form constructions,
// seeded random graphs, and the oriented-path adversary (a tree with many
// L->H->H paths and no cycles at all).

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "fourcycle/graph.hpp"

namespace fourcycle {

namespace detail {

// Unbiased uniform draw from [0, bound) by rejection; keeps generated
// graphs identical across standard library implementations.
inline std::uint64_t bounded_rand(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = (std::numeric_limits<std::uint64_t>::max() / bound) * bound;
  for (;;) {
    const std::uint64_t x = rng();
    if (x < limit) return x % bound;
  }
}

inline void check_vertex_budget(std::uint64_t total) {
  if (total > std::numeric_limits<Vertex>::max()) {
    throw std::invalid_argument("graph would exceed the 32-bit vertex budget");
  }
}

}  // namespace detail

// Star K_{1,n-1}: hub 0, leaves 1..n-1.
inline Graph gen_star(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("gen_star: n must be positive");
  detail::check_vertex_budget(n);
  std::vector<EdgePair> edges;
  edges.reserve(n - 1);
  for (Vertex v = 1; v < n; ++v) edges.push_back({0, v});
  return build_graph(edges, n);
}

inline Graph gen_complete(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("gen_complete: n must be positive");
  detail::check_vertex_budget(n);
  std::vector<EdgePair> edges;
  edges.reserve(choose2(n));
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return build_graph(edges, n);
}

// K_{a,b}: side one is 0..a-1, side two is a..a+b-1.
inline Graph gen_complete_bipartite(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) throw std::invalid_argument("gen_complete_bipartite: sides must be positive");
  detail::check_vertex_budget(a + b);
  std::vector<EdgePair> edges;
  edges.reserve(a * b);
  for (Vertex u = 0; u < a; ++u) {
    for (Vertex v = 0; v < b; ++v) edges.push_back({u, static_cast<Vertex>(a + v)});
  }
  return build_graph(edges, a + b);
}

inline Graph gen_cycle(std::uint64_t n) {
  if (n < 3) throw std::invalid_argument("gen_cycle: need n >= 3");
  detail::check_vertex_budget(n);
  std::vector<EdgePair> edges;
  edges.reserve(n);
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  edges.push_back({static_cast<Vertex>(n - 1), 0});
  return build_graph(edges, n);
}

// rows x cols grid; vertex (r, c) is r * cols + c. Holds exactly
// (rows-1)*(cols-1) 4-cycles, one per unit square.
inline Graph gen_grid(std::uint64_t rows, std::uint64_t cols) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("gen_grid: sides must be positive");
  detail::check_vertex_budget(rows * cols);
  std::vector<EdgePair> edges;
  edges.reserve(2 * rows * cols);
  const auto id = [cols](std::uint64_t r, std::uint64_t c) {
    return static_cast<Vertex>(r * cols + c);
  };
  for (std::uint64_t r = 0; r < rows; ++r) {
    for (std::uint64_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.push_back({id(r, c), id(r, c + 1)});
      if (r + 1 < rows) edges.push_back({id(r, c), id(r + 1, c)});
    }
  }
  return build_graph(edges, rows * cols);
}

// Uniform random simple graph with exactly m edges. Deterministic for a
// fixed seed. Small pair universes are shuffled outright; large ones are
// sampled by rejection.
inline Graph gen_erdos_renyi(std::uint64_t n, std::uint64_t m, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("gen_erdos_renyi: n must be positive");
  detail::check_vertex_budget(n);
  const std::uint64_t max_edges = choose2(n);
  if (m > max_edges) {
    throw std::invalid_argument("gen_erdos_renyi: m = " + std::to_string(m) +
                                " exceeds the " + std::to_string(max_edges) +
                                " vertex pairs");
  }
  std::mt19937_64 rng(seed);
  std::vector<EdgePair> edges;
  if (max_edges <= 4'000'000) {
    std::vector<EdgePair> pairs;
    pairs.reserve(max_edges);
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) pairs.push_back({u, v});
    }
    // Partial Fisher-Yates: the first m slots end up a uniform sample.
    for (std::uint64_t i = 0; i < m; ++i) {
      const std::uint64_t j = i + detail::bounded_rand(rng, pairs.size() - i);
      std::swap(pairs[i], pairs[j]);
    }
    pairs.resize(m);
    edges = std::move(pairs);
  } else {
    std::unordered_set<std::uint64_t> chosen;
    chosen.reserve(2 * m);
    edges.reserve(m);
    while (edges.size() < m) {
      Vertex u = static_cast<Vertex>(detail::bounded_rand(rng, n));
      Vertex v = static_cast<Vertex>(detail::bounded_rand(rng, n));
      if (u == v) continue;
      if (u > v) std::swap(u, v);
      const std::uint64_t key = (static_cast<std::uint64_t>(u) << 32) | v;
      if (chosen.insert(key).second) edges.push_back({u, v});
    }
  }
  return build_graph(edges, n);
}

// Shape of the adversary instance: a hub with `hub_leaves` leaves, `mid_count`
// middle vertices adjacent to the hub, and `leaves_per_mid` leaves under each
// middle vertex. Exponents are floored: mid_count = floor(n^(2/3 - eps)),
// leaves_per_mid = floor(n^(1/3 + eps)).
struct AdversaryShape {
  std::uint64_t hub_leaves = 0;
  std::uint64_t mid_count = 0;
  std::uint64_t leaves_per_mid = 0;

  std::uint64_t vertex_count() const {
    return 1 + hub_leaves + mid_count * (1 + leaves_per_mid);
  }
  std::uint64_t edge_count() const {
    return hub_leaves + mid_count + mid_count * leaves_per_mid;
  }
  // Every leaf -> mid -> hub path is oriented; hub -> mid never is.
  std::uint64_t oriented_lhh_paths() const { return mid_count * leaves_per_mid; }
};

inline AdversaryShape lhh_adversary_shape(std::uint64_t n, double eps) {
  if (!(eps > 0.0 && eps < 1.0 / 3.0)) {
    throw std::invalid_argument("lhh_adversary: eps must lie in (0, 1/3)");
  }
  const long double nf = static_cast<long double>(n);
  const long double h = std::floor(std::pow(nf, 2.0L / 3.0L - static_cast<long double>(eps)));
  const long double l = std::floor(std::pow(nf, 1.0L / 3.0L + static_cast<long double>(eps)));
  if (h < 1.0L || l < 1.0L) {
    throw std::invalid_argument("lhh_adversary: n too small for the requested eps");
  }
  AdversaryShape shape;
  shape.hub_leaves = n;
  shape.mid_count = static_cast<std::uint64_t>(h);
  shape.leaves_per_mid = static_cast<std::uint64_t>(l);
  detail::check_vertex_budget(shape.vertex_count());
  return shape;
}

// The adversary itself: a tree (t = 0) whose oriented L->H->H path count is
// exactly mid_count * leaves_per_mid. Hub is vertex 0, its leaves follow,
// then the middle vertices, then the middle vertices' leaves in blocks.
inline Graph gen_lhh_adversary(std::uint64_t n, double eps = 0.1) {
  const AdversaryShape shape = lhh_adversary_shape(n, eps);
  std::vector<EdgePair> edges;
  edges.reserve(shape.edge_count());
  Vertex next = 1;
  for (std::uint64_t i = 0; i < shape.hub_leaves; ++i) edges.push_back({0, next++});
  const Vertex first_mid = next;
  for (std::uint64_t i = 0; i < shape.mid_count; ++i) edges.push_back({0, next++});
  for (std::uint64_t i = 0; i < shape.mid_count; ++i) {
    const Vertex mid = static_cast<Vertex>(first_mid + i);
    for (std::uint64_t j = 0; j < shape.leaves_per_mid; ++j) edges.push_back({mid, next++});
  }
  return build_graph(edges, shape.vertex_count());
}

}  // namespace fourcycle

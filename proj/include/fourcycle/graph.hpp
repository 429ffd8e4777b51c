#pragma once
// Immutable simple undirected graph in compressed adjacency (CSR) form.
// Neighbor lists are sorted ascending, which gives O(log d) adjacency
// queries and a deterministic iteration order everywhere downstream.

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fourcycle {

using Vertex = std::uint32_t;
using EdgePair = std::pair<Vertex, Vertex>;

inline constexpr std::uint64_t choose2(std::uint64_t k) {
  return k * (k - 1) / 2;
}

class Graph {
 public:
  Graph() = default;

  std::size_t vertex_count() const noexcept { return offsets_.size() - 1; }
  std::uint64_t edge_count() const noexcept { return edges_; }

  std::uint32_t degree(Vertex v) const {
    return static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]);
  }

  // Neighbors of v, sorted ascending, duplicate-free.
  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }

  bool has_edge(Vertex u, Vertex v) const {
    const auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

 private:
  Graph(std::vector<std::uint64_t> offsets, std::vector<Vertex> adjacency)
      : offsets_(std::move(offsets)),
        adjacency_(std::move(adjacency)),
        edges_(adjacency_.size() / 2) {}

  std::vector<std::uint64_t> offsets_{0};
  std::vector<Vertex> adjacency_;
  std::uint64_t edges_ = 0;

  friend Graph build_graph(const std::vector<EdgePair>&, std::size_t, std::uint64_t*);
};

// Builds a Graph over vertices 0..max(max id, n_hint-1). Duplicate edges are
// collapsed; the number of collapsed duplicates is written to
// *duplicates_collapsed when the pointer is given. Self-loops are rejected
// with the offending pair named in the error.
inline Graph build_graph(const std::vector<EdgePair>& edges, std::size_t n_hint = 0,
                         std::uint64_t* duplicates_collapsed = nullptr) {
  std::size_t n = n_hint;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto [u, v] = edges[i];
    if (u == v) {
      throw std::invalid_argument("self-loop (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") at edge " + std::to_string(i));
    }
    n = std::max(n, static_cast<std::size_t>(std::max(u, v)) + 1);
  }

  std::vector<std::uint64_t> offsets(n + 1, 0);
  for (const auto& [u, v] : edges) {
    ++offsets[u + 1];
    ++offsets[v + 1];
  }
  for (std::size_t v = 0; v < n; ++v) offsets[v + 1] += offsets[v];

  std::vector<Vertex> adjacency(edges.size() * 2);
  std::vector<std::uint64_t> cursor(offsets.begin(), offsets.end() - 1);
  for (const auto& [u, v] : edges) {
    adjacency[cursor[u]++] = v;
    adjacency[cursor[v]++] = u;
  }

  // Sort each list and drop duplicate entries in place; the write cursor
  // never overtakes the segment being compacted.
  std::uint64_t duplicate_entries = 0;
  std::uint64_t write = 0;
  std::vector<std::uint64_t> compact(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) {
    const auto begin = adjacency.begin() + static_cast<std::ptrdiff_t>(offsets[v]);
    const auto end = adjacency.begin() + static_cast<std::ptrdiff_t>(offsets[v + 1]);
    std::sort(begin, end);
    const auto unique_end = std::unique(begin, end);
    duplicate_entries += static_cast<std::uint64_t>(end - unique_end);
    for (auto it = begin; it != unique_end; ++it) adjacency[write++] = *it;
    compact[v + 1] = write;
  }
  adjacency.resize(write);
  // Each duplicate edge shows up once per endpoint.
  if (duplicates_collapsed) *duplicates_collapsed = duplicate_entries / 2;
  return Graph(std::move(compact), std::move(adjacency));
}

// Sorted list of vertices adjacent to both u and v.
inline std::vector<Vertex> common_neighbors(const Graph& g, Vertex u, Vertex v) {
  if (u == v) {
    throw std::invalid_argument("common_neighbors: endpoints coincide (" + std::to_string(u) + ")");
  }
  if (u >= g.vertex_count() || v >= g.vertex_count()) {
    throw std::out_of_range("common_neighbors: vertex out of range");
  }
  const auto nu = g.neighbors(u);
  const auto nv = g.neighbors(v);
  std::vector<Vertex> out;
  std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(), std::back_inserter(out));
  return out;
}

}  // namespace fourcycle

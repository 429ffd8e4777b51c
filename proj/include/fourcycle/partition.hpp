#pragma once
// Degree partition: H holds the vertices whose degree exceeds m^(1/3),
// tested exactly in integers as deg^3 > m. Also carries the degree-based
// edge orientation (lower (degree, id) points at higher) used by the
// oriented path enumerator. Every edge between an L and an H vertex is
// automatically oriented L -> H.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "fourcycle/graph.hpp"

namespace fourcycle {

inline bool degree_cubed_exceeds(std::uint64_t degree, std::uint64_t m) {
  using u128 = unsigned __int128;
  return static_cast<u128>(degree) * degree * degree > static_cast<u128>(m);
}

class DegreePartition {
 public:
  DegreePartition() = default;

  // Threshold in cubed form; is_high(v) holds iff deg(v)^3 > threshold_cubed().
  std::uint64_t threshold_cubed() const noexcept { return m_; }

  bool is_high(Vertex v) const { return high_[v] != 0; }
  const std::vector<Vertex>& high_vertices() const noexcept { return high_vertices_; }
  std::uint32_t degree(Vertex v) const { return degrees_[v]; }

  // True when the edge {from, to} is oriented from -> to, i.e. from has the
  // lexicographically smaller (degree, id).
  bool oriented(Vertex from, Vertex to) const {
    if (degrees_[from] != degrees_[to]) return degrees_[from] < degrees_[to];
    return from < to;
  }

 private:
  std::uint64_t m_ = 0;
  std::vector<std::uint8_t> high_;
  std::vector<Vertex> high_vertices_;
  std::vector<std::uint32_t> degrees_;

  friend DegreePartition degree_partition(const Graph&);
};

inline DegreePartition degree_partition(const Graph& g) {
  const std::size_t n = g.vertex_count();
  DegreePartition p;
  p.m_ = g.edge_count();
  p.high_.assign(n, 0);
  p.degrees_.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    const std::uint32_t d = g.degree(v);
    p.degrees_[v] = d;
    if (degree_cubed_exceeds(d, p.m_)) {
      p.high_[v] = 1;
      p.high_vertices_.push_back(v);
    }
  }
  return p;
}

}  // namespace fourcycle

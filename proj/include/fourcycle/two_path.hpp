#pragma once
// The three classes of useful 2-paths, streamed to a caller-supplied sink:
//
//   HHH          both endpoints and the center in H
//   LCenter      center in L, endpoints unrestricted
//   OrientedLHH  L endpoint -> H center -> H endpoint, both hops following
//                the degree orientation
//
// The classes are pairwise disjoint (HHH and OrientedLHH differ on the
// endpoints, LCenter on the center) and every 4-cycle contains two useful
// 2-paths with the same endpoint pair, which is what the listing pipeline
// relies on. Degenerate paths with equal endpoints cannot arise: the two
// endpoints are distinct neighbors of the center.
//
// Sinks may return void, or bool where false stops the enumeration early.

#include <algorithm>
#include <cstdint>
#include <type_traits>
#include <vector>

#include "fourcycle/graph.hpp"
#include "fourcycle/partition.hpp"

namespace fourcycle {

enum class PathClass : std::uint8_t { HHH, LCenter, OrientedLHH };

struct TwoPath {
  Vertex endpoint_lo;
  Vertex endpoint_hi;
  Vertex center;
  PathClass cls;

  friend bool operator==(const TwoPath&, const TwoPath&) = default;
  friend auto operator<=>(const TwoPath&, const TwoPath&) = default;
};

namespace detail {

// Feeds one item to a sink; a bool-returning sink can stop the stream by
// returning false.
template <class Sink, class Item>
bool emit(Sink& sink, const Item& item) {
  if constexpr (std::is_void_v<decltype(sink(item))>) {
    sink(item);
    return true;
  } else {
    return static_cast<bool>(sink(item));
  }
}

// Calls fn(c) for every unordered vertex pair with codegree c >= 1. Work is
// O(n + #2-paths) and memory O(n): pairs are bucketed row by row from the
// smaller endpoint.
template <class Fn>
void for_each_positive_codegree(const Graph& g, Fn&& fn) {
  const std::size_t n = g.vertex_count();
  std::vector<std::uint32_t> codeg(n, 0);
  std::vector<Vertex> touched;
  for (Vertex u = 0; u < n; ++u) {
    for (const Vertex w : g.neighbors(u)) {
      for (const Vertex v : g.neighbors(w)) {
        if (v <= u) continue;
        if (codeg[v]++ == 0) touched.push_back(v);
      }
    }
    for (const Vertex v : touched) {
      fn(codeg[v]);
      codeg[v] = 0;
    }
    touched.clear();
  }
}

}  // namespace detail

// All 2-paths whose three vertices lie in H, i.e. the 2-paths of the
// subgraph induced by H. Returns the number emitted.
template <class Sink>
std::uint64_t enum_hhh_paths(const Graph& g, const DegreePartition& p, Sink&& sink) {
  std::uint64_t emitted = 0;
  std::vector<Vertex> hn;
  for (const Vertex c : p.high_vertices()) {
    hn.clear();
    for (const Vertex w : g.neighbors(c)) {
      if (p.is_high(w)) hn.push_back(w);
    }
    for (std::size_t i = 0; i + 1 < hn.size(); ++i) {
      for (std::size_t j = i + 1; j < hn.size(); ++j) {
        const TwoPath tp{hn[i], hn[j], c, PathClass::HHH};
        ++emitted;
        if (!detail::emit(sink, tp)) return emitted;
      }
    }
  }
  return emitted;
}

// All 2-paths centered at an L vertex.
template <class Sink>
std::uint64_t enum_lcenter_paths(const Graph& g, const DegreePartition& p, Sink&& sink) {
  const std::size_t n = g.vertex_count();
  std::uint64_t emitted = 0;
  for (Vertex c = 0; c < n; ++c) {
    if (p.is_high(c)) continue;
    const auto nb = g.neighbors(c);
    for (std::size_t i = 0; i + 1 < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        const TwoPath tp{nb[i], nb[j], c, PathClass::LCenter};
        ++emitted;
        if (!detail::emit(sink, tp)) return emitted;
      }
    }
  }
  return emitted;
}

// Oriented paths u -> v -> w with u in L and v, w in H. The first hop needs
// no orientation check: deg(u)^3 <= m < deg(v)^3 forces u -> v. The
// out-neighborhoods of H within H are prepared once up front.
template <class Sink>
std::uint64_t enum_oriented_lhh_paths(const Graph& g, const DegreePartition& p, Sink&& sink) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<Vertex>> out_high(n);
  for (const Vertex v : p.high_vertices()) {
    for (const Vertex w : g.neighbors(v)) {
      if (p.is_high(w) && p.oriented(v, w)) out_high[v].push_back(w);
    }
  }
  std::uint64_t emitted = 0;
  for (Vertex u = 0; u < n; ++u) {
    if (p.is_high(u)) continue;
    for (const Vertex v : g.neighbors(u)) {
      if (!p.is_high(v)) continue;
      for (const Vertex w : out_high[v]) {
        const TwoPath tp{std::min(u, w), std::max(u, w), v, PathClass::OrientedLHH};
        ++emitted;
        if (!detail::emit(sink, tp)) return emitted;
      }
    }
  }
  return emitted;
}

// Per-class path counts without materializing any path.
struct TwoPathCensus {
  // by_class[center][k]: center 0 = L, 1 = H; k = number of H endpoints.
  std::uint64_t by_class[2][3] = {};
  std::uint64_t oriented_lhh = 0;  // the count P of oriented L->H->H paths
  std::uint64_t total = 0;         // sum over v of C(deg(v), 2)

  std::uint64_t hhh() const { return by_class[1][2]; }
  std::uint64_t lhh_unoriented() const { return by_class[1][1]; }
  std::uint64_t l_center() const { return by_class[0][0] + by_class[0][1] + by_class[0][2]; }
};

inline TwoPathCensus two_path_census(const Graph& g, const DegreePartition& p) {
  const std::size_t n = g.vertex_count();
  TwoPathCensus census;
  for (Vertex c = 0; c < n; ++c) {
    std::uint64_t high_nb = 0;
    std::uint64_t oriented_out = 0;
    const bool c_high = p.is_high(c);
    for (const Vertex w : g.neighbors(c)) {
      if (p.is_high(w)) {
        ++high_nb;
        if (c_high && p.oriented(c, w)) ++oriented_out;
      }
    }
    const std::uint64_t low_nb = g.degree(c) - high_nb;
    const std::size_t row = c_high ? 1 : 0;
    census.by_class[row][0] += choose2(low_nb);
    census.by_class[row][1] += low_nb * high_nb;
    census.by_class[row][2] += choose2(high_nb);
    census.total += choose2(g.degree(c));
    if (c_high) census.oriented_lhh += low_nb * oriented_out;
  }
  return census;
}

}  // namespace fourcycle

#pragma once
// Slow, definition-level reference implementations. They rely on adjacency
// queries only (class membership and orientation are recomputed from raw
// degrees) so they validate the fast pipelines with independent code.

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>

#include "fourcycle/graph.hpp"
#include "fourcycle/listing.hpp"
#include "fourcycle/two_path.hpp"

namespace fourcycle {

inline constexpr std::size_t kDefaultOracleLimit = 64;

namespace detail {

inline void check_oracle_limit(const Graph& g, std::size_t limit, const char* what) {
  if (g.vertex_count() > limit) {
    throw std::invalid_argument(std::string(what) + ": n = " +
                                std::to_string(g.vertex_count()) +
                                " exceeds the oracle limit " + std::to_string(limit));
  }
}

}  // namespace detail

// Every 4-cycle, found by scanning ordered tuples (a,b,c,d) and keeping the
// canonical ones: a minimal on the cycle a-b-c-d-a and b < d. Quartic;
// refuses graphs above `limit`.
inline std::set<CanonicalCycle> brute_force_list(const Graph& g,
                                                 std::size_t limit = kDefaultOracleLimit) {
  detail::check_oracle_limit(g, limit, "brute_force_list");
  const Vertex n = static_cast<Vertex>(g.vertex_count());
  std::set<CanonicalCycle> cycles;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (!g.has_edge(a, b)) continue;
      for (Vertex c = a + 1; c < n; ++c) {
        if (c == b || !g.has_edge(b, c)) continue;
        for (Vertex d = b + 1; d < n; ++d) {
          if (d == c || !g.has_edge(c, d) || !g.has_edge(d, a)) continue;
          cycles.insert({a, b, c, d});
        }
      }
    }
  }
  return cycles;
}

// Every 2-path of one class, by a triple loop with the class predicates
// spelled out from the raw definitions.
inline std::set<TwoPath> brute_force_two_paths(const Graph& g, PathClass cls,
                                               std::size_t limit = kDefaultOracleLimit) {
  detail::check_oracle_limit(g, limit, "brute_force_two_paths");
  const Vertex n = static_cast<Vertex>(g.vertex_count());
  const std::uint64_t m = g.edge_count();
  const auto high = [&](Vertex v) {
    const std::uint64_t d = g.degree(v);
    return static_cast<unsigned __int128>(d) * d * d > static_cast<unsigned __int128>(m);
  };
  const auto points_at = [&](Vertex from, Vertex to) {
    if (g.degree(from) != g.degree(to)) return g.degree(from) < g.degree(to);
    return from < to;
  };
  std::set<TwoPath> paths;
  for (Vertex lo = 0; lo < n; ++lo) {
    for (Vertex hi = lo + 1; hi < n; ++hi) {
      for (Vertex c = 0; c < n; ++c) {
        if (c == lo || c == hi) continue;
        if (!g.has_edge(lo, c) || !g.has_edge(c, hi)) continue;
        bool keep = false;
        switch (cls) {
          case PathClass::HHH:
            keep = high(lo) && high(c) && high(hi);
            break;
          case PathClass::LCenter:
            keep = !high(c);
            break;
          case PathClass::OrientedLHH:
            keep = high(c) &&
                   ((!high(lo) && high(hi) && points_at(lo, c) && points_at(c, hi)) ||
                    (!high(hi) && high(lo) && points_at(hi, c) && points_at(c, lo)));
            break;
        }
        if (keep) paths.insert({lo, hi, c, cls});
      }
    }
  }
  return paths;
}

}  // namespace fourcycle

#pragma once
// 4-cycle listing and counting.
//
// list_n2 visits every vertex pair {u, v} and pairs up their common
// neighbors: Theta(n^2 + t) time, O(n) working memory per row plus the
// dedup set.
//
// list_m43 enumerates only the three useful 2-path classes, groups them by
// endpoint pair and pairs up centers within a group. Splitting a 4-cycle's
// vertices by H/L membership shows every cycle owns an opposite pair whose
// two 2-paths are both useful:
//   - all four in H: two HHH paths;
//   - some opposite pair contains two L vertices: the complementary pair
//     sees two L-centered paths;
//   - exactly one L vertex: the opposite pair not containing it sees one
//     LCenter path (centered at the L vertex) and one HHH path;
//   - exactly two L vertices, adjacent: both opposite pairs mix L and H;
//     each sees one LCenter path and one H-centered mixed path, and the
//     degree orientation of the single H-H hop makes the mixed path
//     OrientedLHH for exactly one of the two pairs.
// Candidates are deduplicated through a canonical form, so each cycle
// reaches the sink exactly once in both algorithms.
//
// Sinks follow the 2-path convention: void return, or bool where false
// aborts the run (used by detect).

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "fourcycle/diagnostics.hpp"
#include "fourcycle/graph.hpp"
#include "fourcycle/partition.hpp"
#include "fourcycle/two_path.hpp"

namespace fourcycle {

// Canonical representative of a 4-cycle a-b-c-d-a: a is the smallest vertex
// and b < d breaks the direction tie.
struct CanonicalCycle {
  Vertex a;
  Vertex b;
  Vertex c;
  Vertex d;

  friend bool operator==(const CanonicalCycle&, const CanonicalCycle&) = default;
  friend auto operator<=>(const CanonicalCycle&, const CanonicalCycle&) = default;
};

// Canonical form of the cycle x-p-y-q-x, given as the opposite endpoint
// pair {x, y} and the center pair {p, q}.
inline CanonicalCycle canonical_cycle(Vertex x, Vertex y, Vertex p, Vertex q) {
  const Vertex a = std::min(std::min(x, y), std::min(p, q));
  if (a == x || a == y) {
    const Vertex opposite = (a == x) ? y : x;
    return {a, std::min(p, q), opposite, std::max(p, q)};
  }
  const Vertex opposite = (a == p) ? q : p;
  return {a, std::min(x, y), opposite, std::max(x, y)};
}

struct CanonicalCycleHash {
  std::size_t operator()(const CanonicalCycle& c) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (const std::uint64_t part : {c.a, c.b, c.c, c.d}) {
      h ^= part + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

// Work counters for one listing run. useful_two_paths counts the bucketed
// paths (all 2-paths for list_n2, the three useful classes for list_m43);
// raw_candidates counts center pairs before deduplication, which never
// exceeds 2t; dedup_hits = raw_candidates - cycles.
struct ListStats {
  std::uint64_t cycles = 0;
  std::uint64_t useful_two_paths = 0;
  std::uint64_t raw_candidates = 0;
  std::uint64_t dedup_hits = 0;
};

template <class Sink>
std::uint64_t list_n2(const Graph& g, Sink&& sink, ListStats* stats = nullptr) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<Vertex>> centers(n);
  std::vector<std::uint8_t> occupied(n, 0);
  std::unordered_set<CanonicalCycle, CanonicalCycleHash> seen;
  ListStats local;
  bool stopped = false;

  for (Vertex u = 0; u < n && !stopped; ++u) {
    // Bucket the 2-paths u - w - v of row u (v > u) under their far endpoint.
    for (const Vertex w : g.neighbors(u)) {
      for (const Vertex v : g.neighbors(w)) {
        if (v <= u) continue;
        centers[v].push_back(w);
        occupied[v] = 1;
        ++local.useful_two_paths;
      }
    }
    // Sweep all pairs {u, v}; distinct centers p, q close the cycle u-p-v-q-u.
    for (std::size_t v = u + 1; v < n; ++v) {
      if (!occupied[v]) continue;
      auto& cs = centers[v];
      for (std::size_t i = 0; !stopped && i + 1 < cs.size(); ++i) {
        for (std::size_t j = i + 1; j < cs.size(); ++j) {
          ++local.raw_candidates;
          const CanonicalCycle cyc = canonical_cycle(u, static_cast<Vertex>(v), cs[i], cs[j]);
          if (!seen.insert(cyc).second) {
            ++local.dedup_hits;
            continue;
          }
          ++local.cycles;
          if (!detail::emit(sink, cyc)) {
            stopped = true;
            break;
          }
        }
      }
      cs.clear();
      occupied[v] = 0;
    }
  }
  if (stats) *stats = local;
  return local.cycles;
}

namespace detail {

struct EndpointGroup {
  Vertex lo = 0;
  Vertex hi = 0;
  std::vector<Vertex> centers;
};

}  // namespace detail

template <class Sink>
std::uint64_t list_m43(const Graph& g, Sink&& sink, ListStats* stats = nullptr) {
  const DegreePartition p = degree_partition(g);
  ListStats local;

  // Group the useful 2-paths by endpoint pair. Centers within a group are
  // pairwise distinct: within one class each path is produced once, and
  // paths of different classes centered at the same vertex cannot share an
  // endpoint pair (the class is determined by the pair's H/L pattern plus
  // the center side).
  std::unordered_map<std::uint64_t, detail::EndpointGroup> groups;
  const auto collect = [&](const TwoPath& tp) {
    const std::uint64_t key =
        (static_cast<std::uint64_t>(tp.endpoint_lo) << 32) | tp.endpoint_hi;
    auto& group = groups[key];
    if (group.centers.empty()) {
      group.lo = tp.endpoint_lo;
      group.hi = tp.endpoint_hi;
    }
    group.centers.push_back(tp.center);
  };
  local.useful_two_paths += enum_hhh_paths(g, p, collect);
  local.useful_two_paths += enum_lcenter_paths(g, p, collect);
  local.useful_two_paths += enum_oriented_lhh_paths(g, p, collect);

  std::unordered_set<CanonicalCycle, CanonicalCycleHash> seen;
  for (const auto& [key, group] : groups) {
    const auto& cs = group.centers;
    for (std::size_t i = 0; i + 1 < cs.size(); ++i) {
      for (std::size_t j = i + 1; j < cs.size(); ++j) {
        ++local.raw_candidates;
        const CanonicalCycle cyc = canonical_cycle(group.lo, group.hi, cs[i], cs[j]);
        if (!seen.insert(cyc).second) {
          ++local.dedup_hits;
          continue;
        }
        ++local.cycles;
        if (!detail::emit(sink, cyc)) {
          if (stats) *stats = local;
          return local.cycles;
        }
      }
    }
  }
  if (stats) *stats = local;
  return local.cycles;
}

// Counting by codegrees: t = (1/2) * sum over unordered pairs of C(codeg, 2),
// since each 4-cycle contributes C(2,2) to both of its opposite pairs.
inline std::uint64_t count_codegree(const Graph& g) {
  std::uint64_t doubled = 0;
  detail::for_each_positive_codegree(
      g, [&](std::uint32_t c) { doubled += choose2(c); });
  if (doubled % 2 != 0) {
    throw std::runtime_error("codegree accounting: opposite-pair total is odd");
  }
  return doubled / 2;
}

inline bool detect(const Graph& g) {
  bool found = false;
  const auto stop_on_first = [&](const CanonicalCycle&) {
    found = true;
    return false;
  };
  const long double n = static_cast<long double>(g.vertex_count());
  const long double m = static_cast<long double>(g.edge_count());
  if (n * n <= std::pow(m, 4.0L / 3.0L)) {
    list_n2(g, stop_on_first);
  } else {
    list_m43(g, stop_on_first);
  }
  return found;
}

enum class CountAlgo { N2, M43, Codegree, Trace };

inline std::uint64_t count(const Graph& g, CountAlgo algo) {
  const auto discard = [](const CanonicalCycle&) {};
  switch (algo) {
    case CountAlgo::N2:
      return list_n2(g, discard);
    case CountAlgo::M43:
      return list_m43(g, discard);
    case CountAlgo::Codegree:
      return count_codegree(g);
    case CountAlgo::Trace:
      return trace_count(g);
  }
  throw std::invalid_argument("unknown counting algorithm");
}

}  // namespace fourcycle

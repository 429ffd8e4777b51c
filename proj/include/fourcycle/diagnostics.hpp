#pragma once
// Counting diagnostics built on closed 4-walks, plus the constructive side
// of the oriented-path lower bound: a search for a near-regular bipartite
// witness (A, B) inside H.
//
// Closed 4-walk accounting: with W the number of closed 4-walks,
//   W = sum_v deg(v)^2 + 2 * sum_{u<v} codeg(u,v)^2
//     = 8t + 2m + 2 * sum_v deg(v) * (deg(v) - 1),
// so t falls out of W by exact integer division.

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "fourcycle/graph.hpp"
#include "fourcycle/partition.hpp"
#include "fourcycle/two_path.hpp"

namespace fourcycle {

inline std::uint64_t closed_4_walk_count(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::uint64_t walks = 0;
  for (Vertex v = 0; v < n; ++v) {
    const std::uint64_t d = g.degree(v);
    walks += d * d;
  }
  detail::for_each_positive_codegree(
      g, [&](std::uint32_t c) { walks += 2ull * c * c; });
  return walks;
}

inline std::uint64_t cycles_from_walks(const Graph& g, std::uint64_t walks) {
  const std::size_t n = g.vertex_count();
  std::uint64_t degenerate = 2 * g.edge_count();
  for (Vertex v = 0; v < n; ++v) {
    const std::uint64_t d = g.degree(v);
    degenerate += 2 * d * (d - 1);
  }
  if (walks < degenerate || (walks - degenerate) % 8 != 0) {
    throw std::runtime_error("closed-walk accounting out of balance");
  }
  return (walks - degenerate) / 8;
}

inline std::uint64_t trace_count(const Graph& g) {
  return cycles_from_walks(g, closed_4_walk_count(g));
}

// W * n^4 >= 16 m^4, i.e. W >= d^4 for the average degree d = 2m/n, checked
// exactly in 128-bit integers. Vacuously true on the empty graph.
inline bool spectral_floor_holds(const Graph& g, std::uint64_t walks) {
  using u128 = unsigned __int128;
  const u128 n = g.vertex_count();
  const u128 m = g.edge_count();
  if (n == 0) return true;
  const u128 lhs = static_cast<u128>(walks) * n * n * n * n;
  const u128 rhs = static_cast<u128>(16) * m * m * m * m;
  return lhs >= rhs;
}

inline bool spectral_floor_holds(const Graph& g) {
  return spectral_floor_holds(g, closed_4_walk_count(g));
}

// Logs are base 2 of max(n, 2) so tiny graphs stay finite.
inline long double log2_squared(std::size_t n) {
  const long double lg = std::log2(static_cast<long double>(n < 2 ? 2 : n));
  return lg * lg;
}

// Oriented-path lower bound: when P > 100 m^{4/3} log^2 n the graph must
// contain at least P / (100 log^2 n) 4-cycles. Inactive instances pass
// vacuously.
struct LhhTheoremCheck {
  std::uint64_t oriented_paths = 0;  // P
  std::uint64_t cycles = 0;          // t
  long double threshold = 0;         // 100 m^{4/3} log^2 n
  long double implied_floor = 0;     // P / (100 log^2 n)
  bool condition_active = false;
  bool holds = true;
};

inline LhhTheoremCheck check_lhh_theorem_from(std::size_t n, std::uint64_t m,
                                              std::uint64_t oriented_paths,
                                              std::uint64_t cycles) {
  LhhTheoremCheck check;
  check.oriented_paths = oriented_paths;
  check.cycles = cycles;
  const long double lg2 = log2_squared(n);
  check.threshold = 100.0L * std::pow(static_cast<long double>(m), 4.0L / 3.0L) * lg2;
  check.implied_floor = static_cast<long double>(oriented_paths) / (100.0L * lg2);
  check.condition_active = static_cast<long double>(oriented_paths) > check.threshold;
  check.holds = !check.condition_active ||
                static_cast<long double>(cycles) >= check.implied_floor;
  return check;
}

inline LhhTheoremCheck check_lhh_theorem(const Graph& g) {
  const DegreePartition p = degree_partition(g);
  const TwoPathCensus census = two_path_census(g, p);
  return check_lhh_theorem_from(g.vertex_count(), g.edge_count(),
                                census.oriented_lhh, trace_count(g));
}

// One near-regular oriented witness inside H: all of a_side shares a dyadic
// in-degree band from L and a dyadic out-degree band into b_side, so degrees
// vary by a factor below 2 on both sides. b_side keeps only vertices fed by
// a_side, which leaves the path count through a_side unchanged.
struct RegularPartition {
  std::vector<Vertex> a_side;
  std::vector<Vertex> b_side;
  std::uint32_t bucket_in_log = 0;    // floor(log2 deg_L) shared by a_side
  std::uint32_t bucket_out_log = 0;   // floor(log2 deg_B) shared by a_side
  std::uint64_t min_in_degree = 0;    // d_L
  std::uint64_t min_out_degree = 0;   // d_B
  std::uint64_t achieved_paths = 0;   // sum over a_side of deg_L * deg_B
  long double target = 0;             // P / (4 log^2 n)

  bool empty() const { return a_side.empty(); }
};

// Randomized halving of H, best dyadic bucket kept, best of `retries`
// attempts returned. Deterministic for a fixed seed. Returns an empty
// witness when the graph has no oriented L->H->H path.
inline RegularPartition find_regular_partition(const Graph& g, const DegreePartition& p,
                                               unsigned retries, std::uint64_t seed) {
  const std::size_t n = g.vertex_count();
  const TwoPathCensus census = two_path_census(g, p);
  RegularPartition best;
  best.target = static_cast<long double>(census.oriented_lhh) / (4.0L * log2_squared(n));
  if (census.oriented_lhh == 0 || retries == 0) return best;

  const auto& high = p.high_vertices();
  std::mt19937_64 rng(seed);
  std::vector<std::uint8_t> in_a(n, 0);
  std::vector<std::uint8_t> in_b_side(n, 0);

  for (unsigned attempt = 0; attempt < retries; ++attempt) {
    // Each H vertex joins A with probability 1/2.
    for (const Vertex v : high) in_a[v] = static_cast<std::uint8_t>(rng() & 1u);

    struct Member {
      Vertex v;
      std::uint64_t deg_l;
      std::uint64_t deg_b;
    };
    std::vector<Member> members;
    // 64 x 64 dyadic buckets cover every possible degree.
    std::vector<std::uint64_t> bucket_paths(64 * 64, 0);
    for (const Vertex v : high) {
      if (!in_a[v]) continue;
      std::uint64_t deg_l = 0;
      std::uint64_t deg_b = 0;
      for (const Vertex w : g.neighbors(v)) {
        if (!p.is_high(w)) {
          ++deg_l;
        } else if (!in_a[w] && p.oriented(v, w)) {
          ++deg_b;
        }
      }
      if (deg_l == 0 || deg_b == 0) continue;
      members.push_back({v, deg_l, deg_b});
      const unsigned i = 63 - static_cast<unsigned>(__builtin_clzll(deg_l));
      const unsigned j = 63 - static_cast<unsigned>(__builtin_clzll(deg_b));
      bucket_paths[i * 64 + j] += deg_l * deg_b;
    }

    std::size_t best_bucket = 0;
    for (std::size_t b = 1; b < bucket_paths.size(); ++b) {
      if (bucket_paths[b] > bucket_paths[best_bucket]) best_bucket = b;
    }
    if (bucket_paths[best_bucket] <= best.achieved_paths) continue;

    const unsigned bi = static_cast<unsigned>(best_bucket / 64);
    const unsigned bj = static_cast<unsigned>(best_bucket % 64);
    RegularPartition candidate;
    candidate.target = best.target;
    candidate.bucket_in_log = bi;
    candidate.bucket_out_log = bj;
    candidate.achieved_paths = bucket_paths[best_bucket];
    candidate.min_in_degree = ~0ull;
    candidate.min_out_degree = ~0ull;
    for (const Member& mm : members) {
      const unsigned i = 63 - static_cast<unsigned>(__builtin_clzll(mm.deg_l));
      const unsigned j = 63 - static_cast<unsigned>(__builtin_clzll(mm.deg_b));
      if (i != bi || j != bj) continue;
      candidate.a_side.push_back(mm.v);
      candidate.min_in_degree = std::min(candidate.min_in_degree, mm.deg_l);
      candidate.min_out_degree = std::min(candidate.min_out_degree, mm.deg_b);
    }
    // Prune B to the vertices actually reached from a_side.
    for (const Vertex v : candidate.a_side) {
      for (const Vertex w : g.neighbors(v)) {
        if (p.is_high(w) && !in_a[w] && p.oriented(v, w)) in_b_side[w] = 1;
      }
    }
    for (const Vertex v : high) {
      if (in_b_side[v]) {
        candidate.b_side.push_back(v);
        in_b_side[v] = 0;
      }
    }
    best = std::move(candidate);
  }
  return best;
}

// Everything cli_stats reports about one graph. The average degree is kept
// as the exact rational 2m / n next to its double rendering.
struct CensusReport {
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::uint64_t t = 0;
  std::uint64_t avg_degree_num = 0;  // 2m
  std::uint64_t avg_degree_den = 0;  // n
  double avg_degree = 0;
  TwoPathCensus paths;
  std::uint64_t closed_4_walks = 0;
  double walk_budget = 0;  // 10 n^2 + 10 t / C(10,2), reported only
  LhhTheoremCheck lhh;
  bool spectral_floor_ok = true;
};

inline CensusReport build_census_report(const Graph& g) {
  CensusReport report;
  report.n = g.vertex_count();
  report.m = g.edge_count();
  const DegreePartition p = degree_partition(g);
  report.paths = two_path_census(g, p);
  report.closed_4_walks = closed_4_walk_count(g);
  report.t = cycles_from_walks(g, report.closed_4_walks);
  report.avg_degree_num = 2 * report.m;
  report.avg_degree_den = report.n;
  report.avg_degree = report.n == 0
                          ? 0.0
                          : static_cast<double>(report.avg_degree_num) /
                                static_cast<double>(report.avg_degree_den);
  report.walk_budget = 10.0 * static_cast<double>(report.n) * static_cast<double>(report.n) +
                          10.0 * static_cast<double>(report.t) / static_cast<double>(choose2(10));
  report.lhh = check_lhh_theorem_from(g.vertex_count(), g.edge_count(),
                                      report.paths.oriented_lhh, report.t);
  report.spectral_floor_ok = spectral_floor_holds(g, report.closed_4_walks);
  return report;
}

}  // namespace fourcycle

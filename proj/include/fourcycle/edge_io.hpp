#pragma once
// Edge-list files: one "u v" pair per line, '#' lines are comments, blank
// lines are ignored. Cycles go out as "a b c d" in canonical order.

#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "fourcycle/graph.hpp"
#include "fourcycle/listing.hpp"

namespace fourcycle {

inline std::vector<EdgePair> parse_edge_list(std::istream& in) {
  std::vector<EdgePair> edges;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto fail = [&](const std::string& why) -> void {
      throw std::runtime_error("line " + std::to_string(line_no) + ": " + why);
    };
    if (line.find('-') != std::string::npos) fail("vertex ids must be non-negative");
    std::istringstream fields(line);
    unsigned long long u = 0;
    unsigned long long v = 0;
    std::string extra;
    if (!(fields >> u >> v)) fail("expected two vertex ids");
    if (fields >> extra) fail("trailing text '" + extra + "'");
    if (u > std::numeric_limits<Vertex>::max() || v > std::numeric_limits<Vertex>::max()) {
      fail("vertex id exceeds the 32-bit budget");
    }
    if (u == v) fail("self-loop (" + std::to_string(u) + "," + std::to_string(v) + ")");
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  return edges;
}

inline std::vector<EdgePair> read_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  try {
    return parse_edge_list(in);
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

inline Graph load_graph(const std::string& path, std::uint64_t* duplicates_collapsed = nullptr) {
  return build_graph(read_edge_list(path), 0, duplicates_collapsed);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    for (const Vertex v : g.neighbors(u)) {
      if (v > u) out << u << ' ' << v << '\n';
    }
  }
}

inline void write_edge_list(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  write_edge_list(out, g);
  out.flush();
  if (!out) throw std::runtime_error("write failed on '" + path + "'");
}

inline void write_cycle(std::ostream& out, const CanonicalCycle& c) {
  out << c.a << ' ' << c.b << ' ' << c.c << ' ' << c.d << '\n';
}

}  // namespace fourcycle

#pragma once

#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "wscm/error.hpp"
#include "wscm/graph.hpp"

namespace wscm {

/**
 * Graph text format:
 *
 *     # comment lines start with '#'
 *     n m
 *     u v        (m lines, 1-based vertex indices)
 *
 * Blank lines are skipped. Loops, duplicate edges, out-of-range indices and
 * a wrong edge count are input errors.
 */
inline Graph read_graph(std::istream& in) {
  std::vector<std::vector<long long>> rows;
  std::vector<std::size_t> line_numbers;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::vector<long long> row;
    std::string token;
    while (fields >> token) {
      std::size_t used = 0;
      long long value = 0;
      try {
        value = std::stoll(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size()) throw InputError("line " + std::to_string(line_no) + ": not an integer: " + token);
      row.push_back(value);
    }
    if (row.size() != 2) throw InputError("line " + std::to_string(line_no) + ": expected two integers");
    rows.push_back(std::move(row));
    line_numbers.push_back(line_no);
  }
  if (rows.empty()) throw InputError("missing header line 'n m'");
  const auto n = rows[0][0];
  const auto m = rows[0][1];
  if (n < 0 || m < 0) throw InputError("negative vertex or edge count");
  if (static_cast<unsigned long long>(n) > kMaxIndices)
    throw InputError("graphs are limited to " + std::to_string(kMaxIndices) + " vertices");
  if (static_cast<long long>(rows.size()) - 1 != m)
    throw InputError("header declares " + std::to_string(m) + " edges, found " + std::to_string(rows.size() - 1));
  Graph g(static_cast<std::size_t>(n));
  for (std::size_t k = 1; k < rows.size(); ++k) {
    const auto u = rows[k][0];
    const auto v = rows[k][1];
    const auto where = "line " + std::to_string(line_numbers[k]) + ": ";
    if (u < 1 || v < 1 || u > n || v > n) throw InputError(where + "vertex index out of range 1.." + std::to_string(n));
    if (u == v) throw InputError(where + "loop edge");
    if (g.adjacent(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1))) throw InputError(where + "duplicate edge");
    g.add_edge(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
  }
  return g;
}

inline Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return read_graph(in);
}

/// Writes the header and edges; labels are not part of the format.
inline std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

/// Parses "3,1,4" (1-based) into a vertex set of `g`.
inline VertexSet parse_vertex_list(const std::string& text, std::size_t vertex_count) {
  VertexSet out;
  if (text.empty()) return out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw InputError("bad vertex index '" + item + "'");
    if (value < 1 || static_cast<unsigned long long>(value) > vertex_count)
      throw InputError("vertex index " + item + " out of range 1.." + std::to_string(vertex_count));
    out.insert(static_cast<std::size_t>(value - 1));
  }
  return out;
}

}  // namespace wscm

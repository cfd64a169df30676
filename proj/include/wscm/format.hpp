#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "wscm/graph.hpp"
#include "wscm/monomial.hpp"

namespace wscm {

/// Product of variable names, "1" for the empty monomial.
inline std::string format_monomial(const std::vector<std::string>& names, SquareFreeMonomial m) {
  if (m.empty()) return "1";
  std::string out;
  m.for_each([&](std::size_t v) { out += names.at(v); });
  return out;
}

/// "(g1, g2, ...)"; the zero ideal prints as "(0)".
inline std::string format_ideal(const std::vector<std::string>& names, const std::vector<SquareFreeMonomial>& gens) {
  if (gens.empty()) return "(0)";
  std::string out = "(";
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (k > 0) out += ", ";
    out += format_monomial(names, gens[k]);
  }
  return out + ")";
}

inline std::string format_ideal(const std::vector<std::string>& names, const MonomialIdeal& ideal) {
  return format_ideal(names, ideal.generators());
}

/// "{x1, x3}".
inline std::string format_vertex_set(const std::vector<std::string>& names, VertexSet s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](Vertex v) {
    if (!first) out += ", ";
    out += names.at(v);
    first = false;
  });
  return out + "}";
}

/// One-based index list "1,3,4" as accepted by parse_vertex_list.
inline std::string format_index_list(VertexSet s) {
  std::string out;
  s.for_each([&](Vertex v) {
    if (!out.empty()) out += ',';
    out += std::to_string(v + 1);
  });
  return out;
}

/// Graph on one line: "n=5 edges=12 23 34 45 15" with 1-based endpoints.
inline std::string format_graph_inline(const Graph& g) {
  std::ostringstream out;
  out << "n=" << g.vertex_count() << " edges=";
  bool first = true;
  for (auto [u, v] : g.edges()) {
    if (!first) out << ' ';
    out << u + 1 << '-' << v + 1;
    first = false;
  }
  if (first) out << "none";
  return out.str();
}

}  // namespace wscm

#pragma once

#include <string>
#include <vector>

#include "wscm/graph.hpp"

namespace wscm::fixtures {

inline Graph cycle(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

inline Graph path(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline Graph complete(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

/// Four-cycle x1..x4 with the triangle x3 x4 x5 and pendant edge x5 x6; whiskered at x6.
inline Graph square_with_tail() {
  return Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {2, 4}, {3, 4}, {4, 5}});
}

/// Four-cycle x1..x4 with triangles x3 x4 x5 and x2 x3 x6; whiskered at x6.
inline Graph square_with_two_triangles() {
  return Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {2, 4}, {3, 4}, {1, 5}, {2, 5}});
}

/// Four-cycle y1..y4 with a pendant vertex y on y1; whiskered at y with tip x.
inline Graph square_with_pendant() {
  Graph g(5, {"y1", "y2", "y3", "y4", "y"});
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.add_edge(0, 3);
  g.add_edge(0, 4);
  return g;
}

/// The whisker set used with each of the three graphs above (last vertex).
inline VertexSet last_vertex(const Graph& g) { return VertexSet{g.vertex_count() - 1}; }

/// x - y1 - y2: the edge y1 y2 whiskered at y1 only.
inline Graph one_sided_whiskered_edge() {
  Graph g(3, {"x", "y1", "y2"});
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  return g;
}

}  // namespace wscm::fixtures

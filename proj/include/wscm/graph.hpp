#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wscm/error.hpp"
#include "wscm/index_set.hpp"

namespace wscm {

using Vertex = std::size_t;
using VertexSet = IndexSet;
using Edge = std::pair<Vertex, Vertex>;

/**
 * Simple undirected graph on vertices 0..n-1 with display labels.
 *
 * Loops and parallel edges are rejected. Labels default to "x1", "x2", ...
 * (1-based) and travel with their vertices through induced subgraphs.
 */
class Graph {
 public:
  Graph() = default;

  explicit Graph(std::size_t n) : Graph(n, default_labels(n)) {}

  Graph(std::size_t n, std::vector<std::string> labels) : adj_(n), labels_(std::move(labels)) {
    if (n > kMaxIndices) throw InputError("graphs are limited to " + std::to_string(kMaxIndices) + " vertices");
    if (labels_.size() != n) throw InputError("label count does not match vertex count");
  }

  /// Edges are 0-based.
  static Graph from_edges(std::size_t n, const std::vector<Edge>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }

  static std::vector<std::string> default_labels(std::size_t n) {
    std::vector<std::string> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back("x" + std::to_string(i + 1));
    return out;
  }

  void add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw InputError("loop at vertex " + labels_[u]);
    if (adj_[u].contains(v)) throw InputError("duplicate edge " + labels_[u] + " " + labels_[v]);
    adj_[u].insert(v);
    adj_[v].insert(u);
  }

  std::size_t vertex_count() const { return adj_.size(); }
  VertexSet vertices() const { return VertexSet::range(adj_.size()); }
  VertexSet neighbors(Vertex v) const { return adj_.at(v); }
  bool adjacent(Vertex u, Vertex v) const { return adj_.at(u).contains(v); }
  std::size_t degree(Vertex v) const { return adj_.at(v).size(); }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (auto a : adj_) twice += a.size();
    return twice / 2;
  }

  /// All edges (u, v) with u < v, sorted.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < adj_.size(); ++u)
      (adj_[u] - VertexSet::range(u + 1)).for_each([&](Vertex v) { out.emplace_back(u, v); });
    return out;
  }

  /// Edges with both ends in `within`.
  std::vector<Edge> edges(VertexSet within) const {
    std::vector<Edge> out;
    within.for_each([&](Vertex u) {
      ((adj_[u] & within) - VertexSet::range(u + 1)).for_each([&](Vertex v) { out.emplace_back(u, v); });
    });
    return out;
  }

  VertexSet isolated_vertices() const {
    VertexSet out;
    for (Vertex v = 0; v < adj_.size(); ++v)
      if (adj_[v].empty()) out.insert(v);
    return out;
  }

  const std::string& label(Vertex v) const { return labels_.at(v); }
  const std::vector<std::string>& labels() const { return labels_; }

  std::vector<std::string> labels_of(VertexSet s) const {
    std::vector<std::string> out;
    s.for_each([&](Vertex v) { out.push_back(labels_.at(v)); });
    return out;
  }

  void check_vertex(Vertex v) const {
    if (v >= adj_.size())
      throw InputError("vertex index " + std::to_string(v + 1) + " out of range 1.." + std::to_string(adj_.size()));
  }

  void check_subset(VertexSet s) const {
    if (!s.is_subset_of(vertices())) throw InputError("vertex set exceeds the graph's vertex range");
  }

  /// Same vertex count, same labels, same edges.
  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<VertexSet> adj_;
  std::vector<std::string> labels_;
};

struct IndexedSubgraph {
  Graph graph;
  /// original[i] is the vertex of the parent graph that became vertex i.
  std::vector<Vertex> original;
};

/// Induced subgraph on `keep`, reindexed in increasing vertex order, with the map back to the parent.
inline IndexedSubgraph induced_subgraph_with_map(const Graph& g, VertexSet keep) {
  g.check_subset(keep);
  IndexedSubgraph out;
  out.original = keep.members();
  std::vector<std::string> labels;
  for (auto v : out.original) labels.push_back(g.label(v));
  std::vector<std::size_t> position(g.vertex_count(), 0);
  for (std::size_t i = 0; i < out.original.size(); ++i) position[out.original[i]] = i;
  out.graph = Graph(out.original.size(), std::move(labels));
  for (auto [u, v] : g.edges(keep)) out.graph.add_edge(position[u], position[v]);
  return out;
}

inline Graph induced_subgraph(const Graph& g, VertexSet keep) { return induced_subgraph_with_map(g, keep).graph; }

inline Graph delete_vertices(const Graph& g, VertexSet remove) {
  g.check_subset(remove);
  return induced_subgraph(g, g.vertices() - remove);
}

struct WhiskerPair {
  Vertex base;  // existing vertex y_i
  Vertex tip;   // new vertex x_i, adjacent only to base
  friend bool operator==(const WhiskerPair&, const WhiskerPair&) = default;
};

using WhiskerMap = std::vector<WhiskerPair>;

struct WhiskeredGraph {
  Graph graph;
  WhiskerMap whiskers;

  VertexSet tips() const {
    VertexSet s;
    for (auto w : whiskers) s.insert(w.tip);
    return s;
  }
  VertexSet bases() const {
    VertexSet s;
    for (auto w : whiskers) s.insert(w.base);
    return s;
  }
};

/**
 * G ∪ W(S): one new vertex per member of `at`, appended after the original
 * range in increasing order of its base, joined only to that base.
 *
 * New labels are "x<index+1>" unless that collides with an existing label,
 * in which case "w" + base label is used. `tip_labels`, when given, overrides both.
 */
inline WhiskeredGraph add_whiskers(const Graph& g, VertexSet at, std::vector<std::string> tip_labels = {}) {
  g.check_subset(at);
  const auto n = g.vertex_count();
  const auto bases = at.members();
  if (n + bases.size() > kMaxIndices) throw InputError("whiskered graph exceeds the vertex limit");
  if (!tip_labels.empty() && tip_labels.size() != bases.size())
    throw InputError("need one label per whisker");
  auto labels = g.labels();
  for (std::size_t k = 0; k < bases.size(); ++k) {
    std::string name;
    if (!tip_labels.empty()) {
      name = tip_labels[k];
    } else {
      name = "x" + std::to_string(n + k + 1);
      if (std::find(labels.begin(), labels.end(), name) != labels.end()) name = "w" + g.label(bases[k]);
    }
    labels.push_back(std::move(name));
  }
  WhiskeredGraph out{Graph(n + bases.size(), std::move(labels)), {}};
  for (auto [u, v] : g.edges()) out.graph.add_edge(u, v);
  for (std::size_t k = 0; k < bases.size(); ++k) {
    out.graph.add_edge(bases[k], n + k);
    out.whiskers.push_back({bases[k], n + k});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Chordality

struct ChordalityResult {
  bool chordal = false;
  /// Perfect elimination ordering when chordal.
  std::vector<Vertex> elimination_order;
  /// A chordless cycle of length >= 4 when not chordal.
  std::vector<Vertex> chordless_cycle;
};

/// Every vertex's later neighbours form a clique, restricted to `within`.
inline bool is_perfect_elimination_order(const Graph& g, const std::vector<Vertex>& order, VertexSet within) {
  if (order.size() != within.size() || VertexSet::from_vector(order) != within) return false;
  VertexSet later = within;
  for (auto v : order) {
    later.erase(v);
    const auto nbrs = g.neighbors(v) & later;
    bool clique = true;
    nbrs.for_each([&](Vertex u) {
      if (!(nbrs.without(u)).is_subset_of(g.neighbors(u))) clique = false;
    });
    if (!clique) return false;
  }
  return true;
}

inline bool is_perfect_elimination_order(const Graph& g, const std::vector<Vertex>& order) {
  return is_perfect_elimination_order(g, order, g.vertices());
}

inline bool is_chordless_cycle(const Graph& g, const std::vector<Vertex>& cycle) {
  const auto k = cycle.size();
  if (k < 4) return false;
  const auto members = VertexSet::from_vector(cycle);
  if (members.size() != k || !members.is_subset_of(g.vertices())) return false;
  for (std::size_t i = 0; i < k; ++i) {
    const auto v = cycle[i];
    const VertexSet expected{cycle[(i + 1) % k], cycle[(i + k - 1) % k]};
    if ((g.neighbors(v) & members) != expected) return false;
  }
  return true;
}

namespace detail {

inline std::vector<Vertex> maximum_cardinality_search(const Graph& g, VertexSet within) {
  std::vector<std::size_t> weight(g.vertex_count(), 0);
  VertexSet remaining = within;
  std::vector<Vertex> visit;
  while (!remaining.empty()) {
    Vertex best = remaining.front();
    remaining.for_each([&](Vertex v) {
      if (weight[v] > weight[best]) best = v;
    });
    visit.push_back(best);
    remaining.erase(best);
    (g.neighbors(best) & remaining).for_each([&](Vertex u) { ++weight[u]; });
  }
  std::reverse(visit.begin(), visit.end());
  return visit;
}

// Shortest a-b path avoiding `blocked`, or empty.
inline std::vector<Vertex> shortest_path(const Graph& g, VertexSet allowed, Vertex a, Vertex b) {
  std::vector<Vertex> parent(g.vertex_count(), g.vertex_count());
  std::deque<Vertex> queue{a};
  VertexSet seen{a};
  while (!queue.empty()) {
    const auto v = queue.front();
    queue.pop_front();
    if (v == b) break;
    ((g.neighbors(v) & allowed) - seen).for_each([&](Vertex u) {
      seen.insert(u);
      parent[u] = v;
      queue.push_back(u);
    });
  }
  if (!seen.contains(b)) return {};
  std::vector<Vertex> path{b};
  while (path.back() != a) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

// Chordless cycle through some vertex v and two non-adjacent neighbours.
inline std::vector<Vertex> find_chordless_cycle(const Graph& g, VertexSet within) {
  std::vector<Vertex> found;
  within.for_each([&](Vertex v) {
    if (!found.empty()) return;
    const auto nbrs = g.neighbors(v) & within;
    nbrs.for_each([&](Vertex a) {
      if (!found.empty()) return;
      ((nbrs - g.neighbors(a)) - VertexSet::range(a + 1)).for_each([&](Vertex b) {
        if (!found.empty()) return;
        const auto allowed = (within - nbrs - VertexSet{v}) | VertexSet{a, b};
        auto path = shortest_path(g, allowed, a, b);
        if (path.empty()) return;
        found.push_back(v);
        found.insert(found.end(), path.begin(), path.end());
      });
    });
  });
  return found;
}

}  // namespace detail

/// Chordality of the subgraph induced on `within`, with a certificate either way.
inline ChordalityResult is_chordal(const Graph& g, VertexSet within) {
  ChordalityResult r;
  auto order = detail::maximum_cardinality_search(g, within);
  if (is_perfect_elimination_order(g, order, within)) {
    r.chordal = true;
    r.elimination_order = std::move(order);
  } else {
    r.chordless_cycle = detail::find_chordless_cycle(g, within);
  }
  return r;
}

inline ChordalityResult is_chordal(const Graph& g) { return is_chordal(g, g.vertices()); }

// ---------------------------------------------------------------------------
// Vertex covers

inline bool is_vertex_cover(const Graph& g, VertexSet cover, VertexSet within) {
  bool ok = true;
  (within - cover).for_each([&](Vertex v) {
    if (!(g.neighbors(v) & within).is_subset_of(cover)) ok = false;
  });
  return ok;
}

inline bool is_vertex_cover(const Graph& g, VertexSet cover) { return is_vertex_cover(g, cover, g.vertices()); }

namespace detail {

struct CoverSearch {
  const Graph& g;
  VertexSet within;
  std::vector<Vertex> order;
  std::size_t target;
  std::vector<VertexSet>& out;

  // Include-before-exclude visits d-subsets in lexicographic order.
  void run(std::size_t pos, VertexSet chosen, VertexSet forced) {
    const auto left = order.size() - pos;
    if (chosen.size() == target) {
      if (is_vertex_cover(g, chosen, within)) out.push_back(chosen);
      return;
    }
    if (chosen.size() + left < target) return;
    const auto pending = forced - chosen;
    if (chosen.size() + pending.size() > target) return;
    const auto v = order[pos];
    run(pos + 1, chosen.with(v), forced);
    if (!forced.contains(v)) run(pos + 1, chosen, forced | (g.neighbors(v) & within));
  }
};

}  // namespace detail

/// All covers of size d of the subgraph induced on `within`, as subsets of `within`, lexicographic.
inline std::vector<VertexSet> vertex_covers_of_size(const Graph& g, VertexSet within, std::size_t d) {
  g.check_subset(within);
  std::vector<VertexSet> out;
  if (d > within.size()) return out;
  detail::CoverSearch search{g, within, within.members(), d, out};
  search.run(0, VertexSet{}, VertexSet{});
  return out;
}

inline std::vector<VertexSet> vertex_covers_of_size(const Graph& g, std::size_t d) {
  return vertex_covers_of_size(g, g.vertices(), d);
}

namespace detail {

// Bron–Kerbosch with pivoting on the complement graph: maximal independent sets.
inline void maximal_independent_sets(const Graph& g, VertexSet within, VertexSet r, VertexSet p, VertexSet x,
                                     std::vector<VertexSet>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  auto non_nbrs = [&](Vertex v) { return (within - g.neighbors(v)).without(v); };
  Vertex pivot = (p | x).front();
  std::size_t best = 0;
  (p | x).for_each([&](Vertex u) {
    const auto c = (p & non_nbrs(u)).size();
    if (c > best || (c == best && u < pivot)) {
      best = c;
      pivot = u;
    }
  });
  (p - non_nbrs(pivot)).for_each([&](Vertex v) {
    maximal_independent_sets(g, within, r.with(v), p & non_nbrs(v), x & non_nbrs(v), out);
    p.erase(v);
    x.insert(v);
  });
}

}  // namespace detail

/// Inclusion-minimal covers of the subgraph on `within`; isolated vertices never appear. Degree, then lex.
inline std::vector<VertexSet> minimal_vertex_covers(const Graph& g, VertexSet within) {
  g.check_subset(within);
  std::vector<VertexSet> independent;
  detail::maximal_independent_sets(g, within, VertexSet{}, within, VertexSet{}, independent);
  std::vector<VertexSet> out;
  out.reserve(independent.size());
  for (auto s : independent) out.push_back(within - s);
  std::sort(out.begin(), out.end(), DegreeLexLess{});
  return out;
}

inline std::vector<VertexSet> minimal_vertex_covers(const Graph& g) { return minimal_vertex_covers(g, g.vertices()); }

inline std::size_t min_vertex_cover_size(const Graph& g, VertexSet within) {
  return minimal_vertex_covers(g, within).front().size();
}

inline bool is_unmixed(const Graph& g) {
  const auto covers = minimal_vertex_covers(g);
  return std::all_of(covers.begin(), covers.end(), [&](VertexSet c) { return c.size() == covers.front().size(); });
}

// ---------------------------------------------------------------------------
// Remainder classification

enum class RemainderClass { kChordal, kFiveCycle, kOther };

inline const char* to_string(RemainderClass c) {
  switch (c) {
    case RemainderClass::kChordal: return "chordal";
    case RemainderClass::kFiveCycle: return "five-cycle";
    case RemainderClass::kOther: return "other";
  }
  return "?";
}

/// True when the non-isolated part of the subgraph on `within` is exactly one 5-cycle.
inline bool is_five_cycle_up_to_isolated(const Graph& g, VertexSet within) {
  VertexSet core;
  within.for_each([&](Vertex v) {
    if (!(g.neighbors(v) & within).empty()) core.insert(v);
  });
  if (core.size() != 5) return false;
  bool all_deg2 = true;
  core.for_each([&](Vertex v) { all_deg2 = all_deg2 && (g.neighbors(v) & core).size() == 2; });
  if (!all_deg2) return false;
  // 2-regular on five vertices is either C5 or impossible to split (C3 + C2 is not simple).
  return true;
}

/**
 * Class of G \ S. Isolated vertices are ignored for the five-cycle test, and a
 * graph with no edges counts as chordal.
 */
inline RemainderClass classify_remainder(const Graph& g, VertexSet s) {
  g.check_subset(s);
  const auto rest = g.vertices() - s;
  if (is_five_cycle_up_to_isolated(g, rest)) return RemainderClass::kFiveCycle;
  if (is_chordal(g, rest).chordal) return RemainderClass::kChordal;
  return RemainderClass::kOther;
}

}  // namespace wscm

#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <unordered_set>
#include <vector>

#include "wscm/error.hpp"
#include "wscm/graph.hpp"
#include "wscm/index_set.hpp"

namespace wscm {

/// A square-free monomial, identified with its support. Variable i belongs to vertex i.
using SquareFreeMonomial = IndexSet;

/**
 * A square-free monomial ideal in k[x_0, ..., x_{ambient-1}], kept minimally
 * generated with generators in degree-then-lex order.
 *
 * The zero ideal has no generators; the unit ideal has the single generator 1
 * (empty support).
 */
class MonomialIdeal {
 public:
  MonomialIdeal() = default;

  MonomialIdeal(std::size_t ambient, std::vector<SquareFreeMonomial> generators) : ambient_(ambient) {
    if (ambient > kMaxIndices) throw InputError("ambient exceeds " + std::to_string(kMaxIndices) + " variables");
    const auto range = IndexSet::range(ambient);
    for (auto g : generators)
      if (!g.is_subset_of(range)) throw InputError("generator outside the ambient variables");
    std::sort(generators.begin(), generators.end(), DegreeLexLess{});
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    for (auto g : generators) {
      const bool redundant =
          std::any_of(gens_.begin(), gens_.end(), [&](SquareFreeMonomial h) { return h.is_subset_of(g); });
      if (!redundant) gens_.push_back(g);
    }
  }

  static MonomialIdeal zero(std::size_t ambient) { return MonomialIdeal(ambient, {}); }
  static MonomialIdeal unit(std::size_t ambient) { return MonomialIdeal(ambient, {SquareFreeMonomial{}}); }

  std::size_t ambient() const { return ambient_; }
  const std::vector<SquareFreeMonomial>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().empty(); }

  bool contains(SquareFreeMonomial m) const {
    return std::any_of(gens_.begin(), gens_.end(), [&](SquareFreeMonomial g) { return g.is_subset_of(m); });
  }

  std::size_t min_degree() const { return gens_.empty() ? 0 : gens_.front().size(); }
  std::size_t max_degree() const { return gens_.empty() ? 0 : gens_.back().size(); }
  bool is_equigenerated() const { return min_degree() == max_degree(); }

  /// Union of generator supports.
  IndexSet support() const {
    IndexSet s;
    for (auto g : gens_) s |= g;
    return s;
  }

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::size_t ambient_ = 0;
  std::vector<SquareFreeMonomial> gens_;
};

/// Divisibility-minimal sublist in canonical order.
inline MonomialIdeal minimalize(std::size_t ambient, std::vector<SquareFreeMonomial> gens) {
  return MonomialIdeal(ambient, std::move(gens));
}

inline MonomialIdeal edge_ideal(const Graph& g) {
  std::vector<SquareFreeMonomial> gens;
  for (auto [u, v] : g.edges()) gens.push_back(SquareFreeMonomial{u, v});
  return MonomialIdeal(g.vertex_count(), std::move(gens));
}

/// I(G)^∨, generated by the minimal vertex covers of G.
inline MonomialIdeal alexander_dual_of_edge_ideal(const Graph& g) {
  return MonomialIdeal(g.vertex_count(), minimal_vertex_covers(g));
}

/**
 * Alexander dual of an arbitrary square-free ideal: the ideal of minimal
 * transversals of the generator supports (Berge's incremental algorithm).
 * The zero ideal dualizes to the unit ideal and vice versa.
 */
inline MonomialIdeal alexander_dual(const MonomialIdeal& ideal) {
  std::vector<SquareFreeMonomial> transversals{SquareFreeMonomial{}};
  for (auto edge : ideal.generators()) {
    std::vector<SquareFreeMonomial> next;
    for (auto t : transversals) {
      if (t.intersects(edge)) {
        next.push_back(t);
      } else {
        edge.for_each([&](std::size_t v) { next.push_back(t.with(v)); });
      }
    }
    transversals = MonomialIdeal(ideal.ambient(), std::move(next)).generators();
  }
  return MonomialIdeal(ideal.ambient(), std::move(transversals));
}

/// (I_[d]): every square-free degree-d monomial of the ambient ring lying in I.
inline MonomialIdeal squarefree_degree_component(const MonomialIdeal& ideal, std::size_t d) {
  const auto ambient = ideal.ambient();
  std::unordered_set<SquareFreeMonomial> found;
  for (auto g : ideal.generators()) {
    if (g.size() > d) continue;
    const auto free = IndexSet::range(ambient) - g;
    for_each_subset_of_size(free, d - g.size(), [&](IndexSet extra) { found.insert(g | extra); });
  }
  return MonomialIdeal(ambient, std::vector<SquareFreeMonomial>(found.begin(), found.end()));
}

/**
 * Degree-d component of the dual of the subgraph induced on `within`, taken
 * in that subgraph's own polynomial ring and embedded in the ambient of `g`.
 * Its generators are exactly the d-element covers.
 */
inline MonomialIdeal dual_component(const Graph& g, VertexSet within, std::size_t d) {
  return MonomialIdeal(g.vertex_count(), vertex_covers_of_size(g, within, d));
}

/// I : u, minimalized.
inline MonomialIdeal colon_by_monomial(const MonomialIdeal& ideal, SquareFreeMonomial u) {
  std::vector<SquareFreeMonomial> gens;
  gens.reserve(ideal.size());
  for (auto g : ideal.generators()) gens.push_back(g - u);
  return MonomialIdeal(ideal.ambient(), std::move(gens));
}

}  // namespace wscm

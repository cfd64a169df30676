#pragma once

// Brute-force reference implementations used only by tests. None of these
// call into the library's search or elimination code.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "wscm/graph.hpp"
#include "wscm/monomial.hpp"

namespace oracle {

using wscm::Graph;
using wscm::IndexSet;

/// Monomial from 1-based variable numbers, as written x1x3x4.
inline IndexSet mono(std::initializer_list<std::size_t> one_based) {
  IndexSet s;
  for (auto v : one_based) s.insert(v - 1);
  return s;
}

inline bool covers(const Graph& g, std::uint64_t mask) {
  for (auto [u, v] : g.edges())
    if (!((mask >> u) & 1U) && !((mask >> v) & 1U)) return false;
  return true;
}

/// Every d-subset of the vertex set that covers all edges, lexicographic.
inline std::vector<IndexSet> covers_of_size(const Graph& g, std::size_t d) {
  std::vector<IndexSet> out;
  const auto n = g.vertex_count();
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m)
    if (static_cast<std::size_t>(__builtin_popcountll(m)) == d && covers(g, m)) out.emplace_back(m);
  std::sort(out.begin(), out.end());
  return out;
}

/// Covers with no proper subset a cover, ignoring isolated vertices; degree then lex.
inline std::vector<IndexSet> minimal_covers(const Graph& g) {
  std::vector<IndexSet> out;
  const auto n = g.vertex_count();
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    if (!covers(g, m)) continue;
    bool minimal = true;
    for (std::size_t v = 0; v < n && minimal; ++v)
      if (((m >> v) & 1U) && covers(g, m & ~(std::uint64_t{1} << v))) minimal = false;
    if (minimal) out.emplace_back(m);
  }
  std::sort(out.begin(), out.end(), wscm::DegreeLexLess{});
  return out;
}

/// Does (prefix) : u need only variables? Computed from the definition by listing g / gcd(g, u).
inline bool colon_is_linear(const std::vector<IndexSet>& prefix, IndexSet u) {
  std::vector<IndexSet> quotients;
  for (auto g : prefix) quotients.push_back(g - u);
  for (auto q : quotients) {
    bool redundant = false;
    for (auto p : quotients)
      if (p != q && p.is_subset_of(q)) redundant = true;
    if (!redundant && q.size() != 1) return false;
  }
  return true;
}

/**
 * Exhaustive permutation check for a linear-quotients order. A failing prefix
 * skips every permutation sharing it, which is still a complete scan of the
 * permutation tree.
 */
inline bool has_order_by_permutation(const std::vector<IndexSet>& gens) {
  std::vector<std::size_t> perm(gens.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  if (perm.empty()) return true;
  while (true) {
    std::vector<IndexSet> prefix;
    std::size_t bad = perm.size();
    for (std::size_t k = 0; k < perm.size(); ++k) {
      if (!colon_is_linear(prefix, gens[perm[k]])) {
        bad = k;
        break;
      }
      prefix.push_back(gens[perm[k]]);
    }
    if (bad == perm.size()) return true;
    // Skip to the next permutation whose first bad+1 entries differ.
    std::sort(perm.begin() + static_cast<std::ptrdiff_t>(bad) + 1, perm.end(), std::greater<>());
    if (!std::next_permutation(perm.begin(), perm.end())) return false;
  }
}

/// Multigraded K-polynomial numerator Σ_{∅≠T} (-1)^{|T|+1} t^{lcm T}, by inclusion-exclusion.
inline std::map<std::uint64_t, long long> k_polynomial(const std::vector<IndexSet>& gens) {
  std::map<std::uint64_t, long long> out;
  const auto r = gens.size();
  for (std::uint64_t t = 1; t < (std::uint64_t{1} << r); ++t) {
    IndexSet lcm;
    for (std::size_t k = 0; k < r; ++k)
      if ((t >> k) & 1U) lcm |= gens[k];
    out[lcm.bits()] += (__builtin_popcountll(t) % 2 == 1) ? 1 : -1;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

inline Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  Graph g(n);
  std::bernoulli_distribution edge(p);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (edge(rng)) g.add_edge(i, j);
  return g;
}

inline IndexSet random_subset(std::mt19937_64& rng, std::size_t n) {
  IndexSet s;
  for (std::size_t i = 0; i < n; ++i)
    if (rng() & 1U) s.insert(i);
  return s;
}

}  // namespace oracle

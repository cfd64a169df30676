#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "wscm/error.hpp"
#include "wscm/graph.hpp"
#include "wscm/monomial.hpp"

namespace wscm {

/**
 * A linear-quotients certificate: an ordering u_1, ..., u_r of the minimal
 * generators together with, for each position i, the variables generating
 * (u_1, ..., u_{i-1}) : u_i. Position 0 always has the empty set.
 */
struct QuotientOrder {
  MonomialIdeal ideal;
  std::vector<std::size_t> order;
  std::vector<IndexSet> colon_vars;

  std::vector<SquareFreeMonomial> sequence() const {
    std::vector<SquareFreeMonomial> out;
    out.reserve(order.size());
    for (auto i : order) out.push_back(ideal.generators().at(i));
    return out;
  }

  /// r_j = |colon_vars[j]|.
  std::vector<std::size_t> colon_sizes() const {
    std::vector<std::size_t> out;
    for (auto c : colon_vars) out.push_back(c.size());
    return out;
  }
};

/// Variables generating (prefix) : u, or nullopt if that colon needs a generator of degree > 1.
inline std::optional<IndexSet> colon_variables(const MonomialIdeal& prefix, SquareFreeMonomial u) {
  const auto colon = colon_by_monomial(prefix, u);
  IndexSet vars;
  for (auto g : colon.generators()) {
    if (g.size() != 1) return std::nullopt;
    vars |= g;
  }
  return vars;
}

/// Positions of `sequence` in the ideal's generator list; throws unless it is a permutation of them.
inline std::vector<std::size_t> order_indices(const MonomialIdeal& ideal, const std::vector<SquareFreeMonomial>& sequence) {
  const auto& gens = ideal.generators();
  if (sequence.size() != gens.size()) throw InputError("order length differs from the number of generators");
  std::vector<std::size_t> out;
  std::vector<bool> used(gens.size(), false);
  for (auto m : sequence) {
    const auto it = std::find(gens.begin(), gens.end(), m);
    if (it == gens.end()) throw InputError("order lists a monomial that is not a minimal generator");
    const auto idx = static_cast<std::size_t>(it - gens.begin());
    if (used[idx]) throw InputError("order repeats a generator");
    used[idx] = true;
    out.push_back(idx);
  }
  return out;
}

/**
 * Recomputes every prefix colon of the certificate and compares it with the
 * recorded variable sets. Throws InputError when the certificate is not even
 * well formed (sizes, permutation, variables outside the ambient).
 */
inline bool verify_order(const QuotientOrder& q) {
  const auto& gens = q.ideal.generators();
  const auto r = gens.size();
  if (q.order.size() != r || q.colon_vars.size() != r) throw InputError("certificate length mismatch");
  std::vector<bool> used(r, false);
  for (auto i : q.order) {
    if (i >= r || used[i]) throw InputError("certificate order is not a permutation of the generators");
    used[i] = true;
  }
  const auto range = IndexSet::range(q.ideal.ambient());
  for (auto c : q.colon_vars)
    if (!c.is_subset_of(range)) throw InputError("colon variable outside the ambient ring");

  std::vector<SquareFreeMonomial> prefix;
  for (std::size_t pos = 0; pos < r; ++pos) {
    const auto u = gens[q.order[pos]];
    if (!prefix.empty() && u.size() < prefix.back().size()) return false;
    const auto vars = colon_variables(MonomialIdeal(q.ideal.ambient(), prefix), u);
    if (!vars || *vars != q.colon_vars[pos]) return false;
    prefix.push_back(u);
  }
  return true;
}

/// Builds the certificate for a given sequence, or nullopt if some prefix colon is not linear.
inline std::optional<QuotientOrder> certify_sequence(const MonomialIdeal& ideal,
                                                     const std::vector<SquareFreeMonomial>& sequence) {
  QuotientOrder q{ideal, order_indices(ideal, sequence), {}};
  std::vector<SquareFreeMonomial> prefix;
  for (auto u : sequence) {
    if (!prefix.empty() && u.size() < prefix.back().size()) return std::nullopt;
    const auto vars = colon_variables(MonomialIdeal(ideal.ambient(), prefix), u);
    if (!vars) return std::nullopt;
    q.colon_vars.push_back(*vars);
    prefix.push_back(u);
  }
  return q;
}

// ---------------------------------------------------------------------------
// Order search

enum class SearchStatus { kFound, kNone, kBudgetExceeded };

struct OrderSearchLimits {
  /// Maximum number of search nodes; 0 means unlimited.
  std::size_t max_nodes = 0;
};

struct OrderSearchResult {
  SearchStatus status = SearchStatus::kNone;
  std::optional<QuotientOrder> order;
  std::size_t nodes = 0;
};

namespace detail {

struct DynamicBitsHash {
  std::size_t operator()(const std::vector<std::uint64_t>& v) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto w : v) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

/*
 * Backtracking over orders of an equigenerated ideal. (P : u) is generated by
 * variables iff every g in P meets, outside u, one of the singletons h \ u
 * (h in P). Singletons are tracked per candidate as P grows. Whether a prefix
 * can be completed depends only on the set P, so failed sets are memoized.
 */
class OrderSearch {
 public:
  OrderSearch(const MonomialIdeal& ideal, OrderSearchLimits limits, bool backtrack)
      : gens_(ideal.generators()), limits_(limits), backtrack_(backtrack) {
    const auto r = gens_.size();
    in_prefix_.assign((r + 63) / 64, 0);
    singles_.assign(r + 1, std::vector<IndexSet>(r));
  }

  OrderSearchResult run(const MonomialIdeal& ideal) {
    OrderSearchResult result;
    const bool found = extend(0);
    result.nodes = nodes_;
    if (found) {
      result.status = SearchStatus::kFound;
      result.order = certify_sequence(ideal, sequence());
    } else {
      result.status = exceeded_ ? SearchStatus::kBudgetExceeded : SearchStatus::kNone;
    }
    return result;
  }

 private:
  std::vector<SquareFreeMonomial> sequence() const {
    std::vector<SquareFreeMonomial> out;
    for (auto i : chosen_) out.push_back(gens_[i]);
    return out;
  }

  bool used(std::size_t i) const { return (in_prefix_[i / 64] >> (i % 64)) & 1U; }
  void flip(std::size_t i) { in_prefix_[i / 64] ^= std::uint64_t{1} << (i % 64); }

  bool appendable(std::size_t depth, std::size_t u) const {
    const auto singles = singles_[depth][u];
    for (auto p : chosen_)
      if (((gens_[p] - gens_[u]) & singles).empty()) return false;
    return true;
  }

  bool extend(std::size_t depth) {
    const auto r = gens_.size();
    if (depth == r) return true;
    if (limits_.max_nodes != 0 && nodes_ >= limits_.max_nodes) {
      exceeded_ = true;
      return false;
    }
    ++nodes_;
    if (failed_.contains(in_prefix_)) return false;
    for (std::size_t u = 0; u < r; ++u) {
      if (used(u) || !appendable(depth, u)) continue;
      auto& next = singles_[depth + 1];
      next = singles_[depth];
      for (std::size_t w = 0; w < r; ++w) {
        if (used(w) || w == u) continue;
        const auto diff = gens_[u] - gens_[w];
        if (diff.size() == 1) next[w] |= diff;
      }
      flip(u);
      chosen_.push_back(u);
      if (extend(depth + 1)) return true;
      chosen_.pop_back();
      flip(u);
      if (!backtrack_ || exceeded_) break;
    }
    if (!exceeded_) failed_.insert(in_prefix_);
    return false;
  }

  const std::vector<SquareFreeMonomial>& gens_;
  OrderSearchLimits limits_;
  bool backtrack_;
  std::vector<std::uint64_t> in_prefix_;
  std::vector<std::vector<IndexSet>> singles_;
  std::vector<std::size_t> chosen_;
  std::unordered_set<std::vector<std::uint64_t>, DynamicBitsHash> failed_;
  std::size_t nodes_ = 0;
  bool exceeded_ = false;
};

}  // namespace detail

/**
 * Searches for a linear-quotients order of an equigenerated ideal.
 * Candidates are tried in canonical generator order, so the result is
 * deterministic. The zero ideal yields the empty certificate.
 */
inline OrderSearchResult search_order(const MonomialIdeal& ideal, OrderSearchLimits limits = {}) {
  if (!ideal.is_equigenerated()) throw InputError("order search needs an equigenerated ideal");
  detail::OrderSearch search(ideal, limits, true);
  return search.run(ideal);
}

inline std::optional<QuotientOrder> find_order(const MonomialIdeal& ideal) { return search_order(ideal).order; }

/// Takes the first admissible generator at each step and never backtracks.
inline std::optional<QuotientOrder> greedy_order(const MonomialIdeal& ideal) {
  if (!ideal.is_equigenerated()) throw InputError("order search needs an equigenerated ideal");
  detail::OrderSearch search(ideal, {}, false);
  return search.run(ideal).order;
}

// ---------------------------------------------------------------------------
// Dual linear quotients of a graph

struct DegreeCertificate {
  std::size_t degree = 0;
  SearchStatus status = SearchStatus::kNone;
  std::optional<QuotientOrder> order;
};

struct DLQReport {
  std::vector<DegreeCertificate> degrees;
  /// Every degree certified.
  bool holds = false;
  /// No degree hit the search budget, so `holds == false` is a proof of failure.
  bool decided = true;
};

/**
 * Checks (I(H)^∨_[d]) for d = (minimum cover size) .. |V_H|, where H is the
 * subgraph induced on `within`. Lower degrees give the zero ideal.
 */
inline DLQReport has_dual_linear_quotients(const Graph& g, VertexSet within, OrderSearchLimits limits = {},
                                           bool stop_at_first_failure = false) {
  DLQReport report;
  report.holds = true;
  const auto lowest = min_vertex_cover_size(g, within);
  for (auto d = lowest; d <= within.size(); ++d) {
    const auto result = search_order(dual_component(g, within, d), limits);
    report.degrees.push_back({d, result.status, result.order});
    if (result.status != SearchStatus::kFound) {
      report.holds = false;
      if (result.status == SearchStatus::kBudgetExceeded) report.decided = false;
      if (stop_at_first_failure) break;
    }
  }
  return report;
}

inline DLQReport has_dual_linear_quotients(const Graph& g, OrderSearchLimits limits = {}) {
  return has_dual_linear_quotients(g, g.vertices(), limits);
}

/**
 * Memoized DLQ checks on induced subgraphs of one graph. `all_induced(W)`
 * asks whether every induced subgraph on a subset of W (W included) has dual
 * linear quotients. A shared cache keyed by the relabelled structure can be
 * passed in to reuse results across graphs.
 */
class InducedDlq {
 public:
  using SharedCache = std::unordered_map<std::uint64_t, bool>;

  explicit InducedDlq(const Graph& g, SharedCache* shared = nullptr) : g_(g), shared_(shared) {}

  bool dlq(VertexSet w) {
    if (auto it = dlq_.find(w); it != dlq_.end()) return it->second;
    const auto key = structure_key(w);
    if (shared_ && key) {
      if (auto it = shared_->find(*key); it != shared_->end()) return dlq_[w] = it->second;
    }
    const bool value = has_dual_linear_quotients(g_, w, {}, true).holds;
    if (shared_ && key) (*shared_)[*key] = value;
    return dlq_[w] = value;
  }

  bool all_induced(VertexSet w) {
    if (auto it = all_.find(w); it != all_.end()) return it->second;
    bool value = true;
    w.for_each([&](Vertex v) { value = value && all_induced(w.without(v)); });
    value = value && dlq(w);
    return all_[w] = value;
  }

  /// Every induced subgraph K with `required` ⊆ K ⊆ `w` has dual linear quotients.
  bool all_induced_containing(VertexSet w, VertexSet required) {
    if (!required.is_subset_of(w)) throw InputError("required vertices are not all in the subgraph");
    bool value = true;
    for_each_subset(w - required, [&](IndexSet extra) { value = value && dlq(required | extra); });
    return value;
  }

 private:
  // Vertex count plus upper-triangle adjacency after relabelling; fits for <= 10 vertices.
  std::optional<std::uint64_t> structure_key(VertexSet w) const {
    const auto members = w.members();
    const auto k = members.size();
    if (k > 10) return std::nullopt;
    std::uint64_t key = k;
    std::size_t bit = 4;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j, ++bit)
        if (g_.adjacent(members[i], members[j])) key |= std::uint64_t{1} << bit;
    return key;
  }

  const Graph& g_;
  SharedCache* shared_;
  std::unordered_map<VertexSet, bool> dlq_;
  std::unordered_map<VertexSet, bool> all_;
};

// ---------------------------------------------------------------------------
// Constructive whisker ordering

/// Supplies linear-quotients orders for (I(H)^∨_[d]) with H induced on `within`; nullopt if it has none.
using OrderOracle = std::function<std::optional<QuotientOrder>(const Graph&, VertexSet within, std::size_t d)>;

/// Oracle backed by `find_order`.
inline OrderOracle search_oracle() {
  return [](const Graph& g, VertexSet within, std::size_t d) { return find_order(dual_component(g, within, d)); };
}

namespace detail {

struct Block {
  std::vector<SquareFreeMonomial> sequence;
  std::vector<IndexSet> claims;
};

// Oracle order for a component, or canonical order with whatever variables the
// true colons contain when the oracle has nothing.
inline Block oracle_block(const OrderOracle& oracle, const Graph& g, VertexSet within, std::size_t d) {
  const auto component = dual_component(g, within, d);
  Block block;
  if (auto q = oracle(g, within, d)) {
    if (q->ideal != component) throw InputError("order oracle returned a certificate for the wrong ideal");
    block.sequence = q->sequence();
    block.claims = q->colon_vars;
    return block;
  }
  block.sequence = component.generators();
  std::vector<SquareFreeMonomial> prefix;
  for (auto u : block.sequence) {
    IndexSet vars;
    for (auto c : colon_by_monomial(MonomialIdeal(g.vertex_count(), prefix), u).generators())
      if (c.size() == 1) vars |= c;
    block.claims.push_back(vars);
    prefix.push_back(u);
  }
  return block;
}

}  // namespace detail

/**
 * Orders (I(K)^∨_[d]) for K induced on `within`, where `tip` is a whisker tip
 * whose only possible neighbour in K is `base`.
 *
 * With the base present the order is
 *   base·B (B: covers of K \ {tip, base} of size d-1, oracle order),
 *   tip·D·C (covers avoiding base, D = N(base) \ {tip}; C in oracle order),
 *   tip·base·C' (C' of size d-2, canonical order),
 * and each position records the colon variables that construction predicts:
 * B's own colon, {base} ∪ C's colon, and the vertices of K \ {tip, base} outside C'.
 * With the tip isolated the order is the oracle order of (I(K \ tip)^∨_[d])
 * followed by tip·(covers of size d-1) in canonical order.
 *
 * The returned certificate is what the construction claims; run verify_order
 * to learn whether the claim holds (it can fail when the oracle has no order).
 */
inline QuotientOrder whisker_order(const Graph& g, VertexSet within, Vertex tip, Vertex base, std::size_t d,
                                   const OrderOracle& oracle) {
  g.check_subset(within);
  g.check_vertex(tip);
  g.check_vertex(base);
  if (!within.contains(tip)) throw InputError("whisker tip is not a vertex of the subgraph");
  const auto tip_nbrs = g.neighbors(tip) & within;
  if (!tip_nbrs.is_subset_of(VertexSet{base})) throw InputError("whisker tip has a neighbour other than its base");

  const auto component = dual_component(g, within, d);
  std::vector<SquareFreeMonomial> sequence;
  std::vector<IndexSet> claims;
  auto push = [&](SquareFreeMonomial m, IndexSet claim) {
    sequence.push_back(m);
    claims.push_back(sequence.size() == 1 ? IndexSet{} : claim);
  };

  if (tip_nbrs.empty()) {
    const auto rest = within.without(tip);
    const auto head = detail::oracle_block(oracle, g, rest, d);
    for (std::size_t i = 0; i < head.sequence.size(); ++i) push(head.sequence[i], head.claims[i]);
    if (d >= 1)
      for (auto c : vertex_covers_of_size(g, rest, d - 1)) push(c.with(tip), rest - c);
  } else {
    const auto h = within - VertexSet{tip, base};
    if (d >= 1) {
      const auto b_block = detail::oracle_block(oracle, g, h, d - 1);
      for (std::size_t i = 0; i < b_block.sequence.size(); ++i) push(b_block.sequence[i].with(base), b_block.claims[i]);
      const auto dmask = (g.neighbors(base) & within).without(tip);
      const auto u = dmask.size();
      if (d - 1 >= u) {
        const auto l = h - dmask;
        const auto c_block = detail::oracle_block(oracle, g, l, d - 1 - u);
        for (std::size_t j = 0; j < c_block.sequence.size(); ++j)
          push(c_block.sequence[j] | dmask | VertexSet{tip}, c_block.claims[j].with(base));
      }
      if (d >= 2)
        for (auto c : vertex_covers_of_size(g, h, d - 2)) push(c | VertexSet{tip, base}, h - c);
    }
  }
  return QuotientOrder{component, order_indices(component, sequence), std::move(claims)};
}

/**
 * Oracle that recurses through whiskers: for a subgraph containing some tip
 * from `whiskers`, it applies whisker_order at the last such tip; otherwise it
 * falls back to `find_order`.
 */
inline OrderOracle chain_oracle(WhiskerMap whiskers) {
  auto self = std::make_shared<OrderOracle>();
  *self = [whiskers = std::move(whiskers), weak = std::weak_ptr<OrderOracle>(self)](
              const Graph& g, VertexSet within, std::size_t d) -> std::optional<QuotientOrder> {
    for (auto it = whiskers.rbegin(); it != whiskers.rend(); ++it) {
      if (!within.contains(it->tip)) continue;
      const auto recurse = weak.lock();
      auto q = whisker_order(g, within, it->tip, it->base, d, *recurse);
      if (verify_order(q)) return q;
      return std::nullopt;
    }
    return find_order(dual_component(g, within, d));
  };
  // The returned copy keeps `self` alive through the shared state below.
  return [self](const Graph& g, VertexSet within, std::size_t d) { return (*self)(g, within, d); };
}

}  // namespace wscm

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "wscm/decide.hpp"
#include "wscm/error.hpp"
#include "wscm/field.hpp"
#include "wscm/fixtures.hpp"
#include "wscm/format.hpp"
#include "wscm/graph.hpp"
#include "wscm/homology.hpp"
#include "wscm/linear_quotients.hpp"

namespace wscm {

// ---------------------------------------------------------------------------
// Campaign identifiers

enum class TheoremId { kT32, kT33, kT37, kT41, kC34, kC35, kC36, kC42 };

inline const std::vector<TheoremId>& all_theorem_ids() {
  static const std::vector<TheoremId> ids{TheoremId::kT32, TheoremId::kT33, TheoremId::kT37, TheoremId::kT41,
                                          TheoremId::kC34, TheoremId::kC35, TheoremId::kC36, TheoremId::kC42};
  return ids;
}

inline const char* to_string(TheoremId id) {
  switch (id) {
    case TheoremId::kT32: return "T3.2";
    case TheoremId::kT33: return "T3.3";
    case TheoremId::kT37: return "T3.7";
    case TheoremId::kT41: return "T4.1";
    case TheoremId::kC34: return "C3.4";
    case TheoremId::kC35: return "C3.5";
    case TheoremId::kC36: return "C3.6";
    case TheoremId::kC42: return "C4.2";
  }
  return "?";
}

inline TheoremId parse_theorem_id(const std::string& text) {
  for (auto id : all_theorem_ids())
    if (text == to_string(id)) return id;
  throw InputError("unknown theorem id '" + text + "' (expected T3.2, T3.3, T3.7, T4.1, C3.4, C3.5, C3.6 or C4.2)");
}

/// What the campaign checks, in one line.
inline const char* describe(TheoremId id) {
  switch (id) {
    case TheoremId::kT32: return "G \\ S chordal => G u W(S) is SCM";
    case TheoremId::kT33: return "G \\ S a five-cycle plus isolated vertices => G u W(S) is SCM";
    case TheoremId::kT37:
      return "all induced subgraphs of G \\ S have DLQ <=> all induced subgraphs of G u W(S) containing every "
             "whisker tip have DLQ";
    case TheoremId::kT41: return "G \\ S not SCM => G u W(S) not SCM, witness lifts";
    case TheoremId::kC34: return "S a vertex cover => G u W(S) is SCM";
    case TheoremId::kC35: return "|S| >= |V_G| - 3 => G u W(S) is SCM";
    case TheoremId::kC36: return "G u W(V_G) is CM";
    case TheoremId::kC42: return "G \\ S a cycle of length other than 3 and 5 => G u W(S) not SCM, witness lifts";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Deterministic per-trial seeding

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t trial_seed(std::uint64_t campaign_seed, std::size_t trial) {
  return splitmix64(splitmix64(campaign_seed) ^ static_cast<std::uint64_t>(trial));
}

// ---------------------------------------------------------------------------
// Campaign data

struct Campaign {
  TheoremId id = TheoremId::kT32;
  std::size_t trials = 100;
  std::size_t max_n = 7;
  std::uint64_t seed = 1;
  std::vector<FieldSpec> fields{FieldSpec::prime(2)};
  /// Run only this trial index (the seed still derives from it, so results match the full run).
  std::optional<std::size_t> only_trial;
  std::size_t attempt_cap = 1000;
  /// Compare betti_numbers with betti_from_quotient_order on every certified component met.
  bool betti_oracle = true;
  /// Compare greedy_order with the backtracking search on every certified component met.
  bool greedy_stats = true;
};

struct Instance {
  Graph graph;
  VertexSet s;
};

struct CampaignFailure {
  std::size_t trial = 0;
  std::uint64_t trial_seed = 0;
  FieldSpec field = FieldSpec::prime(2);
  Instance instance;
  Instance shrunk;
  std::string detail;
  std::string rerun;
};

/// SCM by homology although some component has no quotient order.
struct OpenQuestionCandidate {
  std::size_t trial = 0;
  FieldSpec field = FieldSpec::prime(2);
  Graph graph;
  std::vector<std::size_t> degrees_without_order;
};

struct CampaignReport {
  Campaign campaign;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  std::size_t attempts = 0;
  std::map<std::string, std::size_t> stats;
  std::vector<CampaignFailure> failures;
  std::vector<OpenQuestionCandidate> candidates;

  bool ok() const { return failed == 0; }
};

namespace detail {

inline VertexSet random_subset(std::mt19937_64& rng, std::size_t n) {
  VertexSet s;
  for (std::size_t v = 0; v < n; ++v)
    if (rng() & 1U) s.insert(v);
  return s;
}

inline Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  Graph g(n);
  std::bernoulli_distribution edge(p);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (edge(rng)) g.add_edge(u, v);
  return g;
}

inline std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline std::vector<Vertex> shuffled_vertices(std::mt19937_64& rng, std::size_t n) {
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  return order;
}

/*
 * A cycle of length m on randomly chosen vertices. The other vertices join S,
 * or with allow_isolated each may instead stay out of S as an isolated vertex
 * of G \ S. Pairs meeting S get an edge with probability p.
 */
inline Instance planted_cycle(std::mt19937_64& rng, std::size_t n, std::size_t m, double p, bool allow_isolated) {
  const auto order = shuffled_vertices(rng, n);
  Graph g(n);
  for (std::size_t k = 0; k < m; ++k) g.add_edge(order[k], order[(k + 1) % m]);
  VertexSet s;
  for (std::size_t k = m; k < n; ++k)
    if (!allow_isolated || (rng() & 1U)) s.insert(order[k]);
  std::bernoulli_distribution edge(p);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if ((s.contains(u) || s.contains(v)) && edge(rng)) g.add_edge(u, v);
  return {g, s};
}

/// G \ S is a single chordless cycle on all of V \ S, of length m.
inline std::optional<std::size_t> remainder_cycle_length(const Graph& g, VertexSet s) {
  const auto rest = g.vertices() - s;
  if (rest.size() < 3) return std::nullopt;
  bool two_regular = true;
  rest.for_each([&](Vertex v) { two_regular = two_regular && (g.neighbors(v) & rest).size() == 2; });
  if (!two_regular) return std::nullopt;
  // Connected?
  VertexSet seen{rest.front()};
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    frontier.for_each([&](Vertex v) { next |= g.neighbors(v) & rest; });
    frontier = next - seen;
    seen |= next;
  }
  if (seen != rest) return std::nullopt;
  return rest.size();
}

inline bool hypothesis_holds(TheoremId id, const Instance& in, const FieldSpec& field) {
  const auto& g = in.graph;
  const auto rest = g.vertices() - in.s;
  switch (id) {
    case TheoremId::kT32: return is_chordal(g, rest).chordal;
    case TheoremId::kT33: return classify_remainder(g, in.s) == RemainderClass::kFiveCycle;
    case TheoremId::kT37: return true;
    case TheoremId::kT41: return !is_sequentially_cm(induced_subgraph(g, rest), field).value;
    case TheoremId::kC34: return is_vertex_cover(g, in.s);
    case TheoremId::kC35: return in.s.size() + 3 >= g.vertex_count();
    case TheoremId::kC36: return in.s == g.vertices();
    case TheoremId::kC42: {
      const auto m = remainder_cycle_length(g, in.s);
      return m && *m != 3 && *m != 5;
    }
  }
  return false;
}

inline std::optional<Instance> sample_instance(TheoremId id, std::mt19937_64& rng, std::size_t max_n, double p,
                                               const FieldSpec& field, std::size_t cap, std::size_t& attempts) {
  for (std::size_t a = 0; a < cap; ++a) {
    ++attempts;
    Instance in;
    switch (id) {
      case TheoremId::kT33: {
        if (max_n < 5) return std::nullopt;
        in = planted_cycle(rng, uniform(rng, 5, max_n), 5, p, true);
        break;
      }
      case TheoremId::kC42: {
        std::vector<std::size_t> lengths;
        for (std::size_t m = 4; m <= max_n; ++m)
          if (m != 5) lengths.push_back(m);
        if (lengths.empty()) return std::nullopt;
        const auto m = lengths[uniform(rng, 0, lengths.size() - 1)];
        in = planted_cycle(rng, uniform(rng, m, max_n), m, p, false);
        break;
      }
      case TheoremId::kC36: {
        const auto n = uniform(rng, 1, max_n);
        in = {random_graph(rng, n, p), VertexSet::range(n)};
        break;
      }
      default: {
        // Every graph on at most three vertices is SCM, so T4.1 starts at four.
        const std::size_t lo = id == TheoremId::kT41 ? std::min<std::size_t>(4, max_n) : 1;
        const auto n = uniform(rng, lo, max_n);
        in.graph = random_graph(rng, n, p);
        in.s = random_subset(rng, n);
        break;
      }
    }
    if (hypothesis_holds(id, in, field)) return in;
  }
  return std::nullopt;
}

struct TrialContext {
  std::map<std::string, std::size_t>* stats = nullptr;
  std::vector<std::size_t>* degrees_without_order = nullptr;
  InducedDlq::SharedCache* dlq_cache = nullptr;
  bool betti_oracle = true;
  bool greedy_stats = true;

  void count(const std::string& key, std::size_t by = 1) const {
    if (stats) (*stats)[key] += by;
  }
};

inline std::optional<std::string> check_certificates(const Verdict& v, const FieldSpec& field,
                                                     const TrialContext& ctx) {
  const auto* certs = std::get_if<QuotientCertificates>(&v.evidence);
  if (!certs) return std::nullopt;
  for (const auto& q : certs->orders) {
    if (!verify_order(q)) return "quotient certificate for degree " + std::to_string(q.ideal.min_degree()) +
                                  " does not verify";
    if (ctx.betti_oracle && !q.ideal.is_zero()) {
      ctx.count("betti-oracle-checks");
      if (betti_numbers(q.ideal, field).total != betti_from_quotient_order(q).total)
        return "betti_numbers disagrees with the quotient-order formula in degree " +
               std::to_string(q.ideal.min_degree());
    }
    if (ctx.greedy_stats) ctx.count(greedy_order(q.ideal) ? "greedy-agree" : "greedy-miss");
  }
  return std::nullopt;
}

// Failure detail for one (G, S) whose hypothesis holds; nullopt on success.
inline std::optional<std::string> check_conclusion(TheoremId id, const Instance& in, const FieldSpec& field,
                                                   const TrialContext& ctx) {
  const auto& g = in.graph;
  const auto w = add_whiskers(g, in.s);
  switch (id) {
    case TheoremId::kT32:
    case TheoremId::kT33:
    case TheoremId::kC34:
    case TheoremId::kC35: {
      const auto hit = sufficient_scm(g, in.s);
      if (!hit) return std::string("no sufficient condition fired although the hypothesis holds");
      ctx.count(std::string("hit-") + short_name(*hit));
      const auto v = is_sequentially_cm(w.graph, field);
      if (!v.value) return std::string("G u W(S) is not SCM over ") + field.display();
      if (v.no_order_but_linear) {
        ctx.count("open-question-candidates");
        if (ctx.degrees_without_order)
          *ctx.degrees_without_order = std::get<LinearResolutionCheck>(v.evidence).degrees_without_order;
      }
      if (auto bad = check_certificates(v, field, ctx)) return bad;
      if ((id == TheoremId::kT32 || id == TheoremId::kT33) && !w.graph.edges().empty()) {
        const auto chain = chain_oracle(w.whiskers);
        const auto all = w.graph.vertices();
        for (auto d = min_vertex_cover_size(w.graph, all); d <= all.size(); ++d) {
          const auto q = chain(w.graph, all, d);
          if (!q || !verify_order(*q)) return "whisker construction gives no valid order in degree " + std::to_string(d);
          ctx.count("construction-certified");
        }
      }
      return std::nullopt;
    }
    case TheoremId::kT37: {
      InducedDlq small(g, ctx.dlq_cache);
      InducedDlq big(w.graph, ctx.dlq_cache);
      const bool lhs = small.all_induced(g.vertices() - in.s);
      const bool rhs = big.all_induced_containing(w.graph.vertices(), w.tips());
      const bool literal = big.all_induced(w.graph.vertices());
      ctx.count(lhs ? "sides-true" : "sides-false");
      if (lhs != literal) ctx.count("literal-disagreements");
      if (lhs != rhs)
        return std::string("G \\ S side is ") + (lhs ? "true" : "false") + ", whiskered side is " +
               (rhs ? "true" : "false");
      return std::nullopt;
    }
    case TheoremId::kT41:
    case TheoremId::kC42: {
      const auto v = is_sequentially_cm(w.graph, field);
      if (v.value) return std::string("G u W(S) is SCM over ") + field.display();
      const auto witness = necessary_scm(g, in.s, field);
      if (!witness) return std::string("no syzygy witness found for G \\ S");
      const auto lift = check_koszul_lift_detail(g, in.s, *witness, field);
      if (!lift.holds())
        return "lift check failed: complexes " + std::string(lift.complexes_equal ? "equal" : "differ") +
               ", beta_b=" + std::to_string(lift.beta_b) + ", beta_c=" + std::to_string(lift.beta_c);
      ctx.count("lift-checked");
      return std::nullopt;
    }
    case TheoremId::kC36: {
      const auto v = is_cm(w.graph, field);
      if (!v.value) return std::string("G u W(V_G) is not CM over ") + field.display();
      if (auto bad = check_certificates(v, field, ctx)) return bad;
      return std::nullopt;
    }
  }
  return std::string("unknown theorem");
}

inline Instance delete_from_instance(const Instance& in, Vertex v) {
  const auto sub = induced_subgraph_with_map(in.graph, in.graph.vertices().without(v));
  Instance out{sub.graph, {}};
  for (std::size_t k = 0; k < sub.original.size(); ++k)
    if (in.s.contains(sub.original[k])) out.s.insert(k);
  return out;
}

/// Deletes vertices one at a time while `still_fails` holds.
template <class Pred>
Instance shrink_while(Instance in, Pred still_fails) {
  bool progress = true;
  while (progress && in.graph.vertex_count() > 0) {
    progress = false;
    for (Vertex v = in.graph.vertex_count(); v-- > 0;) {
      auto candidate = delete_from_instance(in, v);
      if (still_fails(candidate)) {
        in = std::move(candidate);
        progress = true;
        break;
      }
    }
  }
  return in;
}

inline Instance shrink(TheoremId id, Instance in, const FieldSpec& field) {
  return shrink_while(std::move(in), [&](const Instance& c) {
    return hypothesis_holds(id, c, field) && check_conclusion(id, c, field, TrialContext{}).has_value();
  });
}

inline std::string fields_argument(const std::vector<FieldSpec>& fields) {
  std::string out;
  for (const auto& f : fields) {
    if (!out.empty()) out += ',';
    out += f.spec();
  }
  return out;
}

inline std::string rerun_command(const Campaign& c, std::size_t trial) {
  std::ostringstream out;
  out << "wscm verify-theorem " << to_string(c.id) << " --trials " << c.trials << " --max-n " << c.max_n
      << " --seed " << c.seed << " --field " << fields_argument(c.fields) << " --only-trial " << trial;
  return out.str();
}

}  // namespace detail

inline CampaignReport run_campaign(const Campaign& c) {
  if (c.trials == 0) throw InputError("campaign needs at least one trial");
  if (c.max_n == 0 || c.max_n > 32) throw InputError("max vertex count must be in 1..32");
  if (c.fields.empty()) throw InputError("campaign needs at least one field");
  if (c.only_trial && *c.only_trial >= c.trials) throw InputError("--only-trial index is not below --trials");
  CampaignReport report;
  report.campaign = c;
  InducedDlq::SharedCache dlq_cache;
  static const double kEdgeProbabilities[] = {0.2, 0.4, 0.6};
  for (std::size_t t = 0; t < c.trials; ++t) {
    if (c.only_trial && t != *c.only_trial) continue;
    const auto seed = trial_seed(c.seed, t);
    std::mt19937_64 rng(seed);
    const double p = kEdgeProbabilities[rng() % 3];
    const auto instance =
        detail::sample_instance(c.id, rng, c.max_n, p, c.fields.front(), c.attempt_cap, report.attempts);
    if (!instance) {
      ++report.skipped;
      continue;
    }
    bool trial_ok = true;
    for (const auto& field : c.fields) {
      if (!detail::hypothesis_holds(c.id, *instance, field)) {
        report.stats["hypothesis-field-dependent"] += 1;
        continue;
      }
      std::vector<std::size_t> without_order;
      const detail::TrialContext ctx{&report.stats, &without_order, &dlq_cache, c.betti_oracle, c.greedy_stats};
      const auto failure = detail::check_conclusion(c.id, *instance, field, ctx);
      if (!without_order.empty())
        report.candidates.push_back({t, field, add_whiskers(instance->graph, instance->s).graph, without_order});
      if (failure) {
        trial_ok = false;
        CampaignFailure f;
        f.trial = t;
        f.trial_seed = seed;
        f.field = field;
        f.instance = *instance;
        f.shrunk = detail::shrink(c.id, *instance, field);
        f.detail = *failure;
        f.rerun = detail::rerun_command(c, t);
        report.failures.push_back(std::move(f));
        break;
      }
    }
    (trial_ok ? report.passed : report.failed) += 1;
  }
  return report;
}

inline std::string format_campaign_report(const CampaignReport& r) {
  std::ostringstream out;
  const auto& c = r.campaign;
  out << "campaign " << to_string(c.id) << ": " << describe(c.id) << '\n';
  out << "seed " << c.seed << ", trials " << c.trials << ", max-n " << c.max_n << ", fields "
      << detail::fields_argument(c.fields);
  if (c.only_trial) out << ", only trial " << *c.only_trial;
  out << '\n';
  out << "passed " << r.passed << ", failed " << r.failed << ", skipped " << r.skipped << ", sampling attempts "
      << r.attempts << '\n';
  for (const auto& [key, value] : r.stats) out << "  " << key << ": " << value << '\n';
  for (const auto& cand : r.candidates)
    out << "open-question candidate (trial " << cand.trial << ", " << cand.field.display()
        << "): " << format_graph_inline(cand.graph) << '\n';
  for (const auto& f : r.failures) {
    out << "FAILURE trial " << f.trial << " (seed " << f.trial_seed << ", " << f.field.display() << "): " << f.detail
        << '\n';
    out << "  G: " << format_graph_inline(f.instance.graph) << "  S: " << format_index_list(f.instance.s) << '\n';
    out << "  shrunk G: " << format_graph_inline(f.shrunk.graph) << "  S: " << format_index_list(f.shrunk.s)
        << '\n';
    out << "  rerun: " << f.rerun << '\n';
  }
  out << "result: " << (r.ok() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------
// Exhaustive whiskering-equivalence check

struct ExhaustiveEquivalenceReport {
  std::size_t max_n = 0;
  std::size_t pairs = 0;
  std::size_t both_true = 0;
  std::size_t both_false = 0;
  /// Pairs where G \ S and the tip-containing subgraphs of G u W(S) disagree.
  std::size_t disagreements = 0;
  /// Pairs where G \ S and all induced subgraphs of G u W(S) disagree.
  std::size_t literal_disagreements = 0;
  std::optional<Instance> first_disagreement;
  std::optional<Instance> first_literal_disagreement;

  bool ok() const { return disagreements == 0; }
};

/// Every labelled graph on at most `max_n` vertices, every S.
inline ExhaustiveEquivalenceReport run_exhaustive_equivalence(std::size_t max_n) {
  if (max_n > 6) throw InputError("exhaustive enumeration is limited to 6 vertices");
  ExhaustiveEquivalenceReport r;
  r.max_n = max_n;
  InducedDlq::SharedCache cache;
  for (std::size_t n = 0; n <= max_n; ++n) {
    std::vector<Edge> pairs;
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
      Graph g(n);
      for (std::size_t k = 0; k < pairs.size(); ++k)
        if ((mask >> k) & 1U) g.add_edge(pairs[k].first, pairs[k].second);
      InducedDlq small(g, &cache);
      for_each_subset(g.vertices(), [&](VertexSet s) {
        const auto w = add_whiskers(g, s);
        InducedDlq big(w.graph, &cache);
        const bool lhs = small.all_induced(g.vertices() - s);
        const bool rhs = big.all_induced_containing(w.graph.vertices(), w.tips());
        const bool literal = big.all_induced(w.graph.vertices());
        ++r.pairs;
        if (lhs == rhs) {
          (lhs ? r.both_true : r.both_false) += 1;
        } else {
          ++r.disagreements;
          if (!r.first_disagreement) r.first_disagreement = Instance{g, s};
        }
        if (lhs != literal) {
          ++r.literal_disagreements;
          if (!r.first_literal_disagreement) r.first_literal_disagreement = Instance{g, s};
        }
      });
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Graphs up to isomorphism

/// Smallest upper-triangle adjacency word over all relabellings (n <= 7).
inline std::uint64_t canonical_form(const Graph& g) {
  const auto n = g.vertex_count();
  if (n > 7) throw InputError("canonical form is limited to 7 vertices");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t word = 0;
    std::size_t bit = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j, ++bit)
        if (g.adjacent(perm[i], perm[j])) word |= std::uint64_t{1} << bit;
    best = std::min(best, word);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// One representative per isomorphism class of graphs on exactly n vertices (n <= 6).
inline std::vector<Graph> graphs_up_to_isomorphism(std::size_t n) {
  if (n > 6) throw InputError("isomorphism-class enumeration is limited to 6 vertices");
  std::vector<Edge> pairs;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::set<std::uint64_t> seen;
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    Graph g(n);
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if ((mask >> k) & 1U) g.add_edge(pairs[k].first, pairs[k].second);
    if (seen.insert(canonical_form(g)).second) out.push_back(std::move(g));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Worked-example fixtures

enum class FixtureId { kEx38, kEx39, kEx43, kC5Order, kVillarrealEdge };

inline const std::vector<FixtureId>& all_fixture_ids() {
  static const std::vector<FixtureId> ids{FixtureId::kEx38, FixtureId::kEx39, FixtureId::kEx43, FixtureId::kC5Order,
                                          FixtureId::kVillarrealEdge};
  return ids;
}

inline const char* to_string(FixtureId id) {
  switch (id) {
    case FixtureId::kEx38: return "EX3.8";
    case FixtureId::kEx39: return "EX3.9";
    case FixtureId::kEx43: return "EX4.3";
    case FixtureId::kC5Order: return "C5-ORDER";
    case FixtureId::kVillarrealEdge: return "VILLARREAL-EDGE";
  }
  return "?";
}

inline FixtureId parse_fixture_id(const std::string& text) {
  for (auto id : all_fixture_ids())
    if (text == to_string(id)) return id;
  throw InputError("unknown fixture '" + text + "' (expected EX3.8, EX3.9, EX4.3, C5-ORDER or VILLARREAL-EDGE)");
}

struct FixtureCheck {
  std::string name;
  std::string expected;
  std::string observed;
  bool pass = false;
};

struct FixtureResult {
  FixtureId id = FixtureId::kEx38;
  std::vector<FixtureCheck> checks;

  bool pass() const {
    return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
  }
};

namespace detail {

inline std::string format_totals(const BettiTable& t) {
  std::string out = "{";
  bool first = true;
  for (const auto& [key, value] : t.total) {
    if (!first) out += ", ";
    out += "b" + std::to_string(key.first) + "," + std::to_string(key.second) + "=" + std::to_string(value);
    first = false;
  }
  return out + "}";
}

inline std::vector<SquareFreeMonomial> monomials_by_name(const Graph& g, const std::vector<std::string>& words) {
  // Each word is a product of vertex labels; match greedily, longest label first.
  std::vector<std::pair<std::string, Vertex>> names;
  for (Vertex v = 0; v < g.vertex_count(); ++v) names.emplace_back(g.label(v), v);
  std::sort(names.begin(), names.end(), [](const auto& a, const auto& b) { return a.first.size() > b.first.size(); });
  std::vector<SquareFreeMonomial> out;
  for (const auto& word : words) {
    SquareFreeMonomial m;
    std::size_t pos = 0;
    while (pos < word.size()) {
      bool matched = false;
      for (const auto& [name, v] : names) {
        if (word.compare(pos, name.size(), name) == 0) {
          m.insert(v);
          pos += name.size();
          matched = true;
          break;
        }
      }
      if (!matched) throw InputError("cannot read monomial '" + word + "'");
    }
    out.push_back(m);
  }
  return out;
}

inline FixtureCheck check(std::string name, std::string expected, std::string observed) {
  const bool pass = expected == observed;
  return {std::move(name), std::move(expected), std::move(observed), pass};
}

inline std::string bool_text(bool b) { return b ? "true" : "false"; }

inline std::string verdict_text(const Verdict& v) { return bool_text(v.value); }

inline std::string order_text(const MonomialIdeal& ideal, const std::vector<SquareFreeMonomial>& seq) {
  try {
    const auto q = certify_sequence(ideal, seq);
    return bool_text(q && verify_order(*q));
  } catch (const InputError& e) {
    return std::string("invalid: ") + e.what();
  }
}

}  // namespace detail

inline FixtureResult run_fixture(FixtureId id, const FieldSpec& field = FieldSpec::prime(2)) {
  FixtureResult r;
  r.id = id;
  using detail::check;
  switch (id) {
    case FixtureId::kEx38: {
      const auto g = fixtures::square_with_tail();
      const auto w = add_whiskers(g, fixtures::last_vertex(g));
      const auto& names = w.graph.labels();
      const auto dual = alexander_dual_of_edge_ideal(w.graph);
      const auto listed = detail::monomials_by_name(
          w.graph, {"x1x3x4x6", "x2x3x4x6", "x1x3x5x6", "x2x4x5x6", "x1x3x5x7", "x2x4x5x7"});
      r.checks.push_back(check("dual generators", format_ideal(names, MonomialIdeal(7, listed)),
                               format_ideal(names, dual)));
      const std::string betti = "{b0,4=6, b1,5=5, b1,6=1, b2,7=1}";
      for (const auto& f : {FieldSpec::prime(2), FieldSpec::rationals()})
        r.checks.push_back(
            check("Betti table over " + f.display(), betti, detail::format_totals(betti_numbers(dual, f))));
      const auto rest = delete_vertices(g, fixtures::last_vertex(g));
      r.checks.push_back(check("listed order of the dual of G \\ S", "true",
                               detail::order_text(alexander_dual_of_edge_ideal(rest),
                                                  detail::monomials_by_name(
                                                      rest, {"x1x3x4", "x2x3x4", "x1x3x5", "x2x4x5"}))));
      r.checks.push_back(check("SCM of G u W(S)", "false", detail::verdict_text(is_sequentially_cm(w.graph, field))));
      break;
    }
    case FixtureId::kEx39: {
      const auto g = fixtures::square_with_two_triangles();
      const auto w = add_whiskers(g, fixtures::last_vertex(g));
      const auto dual = alexander_dual_of_edge_ideal(w.graph);
      const auto listed = detail::monomials_by_name(
          w.graph, {"x1x3x4x6", "x2x3x4x6", "x1x3x5x6", "x2x4x5x6", "x2x3x4x7", "x1x2x3x5x7"});
      r.checks.push_back(check("dual generators", format_ideal(w.graph.labels(), MonomialIdeal(7, listed)),
                               format_ideal(w.graph.labels(), dual)));
      r.checks.push_back(check("listed order has linear quotients", "true", detail::order_text(dual, listed)));
      r.checks.push_back(check("SCM of G u W(S)", "true", detail::verdict_text(is_sequentially_cm(w.graph, field))));
      break;
    }
    case FixtureId::kEx43: {
      const auto g = fixtures::square_with_pendant();
      const auto w = add_whiskers(g, fixtures::last_vertex(g), {"x"});
      const auto& names = w.graph.labels();
      const auto dual = alexander_dual_of_edge_ideal(w.graph);
      const auto listed = detail::monomials_by_name(w.graph, {"y1y3y", "y2y4y", "y1y3x", "y1y2y4x"});
      r.checks.push_back(check("dual generators", format_ideal(names, MonomialIdeal(6, listed)),
                               format_ideal(names, dual)));
      r.checks.push_back(check("degree-3 component Betti table", "{b0,3=3, b1,4=1, b1,5=1}",
                               detail::format_totals(betti_numbers(squarefree_degree_component(dual, 3), field))));
      r.checks.push_back(check("SCM of G u W(S)", "false", detail::verdict_text(is_sequentially_cm(w.graph, field))));
      r.checks.push_back(check("|S| = |V_G| - 4", "true", detail::bool_text(1 + 4 == g.vertex_count())));
      break;
    }
    case FixtureId::kC5Order: {
      const auto g = fixtures::cycle(5);
      const auto dual = alexander_dual_of_edge_ideal(g);
      const auto listed = detail::monomials_by_name(g, {"x1x2x4", "x1x3x4", "x1x3x5", "x2x3x5", "x2x4x5"});
      r.checks.push_back(check("listed order has linear quotients", "true", detail::order_text(dual, listed)));
      r.checks.push_back(check("SCM of C5", "true", detail::verdict_text(is_sequentially_cm(g, field))));
      std::string from_order = "no certificate";
      if (const auto q = certify_sequence(dual, listed); q && verify_order(*q))
        from_order = detail::format_totals(betti_from_quotient_order(*q));
      r.checks.push_back(check("Betti table from the order vs homology", from_order,
                               detail::format_totals(betti_numbers(dual, field))));
      break;
    }
    case FixtureId::kVillarrealEdge: {
      const auto one_sided = fixtures::one_sided_whiskered_edge();
      const auto cm = is_cm(one_sided, field);
      r.checks.push_back(check("x-y1-y2 SCM", "true", detail::bool_text(cm.sequentially_cm.value_or(false))));
      r.checks.push_back(check("x-y1-y2 CM", "false", detail::verdict_text(cm)));
      const auto both = add_whiskers(fixtures::path(2), IndexSet{0, 1});
      r.checks.push_back(check("edge whiskered at both ends CM", "true", detail::verdict_text(is_cm(both.graph, field))));
      break;
    }
  }
  return r;
}

inline std::string format_fixture_result(const FixtureResult& r) {
  std::ostringstream out;
  out << "fixture " << to_string(r.id) << '\n';
  for (const auto& c : r.checks) {
    out << "  [" << (c.pass ? "ok" : "MISMATCH") << "] " << c.name << ": " << c.observed;
    if (!c.pass) out << " (expected " << c.expected << ")";
    out << '\n';
  }
  out << "result: " << (r.pass() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

}  // namespace wscm

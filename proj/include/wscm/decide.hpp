#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "wscm/error.hpp"
#include "wscm/field.hpp"
#include "wscm/graph.hpp"
#include "wscm/homology.hpp"
#include "wscm/linear_quotients.hpp"
#include "wscm/monomial.hpp"

namespace wscm {

enum class Property { kSequentiallyCM, kCohenMacaulay };

inline const char* to_string(Property p) { return p == Property::kSequentiallyCM ? "SCM" : "CM"; }

/// Edgeless graph: the quotient is the whole polynomial ring.
struct ZeroIdealConvention {};

/// One linear-quotients order per degree d of (I(G)^∨_[d]) that is nonzero.
struct QuotientCertificates {
  std::vector<QuotientOrder> orders;
};

/// Every component has a linear resolution over the verdict's field, but not every one has a quotient order.
struct LinearResolutionCheck {
  std::vector<std::size_t> degrees;
  /// Degrees whose order search came back empty or hit its budget.
  std::vector<std::size_t> degrees_without_order;
};

/// β_{i,b} ≠ 0 with |b| > d + i in the degree-d component of the dual.
struct BettiWitness {
  std::size_t degree = 0;
  std::size_t i = 0;
  IndexSet b;
  std::size_t rank = 0;
};

enum class TheoremHit { kVertexCover, kSizeBound, kChordalRemainder, kFiveCycleRemainder };

inline const char* to_string(TheoremHit h) {
  switch (h) {
    case TheoremHit::kVertexCover: return "whisker set is a vertex cover";
    case TheoremHit::kSizeBound: return "at most three vertices left unwhiskered";
    case TheoremHit::kChordalRemainder: return "unwhiskered remainder is chordal";
    case TheoremHit::kFiveCycleRemainder: return "unwhiskered remainder is a five-cycle";
  }
  return "?";
}

inline const char* short_name(TheoremHit h) {
  switch (h) {
    case TheoremHit::kVertexCover: return "vertex-cover";
    case TheoremHit::kSizeBound: return "size-bound";
    case TheoremHit::kChordalRemainder: return "chordal-remainder";
    case TheoremHit::kFiveCycleRemainder: return "five-cycle-remainder";
  }
  return "?";
}

struct SufficientCondition {
  TheoremHit hit;
  VertexSet whiskered;
};

using Evidence = std::variant<ZeroIdealConvention, QuotientCertificates, LinearResolutionCheck, BettiWitness,
                              SufficientCondition>;

inline const char* evidence_kind(const Evidence& e) {
  struct Visitor {
    const char* operator()(const ZeroIdealConvention&) const { return "zero-ideal-convention"; }
    const char* operator()(const QuotientCertificates&) const { return "quotient-certificates"; }
    const char* operator()(const LinearResolutionCheck&) const { return "linear-resolution-check"; }
    const char* operator()(const BettiWitness&) const { return "betti-witness"; }
    const char* operator()(const SufficientCondition&) const { return "sufficient-condition"; }
  };
  return std::visit(Visitor{}, e);
}

struct Verdict {
  Property property = Property::kSequentiallyCM;
  bool value = false;
  FieldSpec field = FieldSpec::prime(2);
  /// True when the evidence does not depend on the field (quotient orders, conventions).
  bool field_independent = false;
  Evidence evidence;
  /// CM verdicts record both halves.
  std::optional<bool> sequentially_cm;
  std::optional<bool> unmixed;
  /// Two minimal covers of different sizes when the graph is mixed.
  std::optional<std::pair<VertexSet, VertexSet>> mixed_covers;
  /// The homology test says SCM although some component has no quotient order.
  bool no_order_but_linear = false;
};

struct DecideOptions {
  /// Search budget per component for the quotient-order fast path; 0 = unlimited.
  OrderSearchLimits order_limits{200000};
};

/**
 * SCM via componentwise linearity of I(G)^∨. Tries quotient orders on every
 * component first (field-independent certificates); if any component has
 * none, decides with upper Koszul homology over `field`.
 */
inline Verdict is_sequentially_cm(const Graph& g, const FieldSpec& field, const DecideOptions& options = {}) {
  Verdict v;
  v.property = Property::kSequentiallyCM;
  v.field = field;
  if (g.edge_count() == 0) {
    v.value = true;
    v.field_independent = true;
    v.evidence = ZeroIdealConvention{};
    return v;
  }
  const auto dlq = has_dual_linear_quotients(g, g.vertices(), options.order_limits, false);
  if (dlq.holds) {
    QuotientCertificates certs;
    for (const auto& d : dlq.degrees) certs.orders.push_back(*d.order);
    v.value = true;
    v.field_independent = true;
    v.evidence = std::move(certs);
    return v;
  }
  // Degrees below the least cover size give the zero ideal; above, certified ones
  // need no homology. Only uncertified degrees are scanned.
  std::optional<BettiWitness> witness;
  LinearResolutionCheck linear;
  for (const auto& d : dlq.degrees) {
    linear.degrees.push_back(d.degree);
    if (d.status == SearchStatus::kFound) continue;
    linear.degrees_without_order.push_back(d.degree);
    const auto location = find_nonlinear_syzygy(dual_component(g, g.vertices(), d.degree), field);
    if (location) {
      witness = BettiWitness{d.degree, location->i, location->b, location->rank};
      break;
    }
  }
  if (witness) {
    v.value = false;
    v.evidence = *witness;
  } else {
    v.value = true;
    v.evidence = std::move(linear);
    v.no_order_but_linear = dlq.decided;
  }
  return v;
}

/// CM = SCM and unmixed.
inline Verdict is_cm(const Graph& g, const FieldSpec& field, const DecideOptions& options = {}) {
  auto v = is_sequentially_cm(g, field, options);
  v.property = Property::kCohenMacaulay;
  v.sequentially_cm = v.value;
  const auto covers = minimal_vertex_covers(g);
  bool unmixed = true;
  for (auto c : covers) {
    if (c.size() != covers.front().size()) {
      unmixed = false;
      v.mixed_covers = std::make_pair(covers.front(), c);
      break;
    }
  }
  v.unmixed = unmixed;
  v.value = v.value && unmixed;
  return v;
}

/**
 * First sufficient condition for G ∪ W(S) to be SCM that applies, checked in
 * the order: S covers every edge, |S| ≥ |V_G| - 3, G \ S chordal, G \ S a
 * five-cycle up to isolated vertices. nullopt means none applies, not that
 * G ∪ W(S) fails.
 */
inline std::optional<TheoremHit> sufficient_scm(const Graph& g, VertexSet s) {
  g.check_subset(s);
  if (is_vertex_cover(g, s)) return TheoremHit::kVertexCover;
  if (s.size() + 3 >= g.vertex_count()) return TheoremHit::kSizeBound;
  switch (classify_remainder(g, s)) {
    case RemainderClass::kChordal: return TheoremHit::kChordalRemainder;
    case RemainderClass::kFiveCycle: return TheoremHit::kFiveCycleRemainder;
    case RemainderClass::kOther: break;
  }
  return std::nullopt;
}

/**
 * A nonlinear syzygy of (I(G \ S)^∨_[d]) at multidegree b (vertices of G),
 * together with its lift c = b ∪ S in G ∪ W(S).
 */
struct SyzygyWitness {
  std::size_t d = 0;
  std::size_t i = 0;
  VertexSet b;
  VertexSet c;
  std::size_t rank = 0;
};

/**
 * When G \ S is not SCM over `field`, the first nonlinear syzygy of its dual
 * (components by increasing d, multidegrees by increasing size); else nullopt.
 */
inline std::optional<SyzygyWitness> necessary_scm(const Graph& g, VertexSet s, const FieldSpec& field,
                                                  const DecideOptions& options = {}) {
  g.check_subset(s);
  const auto rest = g.vertices() - s;
  const auto sub = induced_subgraph_with_map(g, rest);
  const auto& h = sub.graph;
  if (h.edge_count() == 0) return std::nullopt;
  const auto dlq = has_dual_linear_quotients(h, h.vertices(), options.order_limits, false);
  if (dlq.holds) return std::nullopt;
  for (const auto& entry : dlq.degrees) {
    if (entry.status == SearchStatus::kFound) continue;
    const auto location = find_nonlinear_syzygy(dual_component(h, h.vertices(), entry.degree), field);
    if (!location) continue;
    SyzygyWitness w;
    w.d = entry.degree;
    w.i = location->i;
    location->b.for_each([&](Vertex v) { w.b.insert(sub.original[v]); });
    w.c = w.b | s;
    w.rank = location->rank;
    return w;
  }
  return std::nullopt;
}

struct KoszulLiftCheck {
  bool complexes_equal = false;
  std::size_t beta_b = 0;  // β_{i,b}(I), I = (I(G\S)^∨_[d])
  std::size_t beta_c = 0;  // β_{i,c}(J), J = (I(G∪W(S))^∨_[d+|S|])
  bool holds() const { return complexes_equal && beta_b == beta_c && beta_b != 0; }
};

/**
 * Rebuilds K^b(I) and K^c(J) for the witness and compares them as face sets
 * after mapping vertices of G \ S back to G (whisker tips come after the
 * original vertices, so G's indices carry over to G ∪ W(S)).
 */
inline KoszulLiftCheck check_koszul_lift_detail(const Graph& g, VertexSet s, const SyzygyWitness& w,
                                                const FieldSpec& field) {
  g.check_subset(s);
  const auto rest = g.vertices() - s;
  if (!w.b.is_subset_of(rest)) throw InputError("witness multidegree meets the whiskered vertices");
  if (w.c != (w.b | s)) throw InputError("lifted multidegree is not b together with the whiskered vertices");
  const auto sub = induced_subgraph_with_map(g, rest);
  std::vector<std::size_t> position(g.vertex_count(), 0);
  for (std::size_t k = 0; k < sub.original.size(); ++k) position[sub.original[k]] = k;
  VertexSet b_local;
  w.b.for_each([&](Vertex v) { b_local.insert(position[v]); });

  const auto small = dual_component(sub.graph, sub.graph.vertices(), w.d);
  const auto whiskered = add_whiskers(g, s);
  const auto big = dual_component(whiskered.graph, whiskered.graph.vertices(), w.d + s.size());

  const auto k_small = upper_koszul_complex(small, b_local);
  const auto k_big = upper_koszul_complex(big, w.c);

  std::vector<IndexSet> lifted;
  for (auto f : k_small.faces()) {
    IndexSet mapped;
    f.for_each([&](std::size_t v) { mapped.insert(sub.original[v]); });
    lifted.push_back(mapped);
  }
  std::sort(lifted.begin(), lifted.end(), DegreeLexLess{});

  KoszulLiftCheck out;
  out.complexes_equal = lifted == k_big.faces();
  const auto hs = reduced_homology_ranks(k_small, field);
  const auto hb = reduced_homology_ranks(k_big, field);
  out.beta_b = w.i < hs.size() ? hs[w.i] : 0;
  out.beta_c = w.i < hb.size() ? hb[w.i] : 0;
  return out;
}

inline bool check_koszul_lift(const Graph& g, VertexSet s, const SyzygyWitness& w, const FieldSpec& field) {
  return check_koszul_lift_detail(g, s, w, field).holds();
}

}  // namespace wscm

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "wscm/decide.hpp"
#include "wscm/error.hpp"
#include "wscm/graph.hpp"
#include "wscm/harness.hpp"
#include "wscm/homology.hpp"
#include "wscm/linear_quotients.hpp"
#include "wscm/monomial.hpp"

namespace wscm::json {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Building blocks

inline Json names_of(const std::vector<std::string>& names, IndexSet s) {
  Json out = Json::array();
  s.for_each([&](std::size_t v) { out.push_back(names.at(v)); });
  return out;
}

inline Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u + 1, v + 1});
  return {{"vertices", g.vertex_count()}, {"labels", g.labels()}, {"edges", std::move(edges)}};
}

inline Json ideal_to_json(const MonomialIdeal& ideal, const std::vector<std::string>& names) {
  Json gens = Json::array();
  for (auto m : ideal.generators()) gens.push_back(names_of(names, m));
  return {{"ambient", ideal.ambient()},
          {"vars", std::vector<std::string>(names.begin(), names.begin() + static_cast<long>(ideal.ambient()))},
          {"gens", std::move(gens)}};
}

inline Json certificate_to_json(const QuotientOrder& q, const std::vector<std::string>& names) {
  Json order = Json::array();
  for (auto m : q.sequence()) order.push_back(names_of(names, m));
  Json colons = Json::array();
  for (auto c : q.colon_vars) colons.push_back(names_of(names, c));
  return {{"ideal", ideal_to_json(q.ideal, names)}, {"order", std::move(order)}, {"colons", std::move(colons)}};
}

inline Json certificate_document(const QuotientOrder& q, const std::vector<std::string>& names) {
  Json out{{"kind", "certificate"}};
  out.update(certificate_to_json(q, names));
  return out;
}

inline Json betti_to_json(const BettiTable& t, const std::vector<std::string>& names) {
  Json total = Json::array();
  for (const auto& [key, value] : t.total) total.push_back({{"i", key.first}, {"j", key.second}, {"value", value}});
  Json multi = Json::array();
  for (const auto& [key, value] : t.multigraded)
    multi.push_back({{"i", key.first}, {"b", names_of(names, key.second)}, {"value", value}});
  return {{"total", std::move(total)}, {"multigraded", std::move(multi)}};
}

namespace detail {

inline const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("JSON: missing field '") + key + "'");
  return j.at(key);
}

template <class T>
T get(const Json& j, const char* key) {
  try {
    return member(j, key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw InputError(std::string("JSON: field '") + key + "' has the wrong type");
  }
}

inline std::map<std::string, std::size_t> name_index(const std::vector<std::string>& names) {
  std::map<std::string, std::size_t> out;
  for (std::size_t k = 0; k < names.size(); ++k)
    if (!out.emplace(names[k], k).second) throw InputError("JSON: duplicate variable name '" + names[k] + "'");
  return out;
}

inline IndexSet parse_names(const Json& list, const std::map<std::string, std::size_t>& index) {
  if (!list.is_array()) throw InputError("JSON: expected a list of variable names");
  IndexSet out;
  for (const auto& item : list) {
    if (!item.is_string()) throw InputError("JSON: variable names must be strings");
    const auto it = index.find(item.get<std::string>());
    if (it == index.end()) throw InputError("JSON: unknown variable '" + item.get<std::string>() + "'");
    out.insert(it->second);
  }
  return out;
}

}  // namespace detail

inline Graph graph_from_json(const Json& j) {
  const auto n = detail::get<std::size_t>(j, "vertices");
  if (n > kMaxIndices) throw InputError("JSON: too many vertices");
  auto labels = j.contains("labels") ? detail::get<std::vector<std::string>>(j, "labels") : Graph(n).labels();
  if (labels.size() != n) throw InputError("JSON: label count does not match the vertex count");
  Graph g(n, labels);
  for (const auto& e : detail::member(j, "edges")) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned())
      throw InputError("JSON: each edge is a pair of 1-based indices");
    const auto u = e[0].get<std::size_t>();
    const auto v = e[1].get<std::size_t>();
    if (u < 1 || v < 1 || u > n || v > n || u == v) throw InputError("JSON: bad edge endpoints");
    g.add_edge(u - 1, v - 1);
  }
  return g;
}

struct NamedIdeal {
  MonomialIdeal ideal;
  std::vector<std::string> names;
};

/// Generators are kept as listed so the caller can compare against a recomputation.
inline NamedIdeal ideal_from_json(const Json& j, std::vector<SquareFreeMonomial>* listed = nullptr) {
  const auto ambient = detail::get<std::size_t>(j, "ambient");
  auto names = detail::get<std::vector<std::string>>(j, "vars");
  if (names.size() != ambient) throw InputError("JSON: 'vars' length differs from 'ambient'");
  const auto index = detail::name_index(names);
  std::vector<SquareFreeMonomial> gens;
  for (const auto& g : detail::member(j, "gens")) gens.push_back(detail::parse_names(g, index));
  if (listed) *listed = gens;
  return {MonomialIdeal(ambient, gens), std::move(names)};
}

/// The certificate exactly as claimed; run verify_order on it to check.
inline QuotientOrder certificate_from_json(const Json& j) {
  const auto named = ideal_from_json(detail::member(j, "ideal"));
  const auto index = detail::name_index(named.names);
  std::vector<SquareFreeMonomial> sequence;
  for (const auto& m : detail::member(j, "order")) sequence.push_back(detail::parse_names(m, index));
  QuotientOrder q{named.ideal, order_indices(named.ideal, sequence), {}};
  for (const auto& c : detail::member(j, "colons")) q.colon_vars.push_back(detail::parse_names(c, index));
  if (q.colon_vars.size() != q.order.size()) throw InputError("JSON: one colon list per generator is required");
  return q;
}

// ---------------------------------------------------------------------------
// Command outputs

inline Json dual_document(const Graph& g) {
  Json out{{"kind", "ideal"}};
  out.update(ideal_to_json(alexander_dual_of_edge_ideal(g), g.labels()));
  out["graph"] = graph_to_json(g);
  return out;
}

inline Json covers_document(const Graph& g, const std::vector<VertexSet>& covers) {
  Json list = Json::array();
  for (auto c : covers) list.push_back(names_of(g.labels(), c));
  return {{"kind", "covers"}, {"graph", graph_to_json(g)}, {"covers", std::move(list)}, {"unmixed", is_unmixed(g)}};
}

inline Json betti_document(const Graph& g, std::optional<std::size_t> degree, const BettiTable& t,
                           const FieldSpec& field) {
  Json out{{"kind", "betti"}, {"field", field.spec()}, {"graph", graph_to_json(g)}};
  out["degree"] = degree ? Json(*degree) : Json(nullptr);
  out.update(betti_to_json(t, g.labels()));
  return out;
}

inline const char* status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::kFound: return "found";
    case SearchStatus::kNone: return "none";
    case SearchStatus::kBudgetExceeded: return "budget-exceeded";
  }
  return "?";
}

inline Json lin_quotients_document(const Graph& g, const DLQReport& r) {
  Json degrees = Json::array();
  for (const auto& d : r.degrees) {
    Json entry{{"degree", d.degree}, {"status", status_name(d.status)}};
    if (d.order) entry["certificate"] = certificate_to_json(*d.order, g.labels());
    degrees.push_back(std::move(entry));
  }
  return {{"kind", "lin-quotients"},
          {"graph", graph_to_json(g)},
          {"holds", r.holds},
          {"decided", r.decided},
          {"degrees", std::move(degrees)}};
}

inline Json evidence_to_json(const Evidence& e, const std::vector<std::string>& names) {
  Json payload = Json::object();
  if (const auto* certs = std::get_if<QuotientCertificates>(&e)) {
    payload["certificates"] = Json::array();
    for (const auto& q : certs->orders) payload["certificates"].push_back(certificate_to_json(q, names));
  } else if (const auto* lin = std::get_if<LinearResolutionCheck>(&e)) {
    payload["degrees"] = lin->degrees;
    payload["degrees_without_order"] = lin->degrees_without_order;
  } else if (const auto* w = std::get_if<BettiWitness>(&e)) {
    payload = {{"degree", w->degree}, {"i", w->i}, {"b", names_of(names, w->b)}, {"rank", w->rank}};
  } else if (const auto* s = std::get_if<SufficientCondition>(&e)) {
    payload = {{"condition", short_name(s->hit)}, {"whiskered", names_of(names, s->whiskered)}};
  }
  return {{"kind", evidence_kind(e)}, {"payload", std::move(payload)}};
}

inline Json verdict_document(const Graph& g, const Verdict& v, std::optional<double> millis = std::nullopt) {
  Json out{{"kind", "verdict"},
           {"property", to_string(v.property)},
           {"value", v.value},
           {"field", v.field.spec()},
           {"field_independent", v.field_independent},
           {"graph", graph_to_json(g)},
           {"evidence", evidence_to_json(v.evidence, g.labels())}};
  if (v.sequentially_cm) out["sequentially_cm"] = *v.sequentially_cm;
  if (v.unmixed) out["unmixed"] = *v.unmixed;
  if (v.mixed_covers)
    out["mixed_covers"] = {names_of(g.labels(), v.mixed_covers->first), names_of(g.labels(), v.mixed_covers->second)};
  if (v.no_order_but_linear) out["open_question_candidate"] = true;
  if (millis) out["timings"] = {{"total_ms", *millis}};
  return out;
}

inline Json whisker_document(const WhiskeredGraph& w) {
  Json pairs = Json::array();
  for (auto p : w.whiskers) pairs.push_back({p.base + 1, p.tip + 1});
  Json out{{"kind", "graph"}};
  out.update(graph_to_json(w.graph));
  out["whiskers"] = std::move(pairs);
  return out;
}

inline Json instance_to_json(const Instance& in) {
  return {{"graph", graph_to_json(in.graph)}, {"s", names_of(in.graph.labels(), in.s)}};
}

inline Json campaign_document(const CampaignReport& r) {
  const auto& c = r.campaign;
  Json fields = Json::array();
  for (const auto& f : c.fields) fields.push_back(f.spec());
  Json out{{"kind", "campaign"},
           {"theorem", to_string(c.id)},
           {"claim", describe(c.id)},
           {"trials", c.trials},
           {"max_n", c.max_n},
           {"seed", c.seed},
           {"fields", std::move(fields)}};
  out["only_trial"] = c.only_trial ? Json(*c.only_trial) : Json(nullptr);
  out["passed"] = r.passed;
  out["failed"] = r.failed;
  out["skipped"] = r.skipped;
  out["attempts"] = r.attempts;
  out["stats"] = Json::object();
  for (const auto& [key, value] : r.stats) out["stats"][key] = value;
  out["open_question_candidates"] = Json::array();
  for (const auto& cand : r.candidates)
    out["open_question_candidates"].push_back({{"trial", cand.trial},
                                               {"field", cand.field.spec()},
                                               {"graph", graph_to_json(cand.graph)},
                                               {"degrees_without_order", cand.degrees_without_order}});
  out["failures"] = Json::array();
  for (const auto& f : r.failures)
    out["failures"].push_back({{"trial", f.trial},
                               {"trial_seed", f.trial_seed},
                               {"field", f.field.spec()},
                               {"detail", f.detail},
                               {"instance", instance_to_json(f.instance)},
                               {"shrunk", instance_to_json(f.shrunk)},
                               {"rerun", f.rerun}});
  out["pass"] = r.ok();
  return out;
}

inline Json fixture_document(const FixtureResult& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name}, {"expected", c.expected}, {"observed", c.observed}, {"pass", c.pass}});
  return {{"kind", "fixture"}, {"fixture", to_string(r.id)}, {"checks", std::move(checks)}, {"pass", r.pass()}};
}

// ---------------------------------------------------------------------------
// Independent re-checking of emitted documents

struct VerifyResult {
  bool ok = true;
  std::vector<std::string> notes;

  void fail(std::string why) {
    ok = false;
    notes.push_back("FAIL: " + std::move(why));
  }
  void pass(std::string what) { notes.push_back("ok: " + std::move(what)); }
};

namespace detail {

inline void check_certificate(const Json& j, VerifyResult& r, const std::string& what,
                              const std::optional<MonomialIdeal>& expected_ideal = std::nullopt) {
  const auto q = certificate_from_json(j);
  if (expected_ideal && !(q.ideal == *expected_ideal)) {
    r.fail(what + ": certified ideal is not the one claimed");
    return;
  }
  if (verify_order(q))
    r.pass(what + ": linear quotients order re-verified");
  else
    r.fail(what + ": order or colon variables do not verify");
}

inline void verify_verdict(const Json& doc, VerifyResult& r) {
  const auto g = graph_from_json(member(doc, "graph"));
  const auto field = FieldSpec::parse(get<std::string>(doc, "field"));
  const auto property = get<std::string>(doc, "property");
  const bool value = get<bool>(doc, "value");
  const auto& evidence = member(doc, "evidence");
  const auto kind = get<std::string>(evidence, "kind");
  const auto& payload = member(evidence, "payload");
  const auto all = g.vertices();
  const auto index = name_index(g.labels());
  bool scm = value;
  if (property == "CM") scm = doc.contains("sequentially_cm") ? get<bool>(doc, "sequentially_cm") : value;
  else if (property != "SCM") throw InputError("JSON: property must be SCM or CM");

  if (kind == "zero-ideal-convention") {
    if (g.edge_count() == 0 && scm) r.pass("graph has no edges; SCM by convention");
    else r.fail("zero-ideal convention claimed for a graph with edges");
  } else if (kind == "quotient-certificates") {
    const auto& certs = member(payload, "certificates");
    std::size_t d = min_vertex_cover_size(g, all);
    if (certs.size() != all.size() - d + 1) r.fail("expected one certificate per degree " + std::to_string(d) + ".." +
                                                    std::to_string(all.size()));
    for (const auto& c : certs) {
      check_certificate(c, r, "degree " + std::to_string(d), dual_component(g, all, d));
      ++d;
    }
    if (!scm) r.fail("certificates prove SCM but the verdict says otherwise");
  } else if (kind == "linear-resolution-check") {
    bool linear = true;
    for (auto d = min_vertex_cover_size(g, all); d <= all.size(); ++d)
      linear = linear && has_linear_resolution(dual_component(g, all, d), field);
    if (linear && scm) r.pass("every dual component has a linear resolution over " + field.display());
    else r.fail("linear-resolution claim does not recompute");
  } else if (kind == "betti-witness") {
    const auto d = get<std::size_t>(payload, "degree");
    const auto i = get<std::size_t>(payload, "i");
    const auto b = parse_names(member(payload, "b"), index);
    const auto rank = betti_number_at(dual_component(g, all, d), i, b, field);
    if (rank != 0 && rank == get<std::size_t>(payload, "rank") && b.size() != d + i && !scm)
      r.pass("nonlinear syzygy beta_" + std::to_string(i) + "," + std::to_string(b.size()) + " = " +
             std::to_string(rank) + " recomputed over " + field.display());
    else r.fail("Betti witness does not recompute");
  } else if (kind == "sufficient-condition") {
    if (is_sequentially_cm(g, field).value == scm) r.pass("re-decided");
    else r.fail("re-decided value differs");
  } else {
    throw InputError("JSON: unknown evidence kind '" + kind + "'");
  }

  if (property == "CM") {
    const bool unmixed = is_unmixed(g);
    if (doc.contains("mixed_covers")) {
      const auto& pair = member(doc, "mixed_covers");
      const auto a = parse_names(pair.at(0), index);
      const auto c = parse_names(pair.at(1), index);
      const auto covers = minimal_vertex_covers(g);
      const auto is_min = [&](VertexSet s) { return std::find(covers.begin(), covers.end(), s) != covers.end(); };
      if (is_min(a) && is_min(c) && a.size() != c.size()) r.pass("two minimal covers of different sizes");
      else r.fail("mixed-cover witness is not two minimal covers of different sizes");
    }
    if (value != (scm && unmixed)) r.fail("CM value is not SCM and unmixed");
    else r.pass("CM = SCM and unmixed");
  }
}

}  // namespace detail

inline VerifyResult verify_document(const Json& doc) {
  VerifyResult r;
  const auto kind = detail::get<std::string>(doc, "kind");
  if (kind == "certificate") {
    detail::check_certificate(doc, r, "certificate");
  } else if (kind == "ideal") {
    std::vector<SquareFreeMonomial> listed;
    const auto named = ideal_from_json(doc, &listed);
    if (named.ideal.generators() != listed) r.fail("generators are not minimal and in canonical order");
    if (doc.contains("graph")) {
      const auto g = graph_from_json(doc.at("graph"));
      if (alexander_dual_of_edge_ideal(g) == named.ideal) r.pass("ideal is the Alexander dual of the graph");
      else r.fail("ideal is not the Alexander dual of the graph");
    } else {
      r.pass("ideal is well formed");
    }
  } else if (kind == "covers" || kind == "covers-of-size") {
    const auto g = graph_from_json(detail::member(doc, "graph"));
    const auto index = detail::name_index(g.labels());
    std::vector<VertexSet> claimed;
    for (const auto& c : detail::member(doc, "covers")) claimed.push_back(detail::parse_names(c, index));
    if (kind == "covers-of-size") {
      if (claimed == vertex_covers_of_size(g, detail::get<std::size_t>(doc, "size")))
        r.pass("vertex covers of the stated size recomputed");
      else r.fail("covers differ from the recomputation");
    } else if (claimed == minimal_vertex_covers(g)) r.pass("minimal vertex covers recomputed");
    else r.fail("covers differ from the recomputation");
  } else if (kind == "betti") {
    const auto g = graph_from_json(detail::member(doc, "graph"));
    const auto field = FieldSpec::parse(detail::get<std::string>(doc, "field"));
    auto ideal = alexander_dual_of_edge_ideal(g);
    if (!doc.at("degree").is_null()) ideal = squarefree_degree_component(ideal, doc.at("degree").get<std::size_t>());
    const auto expected = betti_to_json(betti_numbers(ideal, field), g.labels());
    if (expected["total"] == doc.at("total") && expected["multigraded"] == doc.at("multigraded"))
      r.pass("Betti table recomputed over " + field.display());
    else r.fail("Betti table differs from the recomputation");
  } else if (kind == "lin-quotients") {
    const auto g = graph_from_json(detail::member(doc, "graph"));
    bool all_found = true;
    for (const auto& d : detail::member(doc, "degrees")) {
      const auto degree = detail::get<std::size_t>(d, "degree");
      if (d.contains("certificate"))
        detail::check_certificate(d.at("certificate"), r, "degree " + std::to_string(degree),
                                  dual_component(g, g.vertices(), degree));
      else all_found = false;
    }
    if (detail::get<bool>(doc, "holds") && !all_found) r.fail("claims DLQ with a degree left uncertified");
  } else if (kind == "verdict") {
    detail::verify_verdict(doc, r);
  } else {
    throw InputError("JSON: cannot verify documents of kind '" + kind + "'");
  }
  if (r.notes.empty()) r.fail("nothing to check");
  return r;
}

}  // namespace wscm::json

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wscm/decide.hpp"
#include "wscm/format.hpp"
#include "wscm/graph_io.hpp"
#include "wscm/harness.hpp"
#include "wscm/json_io.hpp"

using namespace wscm;

namespace {

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kInputError = 2;

struct GraphOptions {
  std::string path;
  std::string whisker;
  std::string del;
  bool json = false;
  bool timings = false;
  std::string field;
};

std::string read_all(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

Graph load_graph(const GraphOptions& o) {
  auto g = parse_graph(read_all(o.path));
  if (!o.whisker.empty()) g = add_whiskers(g, parse_vertex_list(o.whisker, g.vertex_count())).graph;
  if (!o.del.empty()) g = delete_vertices(g, parse_vertex_list(o.del, g.vertex_count()));
  return g;
}

std::vector<FieldSpec> parse_fields(const std::string& text) {
  std::vector<FieldSpec> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(FieldSpec::parse(item));
  if (out.empty()) throw InputError("empty field list");
  return out;
}

std::string default_field() {
  const char* env = std::getenv("WSCM_FIELD");
  return env && *env ? env : "2";
}

void add_graph_options(CLI::App* cmd, GraphOptions& o, bool with_field) {
  cmd->add_option("graph", o.path, "graph file ('n m' header then 1-based edges; '-' reads stdin)")->required();
  cmd->add_option("--whisker", o.whisker, "attach a whisker at each listed vertex (1-based, applied first)");
  cmd->add_option("--delete", o.del, "delete the listed vertices (1-based, after whiskering)");
  cmd->add_flag("--json", o.json, "print JSON");
  cmd->add_flag("--timings", o.timings, "report wall-clock time");
  if (with_field)
    cmd->add_option("--field", o.field, "q, 2, 3 or p:<prime>; comma list for several (default $WSCM_FIELD or 2)");
}

void print_json(const json::Json& j) { std::cout << j.dump(2) << '\n'; }

class Stopwatch {
 public:
  double millis() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void print_timing(const GraphOptions& o, const Stopwatch& clock) {
  if (o.timings && !o.json) std::cout << "time: " << clock.millis() << " ms\n";
}

std::string evidence_text(const Graph& g, const Verdict& v) {
  const auto& names = g.labels();
  if (std::holds_alternative<ZeroIdealConvention>(v.evidence)) return "no edges, zero ideal, field-independent";
  if (std::holds_alternative<QuotientCertificates>(v.evidence)) return "dual linear quotients, field-independent";
  if (const auto* lin = std::get_if<LinearResolutionCheck>(&v.evidence)) {
    std::string out = "every dual component has a linear resolution over " + v.field.display();
    if (!lin->degrees_without_order.empty()) {
      out += "; no quotient order in degree";
      for (auto d : lin->degrees_without_order) out += " " + std::to_string(d);
    }
    return out;
  }
  if (const auto* w = std::get_if<BettiWitness>(&v.evidence))
    return "nonlinear syzygy beta_" + std::to_string(w->i) + "," + std::to_string(w->b.size()) + " = " +
           std::to_string(w->rank) + " at multidegree " + format_vertex_set(names, w->b) + " in the degree-" +
           std::to_string(w->degree) + " dual component, over " + v.field.display();
  if (const auto* s = std::get_if<SufficientCondition>(&v.evidence)) return to_string(s->hit);
  return "?";
}

std::string verdict_line(const Graph& g, const Verdict& v) {
  std::string out = std::string(to_string(v.property)) + ": " + (v.value ? "true" : "false") + " (";
  if (v.property == Property::kCohenMacaulay) {
    if (v.mixed_covers) {
      out += "mixed: minimal covers " + format_vertex_set(g.labels(), v.mixed_covers->first) + " and " +
             format_vertex_set(g.labels(), v.mixed_covers->second);
      out += v.sequentially_cm.value_or(false) ? "; SCM: " : "; not SCM: ";
    } else {
      out += "unmixed; ";
      out += v.sequentially_cm.value_or(false) ? "SCM: " : "not SCM: ";
    }
  }
  out += evidence_text(g, v) + ")";
  if (v.no_order_but_linear) out += " [open-question candidate]";
  return out;
}

int run_verdict(const GraphOptions& o, Property property) {
  const Stopwatch clock;
  const auto g = load_graph(o);
  const auto fields = parse_fields(o.field.empty() ? default_field() : o.field);
  bool all_hold = true;
  json::Json docs = json::Json::array();
  for (const auto& field : fields) {
    const Stopwatch one;
    const auto v = property == Property::kSequentiallyCM ? is_sequentially_cm(g, field) : is_cm(g, field);
    all_hold = all_hold && v.value;
    if (o.json)
      docs.push_back(json::verdict_document(g, v, o.timings ? std::optional<double>(one.millis()) : std::nullopt));
    else
      std::cout << verdict_line(g, v) << '\n';
  }
  if (o.json) print_json(docs.size() == 1 ? docs[0] : docs);
  print_timing(o, clock);
  return all_hold ? kHolds : kFails;
}

int run_dual(const GraphOptions& o) {
  const Stopwatch clock;
  const auto g = load_graph(o);
  if (o.json) {
    print_json(json::dual_document(g));
  } else {
    std::cout << format_ideal(g.labels(), alexander_dual_of_edge_ideal(g)) << '\n';
  }
  print_timing(o, clock);
  return kHolds;
}

int run_covers(const GraphOptions& o, std::optional<std::size_t> size) {
  const Stopwatch clock;
  const auto g = load_graph(o);
  const auto covers = size ? vertex_covers_of_size(g, *size) : minimal_vertex_covers(g);
  if (o.json) {
    auto doc = json::covers_document(g, covers);
    if (size) {
      doc["kind"] = "covers-of-size";
      doc["size"] = *size;
    }
    print_json(doc);
  } else {
    for (auto c : covers) std::cout << format_vertex_set(g.labels(), c) << '\n';
    if (!size) std::cout << "unmixed: " << (is_unmixed(g) ? "yes" : "no") << '\n';
  }
  print_timing(o, clock);
  return kHolds;
}

int run_betti(const GraphOptions& o, std::optional<std::size_t> degree) {
  const Stopwatch clock;
  const auto g = load_graph(o);
  auto ideal = alexander_dual_of_edge_ideal(g);
  if (degree) ideal = squarefree_degree_component(ideal, *degree);
  const auto fields = parse_fields(o.field.empty() ? default_field() : o.field);
  json::Json docs = json::Json::array();
  for (const auto& field : fields) {
    const auto table = betti_numbers(ideal, field);
    if (o.json) {
      docs.push_back(json::betti_document(g, degree, table, field));
    } else {
      std::cout << "Betti table over " << field.display() << " of " << format_ideal(g.labels(), ideal) << '\n';
      std::cout << format_betti_table(table);
    }
  }
  if (o.json) print_json(docs.size() == 1 ? docs[0] : docs);
  print_timing(o, clock);
  return kHolds;
}

int run_lin_quotients(const GraphOptions& o) {
  const Stopwatch clock;
  const auto g = load_graph(o);
  const auto report = has_dual_linear_quotients(g);
  if (o.json) {
    print_json(json::lin_quotients_document(g, report));
  } else {
    for (const auto& d : report.degrees) {
      std::cout << "degree " << d.degree << ": ";
      if (d.order) {
        std::cout << format_ideal(g.labels(), d.order->sequence()) << "  colons:";
        for (auto c : d.order->colon_vars) std::cout << ' ' << format_vertex_set(g.labels(), c);
      } else {
        std::cout << (d.status == SearchStatus::kBudgetExceeded ? "search budget exceeded" : "no order");
      }
      std::cout << '\n';
    }
    std::cout << "dual linear quotients: " << (report.holds ? "yes" : "no") << '\n';
  }
  print_timing(o, clock);
  return report.holds ? kHolds : kFails;
}

int run_whisker(const GraphOptions& o, const std::string& at) {
  const auto g = load_graph(o);
  const auto s = parse_vertex_list(at, g.vertex_count());
  const auto w = add_whiskers(g, s);
  const auto hit = sufficient_scm(g, s);
  if (o.json) {
    auto doc = json::whisker_document(w);
    doc["sufficient_condition"] = hit ? json::Json(short_name(*hit)) : json::Json(nullptr);
    print_json(doc);
  } else {
    std::cout << "# whiskers (base tip):";
    for (auto p : w.whiskers) std::cout << ' ' << p.base + 1 << '-' << p.tip + 1;
    std::cout << "\n# sufficient condition for SCM: " << (hit ? to_string(*hit) : "none applies") << '\n';
    std::cout << format_graph(w.graph);
  }
  return kHolds;
}

int run_verify(const std::string& path) {
  json::Json doc;
  try {
    doc = json::Json::parse(read_all(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("JSON parse error: ") + e.what());
  }
  std::vector<json::Json> docs;
  if (doc.is_array()) docs.assign(doc.begin(), doc.end());
  else docs.push_back(doc);
  bool ok = true;
  for (const auto& d : docs) {
    const auto r = json::verify_document(d);
    for (const auto& note : r.notes) std::cout << note << '\n';
    ok = ok && r.ok;
  }
  std::cout << (ok ? "verified" : "REJECTED") << '\n';
  return ok ? kHolds : kFails;
}

struct TheoremOptions {
  std::string id;
  std::size_t trials = 100;
  std::size_t max_n = 7;
  std::uint64_t seed = 1;
  std::string field;
  std::optional<std::size_t> only_trial;
  std::optional<std::size_t> exhaustive;
  bool json = false;
};

int run_verify_theorem(const TheoremOptions& o) {
  const auto id = parse_theorem_id(o.id);
  if (o.exhaustive) {
    if (id != TheoremId::kT37) throw InputError("--exhaustive applies to T3.7 only");
    const auto r = run_exhaustive_equivalence(*o.exhaustive);
    if (o.json) {
      json::Json doc{{"kind", "exhaustive"},
                     {"theorem", "T3.7"},
                     {"max_n", r.max_n},
                     {"pairs", r.pairs},
                     {"both_true", r.both_true},
                     {"both_false", r.both_false},
                     {"disagreements", r.disagreements},
                     {"literal_disagreements", r.literal_disagreements}};
      if (r.first_literal_disagreement)
        doc["first_literal_disagreement"] = json::instance_to_json(*r.first_literal_disagreement);
      doc["pass"] = r.ok();
      print_json(doc);
    } else {
      std::cout << "exhaustive T3.7 over all labelled graphs with at most " << r.max_n << " vertices and every S\n"
                << "pairs " << r.pairs << ", both sides true " << r.both_true << ", both false " << r.both_false
                << ", disagreements " << r.disagreements << '\n'
                << "reading over all induced subgraphs of G u W(S): " << r.literal_disagreements
                << " disagreements\n";
      if (r.first_literal_disagreement)
        std::cout << "  first: G " << format_graph_inline(r.first_literal_disagreement->graph) << "  S "
                  << format_index_list(r.first_literal_disagreement->s) << '\n';
      std::cout << "result: " << (r.ok() ? "PASS" : "FAIL") << '\n';
    }
    return r.ok() ? kHolds : kFails;
  }
  Campaign c;
  c.id = id;
  c.trials = o.trials;
  c.max_n = o.max_n;
  c.seed = o.seed;
  c.fields = parse_fields(o.field.empty() ? default_field() : o.field);
  c.only_trial = o.only_trial;
  const auto report = run_campaign(c);
  if (o.json) print_json(json::campaign_document(report));
  else std::cout << format_campaign_report(report);
  return report.ok() ? kHolds : kFails;
}

int run_fixtures(const std::string& which, const std::string& field_text, bool as_json) {
  std::vector<FixtureId> ids;
  if (which == "all") ids = all_fixture_ids();
  else ids.push_back(parse_fixture_id(which));
  const auto field = parse_fields(field_text.empty() ? default_field() : field_text);
  bool ok = true;
  json::Json docs = json::Json::array();
  for (auto id : ids) {
    for (const auto& f : field) {
      const auto r = run_fixture(id, f);
      ok = ok && r.pass();
      if (as_json) {
        auto doc = json::fixture_document(r);
        doc["field"] = f.spec();
        docs.push_back(std::move(doc));
      } else {
        std::cout << format_fixture_result(r);
      }
    }
  }
  if (as_json) print_json(docs.size() == 1 ? docs[0] : docs);
  return ok ? kHolds : kFails;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sequentially Cohen-Macaulay tests for edge ideals of graphs and their whiskerings"};
  app.require_subcommand(1);

  GraphOptions go;
  std::optional<std::size_t> size;
  std::optional<std::size_t> degree;
  std::string at;
  std::string verify_path;
  TheoremOptions to;
  std::string fixture_id;

  auto* dual = app.add_subcommand("dual", "minimal generators of the Alexander dual of the edge ideal");
  add_graph_options(dual, go, false);
  auto* covers = app.add_subcommand("covers", "minimal vertex covers, or all covers of a given size");
  add_graph_options(covers, go, false);
  covers->add_option("--size", size, "list every vertex cover with this many vertices");
  auto* betti = app.add_subcommand("betti", "graded Betti numbers of the dual");
  add_graph_options(betti, go, true);
  betti->add_option("--degree", degree, "use the square-free degree-d component of the dual");
  auto* lin = app.add_subcommand("lin-quotients", "linear quotients orders for every component of the dual");
  add_graph_options(lin, go, false);
  auto* scm = app.add_subcommand("is-scm", "decide sequential Cohen-Macaulayness");
  add_graph_options(scm, go, true);
  auto* cm = app.add_subcommand("is-cm", "decide Cohen-Macaulayness");
  add_graph_options(cm, go, true);
  auto* whisker = app.add_subcommand("whisker", "print G u W(S) as a graph file");
  add_graph_options(whisker, go, false);
  whisker->add_option("--at", at, "S, the 1-based vertices to whisker")->required();
  auto* verify = app.add_subcommand("verify", "re-check a JSON document emitted by this tool");
  verify->add_option("file", verify_path, "JSON file, '-' reads stdin")->required();
  auto* theorem = app.add_subcommand("verify-theorem", "randomized verification campaign");
  theorem->add_option("id", to.id, "T3.2, T3.3, T3.7, T4.1, C3.4, C3.5, C3.6 or C4.2")->required();
  theorem->add_option("--trials", to.trials, "number of trials")->check(CLI::PositiveNumber);
  theorem->add_option("--max-n", to.max_n, "largest vertex count of G")->check(CLI::Range(1, 32));
  theorem->add_option("--seed", to.seed, "campaign seed");
  theorem->add_option("--field", to.field, "q, 2, 3 or p:<prime>; comma list for several");
  theorem->add_option("--only-trial", to.only_trial, "rerun a single trial index");
  theorem->add_option("--exhaustive", to.exhaustive, "T3.7 only: every labelled graph up to this many vertices")
      ->check(CLI::Range(0, 6));
  theorem->add_flag("--json", to.json, "print JSON");
  auto* fixture = app.add_subcommand("fixture", "recompute a worked example and compare with the expected data");
  fixture->add_option("id", fixture_id, "EX3.8, EX3.9, EX4.3, C5-ORDER, VILLARREAL-EDGE or all")->required();
  fixture->add_option("--field", go.field, "q, 2, 3 or p:<prime>; comma list for several");
  fixture->add_flag("--json", go.json, "print JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (dual->parsed()) return run_dual(go);
    if (covers->parsed()) return run_covers(go, size);
    if (betti->parsed()) return run_betti(go, degree);
    if (lin->parsed()) return run_lin_quotients(go);
    if (scm->parsed()) return run_verdict(go, Property::kSequentiallyCM);
    if (cm->parsed()) return run_verdict(go, Property::kCohenMacaulay);
    if (whisker->parsed()) return run_whisker(go, at);
    if (verify->parsed()) return run_verify(verify_path);
    if (theorem->parsed()) return run_verify_theorem(to);
    if (fixture->parsed()) return run_fixtures(fixture_id, go.field, go.json);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

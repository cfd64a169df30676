#include <gtest/gtest.h>

#include "wscm/fixtures.hpp"
#include "wscm/json_io.hpp"

using namespace wscm;
using json::Json;

TEST(JsonIdeal, SpecShape) {
  const auto g = fixtures::cycle(4);
  const auto j = json::ideal_to_json(alexander_dual_of_edge_ideal(g), g.labels());
  EXPECT_EQ(j.dump(), R"({"ambient":4,"vars":["x1","x2","x3","x4"],"gens":[["x1","x3"],["x2","x4"]]})");
}

TEST(JsonIdeal, RoundTrip) {
  const auto g = fixtures::square_with_tail();
  const auto ideal = alexander_dual_of_edge_ideal(g);
  const auto back = json::ideal_from_json(json::ideal_to_json(ideal, g.labels()));
  EXPECT_EQ(back.ideal, ideal);
  EXPECT_EQ(back.names, g.labels());
}

TEST(JsonIdeal, RejectsBadInput) {
  EXPECT_THROW(json::ideal_from_json(Json::parse(R"({"ambient":2,"vars":["a"],"gens":[]})")), InputError);
  EXPECT_THROW(json::ideal_from_json(Json::parse(R"({"ambient":2,"vars":["a","b"],"gens":[["c"]]})")), InputError);
  EXPECT_THROW(json::ideal_from_json(Json::parse(R"({"ambient":2,"vars":["a","a"],"gens":[]})")), InputError);
  EXPECT_THROW(json::ideal_from_json(Json::parse(R"({"vars":[],"gens":[]})")), InputError);
}

TEST(JsonGraph, RoundTrip) {
  const auto g = fixtures::square_with_pendant();
  const auto back = json::graph_from_json(json::graph_to_json(g));
  EXPECT_EQ(back.edges(), g.edges());
  EXPECT_EQ(back.labels(), g.labels());
}

TEST(JsonCertificate, RoundTripVerifies) {
  const auto ideal = alexander_dual_of_edge_ideal(fixtures::cycle(5));
  const auto q = find_order(ideal);
  ASSERT_TRUE(q);
  const auto doc = json::certificate_document(*q, fixtures::cycle(5).labels());
  EXPECT_TRUE(json::verify_document(doc).ok);
  const auto back = json::certificate_from_json(doc);
  EXPECT_EQ(back.order, q->order);
  EXPECT_EQ(back.colon_vars, q->colon_vars);
}

TEST(JsonCertificate, TamperedColonsFail) {
  const auto g = fixtures::cycle(5);
  const auto q = find_order(alexander_dual_of_edge_ideal(g));
  ASSERT_TRUE(q);
  auto doc = json::certificate_document(*q, g.labels());
  doc["colons"][2] = Json::array({"x1", "x2", "x3"});
  EXPECT_FALSE(json::verify_document(doc).ok);
  doc = json::certificate_document(*q, g.labels());
  std::swap(doc["order"][0], doc["order"][4]);
  EXPECT_FALSE(json::verify_document(doc).ok);
}

TEST(JsonVerdict, ScmTrueRoundTrip) {
  const auto g = fixtures::cycle(5);
  const auto v = is_sequentially_cm(g, FieldSpec::prime(2));
  const auto doc = json::verdict_document(g, v);
  EXPECT_EQ(doc["evidence"]["kind"], "quotient-certificates");
  const auto r = json::verify_document(Json::parse(doc.dump()));
  EXPECT_TRUE(r.ok);
}

TEST(JsonVerdict, ScmFalseWitnessRechecks) {
  const auto g = fixtures::cycle(4);
  const auto v = is_sequentially_cm(g, FieldSpec::rationals());
  auto doc = json::verdict_document(g, v);
  EXPECT_EQ(doc["evidence"]["kind"], "betti-witness");
  EXPECT_EQ(doc["field"], "q");
  EXPECT_TRUE(json::verify_document(doc).ok);
  doc["evidence"]["payload"]["rank"] = 7;
  EXPECT_FALSE(json::verify_document(doc).ok);
}

TEST(JsonVerdict, CmWithMixedCovers) {
  const auto g = fixtures::one_sided_whiskered_edge();
  const auto v = is_cm(g, FieldSpec::prime(2));
  ASSERT_FALSE(v.value);
  const auto doc = json::verdict_document(g, v);
  EXPECT_TRUE(doc.contains("mixed_covers"));
  EXPECT_TRUE(json::verify_document(doc).ok);
}

TEST(JsonVerdict, FlippedValueFails) {
  const auto g = fixtures::cycle(5);
  auto doc = json::verdict_document(g, is_sequentially_cm(g, FieldSpec::prime(2)));
  doc["value"] = false;
  EXPECT_FALSE(json::verify_document(doc).ok);
}

TEST(JsonVerdict, EdgelessConvention) {
  const Graph g(3);
  const auto doc = json::verdict_document(g, is_sequentially_cm(g, FieldSpec::prime(2)));
  EXPECT_EQ(doc["evidence"]["kind"], "zero-ideal-convention");
  EXPECT_TRUE(json::verify_document(doc).ok);
}

TEST(JsonVerdict, TimingsOnlyWhenAsked) {
  const auto g = fixtures::cycle(5);
  const auto v = is_sequentially_cm(g, FieldSpec::prime(2));
  EXPECT_FALSE(json::verdict_document(g, v).contains("timings"));
  EXPECT_TRUE(json::verdict_document(g, v, 1.5).contains("timings"));
}

TEST(JsonBetti, MultigradedEntriesRecheck) {
  const auto g = fixtures::cycle(5);
  const auto t = betti_numbers(alexander_dual_of_edge_ideal(g), FieldSpec::prime(3));
  auto doc = json::betti_document(g, std::nullopt, t, FieldSpec::prime(3));
  EXPECT_EQ(doc["multigraded"].size(), t.multigraded.size());
  EXPECT_TRUE(json::verify_document(doc).ok);
  doc["total"][0]["value"] = 99;
  EXPECT_FALSE(json::verify_document(doc).ok);
}

TEST(JsonCovers, Recheck) {
  const auto g = fixtures::square_with_pendant();
  auto doc = json::covers_document(g, minimal_vertex_covers(g));
  EXPECT_FALSE(doc["unmixed"].get<bool>());
  EXPECT_TRUE(json::verify_document(doc).ok);
  doc["covers"].erase(0);
  EXPECT_FALSE(json::verify_document(doc).ok);
}

TEST(JsonDual, Recheck) {
  const auto doc = json::dual_document(fixtures::square_with_tail());
  EXPECT_TRUE(json::verify_document(doc).ok);
  auto bad = doc;
  bad["gens"].erase(0);
  EXPECT_FALSE(json::verify_document(bad).ok);
}

TEST(JsonLinQuotients, Recheck) {
  const auto g = fixtures::cycle(5);
  const auto doc = json::lin_quotients_document(g, has_dual_linear_quotients(g));
  EXPECT_TRUE(doc["holds"].get<bool>());
  EXPECT_TRUE(json::verify_document(doc).ok);
}

TEST(JsonCampaign, ReproducibleDump) {
  Campaign c;
  c.id = TheoremId::kC34;
  c.trials = 10;
  c.max_n = 5;
  const auto a = json::campaign_document(run_campaign(c)).dump(2);
  const auto b = json::campaign_document(run_campaign(c)).dump(2);
  EXPECT_EQ(a, b);
  EXPECT_NE(a.find("\"pass\": true"), std::string::npos);
}

TEST(JsonVerify, UnknownKindThrows) {
  EXPECT_THROW(json::verify_document(Json::parse(R"({"kind":"poem"})")), InputError);
  EXPECT_THROW(json::verify_document(Json::parse(R"({"nokind":1})")), InputError);
}

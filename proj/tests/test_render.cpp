#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qpb/render.hpp"

using qpb::BundleSpec;
using qpb::Json;

TEST_CASE("relation text rendering") {
  CHECK(qpb::render_relations_text(
            qpb::relations_split(BundleSpec::split(2, {1, 1, 2}))) ==
        "f1: h^3 = (xi - 2 h) q^2\nf2: (xi - h)^2 (xi - 2 h) = q^3\n");
  CHECK(qpb::render_relations_text(
            qpb::relations_split(BundleSpec::split(2, {1, 1, 1}))) ==
        "f1: h^3 = q^3\nf2: (xi - h)^3 = q^3\n");
  CHECK(qpb::render_relations_text(qpb::relations_tangent(3)) ==
        "f1: h^4 = xi q^3\nf2: xi^3 - 4 h xi^2 + 6 h^2 xi - 4 h^3 = 0\n");
  CHECK(qpb::render_relations_text(qpb::relations_tangent(2)) ==
        "f1: h^3 = xi q^2\nf2: xi^2 - 3 h xi + 3 h^2 = 2 q^2\n");
}

TEST_CASE("template text rendering shows holes by name") {
  std::string text = qpb::render_template_text(
      qpb::relations_template_general(BundleSpec::tangent(2)));
  CHECK(text.find("a(0,0) q^3") != std::string::npos);
  CHECK(text.find("a(1,0) h q^2") != std::string::npos);
  CHECK(text.find("xi q^2") != std::string::npos);
  CHECK(text.find("b(0,0) q^2") != std::string::npos);
}

TEST_CASE("JSON output is stable under a parse/re-render round trip") {
  std::vector<std::string> payloads;
  payloads.push_back(qpb::dump_json(
      qpb::relations_json(qpb::relations_split(BundleSpec::split(2, {1, 1, 2})))));
  payloads.push_back(qpb::dump_json(
      qpb::template_json(qpb::relations_template_general(BundleSpec::tangent(2)))));
  BundleSpec s = BundleSpec::split(3, {1, 1, 2});
  payloads.push_back(qpb::dump_json(
      qpb::hypothesis_json(s, qpb::classify_hypotheses(s))));
  qpb::GwQuery query{s, {0, 1}, {{0, 1}, {0, 2}, {3, 2}}};
  payloads.push_back(
      qpb::dump_json(qpb::gw_json(query, qpb::gw_lookup(query))));

  for (const std::string& text : payloads) {
    Json parsed = Json::parse(text);
    CHECK(qpb::dump_json(parsed) == text);
  }
}

TEST_CASE("integer coefficients are serialized as decimal strings") {
  Json j = qpb::relations_json(qpb::relations_split(BundleSpec::split(2, {1, 1, 2})));
  for (const auto& term : j["f1"]["rhs"]) CHECK(term["coeff"].is_string());
  CHECK(j["f1"]["rhs"][0]["coeff"] == "1");
  CHECK(j["f1"]["rhs"][1]["coeff"] == "-2");
}

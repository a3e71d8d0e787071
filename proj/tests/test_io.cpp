#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace bracelab;
using testutil::el;

TEST_CASE("document round trip is byte stable", "[io]") {
  FiniteBrace e013 = family_brace({Family::E0, 1, 3});
  json meta;
  meta["construction"] = "family";
  meta["family"] = "E0";
  meta["m"] = 1;
  meta["p"] = 3;
  BraceDocument doc = document_from_brace(e013, meta);
  std::string once = document_to_json(doc).dump(2);

  BraceDocument reloaded = load_document(json::parse(once));
  std::string twice = document_to_json(
                          document_from_brace(reloaded.brace, reloaded.meta))
                          .dump(2);
  CHECK(once == twice);
  CHECK(reloaded.brace.order() == 9);
  CHECK(reloaded.labels[el(e013, {0, 1})] == "(0,1)");
}

TEST_CASE("document loading validates", "[io]") {
  json j;
  j["order"] = 2;
  j["add"] = {{0, 1}, {1, 0}};
  j["mul"] = {{0, 1}, {1, 1}};  // not a group
  CHECK_THROWS_AS(load_document(j), validation_error);

  json incomplete;
  incomplete["order"] = 2;
  CHECK_THROWS_AS(load_document(incomplete), std::invalid_argument);

  json bad_labels;
  bad_labels["order"] = 2;
  bad_labels["add"] = {{0, 1}, {1, 0}};
  bad_labels["mul"] = {{0, 1}, {1, 0}};
  bad_labels["labels"] = {"a"};
  CHECK_THROWS_AS(load_document(bad_labels), std::invalid_argument);
}

TEST_CASE("form files", "[io]") {
  json j;
  j["p"] = 5;
  j["dim"] = 2;
  j["matrix"] = {{2, 0}, {0, 1}};
  BilinearForm phi = load_form(j);
  CHECK(phi.p() == 5);
  CHECK(phi.at(0, 0) == 2);
  CHECK(form_to_json(phi) == j);

  json bad = j;
  bad["dim"] = 3;
  CHECK_THROWS_AS(load_form(bad), std::invalid_argument);
}

TEST_CASE("a form document matches the family construction", "[io]") {
  BilinearForm phi(5, {{2, 0}, {0, 1}});
  FiniteBrace from_form = brace_from_form(phi);
  FiniteBrace fam = family_brace({Family::E1, 2, 5});
  json a = document_to_json(document_from_brace(from_form));
  json b = document_to_json(document_from_brace(fam));
  CHECK(a.at("add") == b.at("add"));
  CHECK(a.at("mul") == b.at("mul"));
  CHECK(a.at("labels") == b.at("labels"));
}

TEST_CASE("analysis report fields", "[io]") {
  FiniteBrace e013 = family_brace({Family::E0, 1, 3});
  AnalysisReport rep = analyze_brace(e013);
  CHECK(rep.order == 9);
  CHECK(rep.additive_shape == std::vector<int>{3, 3});
  CHECK_FALSE(rep.abelian);
  CHECK(rep.dedekind.dedekind);
  CHECK(rep.nilpotency.centrally_nilpotent);
  CHECK(rep.nilpotency.central_level == 2);
  REQUIRE(rep.extraspecial.has_value());
  CHECK(rep.extraspecial->strong);
  REQUIRE(rep.classification.has_value());
  CHECK(rep.classification->family == Family::E0);
  CHECK(rep.classification->p == 3);
  CHECK(rep.ybe.all());

  json j = report_to_json(rep);
  CHECK(j.at("dedekind").at("dedekind") == true);
  CHECK(j.at("nilpotency").at("central_level") == 2);
  CHECK(j.at("extraspecial").at("family") == "E0");

  BraceDocument doc = document_from_brace(e013);
  std::string text = report_to_text(rep, doc.labels);
  CHECK(text.find("dedekind: true") != std::string::npos);
  CHECK(text.find("classification: E0(1,3)") != std::string::npos);
}

TEST_CASE("analysis of a non-Dedekind brace reports the witness", "[io]") {
  FiniteBrace e115 = family_brace({Family::E1, 1, 5});
  AnalysisReport rep = analyze_brace(e115, 512);
  CHECK_FALSE(rep.dedekind.dedekind);
  REQUIRE(rep.dedekind.witness.has_value());
  CHECK(rep.dedekind.witness->mask ==
        additive_span(e115, std::vector<int>{el(e115, {2, 1, 0})}));
  REQUIRE(rep.extraspecial.has_value());
  CHECK_FALSE(rep.extraspecial->strong);
  CHECK_FALSE(rep.classification.has_value());
}

TEST_CASE("analysis respects the order cap", "[io]") {
  CHECK_THROWS_AS(analyze_brace(family_brace({Family::E1, 1, 5}), 100),
                  cap_exceeded);
}

TEST_CASE("abelian analysis", "[io]") {
  AnalysisReport rep = analyze_brace(testutil::cyclic(6));
  CHECK(rep.abelian);
  REQUIRE(rep.multiplicative_shape.has_value());
  CHECK(*rep.multiplicative_shape == std::vector<int>{6});
  CHECK(rep.dedekind.dedekind);
  CHECK(rep.socle_series.length() <= 1);
  CHECK_FALSE(rep.extraspecial.has_value());
}

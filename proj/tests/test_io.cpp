#include <doctest.h>

#include <sstream>

#include "aplab/errors.hpp"
#include "aplab/io.hpp"

using namespace aplab;

TEST_CASE("configuration serializes with exact fractions") {
  const auto c = iterate(ConstructionId::Ap1414, 1);
  const Json j = config_to_json(c);
  CHECK(j["construction"] == "ap1414");
  CHECK(j["level"] == 1);
  REQUIRE(j["intervals"].size() == 12);
  CHECK(j["intervals"][0]["start"] == "0");
  CHECK(j["intervals"][0]["end"] == "1/4");
  CHECK(j["intervals"][0]["kind"] == "coloured");
  CHECK(j["intervals"][0]["colour"] == "red");
  CHECK(j["intervals"][3]["start"] == "7/20");
  CHECK(j["intervals"][3]["kind"] == "uncoloured");
  CHECK(j["intervals"][3]["ivl_type"] == "I");
  CHECK(j["intervals"][3]["direction"] == -1);
  CHECK_FALSE(j["intervals"][0].contains("direction"));
  CHECK_FALSE(j["intervals"][3].contains("colour"));
}

TEST_CASE("configuration CSV has one row per interval") {
  const auto c = initial_config(ConstructionId::Ap1414);
  const std::string csv = config_to_csv(c);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "start,end,kind,colour,ivl_type,direction");
  std::getline(in, line);
  CHECK(line == "0,1/4,coloured,red,,");
  std::getline(in, line);
  CHECK(line == "1/4,1/2,uncoloured,,I,1");
  std::getline(in, line);
  CHECK(line == "1/2,3/4,coloured,blue,,");
  std::getline(in, line);
  CHECK(line == "3/4,1,uncoloured,,I,-1");
  CHECK_FALSE(std::getline(in, line));
}

TEST_CASE("witness and certificate serialization") {
  const APWitness w{3, 5, PatternSpec{2, 1}};
  const Json jw = witness_to_json(w);
  CHECK(jw == Json({{"start", 3}, {"d", 5}, {"a", 2}, {"b", 1}}));

  SearchCertificate cert;
  cert.verified = true;
  cert.pairs_scanned = 42;
  const Json jc = certificate_to_json(cert);
  CHECK(jc["verified"] == true);
  CHECK(jc["pairs_scanned"] == 42);
  CHECK_FALSE(jc.contains("counterexample"));

  cert.verified = false;
  cert.counterexample = w;
  CHECK(certificate_to_json(cert)["counterexample"]["d"] == 5);
}

TEST_CASE("measures and reports serialize") {
  const Json jm = measures_to_json(measures_at_level(ConstructionId::Ap1414, 1));
  CHECK(jm["red"] == "7/20");
  CHECK(jm["blue"] == "7/20");
  CHECK(jm["uncoloured"] == "3/10");

  const auto report = verify_band_structure(iterate(ConstructionId::Ap1414, 2), 2);
  const Json jr = report_to_json(report);
  CHECK(jr["level"] == 2);
  CHECK(jr["all_pass"] == true);
  CHECK(jr["checks"].size() == 4);
  CHECK(jr["checks"][0]["name"] == "alternation");
}

TEST_CASE("ladder serialization") {
  const auto ladder = build_ladder(2, make_rational(1, 7), make_rational(1, 4));
  const Json j = ladder_to_json(ladder);
  CHECK(j["case_id"] == 2);
  CHECK(j["anchor"] == "1/7");
  CHECK(j["diff"] == "1/4");
  REQUIRE(j["terms"].size() == 8);
  CHECK(j["terms"][0] == "1/7");
  CHECK(j["terms"][7] == "8/7");
}

TEST_CASE("colouring text round-trips") {
  const auto partial = induce_partial(ConstructionId::Ap1414, 5, 0);
  const std::string text = colouring_to_text(partial);
  CHECK(text == "5\nRRUBU\n");
  const auto parsed = parse_colouring_text(text);
  CHECK(parsed.p == 5);
  CHECK(parsed.colours == partial.colours);
  CHECK(parsed.meta.source == "external");
  CHECK(parsed.meta.unresolved_count == 2);

  const auto total = induce(ConstructionId::Ap1414, 5, 1, Colour::Blue);
  CHECK(colouring_to_text(total) == "5\nRRRBR\n");
  const auto reparsed = parse_colouring_text(colouring_to_text(total));
  CHECK(as_total(reparsed).colours == total.colours);

  CHECK_THROWS_AS(as_total(parsed), InvalidParameter);
  CHECK_THROWS_AS(parse_colouring_text("5\nRRB\n"), InvalidParameter);
  CHECK_THROWS_AS(parse_colouring_text("x\nRB\n"), InvalidParameter);
  CHECK_THROWS_AS(parse_colouring_text("2x\nRB\n"), InvalidParameter);
  CHECK_THROWS_AS(parse_colouring_text("1\nR\n"), InvalidParameter);
  CHECK_THROWS_AS(parse_colouring_text("2\nRX\n"), InvalidParameter);
  CHECK_THROWS_AS(parse_colouring_text("2"), InvalidParameter);
}

TEST_CASE("colouring JSON carries provenance") {
  const auto c = induce(ConstructionId::Ap3x30000, 7, 2, Colour::Blue);
  const Json j = colouring_to_json(c);
  CHECK(j["p"] == 7);
  CHECK(j["colours"].get<std::string>().size() == 7);
  CHECK(j["meta"]["source"] == "ap3x30000");
  CHECK(j["meta"]["depth"] == 2);
  CHECK(j["meta"]["fill"] == "blue");

  const auto partial = induce_partial(ConstructionId::Ap1414, 5, 0);
  const Json jp = colouring_to_json(partial);
  CHECK(jp["colours"] == "RRUBU");
  CHECK_FALSE(jp["meta"].contains("fill"));
}

TEST_CASE("findability report serializes fractions") {
  const auto report = survey_random_colourings({2}, PatternSpec{1, 1}, 4, 0.5, 3);
  const Json j = findability_to_json(report);
  CHECK(j["pattern"]["a"] == 1);
  CHECK(j["pattern"]["b"] == 1);
  CHECK(j["trials"] == 4);
  CHECK(j["seed"] == 3);
  REQUIRE(j["per_prime"].size() == 1);
  CHECK(j["per_prime"][0]["p"] == 2);
  CHECK(j["per_prime"][0]["with_witness"] == 4);
  CHECK(j["per_prime"][0]["fraction"] == 1.0);
  CHECK(j["per_prime"][0]["witness_free"].empty());
}

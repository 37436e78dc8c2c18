#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hq/scenario.hpp"

using namespace hq;

namespace {

Json trivial_scenario() {
  Json j = Json::object();
  j["name"] = "trivial";
  j["group"] = {{"type", "cyclic"}, {"n", 1}};
  j["module"] = {{"side", "kofG"}, {"degree", {0}}, {"generators", Json::object()}};
  j["extension"] = {{"flavor", "nichols"}, {"degree_cap", 2}};
  return j;
}

int dim_at(const Json& report, int degree) {
  return report.at("dims").at(std::to_string(degree)).get<int>();
}

bool all_checks_pass(const Json& report) {
  for (const Json& c : report.at("checks"))
    if (!c.at("pass").get<bool>()) return false;
  return true;
}

}  // namespace

TEST_CASE("rational and matrix JSON round trips") {
  Vec v{rat(3, 2), rat(-7), rat(0)};
  CHECK(json_vec(vec_json(v)) == v);
  CHECK(json_vec(Json::parse("[2, \"-5/3\", \"0\"]")) == Vec{rat(2), rat(-5, 3), rat(0)});
  Mat m(2, 3);
  m(0, 1) = rat(1, 3);
  m(1, 2) = rat(-4);
  CHECK(json_mat(mat_json(m)) == m);
  CHECK_THROWS_AS(json_vec(Json::parse("[\"1/0\"]")), SchemaError);
  CHECK_THROWS_AS(json_vec(Json::parse("[true]")), SchemaError);
  CHECK_THROWS_AS(json_mat(Json::parse("[[1],[1,2]]")), SchemaError);
  CHECK_THROWS_AS(json_mat(Json::parse("[]")), SchemaError);
}

TEST_CASE("z2-minimal fixture verifies and reports are byte-identical") {
  Json fix = fixture_scenario("z2-minimal");
  std::string out1, out2;
  CHECK(run_command("verify", fix, 0, out1) == 0);
  CHECK(run_command("verify", fix, 0, out2) == 0);
  CHECK(out1 == out2);
  Json rep = Json::parse(out1);
  CHECK(rep.at("pass").get<bool>());
  CHECK(all_checks_pass(rep));
  CHECK(dim_at(rep, 0) == 2);
  CHECK(dim_at(rep, 1) == 4);
  CHECK(dim_at(rep, 2) == 2);
  CHECK(dim_at(rep, 3) == 0);
  CHECK(dim_at(rep, 4) == 0);

  std::string exported;
  CHECK(run_command("export", fix, 0, exported) == 0);
  Json doc = Json::parse(exported);
  CHECK(doc.at("dims") == Json::parse("[2,4,2,0,0]"));
  CHECK(doc.contains("d"));
  CHECK(doc.contains("theta"));
}

TEST_CASE("z2-universal fixture verifies at a reduced cap") {
  Json fix = fixture_scenario("z2-universal");
  std::string out;
  CHECK(run_command("verify", fix, 3, out) == 0);
  Json rep = Json::parse(out);
  CHECK(all_checks_pass(rep));
  CHECK(dim_at(rep, 0) == 2);
  CHECK(dim_at(rep, 1) == 4);
}

TEST_CASE("z2-subshuffle fixture dims and verification") {
  Json fix = fixture_scenario("z2-subshuffle");
  std::string out;
  CHECK(run_command("dims", fix, 0, out) == 0);
  Json rep = Json::parse(out);
  CHECK(dim_at(rep, 0) == 2);
  CHECK(dim_at(rep, 1) == 6);
  CHECK(dim_at(rep, 2) == 18);
  CHECK(dim_at(rep, 3) == 50);
  CHECK(dim_at(rep, 4) == 138);

  CHECK(run_command("verify", fix, 3, out) == 0);
  CHECK(all_checks_pass(Json::parse(out)));
}

TEST_CASE("trivial scenario over the one-element group") {
  std::string out;
  CHECK(run_command("verify", trivial_scenario(), 0, out) == 0);
  Json rep = Json::parse(out);
  CHECK(all_checks_pass(rep));
  CHECK(dim_at(rep, 0) == 1);
}

TEST_CASE("schema errors exit 1") {
  std::string out;
  CHECK(run_command("verify", Json::parse("{\"name\": 7}"), 0, out) == 1);
  CHECK(Json::parse(out).at("kind") == "schema");

  Json fix = fixture_scenario("z2-minimal");
  fix["extension"]["flavor"] = "octonionic";
  CHECK(run_command("verify", fix, 0, out) == 1);

  fix = fixture_scenario("z2-minimal");
  fix["module"]["generators"]["1"][0][0] = "1/0";
  CHECK(run_command("verify", fix, 0, out) == 1);

  CHECK(run_command("frobnicate", fixture_scenario("z2-minimal"), 0, out) == 1);
}

TEST_CASE("construction failures exit 2") {
  std::string out;
  // universal_theta needs a calculus
  Json fix = fixture_scenario("z2-universal");
  fix.erase("calculus");
  CHECK(run_command("verify", fix, 3, out) == 2);
  CHECK(Json::parse(out).at("kind") == "construction");

  // a codifferential makes no sense on the nichols quotient
  fix = fixture_scenario("z2-minimal");
  fix["codifferential"] = {{"theta_star", {"1", "0"}}};
  CHECK(run_command("verify", fix, 2, out) == 2);

  // generators that are not a G-action
  fix = fixture_scenario("z2-minimal");
  fix["module"]["generators"]["1"] = Json::array({Json::array({"2", "0"}), Json::array({"0", "1"})});
  CHECK(run_command("verify", fix, 2, out) == 2);
}

TEST_CASE("duality pairing through scenarios") {
  // left: k(Z2) universal-theta tower; right: kZ2 with the coinner
  // sub-shuffle on the dual two-arrow module.
  Json fix = fixture_scenario("z2-universal");
  Json id2 = Json::array({Json::array({"1", "0"}), Json::array({"0", "1"})});
  fix["duality_partner"] = {
      {"module", {{"side", "kG"}, {"degree", {1, 1}}, {"generators", {{"1", id2}}}}},
      {"extension", {{"flavor", "subshuffle_theta"}}},
      {"codifferential", {{"theta_star", {"1", "0"}}}}};
  std::string out;
  CHECK(run_command("pair", fix, 3, out) == 0);
  CHECK(all_checks_pass(Json::parse(out)));

  // illegal flavor pair: verification failure, exit 3
  Json bad = fix;
  bad["duality_partner"]["extension"]["flavor"] = "nichols";
  bad["duality_partner"].erase("codifferential");
  CHECK(run_command("pair", bad, 3, out) == 3);
  CHECK_FALSE(Json::parse(out).at("pass").get<bool>());

  // partner on the same side: construction failure, exit 2
  Json same = fix;
  same["duality_partner"]["module"]["side"] = "kofG";
  CHECK(run_command("pair", same, 3, out) == 2);

  // pairing without a partner: schema error
  CHECK(run_command("pair", fixture_scenario("z2-minimal"), 3, out) == 1);
}

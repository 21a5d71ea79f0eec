#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "relgl/acceptance.hpp"
#include "relgl/scenario.hpp"

using namespace relgl;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string scenario_path(const std::string& name) { return std::string(RELGL_SCENARIO_DIR) + "/" + name; }

Scenario load(const std::string& name) { return parse_scenario_text(slurp(scenario_path(name))); }

std::string config_error_text(const std::string& text) {
  try {
    parse_scenario_text(text);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::config_error);
    return e.what();
  }
  ADD_FAILURE() << "accepted: " << text;
  return {};
}

}  // namespace

TEST(Scenario, RingDescriptors) {
  EXPECT_EQ(parse_ring(json("zmod:12"))->size(), 12u);
  EXPECT_EQ(parse_ring(json("triangular:2"))->size(), 8u);
  EXPECT_EQ(parse_ring(json("local-f2"))->size(), 8u);
  EXPECT_EQ(parse_ring(json("product(zmod:2,zmod:3,zmod:5)"))->size(), 30u);
  EXPECT_EQ(parse_ring(json{{"kind", "product"}, {"factors", {"zmod:2", {{"kind", "zmod"}, {"m", 4}}}}})->size(), 8u);
  EXPECT_EQ(parse_ring(json(R"j({"kind":"zmod","m":9})j"))->size(), 9u);
  EXPECT_THROW(parse_ring(json("zmod:x")), Error);
  EXPECT_THROW(parse_ring(json("quaternion:2")), Error);
}

TEST(Scenario, IdealDescriptors) {
  auto r = make_zmod(12);
  EXPECT_TRUE(parse_ideal(r, json("R")).is_unit());
  EXPECT_TRUE(parse_ideal(r, json("(0)")).is_zero());
  EXPECT_EQ(parse_ideal(r, json("(4,6)")).size(), 6u);
  EXPECT_EQ(parse_ideal(r, json{8}).size(), 3u);
  EXPECT_EQ(parse_ideal(r, json{{"gens", {-3}}}).size(), 4u);
  auto f = make_local_f2();
  EXPECT_EQ(parse_ideal(f, json("(x,y)")).size(), 4u);
  EXPECT_THROW(parse_ideal(f, json("(z)")), Error);
}

TEST(Scenario, EveryViolationIsListed) {
  const std::string msg = config_error_text(slurp(scenario_path("invalid.json")));
  for (const char* bit : {"colour", "theorem9", "mode", "'n'"})
    EXPECT_NE(msg.find(bit), std::string::npos) << bit << "\n" << msg;
  EXPECT_NE(msg.find("m >= 2"), std::string::npos) << msg;
}

TEST(Scenario, SampleModeOnlyForTheorems) {
  auto msg = config_error_text(R"j({"ring":"zmod:4","n":3,"check":"lemma1","ideals":{"A":"(2)"},"mode":"sample"})j");
  EXPECT_NE(msg.find("sample mode"), std::string::npos);
}

TEST(Scenario, MissingIdealsReported) {
  auto msg = config_error_text(R"j({"ring":"zmod:4","n":3,"check":"theorem1","ideals":{"A":"(2)"}})j");
  EXPECT_NE(msg.find("needs ideal 'B'"), std::string::npos);
}

TEST(Scenario, NotJson) { config_error_text("{ring: zmod}"); }

TEST(Scenario, ExitCodesOfShippedScenarios) {
  struct Case {
    const char* file;
    int code;
  };
  for (const auto& c : std::vector<Case>{{"theorem1_z4.json", 0},
                                         {"lemma1_z4.json", 0},
                                         {"theorem2_triangular.json", 3},
                                         {"lemma7_not_comaximal.json", 3},
                                         {"ideal_identities_local.json", 0},
                                         {"k1_z4.json", 0},
                                         {"centraliser_z4.json", 0}}) {
    auto rep = run_scenario(load(c.file));
    EXPECT_EQ(exit_code(rep.verdict), c.code) << c.file << "\n" << rep.to_json().dump(2);
    EXPECT_EQ(rep.scenario["check"], rep.claim) << c.file;
  }
}

TEST(Scenario, CapOverrideRefuses) {
  auto cfg = json::parse(slurp(scenario_path("theorem1_z4.json")));
  cfg["caps"] = json{{"gl", 1000}};
  auto rep = run_scenario(parse_scenario(cfg));
  EXPECT_EQ(rep.verdict, Verdict::refused_cap);
  EXPECT_EQ(exit_code(rep.verdict), 4);
}

TEST(Scenario, CentraliserExpressionChecks) {
  auto sc = parse_scenario_text(R"j({"ring":"zmod:4","n":3,"check":"centraliser","ideals":{"A":"(2)"},
                                   "F":"[E(n,R),E(n,R)]","H":"GL(n,R,A)","expect":"C(n,R,A)"})j");
  auto rep = run_scenario(sc);
  EXPECT_EQ(rep.verdict, Verdict::pass) << rep.to_json().dump(2);
  auto bad = parse_scenario_text(R"j({"ring":"zmod:4","n":3,"check":"centraliser","F":"Q(n,R)","H":"E(n,R)"})j");
  EXPECT_THROW(run_scenario(bad), Error);
}

TEST(Scenario, MachineReportIsByteIdenticalAcrossRunsAndWorkers) {
  auto cfg = json::parse(slurp(scenario_path("theorem1_triangular_sample.json")));
  cfg["samples"] = 4000;
  auto one = run_scenario(parse_scenario(cfg)).to_json(false).dump(2);
  EXPECT_EQ(run_scenario(parse_scenario(cfg)).to_json(false).dump(2), one);
  cfg["workers"] = 4;
  auto four = json::parse(run_scenario(parse_scenario(cfg)).to_json(false).dump(2));
  four["scenario"].erase("workers");
  auto base = json::parse(one);
  base["scenario"].erase("workers");
  EXPECT_EQ(four.dump(2), base.dump(2));
}

// Regenerate with RELGL_UPDATE_GOLDEN=1.
TEST(Scenario, GoldenMachineReport) {
  for (const char* name : {"lemma1_z4", "ideal_identities_local", "lemma4_z8"}) {
    auto got = run_scenario(load(std::string(name) + ".json")).to_json(false).dump(2) + "\n";
    const std::string path = std::string(RELGL_GOLDEN_DIR) + "/" + name + ".json";
    if (std::getenv("RELGL_UPDATE_GOLDEN")) {
      std::ofstream(path) << got;
      continue;
    }
    EXPECT_EQ(got, slurp(path)) << path;
  }
}

TEST(Acceptance, SignBugInYFailsLemmaCriterionWithWitnesses) {
  AcceptanceOptions opt;
  opt.only = {7};
  opt.y = [](const FiniteRing& r, unsigned n, unsigned i, unsigned j, Elem a, Elem b) {
    return transvection(r, n, i, j, a) * transvection(r, n, j, i, b) * transvection(r, n, i, j, a) *
           transvection(r, n, j, i, r.neg(b));
  };
  auto rs = run_acceptance_suite(opt);
  ASSERT_EQ(rs.size(), 1u);
  EXPECT_EQ(rs[0].verdict, Verdict::fail);
  int failing = 0;
  for (const auto& rep : rs[0].reports)
    if (rep["verdict"] == "fail") {
      ++failing;
      EXPECT_FALSE(rep["witnesses"].empty());
      EXPECT_TRUE(rep["claim"] == "lemma5" || rep["claim"] == "lemma6");
    }
  EXPECT_EQ(failing, 2);
}

TEST(Acceptance, TinyCapsRefuse) {
  AcceptanceOptions opt;
  opt.only = {1, 4};
  opt.caps = Caps::uniform(10);
  auto rs = run_acceptance_suite(opt);
  EXPECT_EQ(overall(rs), Verdict::refused_cap);
  EXPECT_EQ(exit_code(overall(rs)), 4);
}

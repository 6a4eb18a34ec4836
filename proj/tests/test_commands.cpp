#include <string>

#include "catalog.hpp"
#include "commands.hpp"
#include "doctest.h"
#include "format.hpp"
#include "search.hpp"

using namespace qw;
using namespace qw::testing;

TEST_CASE("check command") {
  const CommandOutput good = cmd_check(load_fixture("oml6"));
  CHECK(good.exit_code == kExitOk);
  CHECK(good.report["is_qw"] == true);
  CHECK(good.report["report_version"] == kReportVersion);
  CHECK(good.report["axioms"]["verdicts"]["QW"] == "pass");

  const CommandOutput bad = cmd_check(perturbed_oml6());
  CHECK(bad.exit_code == kExitPropertyFails);
  CHECK(bad.report["is_qw"] == false);
  CHECK_FALSE(bad.report["axioms"]["witnesses"].empty());
  CHECK_FALSE(render_text(bad.report).empty());
}

TEST_CASE("analyze command replicates the six-element structure") {
  const CommandOutput out = cmd_analyze(load_fixture("oml6"));
  CHECK(out.exit_code == kExitOk);
  const Json& r = out.report;

  const Json expected_filters = Json::array(
      {Json::array({"1"}), Json::array({"a", "1"}), Json::array({"b", "1"}),
       Json::array({"c", "1"}), Json::array({"d", "1"}),
       Json::array({"0", "a", "b", "c", "d", "1"})});
  CHECK(r["filters"] == expected_filters);
  const Json expected_systems = Json::array(
      {Json::array({"1"}), Json::array({"0", "a", "b", "c", "d", "1"})});
  CHECK(r["deductive_systems"] == expected_systems);

  CHECK(r["is_qw"] == true);
  CHECK(r["commutative"] == false);
  CHECK(r["wajsberg"] == false);
  CHECK(r["weakly_linear"] == false);
  CHECK(r["locally_finite"] == false);
  CHECK(r["element_orders"]["b"].is_null());
  CHECK(r["falsifications"].empty());

  // {a,1}: maximal filter, not strongly maximal; {1}: maximal DS only.
  for (const auto& c : r["subsets"]) {
    if (c["subset"] == Json::array({"a", "1"})) {
      CHECK(c["maximal_filter"] == true);
      CHECK(c["strongly_maximal"] == false);
      CHECK(c["maximal_ds"].is_null());
    }
    if (c["subset"] == Json::array({"1"})) {
      CHECK(c["maximal_filter"] == false);
      CHECK(c["maximal_ds"] == true);
      CHECK(c["strongly_maximal"] == false);
    }
  }
  for (const auto& c : r["correspondences"]) {
    CHECK(c["strong_maximality_agrees"] == true);
    CHECK(c["primality_agrees"] == true);
  }
}

TEST_CASE("analyze command on the five-element fixture") {
  const CommandOutput out = cmd_analyze(load_fixture("wl5"));
  CHECK(out.exit_code == kExitOk);
  CHECK(out.report["weakly_linear"] == true);
  CHECK(out.report["quasi_linear"] == true);
  CHECK(out.report["leq_q_total"] == false);
  CHECK(out.report["leq_q_incomparable"] == Json::array({"a", "c"}));
  CHECK(out.report["weakly_linear_identities"]["meet_of_cases"] == true);
  CHECK(out.report["falsifications"].empty());
}

TEST_CASE("analyze command on the degenerate algebra") {
  const CommandOutput out = cmd_analyze(trivial_algebra());
  CHECK(out.exit_code == kExitOk);
  CHECK(out.report["is_qw"] == true);
  CHECK(out.report["commutative"] == true);
  CHECK(out.report["wajsberg"] == true);
  CHECK(out.report["locally_finite"] == true);
  CHECK(out.report["filters"] == Json::array({Json::array({"1"})}));
}

TEST_CASE("analyze command skips QW-only sections on non-QW input") {
  const CommandOutput out = cmd_analyze(perturbed_oml6());
  CHECK(out.exit_code == kExitOk);
  CHECK(out.report["is_qw"] == false);
  CHECK(out.report["wajsberg"].is_null());
  CHECK(out.report["correspondences"].is_null());
}

TEST_CASE("analyze reports are byte-stable") {
  const std::string once = render_json(cmd_analyze(load_fixture("oml6")).report);
  const std::string twice =
      render_json(cmd_analyze(load_fixture("oml6")).report);
  CHECK(once == twice);
  CHECK(render_text(cmd_analyze(load_fixture("wl5")).report) ==
        render_text(cmd_analyze(load_fixture("wl5")).report));
}

TEST_CASE("quotient command") {
  const Algebra b4 = load_fixture("bool4");
  const CommandOutput out = cmd_quotient(b4, {"a", "1"});
  CHECK(out.exit_code == kExitOk);
  CHECK(out.report["num_classes"] == 2);
  CHECK(out.report["class_map"]["0"] == "[0]");
  CHECK(out.report["class_map"]["b"] == "[0]");
  CHECK(out.report["class_map"]["a"] == "[1]");
  CHECK(out.report["class_map"]["1"] == "[1]");
  REQUIRE(out.models.size() == 1);
  CHECK(is_isomorphic(out.models.front(), boolean_algebra(1)));
  // the embedded text parses back to the same quotient
  const Algebra back =
      parse_algebra(out.report["quotient"]["text"].get<std::string>());
  CHECK(back.table() == out.models.front().table());
}

TEST_CASE("quotient command rejects non-deductive-systems with the reason") {
  const Algebra a = load_fixture("oml6");
  try {
    (void)cmd_quotient(a, {"a", "1"});
    FAIL_CHECK("expected InputError");
  } catch (const InputError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("not a deductive system") != std::string::npos);
    CHECK(msg.find("DS2") != std::string::npos);
  }
  CHECK_THROWS_AS((void)cmd_quotient(a, {"nope"}), InputError);
}

TEST_CASE("search command") {
  const CommandOutput out = cmd_search(3, std::nullopt);
  CHECK(out.exit_code == kExitOk);
  CHECK(out.report["count"] == 1);
  CHECK(out.report["truncated"] == false);
  REQUIRE(out.models.size() == 1);
  CHECK(is_isomorphic(out.models.front(), lukasiewicz_chain(3)));
  const Algebra parsed =
      parse_algebra(out.report["models"][0]["text"].get<std::string>());
  CHECK(parsed.table() == out.models.front().table());
  CHECK_FALSE(render_text(out.report).empty());
}

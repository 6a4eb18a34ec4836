// Exercises the shared library strictly through the C interface.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdlib>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "qw.h"

namespace {

std::string fixture(const std::string& name) {
  const char* dir = std::getenv("QW_FIXTURES");
#ifdef QW_FIXTURE_DIR
  if (!dir) dir = QW_FIXTURE_DIR;
#endif
  REQUIRE(dir != nullptr);
  return std::string(dir) + "/" + name + ".alg";
}

constexpr const char* kTiny =
    "algebra t\nelements 0 1\nzero 0\none 1\narrow\n1 1\n0 1\n";

}  // namespace

TEST_CASE("parse, inspect, serialize") {
  qw_algebra* a = nullptr;
  REQUIRE(qw_algebra_parse(kTiny, &a) == QW_OK);
  CHECK(qw_algebra_order(a) == 2);
  CHECK(std::string(qw_algebra_name(a)) == "t");
  CHECK(std::string(qw_algebra_element_name(a, 0)) == "0");
  CHECK(qw_algebra_zero(a) == 0);
  CHECK(qw_algebra_one(a) == 1);
  CHECK(qw_algebra_arrow(a, 1, 0) == 0);
  CHECK(qw_algebra_arrow(a, 7, 0) == -1);
  CHECK(qw_algebra_is_qw(a) == 1);

  char* text = nullptr;
  REQUIRE(qw_algebra_serialize(a, &text) == QW_OK);
  CHECK(std::string(text) == kTiny);
  qw_string_free(text);
  qw_algebra_free(a);
}

TEST_CASE("error reporting") {
  qw_algebra* a = nullptr;
  CHECK(qw_algebra_parse("nonsense", &a) == QW_ERR_INPUT);
  CHECK(std::string(qw_last_error()).find("expected 'algebra'") !=
        std::string::npos);
  CHECK(qw_algebra_parse(nullptr, &a) == QW_ERR_ARG);
  CHECK(qw_algebra_read_file("/no/such/file.alg", &a) == QW_ERR_INPUT);

  qw_report* r = nullptr;
  CHECK(qw_cmd_search(0, -1, &r, nullptr, nullptr) == QW_ERR_INPUT);
  CHECK(qw_cmd_search(99, -1, &r, nullptr, nullptr) == QW_ERR_INPUT);
}

TEST_CASE("check and analyze through the boundary") {
  qw_algebra* a = nullptr;
  REQUIRE(qw_algebra_read_file(fixture("oml6").c_str(), &a) == QW_OK);

  qw_report* check = nullptr;
  REQUIRE(qw_cmd_check(a, &check) == QW_OK);
  CHECK(qw_report_exit_code(check) == 0);
  char* text = nullptr;
  REQUIRE(qw_report_render_text(check, &text) == QW_OK);
  CHECK(std::string(text).find("quantum-Wajsberg") != std::string::npos);
  qw_string_free(text);
  qw_report_free(check);

  qw_report* analyze = nullptr;
  REQUIRE(qw_cmd_analyze(a, &analyze) == QW_OK);
  CHECK(qw_report_exit_code(analyze) == 0);
  char* json_text = nullptr;
  REQUIRE(qw_report_render_json(analyze, &json_text) == QW_OK);
  const auto parsed = nlohmann::json::parse(json_text);
  CHECK(parsed["report_version"] == 1);
  CHECK(parsed["filters"].size() == 6);
  CHECK(parsed["falsifications"].empty());
  qw_string_free(json_text);
  qw_report_free(analyze);
  qw_algebra_free(a);
}

TEST_CASE("quotient through the boundary") {
  qw_algebra* a = nullptr;
  REQUIRE(qw_algebra_read_file(fixture("bool4").c_str(), &a) == QW_OK);

  qw_report* r = nullptr;
  qw_algebra* q = nullptr;
  REQUIRE(qw_cmd_quotient(a, "a,1", &r, &q) == QW_OK);
  CHECK(qw_algebra_order(q) == 2);
  qw_report_free(r);

  // the quotient is the two-element Boolean algebra
  qw_algebra* b2 = nullptr;
  REQUIRE(qw_algebra_parse(kTiny, &b2) == QW_OK);
  CHECK(qw_algebra_isomorphic(q, b2) == 1);
  qw_algebra_free(b2);
  qw_algebra_free(q);

  // a filter that is not a deductive system is an input error
  CHECK(qw_cmd_quotient(a, "0", &r, nullptr) == QW_ERR_INPUT);
  CHECK(std::string(qw_last_error()).find("not a deductive system") !=
        std::string::npos);
  qw_algebra_free(a);
}

TEST_CASE("search through the boundary") {
  qw_report* r = nullptr;
  qw_algebra** models = nullptr;
  size_t count = 0;
  REQUIRE(qw_cmd_search(4, -1, &r, &models, &count) == QW_OK);
  CHECK(count == 4);
  CHECK(qw_report_exit_code(r) == 0);
  for (size_t i = 0; i < count; ++i) {
    CHECK(qw_algebra_is_qw(models[i]) == 1);
    CHECK(qw_algebra_order(models[i]) == 4);
  }
  for (size_t i = 0; i < count; ++i) {
    for (size_t j = i + 1; j < count; ++j) {
      CHECK(qw_algebra_isomorphic(models[i], models[j]) == 0);
    }
  }
  qw_algebra_list_free(models, count);
  qw_report_free(r);
}

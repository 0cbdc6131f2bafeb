#include <doctest.h>

#include <cstring>
#include <string>

#include <json.hpp>

#include "exactq/exactq.h"

namespace {

std::string take(char* text) {
  std::string s = text ? text : "";
  exq_string_free(text);
  return s;
}

exq_function* parse(const char* text) {
  exq_function* f = nullptr;
  REQUIRE(exq_function_parse(text, &f) == EXQ_OK);
  return f;
}

}  // namespace

TEST_CASE("functions through the C API") {
  exq_function* f = parse("profile:0,1,0,1");
  CHECK(exq_function_arity(f) == 3);
  int v = -1;
  CHECK(exq_function_get(f, 7, &v) == EXQ_OK);
  CHECK(v == 1);
  CHECK(exq_function_get(f, 8, &v) == EXQ_ERR_OUT_OF_RANGE);
  char* text = nullptr;
  CHECK(exq_function_format(f, &text) == EXQ_OK);
  CHECK(take(text) == "bin:01101001");

  char* json = nullptr;
  REQUIRE(exq_analyze(f, &json) == EXQ_OK);
  const auto a = nlohmann::json::parse(take(json));
  CHECK(a["schema"] == "exactq.analysis/1");
  CHECK(a["symmetric"] == true);
  CHECK(a["degree"] == 3);
  CHECK(a["decisionTreeDepth"] == 3);
  CHECK(a["className"] == "PARITY_3");
  exq_function_free(f);

  exq_function* g = nullptr;
  CHECK(exq_function_from_word(2, 0x8, &g) == EXQ_OK);
  REQUIRE(exq_analyze(g, &json) == EXQ_OK);
  const auto b = nlohmann::json::parse(take(json));
  CHECK(b["andIsomorphic"] == true);
  CHECK(b["className"] == "AND_2");
  exq_function_free(g);

  CHECK(exq_function_from_word(2, 0x10, &g) == EXQ_ERR_INVALID_ARGUMENT);
  CHECK(exq_function_from_word(7, 0, &g) == EXQ_ERR_OUT_OF_RANGE);
}

TEST_CASE("read-once analysis") {
  exq_function* f = parse("formula:(x1|x2)&~x3");
  char* json = nullptr;
  REQUIRE(exq_analyze(f, &json) == EXQ_OK);
  const auto a = nlohmann::json::parse(take(json));
  CHECK(a["readOnce"] == "(x1|x2)&~x3");
  exq_function_free(f);
}

TEST_CASE("errors set the status and the message") {
  exq_function* f = nullptr;
  CHECK(exq_function_parse("bin:01x1", &f) == EXQ_ERR_PARSE);
  CHECK(f == nullptr);
  CHECK(std::strstr(exq_last_error(), "'x'") != nullptr);
  CHECK(exq_function_parse("formula:x1&", &f) == EXQ_ERR_PARSE);
  CHECK(exq_function_parse(nullptr, &f) == EXQ_ERR_INVALID_ARGUMENT);
  CHECK(std::string(exq_status_name(EXQ_ERR_NOT_SIMULATABLE)) == "not simulatable");

  exq_program* p = nullptr;
  CHECK(exq_program_from_json("{not json", &p) == EXQ_ERR_PARSE);
  CHECK(exq_program_builtin("majority", 3, &p) == EXQ_ERR_INVALID_ARGUMENT);
  CHECK(exq_program_builtin("nae", 1, &p) == EXQ_ERR_OUT_OF_RANGE);
  exq_certificate* c = nullptr;
  CHECK(exq_certificate_from_json("{}", &c) == EXQ_ERR_PARSE);
}

TEST_CASE("synthesis and certificates") {
  exq_function* f = parse("bin:0000000000000001");
  exq_certificate* c = nullptr;
  REQUIRE(exq_synthesize(f, &c) == EXQ_OK);
  CHECK(exq_certificate_queries(c) == 4);
  CHECK(std::string(exq_certificate_level(c)) == "ClassicalOnly");
  int ok = 0;
  char* report = nullptr;
  CHECK(exq_certificate_verify(c, &ok, &report) == EXQ_OK);
  CHECK(ok == 1);
  CHECK(nlohmann::json::parse(take(report))["recountedQueries"] == 4);

  char* json = nullptr;
  REQUIRE(exq_certificate_to_json(c, &json) == EXQ_OK);
  const std::string text = take(json);
  exq_certificate* back = nullptr;
  REQUIRE(exq_certificate_from_json(text.c_str(), &back) == EXQ_OK);
  CHECK(exq_certificate_queries(back) == 4);

  auto tampered = nlohmann::json::parse(text);
  tampered["claimedQueries"] = 3;
  exq_certificate* bad = nullptr;
  REQUIRE(exq_certificate_from_json(tampered.dump().c_str(), &bad) == EXQ_OK);
  CHECK(exq_certificate_verify(bad, &ok, nullptr) == EXQ_OK);
  CHECK(ok == 0);

  exq_certificate_free(bad);
  exq_certificate_free(back);
  exq_certificate_free(c);
  exq_function_free(f);
}

TEST_CASE("simulation of programs") {
  exq_program* p = nullptr;
  REQUIRE(exq_program_builtin("parity", 4, &p) == EXQ_OK);
  CHECK(exq_program_queries(p) == 2);
  CHECK(exq_program_arity(p) == 4);
  exq_function* f = parse("profile:0,1,0,1,0");
  int exact = 0;
  char* json = nullptr;
  REQUIRE(exq_simulate(p, f, &exact, &json) == EXQ_OK);
  CHECK(exact == 1);
  const auto r = nlohmann::json::parse(take(json));
  CHECK(r["queriesUsedWorstCase"] == 2);
  CHECK(r["failingInputs"].empty());

  exq_function* wrong = parse("profile:1,0,1,0,1");
  REQUIRE(exq_simulate(p, wrong, &exact, &json) == EXQ_OK);
  CHECK(exact == 0);
  CHECK(nlohmann::json::parse(take(json))["failingInputs"].size() == 16);

  char* programJson = nullptr;
  REQUIRE(exq_program_to_json(p, &programJson) == EXQ_OK);
  exq_program* again = nullptr;
  REQUIRE(exq_program_from_json(programJson, &again) == EXQ_OK);
  exq_string_free(programJson);
  CHECK(exq_program_queries(again) == 2);

  exq_function* small = parse("bin:0110");
  CHECK(exq_simulate(p, small, &exact, nullptr) == EXQ_ERR_INVALID_ARGUMENT);

  exq_function_free(small);
  exq_program_free(again);
  exq_function_free(wrong);
  exq_function_free(f);
  exq_program_free(p);

  exq_program* nae = nullptr;
  REQUIRE(exq_program_builtin("nae", 5, &nae) == EXQ_OK);
  exq_function* naeFn = parse("profile:0,1,1,1,1,0");
  REQUIRE(exq_simulate(nae, naeFn, &exact, nullptr) == EXQ_OK);
  CHECK(exact == 1);
  CHECK(exq_program_queries(nae) == 4);
  exq_function_free(naeFn);
  exq_program_free(nae);
}

TEST_CASE("certificates with axiom leaves are not simulatable") {
  exq_function* f = parse("profile:0,0,1,0");
  exq_certificate* c = nullptr;
  REQUIRE(exq_synthesize(f, &c) == EXQ_OK);
  CHECK(std::string(exq_certificate_level(c)) == "CountCertified");
  exq_program* p = nullptr;
  REQUIRE(exq_certificate_program(c, &p) == EXQ_OK);
  int exact = 0;
  CHECK(exq_simulate(p, f, &exact, nullptr) == EXQ_ERR_NOT_SIMULATABLE);
  CHECK(std::strstr(exq_last_error(), "axiom at") != nullptr);
  exq_program_free(p);
  exq_certificate_free(c);
  exq_function_free(f);
}

TEST_CASE("suites through the C API") {
  char* ids = nullptr;
  REQUIRE(exq_suite_ids(&ids) == EXQ_OK);
  const auto registry = nlohmann::json::parse(take(ids));
  CHECK(registry["default"].size() == 9);
  REQUIRE(registry["suites"].size() == registry["all"].size());
  for (const auto& s : registry["suites"]) CHECK(s["defaultMaxN"] <= s["boundMaxN"]);

  int allOk = 0;
  char* json = nullptr;
  REQUIRE(exq_run_suites("corollary, primitives", 4, 1, 2, &allOk, &json) == EXQ_OK);
  CHECK(allOk == 1);
  const auto doc = nlohmann::json::parse(take(json));
  CHECK(doc["schema"] == "exactq.report/1");
  CHECK(doc["reports"].size() == 2);

  CHECK(exq_run_suites("bogus", -1, 1, 1, &allOk, &json) == EXQ_ERR_INVALID_ARGUMENT);
  CHECK(exq_run_suites("theorem6", 9, 1, 1, &allOk, &json) == EXQ_ERR_OUT_OF_RANGE);
  CHECK(exq_run_suites("theorem6", 4, 1, 0, &allOk, &json) == EXQ_ERR_INVALID_ARGUMENT);
}

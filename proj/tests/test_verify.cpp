#include <doctest.h>

#include <algorithm>

#include "exactq/verify.hpp"

using namespace exactq;

namespace {

SuiteReport run(const std::string& id, unsigned maxN, unsigned jobs = 1, std::uint64_t seed = 1) {
  SuiteOptions o;
  o.maxN = maxN;
  o.jobs = jobs;
  o.seed = seed;
  return runSuite(id, o);
}

nlohmann::ordered_json stable(const SuiteReport& r) {
  auto j = reportToJson(r);
  j.erase("wallTime");
  return j;
}

}  // namespace

TEST_CASE("suite registry") {
  const auto all = suiteIds();
  const auto defaults = defaultSuiteIds();
  for (const char* id : {"theorem1", "classical-depth", "lemma1", "theorem6", "monotone", "structural-lemmas",
                         "corollary", "primitives", "npn-census"}) {
    CHECK(std::count(defaults.begin(), defaults.end(), id) == 1);
  }
  CHECK(std::count(all.begin(), all.end(), "npn5-classes") == 1);
  CHECK(std::count(defaults.begin(), defaults.end(), "npn5-classes") == 0);
  CHECK_THROWS_AS(runSuite("no-such-suite"), std::invalid_argument);
  CHECK_THROWS_AS(run("theorem6", 5), std::out_of_range);
  CHECK_THROWS_AS(run("corollary", 6), std::out_of_range);
}

TEST_CASE("small suites pass") {
  for (const auto& [id, n] : std::vector<std::pair<std::string, unsigned>>{
           {"theorem1", 5}, {"classical-depth", 6}, {"monotone", 4}, {"corollary", 4}, {"primitives", 8},
           {"npn-census", 3}, {"lemma1", 6}}) {
    const auto r = run(id, n);
    INFO(reportToHuman(r));
    CHECK(r.ok());
    CHECK(r.checked > 0);
    CHECK(r.passed + r.failed == r.checked);
    CHECK(r.failures.empty());
  }
}

TEST_CASE("corollary counts") {
  const auto r = run("corollary", 5);
  REQUIRE(r.ok());
  const auto& per = r.metrics["perArity"];
  CHECK(per["3"]["andIsomorphic"] == 16);
  CHECK(per["4"]["andIsomorphic"] == 32);
  CHECK(per["5"]["andIsomorphic"] == 64);
}

TEST_CASE("monotone population matches Dedekind numbers") {
  const auto r = run("monotone", 5);
  REQUIRE(r.ok());
  CHECK(r.metrics["perArity"]["4"]["functions"] == 168);
  CHECK(r.metrics["perArity"]["4"]["costN"] == 2);
  CHECK(r.metrics["perArity"]["5"]["functions"] == 7581);
}

TEST_CASE("results do not depend on the job count") {
  CHECK(stable(run("npn-census", 4, 1)) == stable(run("npn-census", 4, 3)));
  CHECK(stable(run("classical-depth", 7, 1)) == stable(run("classical-depth", 7, 2)));
  CHECK(stable(run("lemma1", 7, 1, 9)) == stable(run("lemma1", 7, 4, 9)));
}

TEST_CASE("sampled suites are reproducible from the seed") {
  CHECK(stable(run("lemma1", 5, 1, 3)) == stable(run("lemma1", 5, 1, 3)));
  CHECK(stable(run("lemma1", 8, 1, 3))["metrics"] != stable(run("lemma1", 8, 1, 4))["metrics"]);
}

TEST_CASE("report serialization") {
  const auto r = run("primitives", 4);
  const auto bundle = reportsToJson({r});
  CHECK(bundle["schema"] == kReportSchema);
  CHECK(bundle["ok"] == true);
  CHECK(bundle["reports"][0]["suiteId"] == "primitives");
  const auto text = reportToHuman(r);
  CHECK(text.rfind("PASS primitives", 0) == 0);
}

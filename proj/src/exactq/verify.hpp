#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace exactq {

struct SuiteFailure {
  std::string input;
  std::string expected;
  std::string got;
};

struct SuiteReport {
  std::string suiteId;
  std::string population;
  std::uint64_t checked = 0;  ///< population items plus population-level assertions
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::vector<SuiteFailure> failures;  ///< empty iff passed == checked
  nlohmann::ordered_json metrics = nlohmann::ordered_json::object();
  double wallTime = 0.0;  ///< seconds

  bool ok() const { return failed == 0; }
};

struct SuiteOptions {
  std::optional<unsigned> maxN;  ///< suite default when unset
  std::uint64_t seed = 1;
  unsigned jobs = 1;
};

struct SuiteInfo {
  std::string id;
  unsigned defaultMaxN = 0;
  unsigned boundMaxN = 0;
  bool inDefault = true;
};

std::vector<SuiteInfo> suiteInfo();
/// Every known suite id, including the opt-in ones.
std::vector<std::string> suiteIds();
/// The suites run by "all".
std::vector<std::string> defaultSuiteIds();

/// Throws std::invalid_argument for an unknown id and std::out_of_range when
/// maxN exceeds the suite's bound.
SuiteReport runSuite(const std::string& id, const SuiteOptions& options = {});

inline constexpr const char* kReportSchema = "exactq.report/1";

nlohmann::ordered_json reportToJson(const SuiteReport& report);
/// Bundle of several reports with the schema tag.
nlohmann::ordered_json reportsToJson(const std::vector<SuiteReport>& reports);
std::string reportToHuman(const SuiteReport& report);

}  // namespace exactq

#pragma once

#include <json.hpp>

#include "exactq/truth_table.hpp"

namespace exactq {

inline constexpr const char* kAnalysisSchema = "exactq.analysis/1";

/// Summary of the classical properties of f. Fields whose computation is out
/// of range for the arity are null.
nlohmann::ordered_json analyzeFunction(const TruthTable& f);

}  // namespace exactq

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "exactq/program.hpp"
#include "exactq/truth_table.hpp"

namespace exactq {

enum class Level { FullySimulated, CountCertified, ClassicalOnly };

std::string levelName(Level level);
std::optional<Level> levelFromName(const std::string& name);

struct RuleUse {
  std::string id;
  std::string citation;
  bool operator==(const RuleUse&) const = default;
};

/// Largest arity for which the "at most n-1 queries unless AND-isomorphic"
/// guarantee is asserted.
inline constexpr unsigned kGuaranteeArity = 5;

struct Certificate {
  TruthTable function;
  NodePtr program;
  unsigned claimedQueries = 0;
  Level level = Level::ClassicalOnly;
  bool optimal = false;
  bool guaranteeAsserted = true;
  std::vector<RuleUse> rulesUsed;
};

struct SynthOptions {
  unsigned xorMaxArity = 6;        ///< XOR observables only on subproblems this small
  unsigned fullSplitMaxArity = 12; ///< above this, split on the first variable only
  unsigned decomposeMaxArity = 8;  ///< disjoint AND/OR decomposition limit
};

/// Compiles truth tables into certificates. Holds a memo of solved
/// subproblems; one instance must not be used from several threads at once.
class Synthesizer {
 public:
  explicit Synthesizer(SynthOptions options = {});
  ~Synthesizer();
  Synthesizer(Synthesizer&&) noexcept;
  Synthesizer& operator=(Synthesizer&&) noexcept;

  Certificate synthesize(const TruthTable& f);
  /// claimedQueries of synthesize(f) without building the certificate.
  unsigned cost(const TruthTable& f);
  std::size_t memoSize() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Convenience wrapper with a fresh memo.
Certificate synthesize(const TruthTable& f);

struct VerificationResult {
  bool ok = false;
  unsigned recountedQueries = 0;
  std::vector<std::string> problems;  ///< each names the offending node path
  std::optional<SimulationReport> report;
};

VerificationResult verifyCertificate(const Certificate& c);

/// Level implied by the node kinds present in a program.
Level levelOf(const NodePtr& program);

inline constexpr const char* kCertificateSchema = "exactq.certificate/1";
nlohmann::json certificateToJson(const Certificate& c);
/// Throws JsonFormatError on malformed input.
Certificate certificateFromJson(const nlohmann::json& j);

}  // namespace exactq

#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "exactq/truth_table.hpp"

namespace exactq {

struct Node;
using NodePtr = std::shared_ptr<const Node>;
using Complex = std::complex<double>;

/// Tolerance for wrong-outcome amplitudes and unitarity residuals.
inline constexpr double kEpsilon = 1e-9;

/// Square matrix whose value is entries * 2^(-normExp/2), stored row-major.
struct ScaledMatrix {
  unsigned dim = 0;
  std::vector<Complex> entries;
  int normExp = 0;

  Complex at(unsigned row, unsigned col) const;
  double scale() const;
  bool isUnitary(double tolerance = kEpsilon) const;
  ScaledMatrix adjoint() const;
  bool operator==(const ScaledMatrix&) const = default;
};

struct Output {
  bool value = false;
};

struct ClassicalQuery {
  Var var = 0;
  NodePtr on0;
  NodePtr on1;
};

/// One-query evaluation of x_i XOR x_j; sugar for `xorGadget`.
struct XorQuery {
  Var i = 0;
  Var j = 0;
  NodePtr on0;
  NodePtr on1;
};

/// Start in basis state 0, apply U_1, Q, U_2, ..., Q, U_{t+1}, measure.
struct UnitaryBlock {
  unsigned dim = 0;
  std::vector<std::optional<Var>> labels;  ///< basis state -> queried variable
  std::vector<ScaledMatrix> unitaries;     ///< t + 1 matrices
  std::vector<NodePtr> outcomes;           ///< measurement outcome -> continuation

  unsigned queries() const { return unitaries.empty() ? 0 : static_cast<unsigned>(unitaries.size() - 1); }
};

/// A subroutine whose query count is taken from the literature. The leaf
/// computes `table` on the variables `vars` and continues with on0 or on1.
struct AxiomLeaf {
  std::string classId;
  unsigned arity = 0;
  std::vector<Var> vars;
  TruthTable table;
  unsigned claimedQueries = 0;
  std::string citation;
  NodePtr on0;
  NodePtr on1;
};

struct Node {
  std::variant<Output, ClassicalQuery, XorQuery, UnitaryBlock, AxiomLeaf> body;
};

class ProgramError : public std::runtime_error {
 public:
  ProgramError(const std::string& message, std::string path)
      : std::runtime_error(message + " at " + path), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

class NotSimulatableError : public std::runtime_error {
 public:
  explicit NotSimulatableError(std::vector<std::string> locations);
  const std::vector<std::string>& locations() const { return locations_; }

 private:
  std::vector<std::string> locations_;
};

// Builders ------------------------------------------------------------------

NodePtr output(bool value);
NodePtr classical(Var var, NodePtr on0, NodePtr on1);
NodePtr xorQuery(Var i, Var j, NodePtr on0, NodePtr on1);
/// The 2-dimensional block behind XorQuery. Throws std::invalid_argument if i == j.
NodePtr xorGadget(Var i, Var j, NodePtr on0, NodePtr on1);
NodePtr unitaryBlock(UnitaryBlock block);
NodePtr axiomLeaf(AxiomLeaf leaf);

/// Parity of `vars` (XOR-ed with `invert`), ceil(|vars|/2) queries.
NodePtr parityProgram(const std::vector<Var>& vars, bool invert = false);
NodePtr parityProgram(unsigned n);
/// Not-all-equal over the literals x_v XOR neg_v (bit k of negMask for
/// vars[k]), XOR-ed with `invert`; |vars|-1 queries.
NodePtr naeProgram(const std::vector<Var>& vars, std::uint64_t negMask = 0, bool invert = false);
NodePtr naeProgram(unsigned n);
/// Reads `vars` in order and exits as soon as the value is decided.
/// Computes AND over the literals (x_v XOR neg_v), XOR-ed with `invert`.
NodePtr andChain(const std::vector<Var>& vars, std::uint64_t negMask, bool invert);
/// (l_a == l_b) AND (l_a OR l_c) for vars = {a, b, c} and literals
/// l_v = x_v XOR neg_v (bit k of negMask for vars[k]), XOR-ed with `invert`.
/// A single 7-dimensional block with 2 queries.
NodePtr agreeOrProgram(const std::array<Var, 3>& vars, std::uint64_t negMask = 0, bool invert = false);

// Structure -----------------------------------------------------------------

/// Worst-case query count over root-to-leaf paths.
unsigned queryCost(const NodePtr& program);
std::size_t nodeCount(const NodePtr& program);
/// Largest variable index used plus one (0 for a program without queries).
unsigned requiredArity(const NodePtr& program);
bool containsAxiom(const NodePtr& program);
bool containsQuantum(const NodePtr& program);
/// Paths of all AxiomLeaf nodes. Paths look like "$", "$/1", "$/1/0".
std::vector<std::string> axiomLocations(const NodePtr& program);
/// Replaces XorQuery nodes by their UnitaryBlock elaboration.
NodePtr elaborate(const NodePtr& program);
/// Renames every variable v to mapping[v].
NodePtr relabel(const NodePtr& program, const std::vector<Var>& mapping);
/// Replaces Output(0) leaves by onFalse and Output(1) leaves by onTrue.
NodePtr substituteOutputs(const NodePtr& program, const NodePtr& onFalse, const NodePtr& onTrue);

// Simulation ----------------------------------------------------------------

/// Multiplies the amplitude of every basis state labelled i by (-1)^{x_i}.
void applyOracle(std::vector<Complex>& state, const std::vector<std::optional<Var>>& labels, InputCode x);

struct SimulationReport {
  unsigned arity = 0;
  bool exact = false;
  double worstWrongAmplitude = 0.0;
  unsigned queriesUsedWorstCase = 0;
  std::vector<int> perInputOutcomes;  ///< 0 or 1, or -1 when several outputs are reachable
  std::vector<InputCode> failingInputs;
};

/// Runs P on every input of f. Throws NotSimulatableError if P has axiom
/// leaves and ProgramError for unbound variables or non-unitary blocks.
SimulationReport simulate(const NodePtr& program, const TruthTable& f);

/// As simulate, but an AxiomLeaf evaluates its stored table on its variables,
/// is charged claimedQueries and follows the matching continuation.
SimulationReport simulateWithAxioms(const NodePtr& program, const TruthTable& f);

// Axiom table ----------------------------------------------------------------

struct AxiomRow {
  std::string classId;
  unsigned arity = 0;
  unsigned queries = 0;
  std::string citation;
  TruthTable representative;
};

/// Row for ids "EXACT_n^k" (0 <= k <= n), "TH_n^k" (1 <= k <= n),
/// "AND_n", "OR_n" and "AND_OR_3"; nullopt for anything else.
std::optional<AxiomRow> axiomRow(const std::string& classId);
/// Every row with arity <= maxArity.
std::vector<AxiomRow> axiomTable(unsigned maxArity);

}  // namespace exactq

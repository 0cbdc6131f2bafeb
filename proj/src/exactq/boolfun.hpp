#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "exactq/truth_table.hpp"

namespace exactq {

// ---------------------------------------------------------------------------
// Restrictions and variable bookkeeping
// ---------------------------------------------------------------------------

/// f with x_{var+1} fixed to `value`. Surviving variables keep their relative
/// order and are renumbered 0..n-2.
TruthTable restrict(const TruthTable& f, Var var, bool value);

/// Inverse of the two restrictions: the function equal to f0 where x_{var+1}=0
/// and to f1 where x_{var+1}=1.
TruthTable combineCofactors(const TruthTable& f0, const TruthTable& f1, Var var);

/// f with x_{other+1} replaced by x_{keep+1} XOR c. The result drops `other`
/// (renumbering as restrict does); `keep` survives under its renumbered index.
TruthTable substituteXor(const TruthTable& f, Var keep, Var other, bool c);

bool dependsOn(const TruthTable& f, Var var);
std::vector<Var> essentialVariables(const TruthTable& f);

/// f re-expressed over its essential variables only.
struct ReducedFunction {
  TruthTable table;
  std::vector<Var> vars;  ///< vars[k] = index in the original function of local variable k
};
ReducedFunction reduceToEssential(const TruthTable& f);

/// Inserts `bit` at position `pos` of `code`, shifting higher bits up.
inline InputCode insertBit(InputCode code, unsigned pos, bool bit) {
  const InputCode low = code & ((InputCode{1} << pos) - 1);
  return ((code >> pos) << (pos + 1)) | (InputCode{bit} << pos) | low;
}

// ---------------------------------------------------------------------------
// Symmetric functions
// ---------------------------------------------------------------------------

/// (b_0, ..., b_n) with f(x) = b_{|x|}.
struct SymmetricProfile {
  std::vector<bool> bits;

  unsigned arity() const { return static_cast<unsigned>(bits.size()) - 1; }
  SymmetricProfile reversed() const;
  SymmetricProfile complemented() const;
  std::string toString() const;  ///< "0,1,0,1"
  bool operator==(const SymmetricProfile&) const = default;
};

std::optional<SymmetricProfile> symmetricProfile(const TruthTable& f);
TruthTable fromProfile(const SymmetricProfile& profile);

/// Named family of a symmetric profile in the vocabulary of the classical
/// catalogue: "constant", "AND_n", "PARITY_n", "NAE_n", "EXACT_n^k",
/// "TH_n^k"; other members of those families come back as
/// "isomorphic to <name>", everything else as "unnamed".
std::string symmetricClassName(const SymmetricProfile& profile);

// ---------------------------------------------------------------------------
// Monotone functions
// ---------------------------------------------------------------------------

bool isMonotone(const TruthTable& f);

enum class Unateness { Independent, Positive, Negative, Binate };
Unateness unateness(const TruthTable& f, Var var);

using VarSet = std::vector<Var>;  ///< sorted ascending

/// Prime CNF clauses and prime DNF terms of a monotone function.
struct MonotoneNormalForm {
  std::set<VarSet> cnfClauses;
  std::set<VarSet> dnfTerms;
};

/// Throws std::invalid_argument for non-monotone or constant input.
MonotoneNormalForm primeNormalForms(const TruthTable& f);
TruthTable fromDnf(unsigned arity, const std::set<VarSet>& terms);
TruthTable fromCnf(unsigned arity, const std::set<VarSet>& clauses);

// ---------------------------------------------------------------------------
// NPN equivalence
// ---------------------------------------------------------------------------

/// g = apply(t, f) is g(x) = f(y) XOR outputNeg, where z = x XOR inputNeg and
/// y_{perm[i]} = z_i. Variable i of g feeds variable perm[i] of f.
struct NpnTransform {
  std::vector<Var> perm;
  std::uint64_t inputNeg = 0;
  bool outputNeg = false;

  static NpnTransform identity(unsigned arity);
  unsigned arity() const { return static_cast<unsigned>(perm.size()); }

  /// apply(then(a, b), f) == apply(b, apply(a, f)).
  static NpnTransform then(const NpnTransform& first, const NpnTransform& second);
  NpnTransform inverse() const;

  bool operator==(const NpnTransform&) const = default;
};

TruthTable apply(const NpnTransform& t, const TruthTable& f);

inline constexpr unsigned kMaxNpnArity = 6;

struct NpnCanonical {
  TruthTable table;           ///< lexicographically smallest member of the class
  NpnTransform transform;     ///< apply(transform, f) == table
};

/// Exhaustive canonicalization over all 2 * 2^n * n! transforms; n <= 6.
NpnCanonical npnCanonical(const TruthTable& f);

/// True iff exactly one entry is 1 or exactly one entry is 0.
bool isAndIsomorphic(const TruthTable& f);

// ---------------------------------------------------------------------------
// Multilinear representation
// ---------------------------------------------------------------------------

inline constexpr unsigned kMaxPolynomialArity = 20;

/// Dense integer coefficients a_S indexed by the subset mask of S.
class MultilinearPoly {
 public:
  MultilinearPoly(unsigned arity, std::vector<std::int64_t> coeffs);

  unsigned arity() const { return arity_; }
  std::int64_t coefficient(std::uint64_t subset) const { return coeffs_[subset]; }
  const std::vector<std::int64_t>& coefficients() const { return coeffs_; }
  unsigned degree() const;
  std::int64_t evaluate(InputCode x) const;
  /// e.g. "x1 + x2 - 2*x1*x2"; "0" for the zero polynomial.
  std::string toString() const;

 private:
  unsigned arity_;
  std::vector<std::int64_t> coeffs_;
};

MultilinearPoly multilinear(const TruthTable& f);
unsigned degree(const TruthTable& f);

// ---------------------------------------------------------------------------
// Decision trees
// ---------------------------------------------------------------------------

inline constexpr unsigned kMaxDepthArity = 12;

/// Minimal depth of a deterministic decision tree computing f; n <= 12.
unsigned decisionTreeDepth(const TruthTable& f);

}  // namespace exactq

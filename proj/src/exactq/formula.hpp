#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "exactq/truth_table.hpp"

namespace exactq {

/// Node of a formula over {AND, OR, NOT}; negations live on leaves only.
struct FormulaNode {
  enum class Kind { Leaf, And, Or };

  Kind kind = Kind::Leaf;
  Var var = 0;
  bool negated = false;
  std::vector<FormulaNode> children;

  static FormulaNode leaf(Var var, bool negated = false) { return {Kind::Leaf, var, negated, {}}; }
  /// Builds an And/Or node, flattening children of the same kind.
  static FormulaNode gate(Kind kind, std::vector<FormulaNode> children);

  bool operator==(const FormulaNode&) const = default;
};

class FormulaAst {
 public:
  /// `arity` defaults to one more than the largest variable index in the tree.
  explicit FormulaAst(FormulaNode root, std::optional<unsigned> arity = std::nullopt);

  const FormulaNode& root() const { return root_; }
  unsigned arity() const { return arity_; }

  std::size_t leafCount() const;
  /// Every variable of the arity occurs in exactly one leaf.
  bool isReadOnce() const;
  /// Grammar form with `~`, `&`, `|`; every non-leaf operand is parenthesized
  /// and operands are sorted by their smallest variable index.
  std::string toString() const;

 private:
  FormulaNode root_;
  unsigned arity_;
};

class FormulaParseError : public std::runtime_error {
 public:
  FormulaParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// expr := term ('|' term)* ; term := factor ('&' factor)* ;
/// factor := '~' factor | '(' expr ')' | 'x' <index >= 1>
FormulaAst parseFormula(std::string_view text);

inline constexpr unsigned kMaxFormulaTableArity = 20;

TruthTable toTruthTable(const FormulaAst& formula);

inline constexpr unsigned kMaxReadOnceArity = 12;

/// A read-once formula computing f, or nullopt when none exists.
/// Throws std::invalid_argument when f has a dead variable.
std::optional<FormulaAst> recognizeReadOnce(const TruthTable& f);

/// Random read-once formula on n variables. The tree shape is uniform over
/// binary trees with n leaves; gates are AND/OR and leaves negated with
/// probability 1/2; variables are placed by a random permutation.
FormulaAst randomReadOnce(unsigned n, std::uint64_t seed);

}  // namespace exactq

#include "exactq/formula.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <random>

#include "exactq/boolfun.hpp"

namespace exactq {

FormulaNode FormulaNode::gate(Kind kind, std::vector<FormulaNode> children) {
  if (kind == Kind::Leaf) throw std::invalid_argument("FormulaNode::gate needs And or Or");
  if (children.empty()) throw std::invalid_argument("FormulaNode::gate needs operands");
  std::vector<FormulaNode> flat;
  for (auto& child : children) {
    if (child.kind == kind) {
      for (auto& grandchild : child.children) flat.push_back(std::move(grandchild));
    } else {
      flat.push_back(std::move(child));
    }
  }
  if (flat.size() == 1) return std::move(flat.front());
  FormulaNode node;
  node.kind = kind;
  node.children = std::move(flat);
  return node;
}

namespace {

Var maxVar(const FormulaNode& node) {
  if (node.kind == FormulaNode::Kind::Leaf) return node.var;
  Var m = 0;
  for (const auto& c : node.children) m = std::max(m, maxVar(c));
  return m;
}

Var minVar(const FormulaNode& node) {
  if (node.kind == FormulaNode::Kind::Leaf) return node.var;
  Var m = ~Var{0};
  for (const auto& c : node.children) m = std::min(m, minVar(c));
  return m;
}

void countLeaves(const FormulaNode& node, std::vector<unsigned>& perVar, std::size_t& total) {
  if (node.kind == FormulaNode::Kind::Leaf) {
    ++total;
    if (node.var < perVar.size()) ++perVar[node.var];
    return;
  }
  for (const auto& c : node.children) countLeaves(c, perVar, total);
}

FormulaNode negate(FormulaNode node) {
  switch (node.kind) {
    case FormulaNode::Kind::Leaf:
      node.negated = !node.negated;
      return node;
    case FormulaNode::Kind::And:
    case FormulaNode::Kind::Or: {
      std::vector<FormulaNode> kids;
      kids.reserve(node.children.size());
      for (auto& c : node.children) kids.push_back(negate(std::move(c)));
      return FormulaNode::gate(
          node.kind == FormulaNode::Kind::And ? FormulaNode::Kind::Or : FormulaNode::Kind::And,
          std::move(kids));
    }
  }
  return node;
}

std::string render(const FormulaNode& node) {
  if (node.kind == FormulaNode::Kind::Leaf) {
    return (node.negated ? "~x" : "x") + std::to_string(node.var + 1);
  }
  std::vector<const FormulaNode*> kids;
  for (const auto& c : node.children) kids.push_back(&c);
  std::stable_sort(kids.begin(), kids.end(),
                   [](const FormulaNode* a, const FormulaNode* b) { return minVar(*a) < minVar(*b); });
  const char op = node.kind == FormulaNode::Kind::And ? '&' : '|';
  std::string out;
  for (std::size_t k = 0; k < kids.size(); ++k) {
    if (k) out.push_back(op);
    if (kids[k]->kind == FormulaNode::Kind::Leaf) {
      out += render(*kids[k]);
    } else {
      out += "(" + render(*kids[k]) + ")";
    }
  }
  return out;
}

TruthTable evaluate(const FormulaNode& node, unsigned arity) {
  switch (node.kind) {
    case FormulaNode::Kind::Leaf: {
      TruthTable t = TruthTable::variable(arity, node.var);
      return node.negated ? ~t : t;
    }
    case FormulaNode::Kind::And: {
      TruthTable t = TruthTable::constant(arity, true);
      for (const auto& c : node.children) t &= evaluate(c, arity);
      return t;
    }
    case FormulaNode::Kind::Or: {
      TruthTable t(arity);
      for (const auto& c : node.children) t |= evaluate(c, arity);
      return t;
    }
  }
  return TruthTable(arity);
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  FormulaNode parse() {
    FormulaNode node = expr();
    skipSpace();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return node;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw FormulaParseError(what, pos_); }

  void skipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skipSpace();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  FormulaNode expr() {
    std::vector<FormulaNode> terms;
    terms.push_back(term());
    while (accept('|')) terms.push_back(term());
    return FormulaNode::gate(FormulaNode::Kind::Or, std::move(terms));
  }

  FormulaNode term() {
    std::vector<FormulaNode> factors;
    factors.push_back(factor());
    while (accept('&')) factors.push_back(factor());
    return FormulaNode::gate(FormulaNode::Kind::And, std::move(factors));
  }

  FormulaNode factor() {
    skipSpace();
    if (pos_ >= text_.size()) fail("unexpected end of formula");
    if (accept('~')) return negate(factor());
    if (accept('(')) {
      FormulaNode inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    const char c = text_[pos_];
    if (c != 'x' && c != 'X') fail(std::string("unexpected '") + c + "'");
    const std::size_t start = pos_;
    ++pos_;
    std::size_t digits = 0;
    unsigned long index = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      index = index * 10 + static_cast<unsigned long>(text_[pos_] - '0');
      ++pos_;
      if (++digits > 6) break;
    }
    if (digits == 0) {
      pos_ = start;
      fail("expected variable index after 'x'");
    }
    if (index == 0) {
      pos_ = start;
      fail("variable index 0 is not allowed (variables are x1, x2, ...)");
    }
    if (index > TruthTable::kMaxArity) {
      pos_ = start;
      fail("variable index exceeds " + std::to_string(TruthTable::kMaxArity));
    }
    return FormulaNode::leaf(static_cast<Var>(index - 1));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

FormulaAst::FormulaAst(FormulaNode root, std::optional<unsigned> arity) : root_(std::move(root)) {
  const unsigned needed = maxVar(root_) + 1;
  arity_ = arity.value_or(needed);
  if (arity_ < needed) throw std::invalid_argument("FormulaAst: arity smaller than a variable index");
}

std::size_t FormulaAst::leafCount() const {
  std::vector<unsigned> perVar(arity_, 0);
  std::size_t total = 0;
  countLeaves(root_, perVar, total);
  return total;
}

bool FormulaAst::isReadOnce() const {
  std::vector<unsigned> perVar(arity_, 0);
  std::size_t total = 0;
  countLeaves(root_, perVar, total);
  return std::all_of(perVar.begin(), perVar.end(), [](unsigned c) { return c == 1; });
}

std::string FormulaAst::toString() const { return render(root_); }

FormulaAst parseFormula(std::string_view text) { return FormulaAst(Parser(text).parse()); }

TruthTable toTruthTable(const FormulaAst& formula) {
  if (formula.arity() > kMaxFormulaTableArity) {
    throw std::out_of_range("toTruthTable supports arity <= " + std::to_string(kMaxFormulaTableArity));
  }
  return evaluate(formula.root(), formula.arity());
}

// ---------------------------------------------------------------------------

namespace {

// Splits vars into connected components of the "appear together" graph.
std::vector<std::vector<Var>> components(unsigned arity, const std::set<VarSet>& groups) {
  std::vector<Var> parent(arity);
  std::iota(parent.begin(), parent.end(), Var{0});
  auto find = [&](Var v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& g : groups) {
    for (std::size_t k = 1; k < g.size(); ++k) parent[find(g[k])] = find(g[0]);
  }
  std::vector<std::vector<Var>> out;
  std::vector<int> slot(arity, -1);
  for (Var v = 0; v < arity; ++v) {
    const Var r = find(v);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[slot[r]].push_back(v);
  }
  return out;
}

// t restricted to `keep` (ascending local indices), other variables fixed to `fill`.
TruthTable project(const TruthTable& t, const std::vector<Var>& keep, bool fill) {
  TruthTable out = t;
  for (Var v = t.arity(); v-- > 0;) {
    if (!std::binary_search(keep.begin(), keep.end(), v)) out = restrict(out, v, fill);
  }
  return out;
}

// t is monotone and depends on every variable; globals maps local -> original.
std::optional<FormulaNode> decomposeMonotone(const TruthTable& t, const std::vector<Var>& globals,
                                             std::uint64_t negMask) {
  if (t.arity() == 1) {
    return FormulaNode::leaf(globals[0], ((negMask >> globals[0]) & 1u) != 0);
  }
  const MonotoneNormalForm forms = primeNormalForms(t);
  for (const bool orRoot : {true, false}) {
    const auto parts = components(t.arity(), orRoot ? forms.dnfTerms : forms.cnfClauses);
    if (parts.size() < 2) continue;
    std::vector<FormulaNode> kids;
    for (const auto& part : parts) {
      std::vector<Var> sub;
      for (Var v : part) sub.push_back(globals[v]);
      auto child = decomposeMonotone(project(t, part, !orRoot), sub, negMask);
      if (!child) return std::nullopt;
      kids.push_back(std::move(*child));
    }
    return FormulaNode::gate(orRoot ? FormulaNode::Kind::Or : FormulaNode::Kind::And, std::move(kids));
  }
  return std::nullopt;
}

}  // namespace

std::optional<FormulaAst> recognizeReadOnce(const TruthTable& f) {
  const unsigned n = f.arity();
  if (n > kMaxReadOnceArity) {
    throw std::out_of_range("recognizeReadOnce supports arity <= " + std::to_string(kMaxReadOnceArity));
  }
  if (n == 0) return std::nullopt;
  std::uint64_t negMask = 0;
  for (Var v = 0; v < n; ++v) {
    switch (unateness(f, v)) {
      case Unateness::Independent:
        throw std::invalid_argument("recognizeReadOnce: x" + std::to_string(v + 1) +
                                    " is a dead variable");
      case Unateness::Binate:
        return std::nullopt;
      case Unateness::Negative:
        negMask |= std::uint64_t{1} << v;
        break;
      case Unateness::Positive:
        break;
    }
  }
  const TruthTable monotone =
      TruthTable::fromPredicate(n, [&](InputCode m) { return f.get(m ^ negMask); });
  std::vector<Var> globals(n);
  std::iota(globals.begin(), globals.end(), Var{0});
  auto root = decomposeMonotone(monotone, globals, negMask);
  if (!root) return std::nullopt;
  FormulaAst ast(std::move(*root), n);
  if (toTruthTable(ast) != f) return std::nullopt;
  return ast;
}

FormulaAst randomReadOnce(unsigned n, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("randomReadOnce: n must be >= 1");
  std::mt19937_64 rng(seed);

  // catalan[k] = number of binary tree shapes with k + 1 leaves.
  std::vector<long double> catalan(n, 1.0L);
  for (unsigned k = 1; k < n; ++k) catalan[k] = catalan[k - 1] * 2.0L * (2 * k - 1) / (k + 1);

  std::vector<Var> order(n);
  std::iota(order.begin(), order.end(), Var{0});
  std::shuffle(order.begin(), order.end(), rng);
  std::size_t nextLeaf = 0;

  std::uniform_real_distribution<long double> unit(0.0L, 1.0L);
  std::bernoulli_distribution coin(0.5);

  auto build = [&](auto&& self, unsigned leaves) -> FormulaNode {
    if (leaves == 1) return FormulaNode::leaf(order[nextLeaf++], coin(rng));
    // P(left subtree has k leaves) = C(k-1) C(leaves-k-1) / C(leaves-1).
    long double target = unit(rng) * catalan[leaves - 1];
    unsigned left = 1;
    for (; left + 1 < leaves; ++left) {
      target -= catalan[left - 1] * catalan[leaves - left - 1];
      if (target < 0) break;
    }
    const auto kind = coin(rng) ? FormulaNode::Kind::And : FormulaNode::Kind::Or;
    std::vector<FormulaNode> kids;
    kids.push_back(self(self, left));
    kids.push_back(self(self, leaves - left));
    return FormulaNode::gate(kind, std::move(kids));
  };
  return FormulaAst(build(build, n), n);
}

}  // namespace exactq

#include <doctest.h>

#include <random>
#include <set>

#include "exactq/boolfun.hpp"
#include "exactq/formula.hpp"
#include "exactq/function_text.hpp"

using namespace exactq;

namespace {

using Kind = FormulaNode::Kind;

// Evaluates the AST directly, without going through toTruthTable.
bool evalNode(const FormulaNode& node, InputCode m) {
  switch (node.kind) {
    case Kind::Leaf: return (((m >> node.var) & 1u) != 0) != node.negated;
    case Kind::And:
      for (const auto& c : node.children) {
        if (!evalNode(c, m)) return false;
      }
      return true;
    case Kind::Or:
      for (const auto& c : node.children) {
        if (evalNode(c, m)) return true;
      }
      return false;
  }
  return false;
}

}  // namespace

TEST_CASE("parser builds the expected tree") {
  const auto f = parseFormula("(x1|x2)&~x3");
  const auto& root = f.root();
  REQUIRE(root.kind == Kind::And);
  REQUIRE(root.children.size() == 2);
  CHECK(root.children[0].kind == Kind::Or);
  CHECK(root.children[1] == FormulaNode::leaf(2, true));
  CHECK(f.arity() == 3);
  CHECK(f.isReadOnce());

  const auto single = parseFormula("x1");
  CHECK(single.root() == FormulaNode::leaf(0));

  const auto g = parseFormula("(x1|x2)&(~x1|~x3)");
  CHECK(g.leafCount() == 4);
  CHECK_FALSE(g.isReadOnce());
}

TEST_CASE("parser precedence and flattening") {
  CHECK(toTruthTable(parseFormula("x1|x2&x3")) == toTruthTable(parseFormula("x1|(x2&x3)")));
  CHECK(parseFormula("x1&(x2&x3)").root().children.size() == 3);
  CHECK(toTruthTable(parseFormula("~~x1")) == TruthTable::variable(1, 0));
  CHECK(toTruthTable(parseFormula(" x1 & x2 ")) == parseFunction("bin:0001"));
}

TEST_CASE("parse errors carry a position") {
  CHECK_THROWS_AS(parseFormula(""), FormulaParseError);
  CHECK_THROWS_AS(parseFormula("x0"), FormulaParseError);
  CHECK_THROWS_AS(parseFormula("(x1|x2"), FormulaParseError);
  CHECK_THROWS_AS(parseFormula("x1 x2"), FormulaParseError);
  try {
    parseFormula("x1&&x2");
    FAIL("no throw");
  } catch (const FormulaParseError& e) {
    CHECK(e.position() == 3);
  }
}

TEST_CASE("truth tables of formulas") {
  CHECK(formatFunction(toTruthTable(parseFormula("x1&x2"))) == "bin:0001");
  const auto t = toTruthTable(parseFormula("x1&(x2|x3)"));
  CHECK(t.popcount() == 3);
  CHECK(symmetricProfile(toTruthTable(parseFormula("x1|x2|x3")))->toString() == "0,1,1,1");
  CHECK(parseFunction("formula:x1&(x2|x3)") == t);
}

TEST_CASE("serialization is canonical and reparses") {
  CHECK(parseFormula("~x3&(x2|x1)").toString() == "(x1|x2)&~x3");
  std::mt19937_64 rng(1);
  for (unsigned n = 1; n <= 12; ++n) {
    for (int k = 0; k < 20; ++k) {
      const auto f = randomReadOnce(n, rng());
      const auto again = parseFormula(f.toString());
      CHECK(again.toString() == f.toString());
      CHECK(toTruthTable(again) == toTruthTable(f));
    }
  }
}

TEST_CASE("read-once recognition") {
  const auto yes = toTruthTable(parseFormula("(x1|x2)&~x3"));
  const auto got = recognizeReadOnce(yes);
  REQUIRE(got.has_value());
  CHECK(toTruthTable(*got) == yes);
  CHECK(got->isReadOnce());

  CHECK_FALSE(recognizeReadOnce(toTruthTable(parseFormula("(x1|x2)&(~x1|~x3)"))).has_value());
  CHECK_FALSE(recognizeReadOnce(parseFunction("bin:0110")).has_value());
  CHECK_THROWS_AS(recognizeReadOnce(TruthTable::fromPredicate(2, [](InputCode m) { return m & 1; })),
                  std::invalid_argument);
}

TEST_CASE("read-once recognition agrees with enumeration at n = 3") {
  // Every read-once formula on three variables is op(l1, l2, l3) or
  // op1(op2(la, lb), lc) for literals l.
  std::set<std::uint64_t> readOnce;
  auto lit = [](unsigned v, unsigned neg) { return [=](InputCode m) { return (((m >> v) & 1u) != 0) != ((neg >> v) & 1u); }; };
  for (unsigned neg = 0; neg < 8; ++neg) {
    const auto a = lit(0, neg), b = lit(1, neg), c = lit(2, neg);
    for (bool outerAnd : {false, true}) {
      readOnce.insert(TruthTable::fromPredicate(3, [&](InputCode m) {
        return outerAnd ? (a(m) && b(m) && c(m)) : (a(m) || b(m) || c(m));
      }).asWord());
      for (unsigned alone = 0; alone < 3; ++alone) {
        readOnce.insert(TruthTable::fromPredicate(3, [&](InputCode m) {
          const bool x[3] = {a(m), b(m), c(m)};
          const bool p = x[(alone + 1) % 3], q = x[(alone + 2) % 3];
          const bool inner = outerAnd ? (p || q) : (p && q);
          return outerAnd ? (inner && x[alone]) : (inner || x[alone]);
        }).asWord());
      }
    }
  }
  std::size_t full = 0;
  for (std::uint64_t w = 0; w < 256; ++w) {
    const auto f = TruthTable::fromWord(3, w);
    if (essentialVariables(f).size() < 3) continue;
    ++full;
    REQUIRE(recognizeReadOnce(f).has_value() == (readOnce.count(w) != 0));
  }
  CHECK(full == 218);
}

TEST_CASE("random read-once formulas") {
  std::mt19937_64 rng(2);
  for (unsigned n = 1; n <= 10; ++n) {
    const auto f = randomReadOnce(n, rng());
    CHECK(f.arity() == n);
    CHECK(f.isReadOnce());
    CHECK(f.leafCount() == n);
    const auto t = toTruthTable(f);
    for (InputCode m = 0; m < t.size(); ++m) REQUIRE(t.get(m) == evalNode(f.root(), m));
    const auto back = recognizeReadOnce(t);
    REQUIRE(back.has_value());
    CHECK(toTruthTable(*back) == t);
  }
  CHECK(randomReadOnce(1, 5).root().kind == Kind::Leaf);
  CHECK(randomReadOnce(7, 42).toString() == randomReadOnce(7, 42).toString());
}

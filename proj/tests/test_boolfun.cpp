#include <doctest.h>

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "exactq/boolfun.hpp"
#include "exactq/function_text.hpp"
#include "exactq/truth_table.hpp"

using namespace exactq;

namespace {

TruthTable profileTable(std::initializer_list<int> bits) {
  SymmetricProfile p;
  for (int b : bits) p.bits.push_back(b != 0);
  return fromProfile(p);
}

TruthTable andN(unsigned n) { return TruthTable::fromPredicate(n, [n](InputCode m) { return m + 1 == (InputCode{1} << n); }); }
TruthTable orN(unsigned n) { return TruthTable::fromPredicate(n, [](InputCode m) { return m != 0; }); }

// x1 AND (x2 OR x3)
TruthTable andOr3() {
  return TruthTable::fromPredicate(3, [](InputCode m) { return (m & 1) && (m & 6); });
}

// Coefficient a_S by inclusion-exclusion over subsets of S.
std::int64_t mobiusOracle(const TruthTable& f, std::uint64_t s) {
  std::int64_t sum = 0;
  for (std::uint64_t t = s;; t = (t - 1) & s) {
    const int sign = ((std::popcount(s) - std::popcount(t)) & 1) ? -1 : 1;
    sum += sign * static_cast<std::int64_t>(f.get(t));
    if (t == 0) break;
  }
  return sum;
}

// Plain minimax over restrictions; exponential but fine for n <= 4.
unsigned depthOracle(const TruthTable& f) {
  if (f.isConstant()) return 0;
  unsigned best = f.arity();
  for (Var v = 0; v < f.arity(); ++v) {
    best = std::min(best, 1 + std::max(depthOracle(restrict(f, v, false)), depthOracle(restrict(f, v, true))));
  }
  return best;
}

bool isMonotoneOracle(const TruthTable& f) {
  for (InputCode a = 0; a < f.size(); ++a) {
    for (InputCode b = 0; b < f.size(); ++b) {
      if ((a & b) == a && f.get(a) && !f.get(b)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("truth table text round trips") {
  const auto t = parseFunction("bin:0001");
  CHECK(t.arity() == 2);
  CHECK(t.get(3));
  CHECK(t.popcount() == 1);
  CHECK(formatFunction(t) == "bin:0001");

  const auto h = parseFunction("hex:8");
  CHECK(h == parseFunction("bin:1000"));
  CHECK(parseFunction("hex:" + parseFunction("bin:0110100110010110").toHex()) == parseFunction("bin:0110100110010110"));

  std::mt19937_64 rng(7);
  for (unsigned n = 2; n <= 9; ++n) {
    TruthTable f(n);
    for (InputCode m = 0; m < f.size(); ++m) f.set(m, rng() & 1);
    CHECK(parseFunction(formatFunction(f)) == f);
    CHECK(parseFunction("hex:" + f.toHex()) == f);
    CHECK(parseFunction("bin:" + f.toBin()) == f);
  }
}

TEST_CASE("function text rejects malformed input with the token") {
  CHECK_THROWS_AS(parseFunction("bin:010"), FunctionParseError);
  CHECK_THROWS_AS(parseFunction("bin:01x1"), FunctionParseError);
  CHECK_THROWS_AS(parseFunction("hex:g"), FunctionParseError);
  CHECK_THROWS_AS(parseFunction("tab:0001"), FunctionParseError);
  try {
    parseFunction("bin:01x1");
    FAIL("no throw");
  } catch (const FunctionParseError& e) {
    CHECK(e.token() == "x");
  }
}

TEST_CASE("restriction matches direct evaluation") {
  const auto and2 = parseFunction("bin:0001");
  CHECK(restrict(and2, 0, true) == TruthTable::variable(1, 0));
  CHECK(restrict(and2, 0, false) == TruthTable::constant(1, false));

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const unsigned n = 1 + rng() % 7;
    TruthTable f(n);
    for (InputCode m = 0; m < f.size(); ++m) f.set(m, rng() & 1);
    const Var v = static_cast<Var>(rng() % n);
    for (bool b : {false, true}) {
      const auto r = restrict(f, v, b);
      REQUIRE(r.arity() == n - 1);
      for (InputCode m = 0; m < r.size(); ++m) CHECK(r.get(m) == f.get(insertBit(m, v, b)));
    }
    CHECK(combineCofactors(restrict(f, v, false), restrict(f, v, true), v) == f);
  }
}

TEST_CASE("restricting a symmetric function gives the prefix or suffix profile") {
  const auto f = profileTable({0, 1, 1, 0, 1});
  for (Var v = 0; v < 4; ++v) {
    CHECK(symmetricProfile(restrict(f, v, false))->toString() == "0,1,1,0");
    CHECK(symmetricProfile(restrict(f, v, true))->toString() == "1,1,0,1");
  }
}

TEST_CASE("symmetric profiles") {
  CHECK(symmetricProfile(parseFunction("bin:01101001"))->toString() == "0,1,0,1");
  CHECK(symmetricProfile(profileTable({0, 1, 1, 0}))->toString() == "0,1,1,0");
  CHECK_FALSE(symmetricProfile(andOr3()).has_value());
  CHECK(symmetricClassName(*symmetricProfile(profileTable({0, 1, 0, 1}))) == "PARITY_3");
  CHECK(symmetricClassName(*symmetricProfile(profileTable({0, 1, 1, 0}))) == "NAE_3");
  CHECK(symmetricClassName(*symmetricProfile(profileTable({0, 0, 0, 1}))) == "AND_3");
  CHECK(symmetricClassName(*symmetricProfile(profileTable({1, 1, 1, 0}))) == "isomorphic to AND_3");
  CHECK(symmetricClassName(*symmetricProfile(profileTable({0, 0, 0, 0}))) == "constant");
}

TEST_CASE("monotonicity against the partial-order oracle") {
  CHECK(isMonotone(orN(3)));
  CHECK_FALSE(isMonotone(parseFunction("bin:0110")));
  CHECK(isMonotone(profileTable({0, 0, 1, 1})));
  for (std::uint64_t w = 0; w < 65536; w += 7) {
    const auto f = TruthTable::fromWord(4, w);
    REQUIRE(isMonotone(f) == isMonotoneOracle(f));
  }
}

TEST_CASE("prime normal forms of monotone functions") {
  const auto nf = primeNormalForms(andOr3());
  CHECK(nf.dnfTerms == std::set<VarSet>{{0, 1}, {0, 2}});
  CHECK(nf.cnfClauses == std::set<VarSet>{{0}, {1, 2}});
  const auto a = primeNormalForms(andN(3));
  CHECK(a.dnfTerms == std::set<VarSet>{{0, 1, 2}});
  CHECK(a.cnfClauses == std::set<VarSet>{{0}, {1}, {2}});
  const auto o = primeNormalForms(orN(3));
  CHECK(o.dnfTerms == std::set<VarSet>{{0}, {1}, {2}});
  CHECK(o.cnfClauses == std::set<VarSet>{{0, 1, 2}});
  CHECK_THROWS_AS(primeNormalForms(parseFunction("bin:0110")), std::invalid_argument);

  for (std::uint64_t w = 1; w < 65535; ++w) {
    const auto f = TruthTable::fromWord(4, w);
    if (!isMonotone(f)) continue;
    const auto forms = primeNormalForms(f);
    REQUIRE(fromDnf(4, forms.dnfTerms) == f);
    REQUIRE(fromCnf(4, forms.cnfClauses) == f);
  }
}

TEST_CASE("NPN transforms compose and invert") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const unsigned n = 1 + rng() % 5;
    TruthTable f(n);
    for (InputCode m = 0; m < f.size(); ++m) f.set(m, rng() & 1);
    auto randomTransform = [&] {
      NpnTransform t = NpnTransform::identity(n);
      std::shuffle(t.perm.begin(), t.perm.end(), rng);
      t.inputNeg = rng() & ((1u << n) - 1);
      t.outputNeg = rng() & 1;
      return t;
    };
    const auto a = randomTransform();
    const auto b = randomTransform();
    CHECK(apply(NpnTransform::identity(n), f) == f);
    CHECK(apply(NpnTransform::then(a, b), f) == apply(b, apply(a, f)));
    CHECK(apply(a.inverse(), apply(a, f)) == f);

    const auto canon = npnCanonical(f);
    CHECK(apply(canon.transform, f) == canon.table);
    CHECK(npnCanonical(apply(a, f)).table == canon.table);
    CHECK(npnCanonical(canon.table).table == canon.table);
  }
}

TEST_CASE("NPN canonical form") {
  for (unsigned n = 1; n <= 5; ++n) CHECK(npnCanonical(andN(n)).table == npnCanonical(orN(n)).table);

  std::set<std::uint64_t> classes;
  for (std::uint64_t w = 0; w < 65536; ++w) classes.insert(npnCanonical(TruthTable::fromWord(4, w)).table.asWord());
  CHECK(classes.size() == 222);
  CHECK_THROWS_AS(npnCanonical(TruthTable(7)), std::out_of_range);
}

TEST_CASE("AND-isomorphism: popcount shortcut equals the canonical-form test") {
  CHECK(isAndIsomorphic(andN(3)));
  CHECK(isAndIsomorphic(profileTable({1, 1, 1, 0})));
  CHECK_FALSE(isAndIsomorphic(profileTable({0, 1, 1, 0})));
  for (unsigned n = 1; n <= 4; ++n) {
    const auto andCanon = npnCanonical(andN(n)).table;
    for (std::uint64_t w = 0; w < (std::uint64_t{1} << (1u << n)); ++w) {
      const auto f = TruthTable::fromWord(n, w);
      REQUIRE(isAndIsomorphic(f) == (npnCanonical(f).table == andCanon));
    }
  }
}

TEST_CASE("multilinear polynomials") {
  CHECK(multilinear(parseFunction("bin:0001")).toString() == "x1*x2");
  CHECK(multilinear(parseFunction("bin:0111")).toString() == "x1 + x2 - x1*x2");
  CHECK(multilinear(parseFunction("bin:0110")).toString() == "x1 + x2 - 2*x1*x2");
  CHECK(degree(TruthTable::constant(3, false)) == 0);
  CHECK(degree(orN(2)) == 2);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const unsigned n = 1 + rng() % 6;
    TruthTable f(n);
    for (InputCode m = 0; m < f.size(); ++m) f.set(m, rng() & 1);
    const auto p = multilinear(f);
    for (std::uint64_t s = 0; s < f.size(); ++s) REQUIRE(p.coefficient(s) == mobiusOracle(f, s));
    for (InputCode m = 0; m < f.size(); ++m) REQUIRE(p.evaluate(m) == static_cast<std::int64_t>(f.get(m)));
  }
}

TEST_CASE("decision tree depth against minimax oracle") {
  CHECK(decisionTreeDepth(TruthTable::constant(4, true)) == 0);
  CHECK(decisionTreeDepth(profileTable({0, 1, 1, 1})) == 3);
  for (std::uint64_t w = 0; w < 65536; w += 13) {
    const auto f = TruthTable::fromWord(4, w);
    REQUIRE(decisionTreeDepth(f) == depthOracle(f));
    REQUIRE(decisionTreeDepth(f) >= degree(f));
  }
  CHECK_THROWS_AS(decisionTreeDepth(TruthTable(13)), std::out_of_range);
}

TEST_CASE("non-constant symmetric functions have full depth") {
  for (unsigned n = 1; n <= 8; ++n) {
    for (std::uint64_t code = 1; code + 1 < (std::uint64_t{1} << (n + 1)); ++code) {
      SymmetricProfile p;
      for (unsigned w = 0; w <= n; ++w) p.bits.push_back((code >> w) & 1);
      REQUIRE(decisionTreeDepth(fromProfile(p)) == n);
    }
  }
}

TEST_CASE("essential variables and reduction") {
  const auto f = TruthTable::fromPredicate(4, [](InputCode m) { return ((m >> 1) & 1) != ((m >> 3) & 1); });
  CHECK(essentialVariables(f) == std::vector<Var>{1, 3});
  const auto r = reduceToEssential(f);
  CHECK(r.vars == std::vector<Var>{1, 3});
  CHECK(r.table == parseFunction("bin:0110"));
  CHECK(unateness(f, 0) == Unateness::Independent);
  CHECK(unateness(f, 1) == Unateness::Binate);
  CHECK(unateness(andOr3(), 1) == Unateness::Positive);
}

TEST_CASE("xor substitution") {
  // f = x1 AND x2 with x2 := x1 XOR 1 gives the constant 0.
  CHECK(substituteXor(parseFunction("bin:0001"), 0, 1, true) == TruthTable::constant(1, false));
  CHECK(substituteXor(parseFunction("bin:0001"), 0, 1, false) == TruthTable::variable(1, 0));
}
